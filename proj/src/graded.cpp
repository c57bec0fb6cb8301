#include "wurst/graded.hpp"

#include <algorithm>
#include <unordered_map>

namespace wurst {

std::size_t GradedSet::total() const {
  std::size_t t = 0;
  for (auto c : count) t += c;
  return t;
}

DegeneracyInfo analyze_degeneracies(const GradedSet& g) {
  DegeneracyInfo info;
  const int nd = g.degrees();
  info.op.resize(nd);
  info.source.resize(nd);
  for (int d = 0; d < nd; ++d) {
    info.op[d].assign(g.count[d], -1);
    info.source[d].assign(g.count[d], kNoSimplex);
    for (std::size_t k = 0; k < g.degens[d].size(); ++k) {
      const auto& tab = g.degens[d][k].table;
      for (SimplexId y = 0; y < tab.size(); ++y) {
        const SimplexId x = tab[y];
        if (info.op[d][x] < 0) {
          info.op[d][x] = static_cast<std::int32_t>(k);
          info.source[d][x] = y;
        }
      }
    }
  }
  return info;
}

bool same_shape(const GradedSet& a, const GradedSet& b) {
  if (a.degrees() != b.degrees()) return false;
  for (int d = 0; d < a.degrees(); ++d) {
    if (a.faces[d].size() != b.faces[d].size() || a.degens[d].size() != b.degens[d].size())
      return false;
    for (std::size_t k = 0; k < a.faces[d].size(); ++k)
      if (a.faces[d][k].to != b.faces[d][k].to) return false;
    for (std::size_t k = 0; k < a.degens[d].size(); ++k)
      if (a.degens[d][k].from != b.degens[d][k].from) return false;
  }
  return true;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<SimplexId>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using Bucket = std::unordered_map<std::vector<SimplexId>, std::vector<SimplexId>, VecHash>;

class MapSearch {
 public:
  MapSearch(const GradedSet& x, const GradedSet& y, const MapSearchOptions& opt,
            SearchBudget& budget, const std::function<bool(const MapComponents&)>& visit)
      : x_(x), y_(y), opt_(opt), budget_(budget), visit_(visit) {
    xinfo_ = analyze_degeneracies(x_);
    yinfo_ = analyze_degeneracies(y_);
    const int nd = x_.degrees();
    nondeg_.resize(nd);
    buckets_.resize(nd);
    used_.resize(nd);
    f_.resize(nd);
    for (int d = 0; d < nd; ++d) {
      f_[d].assign(x_.count[d], kNoSimplex);
      used_[d].assign(y_.count[d], 0);
      for (SimplexId s = 0; s < x_.count[d]; ++s)
        if (!xinfo_.degenerate(d, s)) nondeg_[d].push_back(s);
      std::vector<SimplexId> key(y_.faces[d].size());
      for (SimplexId t = 0; t < y_.count[d]; ++t) {
        if (opt_.iso_mode && yinfo_.degenerate(d, t)) continue;
        for (std::size_t k = 0; k < key.size(); ++k) key[k] = y_.faces[d][k].table[t];
        buckets_[d][key].push_back(t);
      }
    }
  }

  void run() { enter_degree(0); }

 private:
  bool allowed(int d, SimplexId s, SimplexId t) const {
    if (opt_.source_colors && (*opt_.source_colors)[d][s] != (*opt_.target_colors)[d][t])
      return false;
    return !opt_.allow || opt_.allow(d, s, t);
  }

  // returns false when the visitor asked to stop
  bool enter_degree(int d) {
    if (d == x_.degrees()) return visit_(f_);
    for (SimplexId s = 0; s < x_.count[d]; ++s) {
      if (!xinfo_.degenerate(d, s)) continue;
      const auto& op = x_.degens[d][xinfo_.op[d][s]];
      const SimplexId t = y_.degens[d][xinfo_.op[d][s]].table[f_[op.from][xinfo_.source[d][s]]];
      if (!allowed(d, s, t)) return true;
      f_[d][s] = t;
    }
    return assign(d, 0);
  }

  bool assign(int d, std::size_t idx) {
    if (idx == nondeg_[d].size()) return enter_degree(d + 1);
    const SimplexId s = nondeg_[d][idx];
    std::vector<SimplexId> key(x_.faces[d].size());
    for (std::size_t k = 0; k < key.size(); ++k) {
      const auto& op = x_.faces[d][k];
      key[k] = f_[op.to][op.table[s]];
    }
    auto it = buckets_[d].find(key);
    if (it == buckets_[d].end()) return true;
    for (SimplexId t : it->second) {
      budget_.charge();
      if (opt_.iso_mode && used_[d][t]) continue;
      if (!allowed(d, s, t)) continue;
      f_[d][s] = t;
      if (opt_.iso_mode) used_[d][t] = 1;
      const bool go_on = assign(d, idx + 1);
      if (opt_.iso_mode) used_[d][t] = 0;
      if (!go_on) return false;
    }
    return true;
  }

  const GradedSet& x_;
  const GradedSet& y_;
  const MapSearchOptions& opt_;
  SearchBudget& budget_;
  const std::function<bool(const MapComponents&)>& visit_;
  DegeneracyInfo xinfo_, yinfo_;
  std::vector<std::vector<SimplexId>> nondeg_;
  std::vector<Bucket> buckets_;
  std::vector<std::vector<std::uint8_t>> used_;
  MapComponents f_;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 4);
  return h * 0xff51afd7ed558ccdULL;
}

}  // namespace

void for_each_graded_map(const GradedSet& source, const GradedSet& target,
                         const MapSearchOptions& options, SearchBudget& budget,
                         const std::function<bool(const MapComponents&)>& visit) {
  if (!same_shape(source, target)) throw InputError("map search: source and target shapes differ");
  MapSearch search(source, target, options, budget, visit);
  search.run();
}

std::vector<std::vector<std::uint64_t>> refine_colors(const GradedSet& g, int rounds) {
  const auto info = analyze_degeneracies(g);
  const int nd = g.degrees();
  std::vector<std::vector<std::uint64_t>> color(nd);
  for (int d = 0; d < nd; ++d) {
    color[d].resize(g.count[d]);
    for (SimplexId s = 0; s < g.count[d]; ++s)
      color[d][s] = mix(static_cast<std::uint64_t>(d), info.degenerate(d, s) ? 1 : 2);
  }
  for (int r = 0; r < rounds; ++r) {
    auto next = color;
    // upward incidences: for every face operator, collect colors of nondegenerate cofaces
    std::vector<std::vector<std::vector<std::uint64_t>>> up(nd);
    for (int d = 0; d < nd; ++d) up[d].resize(g.count[d]);
    for (int d = 0; d < nd; ++d) {
      for (std::size_t k = 0; k < g.faces[d].size(); ++k) {
        const auto& op = g.faces[d][k];
        for (SimplexId s = 0; s < g.count[d]; ++s) {
          if (info.degenerate(d, s)) continue;
          up[op.to][op.table[s]].push_back(mix(color[d][s], k));
        }
      }
    }
    for (int d = 0; d < nd; ++d) {
      for (SimplexId s = 0; s < g.count[d]; ++s) {
        std::uint64_t h = color[d][s];
        for (const auto& op : g.faces[d]) h = mix(h, color[op.to][op.table[s]]);
        auto& u = up[d][s];
        std::sort(u.begin(), u.end());
        for (auto v : u) h = mix(h, v);
        next[d][s] = h;
      }
    }
    color = std::move(next);
  }
  return color;
}

std::optional<MapComponents> find_graded_isomorphism(const GradedSet& source,
                                                     const GradedSet& target,
                                                     SearchBudget& budget) {
  if (!same_shape(source, target) || source.count != target.count) return std::nullopt;
  const auto cs = refine_colors(source);
  const auto ct = refine_colors(target);
  for (int d = 0; d < source.degrees(); ++d) {
    auto a = cs[d], b = ct[d];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  MapSearchOptions opt;
  opt.iso_mode = true;
  opt.source_colors = &cs;
  opt.target_colors = &ct;
  std::optional<MapComponents> found;
  for_each_graded_map(source, target, opt, budget, [&](const MapComponents& f) {
    for (int d = 0; d < source.degrees(); ++d) {
      std::vector<std::uint8_t> hit(target.count[d], 0);
      for (auto t : f[d]) {
        if (hit[t]) return true;
        hit[t] = 1;
      }
    }
    found = f;
    return false;
  });
  return found;
}

bool commutes(const GradedSet& source, const GradedSet& target, const MapComponents& f) {
  if (!same_shape(source, target)) return false;
  for (int d = 0; d < source.degrees(); ++d) {
    if (f[d].size() != source.count[d]) return false;
    for (SimplexId s = 0; s < source.count[d]; ++s)
      if (f[d][s] >= target.count[d]) return false;
  }
  for (int d = 0; d < source.degrees(); ++d) {
    for (std::size_t k = 0; k < source.faces[d].size(); ++k) {
      const auto& a = source.faces[d][k];
      const auto& b = target.faces[d][k];
      for (SimplexId s = 0; s < source.count[d]; ++s)
        if (f[a.to][a.table[s]] != b.table[f[d][s]]) return false;
    }
    for (std::size_t k = 0; k < source.degens[d].size(); ++k) {
      const auto& a = source.degens[d][k];
      const auto& b = target.degens[d][k];
      for (SimplexId s = 0; s < a.table.size(); ++s)
        if (f[d][a.table[s]] != b.table[f[a.from][s]]) return false;
    }
  }
  return true;
}

}  // namespace wurst
