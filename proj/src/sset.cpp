#include "wurst/sset.hpp"

#include <algorithm>
#include <sstream>

namespace wurst {

namespace {

std::string where(int n, int i, int j, SimplexId x) {
  std::ostringstream os;
  os << " (level " << n << ", i=" << i << ", j=" << j << ", simplex " << x << ")";
  return os.str();
}

void check_shapes(const SimplicialSet::Tables& t) {
  if (t.cap < 0) throw InputError("simplicial set: negative cap");
  const auto levels = static_cast<std::size_t>(t.cap) + 1;
  if (t.count.size() != levels || t.face.size() != levels || t.degen.size() != levels)
    throw InputError("simplicial set: expected " + std::to_string(levels) + " levels");
  if (!t.labels.empty() && t.labels.size() != levels)
    throw InputError("simplicial set: label levels mismatch");
  for (int n = 0; n <= t.cap; ++n) {
    const auto c = t.count[n];
    if (!t.labels.empty() && !t.labels[n].empty() && t.labels[n].size() != c)
      throw InputError("simplicial set: label count mismatch at level " + std::to_string(n));
    const std::size_t nf = n >= 1 ? static_cast<std::size_t>(n) + 1 : 0;
    if (t.face[n].size() != nf) throw InputError("simplicial set: wrong number of faces at level " + std::to_string(n));
    for (const auto& tab : t.face[n]) {
      if (tab.size() != c) throw InputError("simplicial set: face table size at level " + std::to_string(n));
      for (auto y : tab)
        if (y >= t.count[n - 1]) throw InputError("simplicial set: face out of range at level " + std::to_string(n));
    }
    const std::size_t ns = n + 1 <= t.cap ? static_cast<std::size_t>(n) + 1 : 0;
    if (t.degen[n].size() != ns) throw InputError("simplicial set: wrong number of degeneracies at level " + std::to_string(n));
    for (const auto& tab : t.degen[n]) {
      if (tab.size() != c) throw InputError("simplicial set: degeneracy table size at level " + std::to_string(n));
      for (auto y : tab)
        if (y >= t.count[n + 1]) throw InputError("simplicial set: degeneracy out of range at level " + std::to_string(n));
    }
  }
}

}  // namespace

std::optional<std::string> check_simplicial_identities(const SimplicialSet::Tables& t) {
  const auto& d = t.face;
  const auto& s = t.degen;
  for (int n = 0; n <= t.cap; ++n) {
    for (SimplexId x = 0; x < t.count[n]; ++x) {
      // d_i d_j = d_{j-1} d_i for i < j
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (d[n - 1][i][d[n][j][x]] != d[n - 1][j - 1][d[n][i][x]])
              return "d_i d_j != d_{j-1} d_i" + where(n, i, j, x);
      if (n + 1 > t.cap) continue;
      // faces of degeneracies
      for (int j = 0; j <= n; ++j) {
        const SimplexId y = s[n][j][x];
        for (int i = 0; i <= n + 1; ++i) {
          const SimplexId got = d[n + 1][i][y];
          SimplexId want;
          if (i == j || i == j + 1) {
            want = x;
          } else if (i < j) {
            want = s[n - 1][j - 1][d[n][i][x]];
          } else {
            want = s[n - 1][j][d[n][i - 1][x]];
          }
          if (got != want) return "d_i s_j identity fails" + where(n, i, j, x);
        }
      }
      // s_i s_j = s_{j+1} s_i for i <= j
      if (n + 2 <= t.cap)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (s[n + 1][i][s[n][j][x]] != s[n + 1][j + 1][s[n][i][x]])
              return "s_i s_j != s_{j+1} s_i" + where(n, i, j, x);
    }
  }
  return std::nullopt;
}

SimplicialSet::SimplicialSet() {
  Tables t;
  t.cap = 0;
  t.count = {0};
  t.face = {{}};
  t.degen = {{}};
  *this = SimplicialSet(std::move(t));
}

SimplicialSet::SimplicialSet(Tables t) {
  check_shapes(t);
  if (auto err = check_simplicial_identities(t)) throw InputError("simplicial set: " + *err);
  auto data = std::make_shared<Data>();
  data->cap = t.cap;
  auto& g = data->graded;
  g.count = t.count;
  g.faces.resize(t.count.size());
  g.degens.resize(t.count.size());
  for (int n = 0; n <= t.cap; ++n) {
    for (int i = 0; i < static_cast<int>(t.face[n].size()); ++i)
      g.faces[n].push_back(GradedOp{n, n - 1, std::move(t.face[n][i])});
    for (int i = 0; i < static_cast<int>(t.degen[n].size()); ++i)
      g.degens[n + 1].push_back(GradedOp{n, n + 1, std::move(t.degen[n][i])});
  }
  data->degenerate.resize(t.count.size());
  for (int n = 0; n <= t.cap; ++n) {
    data->degenerate[n].assign(t.count[n], 0);
    for (const auto& op : g.degens[n])
      for (auto y : op.table) data->degenerate[n][y] = 1;
  }
  bool any_label = false;
  for (const auto& lv : t.labels) any_label = any_label || !lv.empty();
  if (any_label) {
    data->labels = std::move(t.labels);
    for (int n = 0; n <= t.cap; ++n)
      if (data->labels[n].empty()) data->labels[n].resize(t.count[n]);
  }
  data_ = std::move(data);
}

std::vector<SimplexId> SimplicialSet::nondegenerate(int n) const {
  std::vector<SimplexId> out;
  for (SimplexId x = 0; x < size(n); ++x)
    if (!is_degenerate(n, x)) out.push_back(x);
  return out;
}

int SimplicialSet::dimension() const {
  for (int n = cap(); n >= 0; --n)
    for (SimplexId x = 0; x < size(n); ++x)
      if (!is_degenerate(n, x)) return n;
  return -1;
}

SimplexId SimplicialSet::act(int n, SimplexId x, const Mono& alpha) const {
  const auto steps = factor(alpha, n);
  int level = n;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->kind == DeltaGenerator::Kind::coface) {
      x = face(level, it->index, x);
      --level;
    } else {
      if (level + 1 > cap()) throw CapError("operator action leaves the truncation range");
      x = degen(level, it->index, x);
      ++level;
    }
  }
  return x;
}

std::vector<SimplexId> SimplicialSet::vertices(int n, SimplexId x) const {
  std::vector<SimplexId> out(static_cast<std::size_t>(n) + 1);
  for (int v = 0; v <= n; ++v) out[v] = act(n, x, Mono{v});
  return out;
}

SimplexId SimplicialSet::constant(int n, SimplexId v) const {
  SimplexId x = v;
  for (int k = 0; k < n; ++k) x = degen(k, 0, x);
  return x;
}

std::string SimplicialSet::label(int n, SimplexId x) const {
  if (!data_->labels.empty() && !data_->labels[n][x].empty()) return data_->labels[n][x];
  return std::to_string(n) + ":" + std::to_string(x);
}

SimplicialSet::Tables SimplicialSet::tables() const {
  Tables t;
  t.cap = cap();
  const auto& g = data_->graded;
  t.count = g.count;
  t.face.resize(g.count.size());
  t.degen.resize(g.count.size());
  for (int n = 0; n <= t.cap; ++n) {
    for (const auto& op : g.faces[n]) t.face[n].push_back(op.table);
    if (n + 1 <= t.cap)
      for (const auto& op : g.degens[n + 1]) t.degen[n].push_back(op.table);
  }
  t.labels = data_->labels;
  return t;
}

bool operator==(const SimplicialSet& a, const SimplicialSet& b) {
  if (a.data_ == b.data_) return true;
  if (a.cap() != b.cap()) return false;
  const auto &ga = a.graded(), &gb = b.graded();
  if (ga.count != gb.count) return false;
  for (int n = 0; n <= a.cap(); ++n) {
    for (std::size_t i = 0; i < ga.faces[n].size(); ++i)
      if (ga.faces[n][i].table != gb.faces[n][i].table) return false;
    for (std::size_t i = 0; i < ga.degens[n].size(); ++i)
      if (ga.degens[n][i].table != gb.degens[n][i].table) return false;
  }
  return true;
}

SimplicialMap::SimplicialMap(SimplicialSet source, SimplicialSet target, MapComponents components)
    : source_(std::move(source)), target_(std::move(target)), comp_(std::move(components)) {
  if (source_.cap() != target_.cap()) throw InputError("simplicial map: caps differ");
  if (comp_.size() != static_cast<std::size_t>(source_.cap()) + 1)
    throw InputError("simplicial map: wrong number of components");
  for (int n = 0; n <= source_.cap(); ++n) {
    if (comp_[n].size() != source_.size(n)) throw InputError("simplicial map: component size mismatch");
    for (auto y : comp_[n])
      if (y >= target_.size(n)) throw InputError("simplicial map: value out of range");
  }
  if (!commutes(source_.graded(), target_.graded(), comp_))
    throw InputError("simplicial map: components do not commute with the structure maps");
}

SimplicialMap SimplicialMap::identity(const SimplicialSet& x) {
  MapComponents c(static_cast<std::size_t>(x.cap()) + 1);
  for (int n = 0; n <= x.cap(); ++n) {
    c[n].resize(x.size(n));
    for (SimplexId s = 0; s < x.size(n); ++s) c[n][s] = s;
  }
  return trusted(x, x, std::move(c));
}

SimplicialMap SimplicialMap::trusted(SimplicialSet source, SimplicialSet target, MapComponents components) {
  SimplicialMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.comp_ = std::move(components);
  return f;
}

bool SimplicialMap::injective() const {
  for (int n = 0; n <= source_.cap(); ++n) {
    std::vector<std::uint8_t> seen(target_.size(n), 0);
    for (auto y : comp_[n]) {
      if (seen[y]) return false;
      seen[y] = 1;
    }
  }
  return true;
}

bool SimplicialMap::surjective() const {
  for (int n = 0; n <= source_.cap(); ++n) {
    std::vector<std::uint8_t> seen(target_.size(n), 0);
    for (auto y : comp_[n]) seen[y] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  }
  return true;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target() == g.source())) throw InputError("compose: target/source mismatch");
  MapComponents c(f.components().size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n].resize(f.components()[n].size());
    for (std::size_t s = 0; s < c[n].size(); ++s) c[n][s] = g.components()[n][f.components()[n][s]];
  }
  return SimplicialMap::trusted(f.source(), g.target(), std::move(c));
}

std::vector<std::size_t> nondegenerate_counts(const SimplicialSet& x) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= x.cap(); ++n) out.push_back(x.nondegenerate(n).size());
  return out;
}

void for_each_map(const SimplicialSet& x, const SimplicialSet& y, SearchBudget& budget,
                  const std::function<bool(const MapComponents&)>& visit,
                  const std::function<bool(int, SimplexId, SimplexId)>& allow) {
  if (x.cap() != y.cap()) throw InputError("map enumeration: caps differ");
  MapSearchOptions opt;
  opt.allow = allow;
  for_each_graded_map(x.graded(), y.graded(), opt, budget, visit);
}

std::vector<SimplicialMap> enumerate_maps(const SimplicialSet& x, const SimplicialSet& y,
                                          SearchBudget& budget,
                                          const std::function<bool(int, SimplexId, SimplexId)>& allow) {
  std::vector<SimplicialMap> out;
  for_each_map(x, y, budget, [&](const MapComponents& c) {
    out.push_back(SimplicialMap::trusted(x, y, c));
    return true;
  }, allow);
  return out;
}

std::size_t count_maps(const SimplicialSet& x, const SimplicialSet& y, SearchBudget& budget,
                       const std::function<bool(int, SimplexId, SimplexId)>& allow) {
  std::size_t n = 0;
  for_each_map(x, y, budget, [&](const MapComponents&) {
    ++n;
    return true;
  }, allow);
  return n;
}

std::optional<SimplicialMap> is_isomorphic(const SimplicialSet& x, const SimplicialSet& y,
                                           SearchBudget& budget) {
  if (x.cap() != y.cap()) throw InputError("isomorphism test: caps differ");
  auto c = find_graded_isomorphism(x.graded(), y.graded(), budget);
  if (!c) return std::nullopt;
  return SimplicialMap(x, y, std::move(*c));
}

std::optional<SimplicialMap> is_isomorphic(const SimplicialSet& x, const SimplicialSet& y) {
  SearchBudget budget;
  return is_isomorphic(x, y, budget);
}

Mono delete_entry(const Mono& seq, int i) {
  Mono out = seq;
  out.erase(out.begin() + i);
  return out;
}

Mono repeat_entry(const Mono& seq, int i) {
  Mono out = seq;
  out.insert(out.begin() + i, seq[static_cast<std::size_t>(i)]);
  return out;
}

std::string sequence_label(const Mono& seq) {
  std::string s = "[";
  for (std::size_t p = 0; p < seq.size(); ++p) {
    if (p) s += ",";
    s += std::to_string(seq[p]);
  }
  return s + "]";
}

}  // namespace wurst
