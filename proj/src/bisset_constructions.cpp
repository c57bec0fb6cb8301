#include <algorithm>
#include <set>

#include "wurst/bisset.hpp"

namespace wurst {

namespace {

using Pair = std::pair<SimplexId, SimplexId>;

std::map<Mono, SimplexId> monotone_index(int m, int n) {
  std::map<Mono, SimplexId> idx;
  const auto maps = monotone_maps(m, n);
  for (SimplexId s = 0; s < maps.size(); ++s) idx.emplace(maps[s], s);
  return idx;
}

Mono slice(const Mono& seq, int from, int to) {  // entries [from, to)
  return Mono(seq.begin() + from, seq.begin() + to);
}

std::string cut_label(const Mono& c, int i) {
  std::string s = "[";
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (p) s += static_cast<int>(p) == i + 1 ? "|" : ",";
    s += std::to_string(c[p]);
  }
  return s + "]";
}

}  // namespace

BiSimplicialSet box(const SimplicialSet& x, const SimplicialSet& y, BiRange range) {
  if (x.cap() < std::min(range.ch, range.total) || y.cap() < std::min(range.cv, range.total))
    throw CapError("box: factor caps below the requested range");
  BiSimplicialSet::Grid<std::vector<Pair>> levels(static_cast<std::size_t>(range.ch) + 1,
                                                  std::vector<std::vector<Pair>>(static_cast<std::size_t>(range.cv) + 1));
  for (int i = 0; i <= range.ch; ++i)
    for (int j = 0; j <= range.cv; ++j)
      if (range.contains(i, j))
        for (SimplexId a = 0; a < x.size(i); ++a)
          for (SimplexId b = 0; b < y.size(j); ++b) levels[i][j].emplace_back(a, b);
  return build_bi_keyed<Pair>(
             range, std::move(levels),
             [&](int i, int, int k, const Pair& p) { return Pair{x.face(i, k, p.first), p.second}; },
             [&](int, int j, int k, const Pair& p) { return Pair{p.first, y.face(j, k, p.second)}; },
             [&](int i, int, int k, const Pair& p) { return Pair{x.degen(i, k, p.first), p.second}; },
             [&](int, int j, int k, const Pair& p) { return Pair{p.first, y.degen(j, k, p.second)}; },
             [&](int i, int j, const Pair& p) { return x.label(i, p.first) + "#" + y.label(j, p.second); })
      .set;
}

KeyedBiSet<Mono> cut(int n, BiRange range) {
  BiSimplicialSet::Grid<std::vector<Mono>> levels(static_cast<std::size_t>(range.ch) + 1,
                                                  std::vector<std::vector<Mono>>(static_cast<std::size_t>(range.cv) + 1));
  for (int i = 0; i <= range.ch; ++i)
    for (int j = 0; j <= range.cv; ++j)
      if (range.contains(i, j)) levels[i][j] = monotone_maps(i + 1 + j, n);
  return build_bi_keyed<Mono>(
      range, std::move(levels), [](int, int, int k, const Mono& c) { return delete_entry(c, k); },
      [](int i, int, int k, const Mono& c) { return delete_entry(c, i + 1 + k); },
      [](int, int, int k, const Mono& c) { return repeat_entry(c, k); },
      [](int i, int, int k, const Mono& c) { return repeat_entry(c, i + 1 + k); },
      [](int i, int, const Mono& c) { return cut_label(c, i); });
}

BiSimplicialMap cut_map(const Mono& theta, int n, int m, BiRange range) {
  const auto src = cut(n, range), dst = cut(m, range);
  BiSimplicialMap::Components c = unflatten(src.set, MapComponents(src.set.degrees().size()));
  for (auto [i, j] : src.set.degrees())
    for (const auto& seq : src.keys[i][j]) c[i][j].push_back(dst.at(i, j, compose(theta, seq)));
  return BiSimplicialMap::trusted(src.set, dst.set, std::move(c));
}

KeyedBiSet<SimplexId> dec(const PointedDirected& k, BiRange range, SearchBudget& budget) {
  if (!is_directed(k)) throw InputError("dec: input is not a directed two-object simplicial set");
  const auto& x = k.carrier;
  if (range.total + 1 > x.cap()) throw CapError("dec: needs cap >= total + 1, have " + std::to_string(x.cap()));
  BiSimplicialSet::Grid<std::vector<SimplexId>> levels(static_cast<std::size_t>(range.ch) + 1,
                                                       std::vector<std::vector<SimplexId>>(static_cast<std::size_t>(range.cv) + 1));
  // maps out of Delta^m are m-simplices; keep those with the right vertex blocks
  for (int i = 0; i <= range.ch; ++i)
    for (int j = 0; j <= range.cv; ++j) {
      if (!range.contains(i, j)) continue;
      const int m = i + 1 + j;
      for (SimplexId s = 0; s < x.size(m); ++s) {
        budget.charge();
        const auto v = x.vertices(m, s);
        bool ok = true;
        for (int q = 0; q <= m && ok; ++q) ok = v[q] == (q <= i ? k.base0 : k.base1);
        if (ok) levels[i][j].push_back(s);
      }
    }
  return build_bi_keyed<SimplexId>(
      range, std::move(levels), [&](int i, int j, int q, SimplexId s) { return x.face(i + 1 + j, q, s); },
      [&](int i, int j, int q, SimplexId s) { return x.face(i + 1 + j, i + 1 + q, s); },
      [&](int i, int j, int q, SimplexId s) { return x.degen(i + 1 + j, q, s); },
      [&](int i, int j, int q, SimplexId s) { return x.degen(i + 1 + j, i + 1 + q, s); },
      [&](int i, int j, SimplexId s) { return x.label(i + 1 + j, s); });
}

KeyedBiSet<SimplexId> dec(const PointedDirected& k, BiRange range) {
  SearchBudget budget;
  return dec(k, range, budget);
}

Mono collapse_blocks(const Mono& seq, int i) {
  if (seq.back() <= i) return Mono(seq.size(), 0);
  if (seq.front() >= i + 1) return Mono(seq.size(), i + 1);
  return seq;
}

KeyedSet<Mono> directed_join_keyed(int i, int j, int cap) {
  std::vector<std::vector<Mono>> levels(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k) {
    std::set<Mono> seen;
    for (const auto& a : monotone_maps(k, i + 1 + j)) seen.insert(collapse_blocks(a, i));
    levels[k].assign(seen.begin(), seen.end());
  }
  return build_keyed<Mono>(
      cap, std::move(levels), [i](int, int q, const Mono& a) { return collapse_blocks(delete_entry(a, q), i); },
      [i](int, int q, const Mono& a) { return collapse_blocks(repeat_entry(a, q), i); },
      [i](int, const Mono& a) { return cut_label(a, i); });
}

PointedDirected directed_join(int i, int j, int cap) {
  return PointedDirected{directed_join_keyed(i, j, cap).set, 0, 1};
}

PointedDirected directed_join_pushout(int i, int j, int cap) {
  const auto di = standard_simplex(i, cap), dj = standard_simplex(j, cap), pt = standard_simplex(0, cap);
  const Join jn(di, dj);
  const auto ends = disjoint_union(di, dj);
  const auto points = disjoint_union(pt, pt);
  MapComponents to_join(static_cast<std::size_t>(cap) + 1), to_points(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    to_join[n].resize(ends.set.size(n));
    to_points[n].resize(ends.set.size(n));
    for (SimplexId s = 0; s < di.size(n); ++s) {
      to_join[n][ends.inl(n, s)] = jn.left(n, s);
      to_points[n][ends.inl(n, s)] = points.inl(n, 0);
    }
    for (SimplexId s = 0; s < dj.size(n); ++s) {
      to_join[n][ends.inr(n, s)] = jn.right(n, s);
      to_points[n][ends.inr(n, s)] = points.inr(n, 0);
    }
  }
  const auto p = pushout(SimplicialMap(ends.set, jn.set(), std::move(to_join)),
                         SimplicialMap(ends.set, points.set, std::move(to_points)));
  return PointedDirected{p.set, p.inr(0, points.inl(0, 0)), p.inr(0, points.inr(0, 0))};
}

SimplicialSet diag(const BiSimplicialSet& b) {
  const auto& r = b.range();
  const int cap = std::min({r.ch, r.cv, r.total / 2});
  SimplicialSet::Tables t;
  t.cap = cap;
  t.count.resize(static_cast<std::size_t>(cap) + 1);
  t.face.resize(static_cast<std::size_t>(cap) + 1);
  t.degen.resize(static_cast<std::size_t>(cap) + 1);
  t.labels.resize(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k) {
    const auto c = b.size(k, k);
    t.count[k] = c;
    if (k >= 1) {
      t.face[k].assign(static_cast<std::size_t>(k) + 1, std::vector<SimplexId>(c));
      for (int q = 0; q <= k; ++q)
        for (SimplexId x = 0; x < c; ++x) t.face[k][q][x] = b.hface(k, k - 1, q, b.vface(k, k, q, x));
    }
    if (k + 1 <= cap) {
      t.degen[k].assign(static_cast<std::size_t>(k) + 1, std::vector<SimplexId>(c));
      for (int q = 0; q <= k; ++q)
        for (SimplexId x = 0; x < c; ++x) t.degen[k][q][x] = b.hdegen(k, k + 1, q, b.vdegen(k, k, q, x));
    }
    for (SimplexId x = 0; x < c; ++x) t.labels[k].push_back(b.label(k, k, x));
  }
  return SimplicialSet(std::move(t));
}

BiSimplicialSet flip(const BiSimplicialSet& b) {
  const auto& s = b.tables();
  BiSimplicialSet::Tables t(s.range.flipped());
  for (int i = 0; i <= t.range.ch; ++i)
    for (int j = 0; j <= t.range.cv; ++j) {
      if (!t.range.contains(i, j)) continue;
      t.count[i][j] = s.count[j][i];
      t.hface[i][j] = s.vface[j][i];
      t.vface[i][j] = s.hface[j][i];
      t.hdegen[i][j] = s.vdegen[j][i];
      t.vdegen[i][j] = s.hdegen[j][i];
      t.labels[i][j] = s.labels[j][i];
    }
  return BiSimplicialSet(std::move(t));
}

namespace {

BiSimplicialSet reverse_direction(const BiSimplicialSet& b, bool horizontal) {
  auto t = b.tables();
  for (auto [i, j] : b.degrees()) {
    auto& f = horizontal ? t.hface[i][j] : t.vface[i][j];
    auto& d = horizontal ? t.hdegen[i][j] : t.vdegen[i][j];
    std::reverse(f.begin(), f.end());
    std::reverse(d.begin(), d.end());
  }
  return BiSimplicialSet(std::move(t));
}

}  // namespace

BiSimplicialSet lrev(const BiSimplicialSet& b) { return reverse_direction(b, true); }
BiSimplicialSet rrev(const BiSimplicialSet& b) { return reverse_direction(b, false); }
BiSimplicialSet rev(const BiSimplicialSet& b) { return lrev(rrev(b)); }

std::pair<BiSimplicialSet, BiSimplicialMap> bi_filter(const BiSimplicialSet& b,
                                                      const std::function<bool(int, int, SimplexId)>& keep) {
  const auto& s = b.tables();
  const auto& r = s.range;
  BiSimplicialSet::Grid<std::vector<SimplexId>> new_id(static_cast<std::size_t>(r.ch) + 1,
                                                       std::vector<std::vector<SimplexId>>(static_cast<std::size_t>(r.cv) + 1));
  BiSimplicialMap::Components inc = new_id;
  for (auto [i, j] : b.degrees()) {
    new_id[i][j].assign(b.size(i, j), kNoSimplex);
    for (SimplexId x = 0; x < b.size(i, j); ++x)
      if (keep(i, j, x)) {
        new_id[i][j][x] = static_cast<SimplexId>(inc[i][j].size());
        inc[i][j].push_back(x);
      }
  }
  BiSimplicialSet::Tables t(r);
  auto restrict = [&](const BiSimplicialSet::OpTables& src, int i, int j, int ti, int tj) {
    BiSimplicialSet::OpTables out(src.size());
    for (std::size_t k = 0; k < src.size(); ++k)
      for (auto x : inc[i][j]) {
        const SimplexId y = new_id[ti][tj][src[k][x]];
        if (y == kNoSimplex) throw InputError("bi_filter: selection is not closed under the structure maps");
        out[k].push_back(y);
      }
    return out;
  };
  for (auto [i, j] : b.degrees()) {
    t.count[i][j] = inc[i][j].size();
    if (i >= 1) t.hface[i][j] = restrict(s.hface[i][j], i, j, i - 1, j);
    if (j >= 1) t.vface[i][j] = restrict(s.vface[i][j], i, j, i, j - 1);
    if (r.contains(i + 1, j)) t.hdegen[i][j] = restrict(s.hdegen[i][j], i, j, i + 1, j);
    if (r.contains(i, j + 1)) t.vdegen[i][j] = restrict(s.vdegen[i][j], i, j, i, j + 1);
    for (auto x : inc[i][j]) t.labels[i][j].push_back(b.label(i, j, x));
  }
  BiSimplicialSet sub(std::move(t));
  return {sub, BiSimplicialMap::trusted(sub, b, std::move(inc))};
}

BiSimplicialSet empty_biset(BiRange range) {
  return BiSimplicialSet(BiSimplicialSet::Tables(range));
}

std::pair<BiSimplicialSet, BiSimplicialMap> boundary_bisimplex_inclusion(int i, int j, BiRange range) {
  const int cap = std::max(range.ch, range.cv);
  const auto di = standard_simplex(i, cap), dj = standard_simplex(j, cap);
  const auto b = box(di, dj, range);
  std::map<std::pair<int, int>, std::pair<std::vector<Mono>, std::vector<Mono>>> seqs;
  for (auto [p, q] : b.degrees()) seqs[{p, q}] = {monotone_maps(p, i), monotone_maps(q, j)};
  return bi_filter(b, [&](int p, int q, SimplexId x) {
    const auto& [as, cs] = seqs.at({p, q});
    return !is_surjective(as[x / dj.size(q)], i) || !is_surjective(cs[x % dj.size(q)], j);
  });
}

BiSimplicialSet boundary_bisimplex(int i, int j, BiRange range) {
  return boundary_bisimplex_inclusion(i, j, range).first;
}

namespace {

BiSimplicialMap cut_restrict(int n, BiRange range, bool left_block) {
  const int cap = std::max(range.ch, range.cv);
  const auto src = cut(n, range);
  const auto dn = standard_simplex(n, cap), pt = standard_simplex(0, cap);
  const auto dst = left_block ? box(dn, pt, range) : box(pt, dn, range);
  auto c = unflatten(src.set, MapComponents(src.set.degrees().size()));
  for (auto [i, j] : src.set.degrees()) {
    const auto idx = monotone_index(left_block ? i : j, n);
    for (const auto& seq : src.keys[i][j])
      c[i][j].push_back(left_block ? idx.at(slice(seq, 0, i + 1)) : idx.at(slice(seq, i + 1, i + 2 + j)));
  }
  return BiSimplicialMap(src.set, dst, std::move(c));
}

}  // namespace

BiSimplicialMap cut_restrict_left(int n, BiRange range) { return cut_restrict(n, range, true); }
BiSimplicialMap cut_restrict_right(int n, BiRange range) { return cut_restrict(n, range, false); }

std::size_t directed_hom_count(int i, int j, const PointedDirected& k, SearchBudget& budget) {
  const auto jij = directed_join(i, j, k.carrier.cap());
  return count_maps(jij.carrier, k.carrier, budget, [&](int level, SimplexId v, SimplexId target) {
    if (level != 0) return true;
    return target == (v == jij.base0 ? k.base0 : k.base1);
  });
}

std::vector<PartitionRow> partition_formula(const PointedDirected& k, SearchBudget& budget) {
  if (!is_directed(k)) throw InputError("partition formula: input is not directed");
  std::vector<PartitionRow> rows;
  for (int n = 0; n <= k.carrier.cap(); ++n) {
    std::size_t rhs = 2;
    for (int i = 0; i <= n - 1; ++i) rhs += directed_hom_count(i, n - 1 - i, k, budget);
    rows.push_back(PartitionRow{n, k.carrier.size(n), rhs});
  }
  return rows;
}

}  // namespace wurst
