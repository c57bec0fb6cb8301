#include <numeric>

#include "wurst/constructions.hpp"

namespace wurst {

namespace {

struct UnionFind {
  std::vector<SimplexId> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), SimplexId{0}); }
  SimplexId find(SimplexId a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  bool unite(SimplexId a, SimplexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
};

}  // namespace

Quotient quotient(const SimplicialSet& x,
                  const std::vector<std::vector<std::pair<SimplexId, SimplexId>>>& identify) {
  const int cap = x.cap();
  std::vector<UnionFind> uf;
  for (int n = 0; n <= cap; ++n) uf.emplace_back(x.size(n));
  for (std::size_t n = 0; n < identify.size() && n <= static_cast<std::size_t>(cap); ++n)
    for (auto [a, b] : identify[n]) uf[n].unite(a, b);
  // close under faces and degeneracies
  for (bool changed = true; changed;) {
    changed = false;
    for (int n = 0; n <= cap; ++n)
      for (SimplexId s = 0; s < x.size(n); ++s) {
        const SimplexId r = uf[n].find(s);
        if (r == s) continue;
        if (n >= 1)
          for (int i = 0; i <= n; ++i) changed |= uf[n - 1].unite(x.face(n, i, s), x.face(n, i, r));
        if (n + 1 <= cap)
          for (int i = 0; i <= n; ++i) changed |= uf[n + 1].unite(x.degen(n, i, s), x.degen(n, i, r));
      }
  }
  Quotient q;
  q.representative.resize(static_cast<std::size_t>(cap) + 1);
  MapComponents proj(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    std::vector<SimplexId> class_of_root(x.size(n), kNoSimplex);
    proj[n].resize(x.size(n));
    for (SimplexId s = 0; s < x.size(n); ++s) {
      const SimplexId r = uf[n].find(s);
      if (class_of_root[r] == kNoSimplex) {
        class_of_root[r] = static_cast<SimplexId>(q.representative[n].size());
        q.representative[n].push_back(s);
      }
      proj[n][s] = class_of_root[r];
    }
  }
  SimplicialSet::Tables t;
  t.cap = cap;
  t.count.resize(static_cast<std::size_t>(cap) + 1);
  t.face.resize(static_cast<std::size_t>(cap) + 1);
  t.degen.resize(static_cast<std::size_t>(cap) + 1);
  if (x.has_labels()) t.labels.resize(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    const auto& reps = q.representative[n];
    t.count[n] = reps.size();
    if (n >= 1) {
      t.face[n].assign(static_cast<std::size_t>(n) + 1, std::vector<SimplexId>(reps.size()));
      for (int i = 0; i <= n; ++i)
        for (SimplexId c = 0; c < reps.size(); ++c) t.face[n][i][c] = proj[n - 1][x.face(n, i, reps[c])];
    }
    if (n + 1 <= cap) {
      t.degen[n].assign(static_cast<std::size_t>(n) + 1, std::vector<SimplexId>(reps.size()));
      for (int i = 0; i <= n; ++i)
        for (SimplexId c = 0; c < reps.size(); ++c) t.degen[n][i][c] = proj[n + 1][x.degen(n, i, reps[c])];
    }
    if (x.has_labels())
      for (auto r : reps) t.labels[n].push_back(x.label(n, r));
  }
  q.set = SimplicialSet(std::move(t));
  q.projection = SimplicialMap::trusted(x, q.set, std::move(proj));
  return q;
}

SimplicialMap descend(const Quotient& q, const SimplicialMap& f) {
  const int cap = q.set.cap();
  MapComponents c(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    c[n].assign(q.set.size(n), kNoSimplex);
    for (SimplexId s = 0; s < f.source().size(n); ++s) {
      const SimplexId cls = q.projection(n, s);
      const SimplexId v = f(n, s);
      if (c[n][cls] == kNoSimplex) {
        c[n][cls] = v;
      } else if (c[n][cls] != v) {
        throw InputError("descend: map is not constant on a class at level " + std::to_string(n));
      }
    }
  }
  return SimplicialMap::trusted(q.set, f.target(), std::move(c));
}

Pushout pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(f.source() == g.source())) throw InputError("pushout: maps must share a source");
  Pushout p;
  p.sum = disjoint_union(f.target(), g.target());
  const int cap = f.source().cap();
  std::vector<std::vector<std::pair<SimplexId, SimplexId>>> identify(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n)
    for (SimplexId a = 0; a < f.source().size(n); ++a)
      identify[n].emplace_back(p.sum.inl(n, f(n, a)), p.sum.inr(n, g(n, a)));
  p.quotient = quotient(p.sum.set, identify);
  p.set = p.quotient.set;
  p.inl = compose(p.quotient.projection, p.sum.inl);
  p.inr = compose(p.quotient.projection, p.sum.inr);
  return p;
}

SimplicialMap pushout_map(const Pushout& p, const SimplicialMap& fx, const SimplicialMap& fy) {
  if (!(fx.target() == fy.target())) throw InputError("pushout_map: targets differ");
  const int cap = p.set.cap();
  MapComponents c(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    c[n].resize(p.sum.set.size(n));
    for (SimplexId s = 0; s < fx.source().size(n); ++s) c[n][p.sum.inl(n, s)] = fx(n, s);
    for (SimplexId s = 0; s < fy.source().size(n); ++s) c[n][p.sum.inr(n, s)] = fy(n, s);
  }
  return descend(p.quotient, SimplicialMap::trusted(p.sum.set, fx.target(), std::move(c)));
}

}  // namespace wurst
