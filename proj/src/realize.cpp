#include "wurst/realize.hpp"

#include <numeric>

namespace wurst {

namespace {

// (d', S-op(s), x) ~ (d, s, X-map(x)) for s in S_d, x in X_{d'}.
struct Relation {
  int d;
  int dprime;
  const std::vector<SimplexId>* sop;
  const SimplicialMap* xmap;
};

struct Flat {
  std::vector<std::uint32_t> parent;
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

// term(d) gives the simplicial set of the coefficient in degree d.
template <class TermFn>
Realization coend(std::vector<std::pair<int, int>> degrees, std::vector<std::size_t> source_size,
                  const std::vector<Relation>& relations, int cap, TermFn term) {
  Realization r;
  r.degrees = std::move(degrees);
  r.source_size = std::move(source_size);
  const auto nd = r.degrees.size();
  r.term_size.resize(static_cast<std::size_t>(cap) + 1);
  r.offset.resize(static_cast<std::size_t>(cap) + 1);
  r.class_of.resize(static_cast<std::size_t>(cap) + 1);
  r.representative.resize(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k) {
    std::size_t total = 0;
    for (std::size_t d = 0; d < nd; ++d) {
      r.offset[k].push_back(total);
      r.term_size[k].push_back(term(static_cast<int>(d)).size(k));
      total += r.source_size[d] * r.term_size[k][d];
    }
    if (total >= std::numeric_limits<std::uint32_t>::max()) throw BudgetExceeded("coend too large");
    Flat uf;
    uf.parent.resize(total);
    std::iota(uf.parent.begin(), uf.parent.end(), 0u);
    for (const auto& rel : relations) {
      const auto xs = r.term_size[k][rel.dprime];
      for (SimplexId s = 0; s < r.source_size[rel.d]; ++s) {
        const SimplexId s2 = (*rel.sop)[s];
        for (SimplexId x = 0; x < xs; ++x)
          uf.unite(static_cast<std::uint32_t>(r.element(k, rel.dprime, s2, x)),
                   static_cast<std::uint32_t>(r.element(k, rel.d, s, (*rel.xmap)(k, x))));
      }
    }
    std::vector<SimplexId> root_class(total, kNoSimplex);
    r.class_of[k].resize(total);
    for (std::size_t e = 0; e < total; ++e) {
      const auto root = uf.find(static_cast<std::uint32_t>(e));
      if (root_class[root] == kNoSimplex) {
        root_class[root] = static_cast<SimplexId>(r.representative[k].size());
        r.representative[k].push_back(e);
      }
      r.class_of[k][e] = root_class[root];
    }
  }
  SimplicialSet::Tables t;
  t.cap = cap;
  t.count.resize(static_cast<std::size_t>(cap) + 1);
  t.face.resize(static_cast<std::size_t>(cap) + 1);
  t.degen.resize(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k) {
    const auto nc = r.representative[k].size();
    t.count[k] = nc;
    if (k >= 1) t.face[k].assign(static_cast<std::size_t>(k) + 1, std::vector<SimplexId>(nc));
    if (k + 1 <= cap) t.degen[k].assign(static_cast<std::size_t>(k) + 1, std::vector<SimplexId>(nc));
    for (SimplexId c = 0; c < nc; ++c) {
      const auto el = r.decode(k, r.representative[k][c]);
      const auto& x = term(el.degree);
      for (int q = 0; q <= k && k >= 1; ++q) t.face[k][q][c] = r.cls(k - 1, el.degree, el.s, x.face(k, q, el.x));
      for (int q = 0; q <= k && k + 1 <= cap; ++q) t.degen[k][q][c] = r.cls(k + 1, el.degree, el.s, x.degen(k, q, el.x));
    }
  }
  r.set = SimplicialSet(std::move(t));
  return r;
}

}  // namespace

Realization::Element Realization::decode(int level, std::size_t e) const {
  const auto& off = offset[level];
  int d = static_cast<int>(off.size()) - 1;
  while (off[d] > e || source_size[d] * term_size[level][d] == 0) --d;
  const auto rest = e - off[d];
  const auto ts = term_size[level][d];
  return Element{d, static_cast<SimplexId>(rest / ts), static_cast<SimplexId>(rest % ts)};
}

Realization realize(const SimplicialSet& s, const CosimplicialSSet& x) {
  const int N = std::min(s.cap(), x.cocap());
  for (int n = N + 1; n <= s.cap(); ++n)
    if (!s.nondegenerate(n).empty())
      throw CapError("realize: source has a nondegenerate simplex in degree " + std::to_string(n) +
                     " beyond the cosimplicial bound " + std::to_string(x.cocap()));
  std::vector<std::pair<int, int>> degrees;
  std::vector<std::size_t> sizes;
  for (int n = 0; n <= N; ++n) {
    degrees.emplace_back(n, 0);
    sizes.push_back(s.size(n));
  }
  std::vector<Relation> rel;
  const auto& g = s.graded();
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) rel.push_back(Relation{n, n - 1, &g.faces[n][i].table, &x.coface(n, i)});
  for (int n = 0; n + 1 <= N; ++n)
    for (int i = 0; i <= n; ++i) rel.push_back(Relation{n, n + 1, &g.degens[n + 1][i].table, &x.codegen(n, i)});
  return coend(std::move(degrees), std::move(sizes), rel, x.cap(), [&](int d) -> const SimplicialSet& { return x.term(d); });
}

Realization realize(const BiSimplicialSet& b, const BiCosimplicialSSet& x) {
  const auto& br = b.range();
  for (auto [i, j] : b.degrees())
    if (!x.range().contains(i, j))
      throw CapError("realize: bidegree (" + std::to_string(i) + "," + std::to_string(j) +
                     ") lies outside the coefficient range");
  std::vector<std::size_t> sizes;
  for (auto [i, j] : b.degrees()) sizes.push_back(b.size(i, j));
  const auto& t = b.tables();
  std::vector<Relation> rel;
  for (auto [i, j] : b.degrees()) {
    const int d = b.degree_index(i, j);
    for (int k = 0; k <= i && i >= 1; ++k) rel.push_back(Relation{d, b.degree_index(i - 1, j), &t.hface[i][j][k], &x.hcoface(i, j, k)});
    for (int k = 0; k <= j && j >= 1; ++k) rel.push_back(Relation{d, b.degree_index(i, j - 1), &t.vface[i][j][k], &x.vcoface(i, j, k)});
    if (br.contains(i + 1, j))
      for (int k = 0; k <= i; ++k) rel.push_back(Relation{d, b.degree_index(i + 1, j), &t.hdegen[i][j][k], &x.hcodegen(i, j, k)});
    if (br.contains(i, j + 1))
      for (int k = 0; k <= j; ++k) rel.push_back(Relation{d, b.degree_index(i, j + 1), &t.vdegen[i][j][k], &x.vcodegen(i, j, k)});
  }
  const auto& degs = b.degrees();
  return coend(degs, std::move(sizes), rel, x.cap(),
               [&](int d) -> const SimplicialSet& { return x.term(degs[d].first, degs[d].second); });
}

SimplicialMap realize_map(const Realization& from, const Realization& to, const SimplicialMap& f) {
  const int cap = from.set.cap();
  MapComponents c(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k)
    for (auto e : from.representative[k]) {
      const auto el = from.decode(k, e);
      c[k].push_back(to.cls(k, el.degree, f(from.degrees[el.degree].first, el.s), el.x));
    }
  return SimplicialMap::trusted(from.set, to.set, std::move(c));
}

SimplicialMap realize_map(const Realization& from, const Realization& to, const BiSimplicialMap& f) {
  const int cap = from.set.cap();
  MapComponents c(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k)
    for (auto e : from.representative[k]) {
      const auto el = from.decode(k, e);
      const auto [i, j] = from.degrees[el.degree];
      c[k].push_back(to.cls(k, el.degree, f(i, j, el.s), el.x));
    }
  return SimplicialMap::trusted(from.set, to.set, std::move(c));
}

Sing sing(const CosimplicialSSet& x, const SimplicialSet& t, int out_cap, SearchBudget& budget,
          const SingConstraint& constraint) {
  if (out_cap > x.cocap()) throw CapError("sing: out_cap exceeds the cosimplicial bound");
  if (x.cap() != t.cap()) throw InputError("sing: coefficient terms and target have different caps");
  std::vector<std::vector<MapComponents>> levels(static_cast<std::size_t>(out_cap) + 1);
  for (int n = 0; n <= out_cap; ++n) {
    std::function<bool(int, SimplexId, SimplexId)> allow;
    if (constraint) allow = [&, n](int level, SimplexId s, SimplexId y) { return constraint(n, level, s, y); };
    for_each_map(x.term(n), t, budget, [&](const MapComponents& f) {
      levels[n].push_back(f);
      return true;
    }, allow);
  }
  auto pre = [](const MapComponents& g, const SimplicialMap& h) {
    MapComponents out(h.components().size());
    for (std::size_t l = 0; l < out.size(); ++l)
      for (auto v : h.components()[l]) out[l].push_back(g[l][v]);
    return out;
  };
  Sing out;
  out.keyed = build_keyed<MapComponents>(
      out_cap, std::move(levels), [&](int n, int i, const MapComponents& g) { return pre(g, x.coface(n, i)); },
      [&](int n, int i, const MapComponents& g) { return pre(g, x.codegen(n, i)); },
      [](int, const MapComponents&) { return std::string(); });
  return out;
}

Sing sing(const CosimplicialSSet& x, const SimplicialSet& t, int out_cap) {
  SearchBudget budget;
  return sing(x, t, out_cap, budget);
}

KeyedBiSet<MapComponents> sing(const BiCosimplicialSSet& x, const SimplicialSet& t, BiRange range,
                               SearchBudget& budget) {
  BiSimplicialSet::Grid<std::vector<MapComponents>> levels(static_cast<std::size_t>(range.ch) + 1,
                                                           std::vector<std::vector<MapComponents>>(static_cast<std::size_t>(range.cv) + 1));
  for (int i = 0; i <= range.ch; ++i)
    for (int j = 0; j <= range.cv; ++j) {
      if (!range.contains(i, j)) continue;
      if (!x.range().contains(i, j)) throw CapError("sing: bidegree outside the coefficient range");
      for_each_map(x.term(i, j), t, budget, [&](const MapComponents& f) {
        levels[i][j].push_back(f);
        return true;
      });
    }
  auto pre = [](const MapComponents& g, const SimplicialMap& h) {
    MapComponents out(h.components().size());
    for (std::size_t l = 0; l < out.size(); ++l)
      for (auto v : h.components()[l]) out[l].push_back(g[l][v]);
    return out;
  };
  return build_bi_keyed<MapComponents>(
      range, std::move(levels), [&](int i, int j, int k, const MapComponents& g) { return pre(g, x.hcoface(i, j, k)); },
      [&](int i, int j, int k, const MapComponents& g) { return pre(g, x.vcoface(i, j, k)); },
      [&](int i, int j, int k, const MapComponents& g) { return pre(g, x.hcodegen(i, j, k)); },
      [&](int i, int j, int k, const MapComponents& g) { return pre(g, x.vcodegen(i, j, k)); },
      [](int, int, const MapComponents&) { return std::string(); });
}

SimplicialMap sing_unit(const SimplicialSet& s, const Realization& r, const Sing& sg) {
  const int out = sg.set().cap();
  if (out != s.cap()) throw CapError("sing_unit: Sing levels must match the source cap");
  MapComponents c(static_cast<std::size_t>(out) + 1);
  for (int n = 0; n <= out; ++n)
    for (SimplexId a = 0; a < s.size(n); ++a) {
      MapComponents g(r.term_size.size());
      for (std::size_t l = 0; l < g.size(); ++l)
        for (SimplexId x = 0; x < r.term_size[l][n]; ++x) g[l].push_back(r.cls(static_cast<int>(l), n, a, x));
      c[n].push_back(sg.keyed.at(n, g));
    }
  return SimplicialMap(s, sg.set(), std::move(c));
}

BiSimplicialMap sing_unit(const BiSimplicialSet& b, const Realization& r, const KeyedBiSet<MapComponents>& sg) {
  auto c = unflatten(b, MapComponents(b.degrees().size()));
  for (auto [i, j] : b.degrees()) {
    const int d = b.degree_index(i, j);
    for (SimplexId a = 0; a < b.size(i, j); ++a) {
      MapComponents g(r.term_size.size());
      for (std::size_t l = 0; l < g.size(); ++l)
        for (SimplexId x = 0; x < r.term_size[l][d]; ++x) g[l].push_back(r.cls(static_cast<int>(l), d, a, x));
      c[i][j].push_back(sg.at(i, j, g));
    }
  }
  return BiSimplicialMap(b, sg.set, std::move(c));
}

Realization realize_directed(const BiSimplicialSet& b, const BiCosimplicialSSet& x) {
  auto r = realize(b, x);
  if (r.source_size.empty() || r.source_size[0] == 0) throw InputError("realize_directed: empty source");
  std::vector<std::vector<std::pair<SimplexId, SimplexId>>> glue(static_cast<std::size_t>(r.set.cap()) + 1);
  for (std::size_t d = 0; d < r.degrees.size(); ++d)
    for (SimplexId s = 0; s < r.source_size[d]; ++s)
      for (SimplexId v = 0; v < 2; ++v) glue[0].emplace_back(r.cls(0, 0, 0, v), r.cls(0, static_cast<int>(d), s, v));
  const auto q = quotient(r.set, glue);
  for (int k = 0; k <= r.set.cap(); ++k) {
    for (auto& c : r.class_of[k]) c = q.projection(k, c);
    std::vector<std::size_t> rep;
    for (auto c : q.representative[k]) rep.push_back(r.representative[k][c]);
    r.representative[k] = std::move(rep);
  }
  r.set = q.set;
  return r;
}

PointedDirected pointed(const Realization& r) { return PointedDirected{r.set, r.cls(0, 0, 0, 0), r.cls(0, 0, 0, 1)}; }

BiSimplicialMap dec_unit(const BiSimplicialSet& b, const BiCosimplicialSSet& x, const Realization& r,
                         const KeyedBiSet<SimplexId>& d) {
  auto c = unflatten(b, MapComponents(b.degrees().size()));
  for (auto [i, j] : b.degrees()) {
    const int m = i + 1 + j, deg = b.degree_index(i, j);
    const auto top = x.term(i, j).nondegenerate(m);
    if (top.size() != 1) throw InputError("dec_unit: coefficient term is not a single top simplex");
    for (SimplexId a = 0; a < b.size(i, j); ++a) c[i][j].push_back(d.at(i, j, r.cls(m, deg, a, top[0])));
  }
  return BiSimplicialMap(b, d.set, std::move(c));
}

SimplicialMap apply_transformation(const CosimplicialTransformation& eta, const SimplicialSet& s,
                                   const Realization& over_x, const Realization& over_y) {
  (void)s;
  const int cap = over_x.set.cap();
  MapComponents c(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k)
    for (auto e : over_x.representative[k]) {
      const auto el = over_x.decode(k, e);
      c[k].push_back(over_y.cls(k, el.degree, el.s, eta.component[el.degree](k, el.x)));
    }
  return SimplicialMap(over_x.set, over_y.set, std::move(c));
}

SimplicialMap apply_transformation(const CosimplicialTransformation& eta, const Sing& over_y, const Sing& over_x) {
  const int cap = over_y.set().cap();
  MapComponents c(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n)
    for (const auto& g : over_y.keyed.keys[n]) {
      const auto& h = eta.component[n];
      MapComponents pulled(h.components().size());
      for (std::size_t l = 0; l < pulled.size(); ++l)
        for (auto v : h.components()[l]) pulled[l].push_back(g[l][v]);
      c[n].push_back(over_x.keyed.at(n, pulled));
    }
  return SimplicialMap(over_y.set(), over_x.set(), std::move(c));
}

}  // namespace wurst
