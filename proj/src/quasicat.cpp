#include "wurst/quasicat.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wurst {

namespace {

MapComponents precompose(const MapComponents& g, const SimplicialMap& h) {
  MapComponents out(h.components().size());
  for (std::size_t l = 0; l < out.size(); ++l)
    for (auto v : h.components()[l]) out[l].push_back(g[l][v]);
  return out;
}

// Monotone sequences [k] -> [n] indexed by their simplex id in Delta^n.
const std::vector<Mono>& sequences(int k, int n) {
  static std::map<std::pair<int, int>, std::vector<Mono>> cache;
  auto it = cache.find({k, n});
  if (it != cache.end()) return it->second;
  std::vector<Mono> out(binomial(n + k + 1, k + 1));
  for (auto& a : monotone_maps(k, n)) out[monotone_rank(a, n)] = a;
  return cache.emplace(std::make_pair(k, n), std::move(out)).first->second;
}

SimplicialSet prism(int n, int cap) { return product(standard_simplex(n, cap), standard_simplex(1, cap)); }

void require_cap(const SimplicialSet& x_set, int out_cap, const char* what) {
  if (out_cap < 0) throw InputError(std::string(what) + ": negative out_cap");
  if (x_set.cap() < out_cap + 1)
    throw CapError(std::string(what) + ": ambient cap " + std::to_string(x_set.cap()) + " is below out_cap + 1");
}

void require_vertex(const SimplicialSet& x_set, SimplexId v, const char* what) {
  if (v >= x_set.size(0)) throw InputError(std::string(what) + ": not a vertex");
}

// Level maps of the one-sided spaces: faces and degeneracies shifted by `shift`.
KeyedSet<SimplexId> one_sided(const SimplicialSet& x_set, int out_cap, int shift,
                              const std::function<bool(int, SimplexId)>& member) {
  std::vector<std::vector<SimplexId>> levels(static_cast<std::size_t>(out_cap) + 1);
  for (int n = 0; n <= out_cap; ++n)
    for (SimplexId s = 0; s < x_set.size(n + 1); ++s)
      if (member(n, s)) levels[n].push_back(s);
  return build_keyed<SimplexId>(
      out_cap, std::move(levels), [&](int n, int i, SimplexId s) { return x_set.face(n + 1, i + shift, s); },
      [&](int n, int i, SimplexId s) { return x_set.degen(n + 1, i + shift, s); },
      [](int, SimplexId s) { return std::to_string(s); });
}

ComparisonMaps comparison_from(const SimplicialSet& x_set, const KeyedSet<MapComponents>& middle,
                               const KeyedSet<SimplexId>& left, const KeyedSet<SimplexId>& right, int out_cap) {
  const int cap = x_set.cap();
  MapComponents cl(static_cast<std::size_t>(out_cap) + 1), cr(static_cast<std::size_t>(out_cap) + 1);
  for (int n = 0; n <= out_cap; ++n) {
    const auto pl = prism_map(n, n + 1, [](int p, int e) { return e == 0 ? 0 : p + 1; }, cap);
    const auto pr = prism_map(n, n + 1, [n](int p, int e) { return e == 0 ? p : n + 1; }, cap);
    for (SimplexId s : left.keys[n]) cl[n].push_back(middle.at(n, compose(simplex_map(x_set, n + 1, s), pl).components()));
    for (SimplexId s : right.keys[n]) cr[n].push_back(middle.at(n, compose(simplex_map(x_set, n + 1, s), pr).components()));
  }
  return {SimplicialMap(left.set, middle.set, std::move(cl)), SimplicialMap(right.set, middle.set, std::move(cr))};
}

// Shared state for the tautological maps Sing -> Hom on a coherent nerve.
class Tautological {
 public:
  Tautological(const EnrichedCategory& c, const WObject& w, const KeyedSet<NerveSimplex>& nerve)
      : c_(c), w_(w), nerve_(nerve), cap_(c.cap()) {}

  // f : W_n -> C(x, y) |-> the map Delta^n x Delta^1 -> N(C), or nothing if some simplex is missing.
  std::optional<MapComponents> middle(int n, int x, int y, const MapComponents& f) {
    const int ncap = nerve_.set.cap();
    const auto p = prism(n, ncap);
    MapComponents out(static_cast<std::size_t>(ncap) + 1);
    for (int k = 0; k <= ncap; ++k) {
      const auto& us = sequences(k, n);
      const auto& vs = sequences(k, 1);
      for (SimplexId s = 0; s < p.size(k); ++s) {
        const Mono& u = us[s / vs.size()];
        const Mono& v = vs[s % vs.size()];
        NerveSimplex ns;
        for (int t = 0; t <= k; ++t) ns.objects.push_back(v[t] == 0 ? x : y);
        for (int a = 0; a <= k; ++a)
          for (int b = a + 1; b <= k; ++b) {
            if (v[a] == v[b]) {
              ns.components.push_back(constant_identity(a, b, ns.objects[a]));
              continue;
            }
            int split = a;
            while (v[split + 1] == 0) ++split;
            const int i = split - a, j = b - split - 1;
            const Mono c(u.begin() + a, u.begin() + b + 1);
            const auto& r = w_.real[n];
            const auto& cut = w_.cuts[n];
            const int deg = cut.set.degree_index(i, j);
            const SimplexId sid = cut.at(i, j, c);
            const auto& cube = cube_keyed(a, b);
            MapComponents comp(static_cast<std::size_t>(cap_) + 1);
            for (int l = 0; l <= cap_; ++l)
              for (const auto& ch : cube.keys[l]) {
                Chain shifted;
                for (auto sub : ch) shifted.push_back(sub >> a);
                const SimplexId q = w_.qkeyed[i][j].at(l, canonical_chain(shifted, i, j));
                comp[l].push_back(f[l][r.cls(l, deg, sid, q)]);
              }
            ns.components.push_back(std::move(comp));
          }
        const SimplexId id = nerve_.find(k, ns);
        if (id == kNoSimplex) return std::nullopt;
        out[k].push_back(id);
      }
    }
    return out;
  }

  // g : Q_{0,n} -> C(x, y) (left) or Q_{n,0} -> C(x, y) (right) |-> an (n+1)-simplex of N(C).
  SimplexId one_sided(int n, int x, int y, bool left, const MapComponents& g) {
    const auto& q = left ? q_cache(0, n) : q_cache(n, 0);
    NerveSimplex ns;
    for (int t = 0; t <= n + 1; ++t) ns.objects.push_back(left ? (t == 0 ? x : y) : (t == n + 1 ? y : x));
    for (int a = 0; a <= n + 1; ++a)
      for (int b = a + 1; b <= n + 1; ++b) {
        if (ns.objects[a] == ns.objects[b] && (left ? a > 0 : b < n + 1)) {
          ns.components.push_back(constant_identity(a, b, ns.objects[a]));
          continue;
        }
        const auto& cube = cube_keyed(a, b);
        MapComponents comp(static_cast<std::size_t>(cap_) + 1);
        for (int l = 0; l <= cap_; ++l)
          for (const auto& ch : cube.keys[l])
            comp[l].push_back(g[l][q.at(l, left ? canonical_chain(ch, 0, n) : canonical_chain(ch, n, 0))]);
        ns.components.push_back(std::move(comp));
      }
    return nerve_.find(n + 1, ns);
  }

 private:
  MapComponents constant_identity(int a, int b, int o) {
    const auto& cube = cube_keyed(a, b);
    const auto& hom = c_.map[o][o];
    MapComponents comp(static_cast<std::size_t>(cap_) + 1);
    for (int l = 0; l <= cap_; ++l) comp[l].assign(cube.set.size(l), hom.constant(l, c_.identity[o]));
    return comp;
  }
  const KeyedSet<Chain>& cube_keyed(int a, int b) {
    auto it = cubes_.find({a, b});
    if (it == cubes_.end()) it = cubes_.emplace(std::make_pair(a, b), coherent_cube_keyed(a, b, cap_)).first;
    return it->second;
  }
  const KeyedSet<Chain>& q_cache(int i, int j) {
    auto it = qs_.find({i, j});
    if (it == qs_.end()) it = qs_.emplace(std::make_pair(i, j), q_keyed(i, j, cap_)).first;
    return it->second;
  }

  const EnrichedCategory& c_;
  const WObject& w_;
  const KeyedSet<NerveSimplex>& nerve_;
  int cap_;
  std::map<std::pair<int, int>, KeyedSet<Chain>> cubes_, qs_;
};

template <class Key>
VariantReport variant_report(const KeyedSet<MapComponents>& sg, const KeyedSet<Key>& hom,
                             const std::vector<std::vector<SimplexId>>& phi, int out_cap) {
  VariantReport rep;
  rep.bijective = true;
  for (int n = 0; n <= out_cap; ++n) {
    std::set<SimplexId> seen(phi[n].begin(), phi[n].end());
    if (seen.count(kNoSimplex) || seen.size() != phi[n].size() || seen.size() != hom.set.size(n)) rep.bijective = false;
  }
  rep.natural = rep.bijective;
  for (int n = 0; n <= out_cap && rep.natural; ++n)
    for (SimplexId f = 0; f < sg.set.size(n); ++f) {
      for (int i = 0; n > 0 && i <= n; ++i)
        if (phi[n - 1][sg.set.face(n, i, f)] != hom.set.face(n, i, phi[n][f])) rep.natural = false;
      for (int i = 0; n < out_cap && i <= n; ++i)
        if (phi[n + 1][sg.set.degen(n, i, f)] != hom.set.degen(n, i, phi[n][f])) rep.natural = false;
    }
  return rep;
}

std::vector<std::vector<SimplexId>> inverse(const std::vector<std::vector<SimplexId>>& phi) {
  std::vector<std::vector<SimplexId>> inv(phi.size());
  for (std::size_t n = 0; n < phi.size(); ++n) {
    inv[n].assign(phi[n].size(), kNoSimplex);
    for (std::size_t f = 0; f < phi[n].size(); ++f)
      if (phi[n][f] != kNoSimplex && phi[n][f] < inv[n].size()) inv[n][phi[n][f]] = static_cast<SimplexId>(f);
  }
  return inv;
}

}  // namespace

HomVariant parse_hom_variant(const std::string& name) {
  if (name == "left") return HomVariant::left;
  if (name == "right") return HomVariant::right;
  if (name == "middle") return HomVariant::middle;
  throw InputError("unknown hom variant '" + name + "'");
}

std::string to_string(HomVariant v) {
  switch (v) {
    case HomVariant::left: return "left";
    case HomVariant::right: return "right";
    case HomVariant::middle: return "middle";
  }
  return "";
}

SimplicialMap prism_map(int n, int m, const std::function<int(int, int)>& f, int cap) {
  const auto src = prism(n, cap), dst = standard_simplex(m, cap);
  MapComponents comp(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k) {
    const auto& us = sequences(k, n);
    const auto& vs = sequences(k, 1);
    for (SimplexId s = 0; s < src.size(k); ++s) {
      const Mono& u = us[s / vs.size()];
      const Mono& v = vs[s % vs.size()];
      Mono img(u.size());
      for (std::size_t t = 0; t < u.size(); ++t) img[t] = f(u[t], v[t]);
      if (!is_monotone(img)) throw InputError("prism_map: the vertex map is not order preserving");
      comp[k].push_back(monotone_rank(img, m));
    }
  }
  return SimplicialMap::trusted(src, dst, std::move(comp));
}

KeyedSet<MapComponents> hom_middle_keyed(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap,
                                         SearchBudget& budget) {
  require_cap(x_set, out_cap, "hom_middle");
  require_vertex(x_set, x, "hom_middle");
  require_vertex(x_set, y, "hom_middle");
  const int cap = x_set.cap();
  std::vector<std::vector<MapComponents>> levels(static_cast<std::size_t>(out_cap) + 1);
  for (int n = 0; n <= out_cap; ++n) {
    const auto p = prism(n, cap);
    for_each_map(
        p, x_set, budget,
        [&](const MapComponents& f) {
          levels[n].push_back(f);
          return true;
        },
        [&](int k, SimplexId s, SimplexId t) {
          const auto e = s % static_cast<SimplexId>(k + 2);  // Delta^1 has k+2 simplices at level k
          if (e == 0) return t == x_set.constant(k, x);
          if (e == static_cast<SimplexId>(k + 1)) return t == x_set.constant(k, y);
          return true;
        });
  }
  std::map<std::tuple<int, int, bool>, SimplicialMap> ops;
  auto op = [&](int n, int i, bool face) -> const SimplicialMap& {
    auto key = std::make_tuple(n, i, face);
    auto it = ops.find(key);
    if (it != ops.end()) return it->second;
    const int m = face ? n - 1 : n + 1;
    const Mono theta = face ? coface_map(n, i) : codegeneracy_map(n, i);
    const auto src = prism(m, cap), dst = prism(n, cap);
    auto g = product_map(delta_map(theta, m, n, cap), SimplicialMap::identity(standard_simplex(1, cap)), src, dst);
    return ops.emplace(key, std::move(g)).first->second;
  };
  return build_keyed<MapComponents>(
      out_cap, std::move(levels), [&](int n, int i, const MapComponents& f) { return precompose(f, op(n, i, true)); },
      [&](int n, int i, const MapComponents& f) { return precompose(f, op(n, i, false)); },
      [](int, const MapComponents&) { return std::string(); });
}

SimplicialSet hom_middle(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap, SearchBudget& budget) {
  return hom_middle_keyed(x_set, x, y, out_cap, budget).set;
}

KeyedSet<SimplexId> hom_left_keyed(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap) {
  require_cap(x_set, out_cap, "hom_left");
  require_vertex(x_set, x, "hom_left");
  require_vertex(x_set, y, "hom_left");
  return one_sided(x_set, out_cap, 1, [&](int n, SimplexId s) {
    return x_set.act(n + 1, s, Mono{0}) == x && x_set.face(n + 1, 0, s) == x_set.constant(n, y);
  });
}

KeyedSet<SimplexId> hom_right_keyed(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap) {
  require_cap(x_set, out_cap, "hom_right");
  require_vertex(x_set, x, "hom_right");
  require_vertex(x_set, y, "hom_right");
  return one_sided(x_set, out_cap, 0, [&](int n, SimplexId s) {
    return x_set.act(n + 1, s, Mono{n + 1}) == y && x_set.face(n + 1, n + 1, s) == x_set.constant(n, x);
  });
}

SimplicialSet hom_left(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap) {
  return hom_left_keyed(x_set, x, y, out_cap).set;
}

SimplicialSet hom_right(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap) {
  return hom_right_keyed(x_set, x, y, out_cap).set;
}

SimplicialSet hom_space(const SimplicialSet& x_set, SimplexId x, SimplexId y, HomVariant v, int out_cap,
                        SearchBudget& budget) {
  switch (v) {
    case HomVariant::left: return hom_left(x_set, x, y, out_cap);
    case HomVariant::right: return hom_right(x_set, x, y, out_cap);
    case HomVariant::middle: return hom_middle(x_set, x, y, out_cap, budget);
  }
  throw InputError("unknown hom variant");
}

ComparisonMaps comparison_maps(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap,
                               SearchBudget& budget) {
  return comparison_from(x_set, hom_middle_keyed(x_set, x, y, out_cap, budget), hom_left_keyed(x_set, x, y, out_cap),
                         hom_right_keyed(x_set, x, y, out_cap), out_cap);
}

NerveHoms nerve_homs(const EnrichedCategory& c, int x, int y, int out_cap, SearchBudget& budget) {
  if (x < 0 || y < 0 || x >= c.objects || y >= c.objects) throw InputError("nerve_homs: object out of range");
  NerveHoms h;
  h.c = &c;
  h.x = x;
  h.y = y;
  h.out_cap = out_cap;
  h.nerve = coherent_nerve_keyed(c, out_cap + 1, budget);
  const SimplexId vx = h.nerve.at(0, NerveSimplex{{x}, {}}), vy = h.nerve.at(0, NerveSimplex{{y}, {}});
  h.middle = hom_middle_keyed(h.nerve.set, vx, vy, out_cap, budget);
  h.left = hom_left_keyed(h.nerve.set, vx, vy, out_cap);
  h.right = hom_right_keyed(h.nerve.set, vx, vy, out_cap);
  h.w = w_object(out_cap, c.cap());
  const auto& t = c.map[x][y];
  h.sing_w = sing(h.w.w, t, out_cap, budget);
  h.sing_left = sing(q_second(out_cap, c.cap()), t, out_cap, budget);
  h.sing_right = sing(q_first(out_cap, c.cap()), t, out_cap, budget);

  Tautological taut(c, h.w, h.nerve);
  h.phi_middle.resize(static_cast<std::size_t>(out_cap) + 1);
  h.phi_left.resize(static_cast<std::size_t>(out_cap) + 1);
  h.phi_right.resize(static_cast<std::size_t>(out_cap) + 1);
  for (int n = 0; n <= out_cap; ++n) {
    for (const auto& f : h.sing_w.keyed.keys[n]) {
      const auto img = taut.middle(n, x, y, f);
      h.phi_middle[n].push_back(img ? h.middle.find(n, *img) : kNoSimplex);
    }
    for (const auto& g : h.sing_left.keyed.keys[n]) {
      const SimplexId s = taut.one_sided(n, x, y, true, g);
      h.phi_left[n].push_back(s == kNoSimplex ? kNoSimplex : h.left.find(n, s));
    }
    for (const auto& g : h.sing_right.keyed.keys[n]) {
      const SimplexId s = taut.one_sided(n, x, y, false, g);
      h.phi_right[n].push_back(s == kNoSimplex ? kNoSimplex : h.right.find(n, s));
    }
  }
  return h;
}

TautologicalReport tautological_iso_check(const NerveHoms& h) {
  TautologicalReport rep;
  rep.middle = variant_report(h.sing_w.keyed, h.middle, h.phi_middle, h.out_cap);
  rep.left = variant_report(h.sing_left.keyed, h.left, h.phi_left, h.out_cap);
  rep.right = variant_report(h.sing_right.keyed, h.right, h.phi_right, h.out_cap);
  if (!rep.middle.bijective || !rep.left.bijective || !rep.right.bijective) return rep;

  // Comparison inclusions against precomposition with the squeezes W -> Q.
  const auto cmp = comparison_from(h.nerve.set, h.middle, h.left, h.right, h.out_cap);
  const auto to_left = w_to_q_second(h.w), to_right = w_to_q_first(h.w);
  rep.comparison_compatible = true;
  for (int n = 0; n <= h.out_cap; ++n) {
    for (SimplexId g = 0; g < h.sing_left.keyed.keys[n].size(); ++g) {
      const SimplexId f = h.sing_w.keyed.find(n, precompose(h.sing_left.keyed.keys[n][g], to_left.component[n]));
      if (f == kNoSimplex || h.phi_middle[n][f] != cmp.left(n, h.phi_left[n][g])) rep.comparison_compatible = false;
    }
    for (SimplexId g = 0; g < h.sing_right.keyed.keys[n].size(); ++g) {
      const SimplexId f = h.sing_w.keyed.find(n, precompose(h.sing_right.keyed.keys[n][g], to_right.component[n]));
      if (f == kNoSimplex || h.phi_middle[n][f] != cmp.right(n, h.phi_right[n][g])) rep.comparison_compatible = false;
    }
  }
  return rep;
}

TautologicalReport tautological_iso_check(const EnrichedCategory& c, int x, int y, int out_cap,
                                          SearchBudget& budget) {
  return tautological_iso_check(nerve_homs(c, x, y, out_cap, budget));
}

OpSymmetryReport op_symmetry_check(const NerveHoms& h, SearchBudget&) {
  OpSymmetryReport rep;
  const auto taut = tautological_iso_check(h);
  if (!taut.middle.bijective || !taut.left.bijective || !taut.right.bijective) return rep;
  const int out_cap = h.out_cap, cap = h.c->cap();
  const auto inv_right = inverse(h.phi_right), inv_middle = inverse(h.phi_middle);
  const auto left_op = opposite(h.left.set), middle_op = opposite(h.middle.set);

  MapComponents rl(static_cast<std::size_t>(out_cap) + 1), mm(static_cast<std::size_t>(out_cap) + 1);
  const auto rev = w_reversal(h.w);
  for (int n = 0; n <= out_cap; ++n) {
    const auto t = tau(0, n, cap);
    for (SimplexId s = 0; s < h.right.set.size(n); ++s) {
      const SimplexId g = h.sing_left.keyed.find(n, precompose(h.sing_right.keyed.keys[n][inv_right[n][s]], t));
      rl[n].push_back(g == kNoSimplex ? kNoSimplex : h.phi_left[n][g]);
    }
    for (SimplexId s = 0; s < h.middle.set.size(n); ++s) {
      const SimplexId f = h.sing_w.keyed.find(n, precompose(h.sing_w.keyed.keys[n][inv_middle[n][s]], rev.component[n]));
      mm[n].push_back(f == kNoSimplex ? kNoSimplex : h.phi_middle[n][f]);
    }
  }
  auto valid = [](const MapComponents& c) {
    for (const auto& level : c)
      if (std::find(level.begin(), level.end(), kNoSimplex) != level.end()) return false;
    return true;
  };
  if (!valid(rl) || !valid(mm)) return rep;
  SimplicialMap rho_rl, rho_m;
  try {
    rho_rl = SimplicialMap(h.right.set, left_op, rl);
    rep.right_left_iso = rho_rl.bijective();
  } catch (const InputError&) {
    return rep;
  }
  try {
    rho_m = SimplicialMap(h.middle.set, middle_op, mm);
    rep.middle_iso = rho_m.bijective();
  } catch (const InputError&) {
    return rep;
  }
  rep.middle_is_identity = rho_m.components() == SimplicialMap::identity(h.middle.set).components();
  const auto cmp = comparison_from(h.nerve.set, h.middle, h.left, h.right, out_cap);
  const auto left_incl_op = opposite(cmp.left, left_op, middle_op);
  rep.square_commutes = compose(left_incl_op, rho_rl) == compose(rho_m, cmp.right);
  return rep;
}

OpSymmetryReport op_symmetry_check(const EnrichedCategory& c, int x, int y, int out_cap, SearchBudget& budget) {
  return op_symmetry_check(nerve_homs(c, x, y, out_cap, budget), budget);
}

HornReport horn_filler_check(const SimplicialSet& x, int n, int k, SearchBudget& budget) {
  if (n < 1 || k < 0 || k > n) throw InputError("horn_filler_check: need 0 <= k <= n, n >= 1");
  if (x.cap() < n) throw CapError("horn_filler_check: cap below the horn dimension");
  const auto incl = horn_inclusion(n, k, x.cap());
  const auto& simplex = incl.target();
  std::vector<std::vector<SimplexId>> pre(static_cast<std::size_t>(x.cap()) + 1);
  for (int l = 0; l <= x.cap(); ++l) {
    pre[l].assign(simplex.size(l), kNoSimplex);
    for (SimplexId s = 0; s < incl.source().size(l); ++s) pre[l][incl(l, s)] = s;
  }
  HornReport rep;
  for_each_map(incl.source(), x, budget, [&](const MapComponents& h) {
    ++rep.horns;
    bool found = false;
    for_each_map(
        simplex, x, budget,
        [&](const MapComponents&) {
          found = true;
          return false;
        },
        [&](int l, SimplexId s, SimplexId t) { return pre[l][s] == kNoSimplex || h[l][pre[l][s]] == t; });
    if (found) ++rep.filled;
    return true;
  });
  return rep;
}

}  // namespace wurst
