#include <algorithm>
#include <map>

#include "wurst/coherent.hpp"

namespace wurst {

namespace {

// Position of (a, b), a < b, in the lexicographic list of pairs of [n].
std::size_t pair_index(int a, int b, int n) {
  std::size_t idx = 0;
  for (int p = 0; p < a; ++p) idx += static_cast<std::size_t>(n - p);
  return idx + static_cast<std::size_t>(b - a - 1);
}

class NerveBuilder {
 public:
  NerveBuilder(const EnrichedCategory& c, SearchBudget& budget) : c_(c), budget_(budget), cap_(c.cap()) {}

  std::vector<NerveSimplex> level(int n) {
    std::vector<NerveSimplex> out;
    NerveSimplex cur;
    cur.objects.assign(static_cast<std::size_t>(n) + 1, 0);
    objects(n, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  NerveSimplex face(int n, int m, const NerveSimplex& x) { return restrict(n, coface_map(n, m), x); }
  NerveSimplex degen(int n, int m, const NerveSimplex& x) { return restrict(n, codegeneracy_map(n, m), x); }

 private:
  // Object assignments with nonempty mapping complexes along every pair.
  void objects(int n, int a, NerveSimplex& cur, std::vector<NerveSimplex>& out) {
    if (a > n) {
      std::vector<std::pair<int, int>> pairs;
      for (int gap = 1; gap <= n; ++gap)
        for (int p = 0; p + gap <= n; ++p) pairs.emplace_back(p, p + gap);
      cur.components.assign(pairs.size(), {});
      components(n, pairs, 0, cur, out);
      return;
    }
    for (int x = 0; x < c_.objects; ++x) {
      bool ok = true;
      for (int p = 0; p < a && ok; ++p) ok = !c_.map[cur.objects[p]][x].empty();
      if (!ok) continue;
      cur.objects[a] = x;
      objects(n, a + 1, cur, out);
    }
  }

  // Components in order of increasing gap; each is forced on the images of compositions.
  void components(int n, const std::vector<std::pair<int, int>>& pairs, std::size_t idx, NerveSimplex& cur,
                  std::vector<NerveSimplex>& out) {
    if (idx == pairs.size()) {
      out.push_back(cur);
      return;
    }
    const auto [a, b] = pairs[idx];
    const int xa = cur.objects[a], xb = cur.objects[b];
    const auto& src = cube(a, b);
    std::vector<std::vector<SimplexId>> forced(static_cast<std::size_t>(cap_) + 1);
    for (int k = 0; k <= cap_; ++k) forced[k].assign(src.size(k), kNoSimplex);
    for (int t = a + 1; t < b; ++t) {
      const auto& u = composition(a, t, b);
      const auto& hi = cur.components[pair_index(t, b, n)];
      const auto& lo = cur.components[pair_index(a, t, n)];
      const int xt = cur.objects[t];
      const auto& lo_set = cube(a, t);
      for (int k = 0; k <= cap_; ++k)
        for (SimplexId g = 0; g < cube(t, b).size(k); ++g)
          for (SimplexId f = 0; f < lo_set.size(k); ++f) {
            const SimplexId s = u(k, product_id(lo_set, k, g, f));
            const SimplexId v = c_.compose(xa, xt, xb, k, hi[k][g], lo[k][f]);
            if (forced[k][s] == kNoSimplex) forced[k][s] = v;
            if (forced[k][s] != v) return;
          }
    }
    for_each_map(
        src, c_.map[xa][xb], budget_,
        [&](const MapComponents& f) {
          cur.components[pair_index(a, b, n)] = f;
          components(n, pairs, idx + 1, cur, out);
          return true;
        },
        [&](int k, SimplexId s, SimplexId t) { return forced[k][s] == kNoSimplex || forced[k][s] == t; });
  }

  NerveSimplex restrict(int n, const Mono& theta, const NerveSimplex& x) {
    const int m = static_cast<int>(theta.size()) - 1;
    NerveSimplex y;
    for (int p = 0; p <= m; ++p) y.objects.push_back(x.objects[theta[p]]);
    for (int a = 0; a <= m; ++a)
      for (int b = a + 1; b <= m; ++b) {
        MapComponents comp(static_cast<std::size_t>(cap_) + 1);
        const auto& src = cube(a, b);
        if (theta[a] == theta[b]) {
          const auto& hom = c_.map[y.objects[a]][y.objects[a]];
          for (int k = 0; k <= cap_; ++k) comp[k].assign(src.size(k), hom.constant(k, c_.identity[y.objects[a]]));
        } else {
          const auto& pre = cube_map_cached(theta, a, b);
          const auto& f = x.components[pair_index(theta[a], theta[b], n)];
          for (int k = 0; k <= cap_; ++k)
            for (SimplexId s = 0; s < src.size(k); ++s) comp[k].push_back(f[k][pre(k, s)]);
        }
        y.components.push_back(std::move(comp));
      }
    return y;
  }

  const SimplicialSet& cube(int a, int b) {
    auto it = cubes_.find({a, b});
    if (it == cubes_.end()) it = cubes_.emplace(std::make_pair(a, b), coherent_cube_keyed(a, b, cap_).set).first;
    return it->second;
  }
  const SimplicialMap& composition(int a, int b, int c) {
    auto key = std::make_tuple(a, b, c);
    auto it = comps_.find(key);
    if (it == comps_.end()) it = comps_.emplace(key, cube_composition(a, b, c, cap_)).first;
    return it->second;
  }
  const SimplicialMap& cube_map_cached(const Mono& theta, int a, int b) {
    auto key = std::make_tuple(theta, a, b);
    auto it = maps_.find(key);
    if (it == maps_.end()) it = maps_.emplace(key, cube_map(theta, a, b, cap_)).first;
    return it->second;
  }

  const EnrichedCategory& c_;
  SearchBudget& budget_;
  int cap_;
  std::map<std::pair<int, int>, SimplicialSet> cubes_;
  std::map<std::tuple<int, int, int>, SimplicialMap> comps_;
  std::map<std::tuple<Mono, int, int>, SimplicialMap> maps_;
};

}  // namespace

KeyedSet<NerveSimplex> coherent_nerve_keyed(const EnrichedCategory& c, int out_cap, SearchBudget& budget) {
  NerveBuilder nb(c, budget);
  std::vector<std::vector<NerveSimplex>> levels;
  for (int n = 0; n <= out_cap; ++n) levels.push_back(nb.level(n));
  return build_keyed<NerveSimplex>(
      out_cap, std::move(levels), [&](int n, int m, const NerveSimplex& x) { return nb.face(n, m, x); },
      [&](int n, int m, const NerveSimplex& x) { return nb.degen(n, m, x); },
      [](int, const NerveSimplex& x) {
        std::string s;
        for (int o : x.objects) s += std::to_string(o);
        return s;
      });
}

SimplicialSet coherent_nerve(const EnrichedCategory& c, int out_cap, SearchBudget& budget) {
  return coherent_nerve_keyed(c, out_cap, budget).set;
}

}  // namespace wurst
