#include <doctest.h>

#include "oracles.hpp"
#include "wurst/quasicat.hpp"

using namespace wurst;

namespace {

bool iso(const SimplicialSet& a, const SimplicialSet& b) { return is_isomorphic(a, b).has_value(); }

SimplicialSet nerve_of(const EnrichedCategory& c, int cap) {
  SearchBudget budget;
  return coherent_nerve(c, cap, budget);
}

// Poset maps [n] x [1] -> [m] constant at x on the bottom row and at y on the top row, by
// running through every vertex function.
std::size_t raw_prism_maps(int n, int m, int x, int y) {
  const int size = 2 * (n + 1);
  std::vector<int> f(static_cast<std::size_t>(size), 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (int p = 0; p <= n && ok; ++p) ok = f[p] == x && f[n + 1 + p] == y;
    for (int p = 0; p < n && ok; ++p) ok = f[p] <= f[p + 1] && f[n + 1 + p] <= f[n + 2 + p];
    for (int p = 0; p <= n && ok; ++p) ok = f[p] <= f[n + 1 + p];
    if (ok) ++count;
    int pos = 0;
    while (pos < size && f[pos] == m) f[pos++] = 0;
    if (pos == size) break;
    ++f[pos];
  }
  return count;
}

}  // namespace

TEST_CASE("mapping spaces of the interval are points") {
  SearchBudget budget;
  const auto d1 = standard_simplex(1, 3);
  CHECK(iso(hom_middle(d1, 0, 1, 2, budget), standard_simplex(0, 2)));
  CHECK(iso(hom_left(d1, 0, 1, 2), standard_simplex(0, 2)));
  CHECK(iso(hom_right(d1, 0, 1, 2), standard_simplex(0, 2)));
  CHECK(hom_middle(d1, 1, 0, 2, budget).empty());
  const auto cmp = comparison_maps(d1, 0, 1, 2, budget);
  CHECK(cmp.left.bijective());
  CHECK(cmp.right.bijective());
  CHECK_THROWS_AS(hom_left(d1, 0, 1, 3), CapError);
}

TEST_CASE("mapping spaces of a poset nerve are discrete") {
  SearchBudget budget;
  const auto d2 = standard_simplex(2, 3);
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y) {
      const auto m = hom_middle(d2, x, y, 2, budget);
      for (int n = 0; n <= 2; ++n) CHECK(m.size(n) == raw_prism_maps(n, 2, x, y));
      const std::size_t points = x <= y ? 1 : 0;
      CHECK(nondegenerate_counts(m) == std::vector<std::size_t>{points, 0, 0});
      CHECK(nondegenerate_counts(hom_left(d2, x, y, 2)) == std::vector<std::size_t>{points, 0, 0});
      CHECK(nondegenerate_counts(hom_right(d2, x, y, 2)) == std::vector<std::size_t>{points, 0, 0});
    }
  // two parallel arrows
  const auto par = nerve_of(free_directed(boundary(1, 3)), 3);
  CHECK(nondegenerate_counts(hom_middle(par, 0, 1, 2, budget)) == std::vector<std::size_t>{2, 0, 0});
}

TEST_CASE("right mapping spaces are opposite to left ones of the opposite") {
  const std::vector<SimplicialSet> corpus{standard_simplex(2, 3), boundary(2, 3), horn(2, 1, 3),
                                          nerve_of(free_directed(standard_simplex(1, 3)), 3)};
  for (const auto& x : corpus) {
    const auto xop = opposite(x);
    for (SimplexId a = 0; a < x.size(0); ++a)
      for (SimplexId b = 0; b < x.size(0); ++b)
        CHECK(iso(hom_right(x, a, b, 2), opposite(hom_left(xop, b, a, 2))));
  }
}

TEST_CASE("comparison maps are injective") {
  SearchBudget budget;
  const auto n = nerve_of(free_directed(standard_simplex(1, 3)), 3);
  const auto cmp = comparison_maps(n, 0, 1, 2, budget);
  CHECK(cmp.left.injective());
  CHECK(cmp.right.injective());
  CHECK_FALSE(cmp.left.surjective());
}

TEST_CASE("tautological isomorphisms") {
  for (const auto& k : {standard_simplex(0, 3), standard_simplex(1, 3), boundary(1, 3), standard_simplex(2, 3)}) {
    SearchBudget budget;
    const auto c = free_directed(k);
    const auto h = nerve_homs(c, 0, 1, 2, budget);
    const auto rep = tautological_iso_check(h);
    CHECK(rep.middle.ok());
    CHECK(rep.left.ok());
    CHECK(rep.right.ok());
    CHECK(rep.comparison_compatible);
    // both sides enumerated independently
    for (int n = 0; n <= 2; ++n) {
      CHECK(h.middle.set.size(n) == oracle::brute_force_map_count(h.w.w.term(n), k));
      CHECK(h.left.set.size(n) == oracle::brute_force_map_count(q_space(0, n, 3), k));
      CHECK(h.right.set.size(n) == oracle::brute_force_map_count(q_space(n, 0, 3), k));
    }
  }
  SearchBudget budget;
  const auto point = nerve_homs(free_directed(standard_simplex(0, 3)), 0, 1, 2, budget);
  CHECK(iso(point.middle.set, standard_simplex(0, 2)));
  CHECK(iso(point.sing_w.keyed.set, standard_simplex(0, 2)));
}

TEST_CASE("op symmetry") {
  SearchBudget budget;
  const auto p = op_symmetry_check(free_directed(standard_simplex(0, 3)), 0, 1, 2, budget);
  CHECK(p.ok());
  CHECK(p.middle_is_identity);
  const auto r = op_symmetry_check(free_directed(standard_simplex(1, 3)), 0, 1, 2, budget);
  CHECK(r.right_left_iso);
  CHECK(r.middle_iso);
  CHECK(r.square_commutes);
  CHECK_FALSE(r.middle_is_identity);
}

TEST_CASE("horn fillers") {
  SearchBudget budget;
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k < n; ++k) CHECK(horn_filler_check(standard_simplex(3, 3), n, k, budget).ok());
  // Kan mapping complex: the indiscrete groupoid on two objects
  const auto e = nerve_of_poset(2, [](int, int) { return true; }, 3).set;
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) CHECK(horn_filler_check(e, n, k, budget).ok());
  const auto kan = nerve_of(free_directed(e), 3);
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k < n; ++k) {
      const auto rep = horn_filler_check(kan, n, k, budget);
      CHECK(rep.horns > 0);
      CHECK(rep.ok());
    }
  CHECK_FALSE(horn_filler_check(kan, 2, 0, budget).ok());
  // C(0,1) = Delta^1 is not Kan and inner 3-horns can fail to fill
  const auto directed = nerve_of(free_directed(standard_simplex(1, 3)), 3);
  CHECK(horn_filler_check(directed, 2, 1, budget).ok());
  for (int k = 1; k <= 2; ++k) {
    const auto rep = horn_filler_check(directed, 3, k, budget);
    CHECK(rep.horns == 18);
    CHECK(rep.filled == 16);
  }
  const auto hollow = horn_filler_check(boundary(2, 2), 2, 1, budget);
  CHECK_FALSE(hollow.ok());
  CHECK(hollow.horns - hollow.filled == 1);
}

TEST_CASE("prism maps") {
  const auto f = prism_map(1, 2, [](int p, int e) { return e == 0 ? 0 : p + 1; }, 2);
  CHECK(f.surjective());
  CHECK_THROWS_AS(prism_map(1, 1, [](int p, int) { return 1 - p; }, 2), InputError);
}
