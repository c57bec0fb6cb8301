#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "wurst/constructions.hpp"

using namespace wurst;

TEST_CASE("standard simplex level counts") {
  const auto d1 = standard_simplex(1, 1);
  CHECK(d1.size(1) == 3);
  const auto d0 = standard_simplex(0, 3);
  for (int n = 0; n <= 3; ++n) CHECK(d0.size(n) == 1);
  const auto d2 = standard_simplex(2, 2);
  CHECK(d2.size(2) == oracle::count_monotone(2, 2));
  CHECK(d2.size(2) == 10);
}

TEST_CASE("boundaries and horns") {
  CHECK(nondegenerate_counts(boundary(1, 2)) == std::vector<std::size_t>{2, 0, 0});
  CHECK(nondegenerate_counts(horn(2, 1, 2)) == std::vector<std::size_t>{3, 2, 0});
  CHECK(nondegenerate_counts(boundary(2, 2)) == std::vector<std::size_t>{3, 3, 0});
  CHECK_THROWS_AS(horn(0, 0, 2), InputError);
  const auto inc = horn_inclusion(2, 1, 2);
  CHECK(inc.injective());
  CHECK_NOTHROW(SimplicialMap(inc.source(), inc.target(), inc.components()));
}

TEST_CASE("malformed tables are rejected") {
  auto t = standard_simplex(1, 1).tables();
  t.face[1][0][2] = 0;  // d_0 of the degenerate edge on vertex 1 must be 1
  CHECK_THROWS_AS(SimplicialSet{t}, InputError);
}

TEST_CASE("products") {
  const auto d1 = standard_simplex(1, 2);
  const auto sq = product(d1, d1);
  CHECK(sq.size(1) == 9);
  const auto nd2 = sq.nondegenerate(2).size();
  CHECK(nd2 == oracle::nondegenerate_pairs(1, 1, 2));
  CHECK(nd2 == 2);
  const auto x = horn(2, 0, 2);
  CHECK(is_isomorphic(product(x, standard_simplex(0, 2)), x).has_value());
}

TEST_CASE("joins") {
  const int cap = 4;
  auto j = [&](const SimplicialSet& a, const SimplicialSet& b) { return Join(a, b).set(); };
  CHECK(is_isomorphic(j(standard_simplex(1, 3), standard_simplex(0, 3)), standard_simplex(2, 3)).has_value());
  CHECK(is_isomorphic(j(boundary(1, 3), standard_simplex(0, 3)), horn(2, 2, 3)).has_value());
  CHECK(is_isomorphic(j(standard_simplex(0, 3), standard_simplex(0, 3)), standard_simplex(1, 3)).has_value());
  CHECK(is_isomorphic(j(standard_simplex(1, cap), standard_simplex(1, cap)), standard_simplex(3, cap)).has_value());
  const Join jj(standard_simplex(1, cap), horn(2, 1, cap));
  CHECK_NOTHROW(SimplicialMap(jj.left_factor(), jj.set(), jj.inl().components()));
  CHECK_NOTHROW(SimplicialMap(jj.right_factor(), jj.set(), jj.inr().components()));
}

TEST_CASE("pushouts") {
  const int cap = 3;
  const auto d1 = standard_simplex(1, cap);
  const auto inc = boundary_inclusion(1, cap);
  const auto p = pushout(inc, terminal_map(inc.source()));
  CHECK(nondegenerate_counts(p.set) == std::vector<std::size_t>{1, 1, 0, 0});

  CHECK(is_isomorphic(suspension(standard_simplex(0, cap)).carrier, d1).has_value());
  const auto sd = suspension(boundary(1, cap)).carrier;
  const auto oracle_counts = oracle::suspension_of_two_points_nondegenerate(cap);
  CHECK(nondegenerate_counts(sd) == oracle_counts);
  CHECK(oracle_counts == std::vector<std::size_t>{2, 2, 0, 0});
}

TEST_CASE("pushout universal property against a small target") {
  const int cap = 2;
  const auto f = boundary_inclusion(1, cap);
  const auto p = pushout(f, f);  // two edges glued along their endpoints
  const auto t = standard_simplex(1, cap);
  SearchBudget budget;
  const auto from_pushout = count_maps(p.set, t, budget);
  std::size_t compatible = 0;
  for (const auto& u : enumerate_maps(f.target(), t, budget))
    for (const auto& v : enumerate_maps(f.target(), t, budget))
      if (compose(u, f) == compose(v, f)) ++compatible;
  CHECK(from_pushout == compatible);
}

TEST_CASE("suspensions are directed") {
  const int cap = 3;
  for (int n = 0; n <= 2; ++n) {
    CHECK(is_directed(suspension(standard_simplex(n, cap))));
    CHECK(is_directed(suspension_left(standard_simplex(n, cap))));
    CHECK(is_directed(suspension_right(standard_simplex(n, cap))));
  }
  CHECK(is_isomorphic(suspension_left(standard_simplex(0, cap)).carrier, standard_simplex(1, cap)).has_value());
  CHECK(suspension(standard_simplex(1, cap)).carrier.size(0) == 2);
  CHECK(is_directed(directed_interval(cap)));
  CHECK(is_directed(directed_boundary_interval(cap)));
  CHECK(is_directed(suspension(boundary(1, cap))));
  const auto d2 = standard_simplex(2, cap);
  for (SimplexId a = 0; a < 3; ++a)
    for (SimplexId b = 0; b < 3; ++b)
      if (a != b) CHECK_FALSE(is_directed(PointedDirected{d2, a, b}));
}

TEST_CASE("suspension comparison maps preserve basepoints") {
  const int cap = 3;
  for (int n = 0; n <= 2; ++n) {
    const auto c = suspension_comparison(standard_simplex(n, cap));
    CHECK_NOTHROW(SimplicialMap(c.to_left.source(), c.to_left.target(), c.to_left.components()));
    CHECK_NOTHROW(SimplicialMap(c.to_right.source(), c.to_right.target(), c.to_right.components()));
    CHECK(c.to_left(0, c.s.base0) == c.left.base0);
    CHECK(c.to_left(0, c.s.base1) == c.left.base1);
    CHECK(c.to_right(0, c.s.base0) == c.right.base0);
    CHECK(c.to_right(0, c.s.base1) == c.right.base1);
    CHECK(c.to_left.surjective());
    CHECK(c.to_right.surjective());
  }
}

TEST_CASE("opposites") {
  const int cap = 3;
  for (int n = 0; n <= 3; ++n)
    CHECK(is_isomorphic(opposite(standard_simplex(n, cap)), standard_simplex(n, cap)).has_value());
  CHECK(is_isomorphic(opposite(horn(2, 0, cap)), horn(2, 2, cap)).has_value());
  const auto x = suspension(boundary(1, cap)).carrier;
  CHECK(opposite(opposite(x)) == x);
  const auto a = horn(2, 0, cap), b = standard_simplex(1, cap);
  CHECK(is_isomorphic(opposite(product(a, b)), product(opposite(a), opposite(b))).has_value());
  for (const auto& k : {standard_simplex(1, cap), boundary(1, cap), horn(2, 0, cap)}) {
    const auto l = suspension_left(k);
    const auto r = suspension_right(opposite(k));
    CHECK(is_isomorphic(opposite(l.carrier), r.carrier).has_value());
  }
}

TEST_CASE("map enumeration") {
  SearchBudget budget;
  const auto x = suspension(boundary(1, 2)).carrier;
  CHECK(count_maps(standard_simplex(0, 2), x, budget) == x.size(0));
  const auto d1 = standard_simplex(1, 1);
  CHECK(count_maps(d1, d1, budget) == oracle::brute_force_map_count(d1, d1));
  CHECK(count_maps(d1, d1, budget) == 3);
  const auto h = horn(2, 1, 2);
  const auto b = boundary(2, 2);
  CHECK(count_maps(h, b, budget) == oracle::brute_force_map_count(h, b));
}

TEST_CASE("budget exhaustion is reported") {
  SearchBudget tiny{10, 0};
  CHECK_THROWS_AS(count_maps(standard_simplex(2, 3), standard_simplex(3, 3), tiny), BudgetExceeded);
}

TEST_CASE("monotone ranks match the enumeration order") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      const auto all = oracle::all_monotone(m, n);
      REQUIRE(all.size() == oracle::count_monotone(m, n));
      for (std::size_t r = 0; r < all.size(); ++r) CHECK(monotone_rank(Mono(all[r].begin(), all[r].end()), n) == r);
    }
}
