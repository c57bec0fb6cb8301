#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wurst/coherent.hpp"
#include "wurst/homology.hpp"

using namespace wurst;

namespace {

IntMatrix matrix(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

std::vector<std::vector<long long>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<long long>> out(m.rows, std::vector<long long>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out[r][c] = static_cast<long long>(m.at(r, c));
  return out;
}

// Delta^2 with d_1 collapsed and d_0 glued to d_2: the projective plane.
SimplicialSet projective_plane(int cap) {
  const auto d2 = standard_simplex(2, cap);
  std::vector<std::vector<std::pair<SimplexId, SimplexId>>> identify(static_cast<std::size_t>(cap) + 1);
  identify[1] = {{2, 0}, {4, 1}};  // 02 ~ 00, 12 ~ 01
  return quotient(d2, identify).set;
}

HomologyGroup group(std::size_t betti, std::vector<Integer> torsion = {}) { return {betti, std::move(torsion)}; }

}  // namespace

TEST_CASE("normalized chain complexes") {
  const auto pt = normalized_chains(standard_simplex(0, 2));
  CHECK(pt.dims == std::vector<std::size_t>{1, 0, 0});
  const auto circle = normalized_chains(boundary(2, 2));
  CHECK(circle.dims == std::vector<std::size_t>{3, 3, 0});
  CHECK(circle.squares_to_zero());
  const auto s = normalized_chains(suspension(boundary(1, 3)).carrier);
  CHECK(s.dims == std::vector<std::size_t>{2, 2, 0, 0});
  for (std::size_t r = 0; r < 2; ++r) CHECK(s.boundary[1].at(r, 0) == s.boundary[1].at(r, 1));
  for (int n = 0; n <= 3; ++n) CHECK(normalized_chains(standard_simplex(n, 4)).squares_to_zero());
  CHECK(normalized_chains(q_space(2, 1, 4)).squares_to_zero());
}

TEST_CASE("Smith normal form") {
  auto diag = smith_normal_form(matrix({{2, 0}, {0, 0}}));
  CHECK(diag.rank == 1);
  CHECK(diag.factors == std::vector<Integer>{2});
  auto zero = smith_normal_form(matrix({{0, 0, 0}, {0, 0, 0}}));
  CHECK(zero.rank == 0);
  CHECK(zero.factors.empty());
  const std::vector<std::vector<long long>> classic{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  CHECK(oracle::invariant_factors_by_minors(classic) == std::vector<Integer>{2, 6, 12});
  CHECK(smith_normal_form(matrix(classic)).factors == std::vector<Integer>{2, 6, 12});
  const auto d1 = normalized_chains(boundary(2, 2)).boundary[1];
  const auto snf = smith_normal_form(d1);
  CHECK(snf.rank == oracle::rational_rank(rows_of(d1)));
  CHECK(snf.rank == 2);
  CHECK(snf.factors == std::vector<Integer>{1, 1});
}

TEST_CASE("Smith normal form against determinantal divisors") {
  std::mt19937 rng(20260214);
  std::uniform_int_distribution<int> entry(-6, 6), shape(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = shape(rng), cols = shape(rng);
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (auto& row : m)
      for (auto& v : row) v = entry(rng) * (trial % 3 == 0 ? 2 : 1);
    const auto snf = smith_normal_form(matrix(m));
    INFO("trial ", trial);
    CHECK(snf.factors == oracle::invariant_factors_by_minors(m));
    CHECK(snf.rank == oracle::rational_rank(m));
  }
}

TEST_CASE("homology of small spaces") {
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k < 4; ++k) CHECK(homology(standard_simplex(n, 4), k) == group(k == 0 ? 1 : 0));
  CHECK(homology(boundary(2, 2), 1) == group(1));
  CHECK(homology(boundary(3, 3), 2) == group(1));
  CHECK(homology(boundary(3, 3), 1) == group(0));
  CHECK(homology(suspension(boundary(1, 3)).carrier, 1) == group(1));
  CHECK(homology(disjoint_union(standard_simplex(1, 2), standard_simplex(0, 2)).set, 0) == group(2));
  const auto rp2 = projective_plane(3);
  CHECK(nondegenerate_counts(rp2) == std::vector<std::size_t>{1, 1, 1, 0});
  CHECK(homology(rp2, 0) == group(1));
  CHECK(homology(rp2, 1) == group(0, {2}));
  CHECK(homology(rp2, 2) == group(0));
  CHECK_THROWS_AS(homology(boundary(2, 2), 2), CapError);
}

TEST_CASE("Euler characteristic matches the Betti numbers") {
  const std::vector<SimplicialSet> corpus{boundary(2, 3), standard_simplex(2, 3), q_space(1, 1, 3), q_space(2, 0, 3),
                                          suspension(boundary(1, 3)).carrier,
                                          product(standard_simplex(1, 3), boundary(1, 3))};
  for (const auto& x : corpus) {
    const int dim = x.dimension();
    REQUIRE(dim < x.cap());
    const auto c = normalized_chains(x);
    long long alternating = 0;
    for (int k = 0; k <= dim; ++k) {
      const auto h = homology(c, k);
      REQUIRE(h.torsion.empty());
      alternating += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(h.betti);
    }
    CHECK(euler_characteristic(c, dim) == alternating);
  }
}

TEST_CASE("homology is transported along isomorphisms") {
  const auto a = q_space(1, 2, 3), b = q_space(2, 1, 3);
  REQUIRE(is_isomorphic(a, b).has_value());
  CHECK(homology_table(normalized_chains(a), 2) == homology_table(normalized_chains(b), 2));
  const auto square = product(standard_simplex(1, 3), standard_simplex(1, 3)), cube = coherent_cube(3, 0, 3, 3);
  REQUIRE(is_isomorphic(square, cube).has_value());
  CHECK(homology_table(normalized_chains(square), 2) == homology_table(normalized_chains(cube), 2));
}

TEST_CASE("contractibility evidence") {
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) {
      INFO("Q(", i, ",", j, ")");
      CHECK(contractibility_evidence(q_space(i, j, 4), 3).ok());
    }
  for (int n = 0; n <= 2; ++n) CHECK(contractibility_evidence(diag(cut(n, BiRange::square(3)).set), 2).ok());
  const auto circle = contractibility_evidence(boundary(2, 2), 1);
  CHECK(circle.connected);
  CHECK_FALSE(circle.ok());
  CHECK(circle.failing_degree == 1);
  CHECK(circle.witness == group(1));
  CHECK_FALSE(contractibility_evidence(boundary(1, 2), 1).connected);
}

TEST_CASE("mapping cones") {
  CHECK(cone_acyclicity(SimplicialMap::identity(standard_simplex(2, 3)), 1).acyclic());
  CHECK(cone_acyclicity(terminal_map(standard_simplex(2, 4)), 2).acyclic());
  const auto sphere = cone_acyclicity(boundary_inclusion(2, 4), 2);
  CHECK_FALSE(sphere.acyclic());
  CHECK(sphere.groups[2] == group(1));
  const auto circle = cone_acyclicity(boundary_inclusion(2, 3), 1);
  CHECK(circle.groups[0] == group(0));
  CHECK(circle.groups[1] == group(0));
  CHECK(cone_acyclicity(initial_map(standard_simplex(0, 3)), 1).groups[0] == group(1));
  CHECK_THROWS_AS(cone_acyclicity(SimplicialMap::identity(standard_simplex(1, 2)), 1), CapError);
}
