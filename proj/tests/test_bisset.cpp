#include <doctest.h>

#include "oracles.hpp"
#include "wurst/bisset.hpp"

using namespace wurst;

namespace {

bool iso(const BiSimplicialSet& a, const BiSimplicialSet& b) { return is_isomorphic(a, b).has_value(); }

}  // namespace

TEST_CASE("exterior products") {
  const auto r = BiRange::triangle(3);
  const auto pt = box(standard_simplex(0, 3), standard_simplex(0, 3), r);
  for (auto [i, j] : pt.degrees()) CHECK(pt.size(i, j) == 1);
  const auto d2 = standard_simplex(2, 3);
  const auto b = box(d2, standard_simplex(0, 3), r);
  for (auto [i, j] : b.degrees()) CHECK(b.size(i, j) == d2.size(i));
}

TEST_CASE("Cut^n") {
  const auto r = BiRange::triangle(3);
  const auto c0 = cut(0, r).set;
  for (auto [i, j] : c0.degrees()) CHECK(c0.size(i, j) == 1);
  const auto c1 = cut(1, r).set;
  CHECK(c1.size(0, 0) == oracle::count_monotone(1, 1));
  CHECK(c1.size(0, 0) == 3);
  CHECK(is_isomorphic(diag(c0), standard_simplex(0, 1)).has_value());
}

TEST_CASE("dec of suspensions of simplices is Cut^n") {
  const auto r = BiRange::triangle(2);
  for (int n = 0; n <= 3; ++n) {
    const auto s = suspension(standard_simplex(n, 3));
    CHECK(iso(dec(s, r).set, cut(n, r).set));
  }
}

TEST_CASE("dec of one-sided suspensions") {
  // With S^L(K) = (Delta^0 * K) + Delta^0 the cone point is the first basepoint, so the
  // whole of K sits over the second block.
  const auto r = BiRange::triangle(2);
  for (int n = 0; n <= 2; ++n) {
    const auto dn = standard_simplex(n, 3), pt = standard_simplex(0, 3);
    CHECK(iso(dec(suspension_left(dn), r).set, box(pt, dn, r)));
    CHECK(iso(dec(suspension_right(dn), r).set, box(dn, pt, r)));
  }
}

TEST_CASE("dec of J is the bisimplex") {
  const auto r = BiRange::triangle(3);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j) {
      const auto jj = directed_join(i, j, 4);
      CHECK(iso(dec(jj, r).set, box(standard_simplex(i, 4), standard_simplex(j, 4), r)));
    }
}

TEST_CASE("dec of the two-point object is empty") {
  const auto r = BiRange::triangle(2);
  const auto d = dec(directed_boundary_interval(3), r).set;
  for (auto [i, j] : d.degrees()) CHECK(d.size(i, j) == 0);
  CHECK_THROWS_AS(dec(PointedDirected{standard_simplex(2, 3), 0, 2}, r), InputError);
}

TEST_CASE("J_{i,j}") {
  CHECK(is_isomorphic(directed_join(0, 0, 3).carrier, standard_simplex(1, 3)).has_value());
  const auto j10 = directed_join(1, 0, 3).carrier;
  const auto expect = oracle::collapsed_simplex_nondegenerate(1, 0, 3);
  CHECK(nondegenerate_counts(j10) == expect);
  CHECK(expect == std::vector<std::size_t>{2, 2, 1, 0});
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      const auto k = directed_join(i, j, 3);
      CHECK(is_directed(k));
      const auto p = directed_join_pushout(i, j, 3);
      CHECK(is_directed(p));
      CHECK(is_isomorphic(k.carrier, p.carrier).has_value());
    }
}

TEST_CASE("diagonal of an exterior product is the product") {
  const auto x = horn(2, 1, 2), y = standard_simplex(1, 2);
  CHECK(is_isomorphic(diag(box(x, y, BiRange::square(2))), product(x, y)).has_value());
}

TEST_CASE("flip and reversals are involutions") {
  const auto r = BiRange{3, 2, 4};
  const auto b = box(horn(2, 0, 3), boundary(2, 3), r);
  CHECK(flip(flip(b)) == b);
  CHECK(lrev(lrev(b)) == b);
  CHECK(rrev(rrev(b)) == b);
  CHECK(rev(b) == lrev(rrev(b)));
  CHECK(rev(b) == rrev(lrev(b)));
  CHECK(rev(rev(b)) == b);
}

TEST_CASE("flipped opposite of Cut^n is Cut^n") {
  const auto r = BiRange::triangle(3);
  for (int n = 0; n <= 3; ++n) {
    const auto c = cut(n, r);
    const auto target = rev(flip(c.set));
    // explicit witness: c |-> r_n . c . r
    BiSimplicialMap::Components comp = unflatten(c.set, MapComponents(c.set.degrees().size()));
    for (auto [i, j] : c.set.degrees())
      for (const auto& seq : c.keys[i][j]) {
        const auto img = compose(reversal_map(n), compose(seq, reversal_map(i + 1 + j)));
        comp[i][j].push_back(c.at(j, i, img));
      }
    const BiSimplicialMap phi(c.set, target, comp);
    CHECK(phi.bijective());
  }
}

TEST_CASE("bisimplex boundaries") {
  const auto r = BiRange::triangle(3);
  CHECK(iso(boundary_bisimplex(1, 0, r), box(boundary(1, 3), standard_simplex(0, 3), r)));
  const auto e = boundary_bisimplex(0, 0, r);
  for (auto [i, j] : e.degrees()) CHECK(e.size(i, j) == 0);
  CHECK(boundary_bisimplex(1, 1, r).size(0, 0) == oracle::boundary_bisimplex_vertices(1, 1));
  CHECK(oracle::boundary_bisimplex_vertices(1, 1) == 4);
}

TEST_CASE("Cut^n restrictions are natural in n") {
  const auto r = BiRange::triangle(3);
  for (int n = 0; n <= 2; ++n) {
    std::vector<std::pair<Mono, int>> gens;
    for (int k = 0; k <= n + 1; ++k) gens.emplace_back(coface_map(n + 1, k), n + 1);
    for (int k = 0; k < n; ++k) gens.emplace_back(codegeneracy_map(n - 1, k), n - 1);
    for (const auto& [theta, m] : gens) {
      const auto f = cut_map(theta, n, m, r);
      CHECK_NOTHROW(BiSimplicialMap(f.source(), f.target(), f.components()));
      for (int side = 0; side < 2; ++side) {
        const auto rn = side == 0 ? cut_restrict_left(n, r) : cut_restrict_right(n, r);
        const auto rm = side == 0 ? cut_restrict_left(m, r) : cut_restrict_right(m, r);
        const auto lhs = compose(rm, f);
        // theta acting on the Delta^n factor: a |-> theta . a on sequences
        bool ok = true;
        for (auto [i, j] : rn.source().degrees()) {
          const auto src = monotone_maps(side == 0 ? i : j, n);
          const auto dst = monotone_maps(side == 0 ? i : j, m);
          for (SimplexId x = 0; x < rn.source().size(i, j); ++x) {
            const auto moved = compose(theta, src[rn(i, j, x)]);
            const auto pos = std::find(dst.begin(), dst.end(), moved) - dst.begin();
            ok = ok && lhs(i, j, x) == static_cast<SimplexId>(pos);
          }
        }
        CHECK(ok);
      }
    }
  }
}

TEST_CASE("partition formula") {
  SearchBudget budget;
  for (const auto& k : {suspension(standard_simplex(1, 3)), suspension(boundary(1, 3)), directed_join(1, 1, 3)}) {
    const auto rows = partition_formula(k, budget);
    CHECK(rows.size() == 4);
    for (const auto& row : rows) CHECK(row.lhs == row.rhs);
  }
}
