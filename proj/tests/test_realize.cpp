#include <doctest.h>

#include "oracles.hpp"
#include "wurst/realize.hpp"

using namespace wurst;

namespace {

bool iso(const SimplicialSet& a, const SimplicialSet& b) { return is_isomorphic(a, b).has_value(); }

}  // namespace

TEST_CASE("coefficient objects satisfy the cosimplicial identities") {
  CHECK_FALSE(delta_cosimplicial(3, 3).check_identities().has_value());
  CHECK_FALSE(join_bicosimplicial(BiRange::triangle(3), 3).check_identities().has_value());
  CHECK_FALSE(directed_join_bicosimplicial(BiRange::triangle(3), 3).check_identities().has_value());
  CHECK_FALSE(product_bicosimplicial(BiRange::triangle(2), 2).check_identities().has_value());
}

TEST_CASE("realizing representables gives the terms") {
  const auto d = delta_cosimplicial(3, 3);
  for (int n = 0; n <= 3; ++n) CHECK(iso(realize(standard_simplex(n, 3), d).set, standard_simplex(n, 3)));
  const auto jh = directed_join_bicosimplicial(BiRange::triangle(3), 3).restrict_horizontal();
  for (int n = 0; n <= 3; ++n) CHECK(iso(realize(standard_simplex(n, 3), jh).set, jh.term(n)));
  const auto two = disjoint_union(jh.term(0), jh.term(0)).set;
  CHECK(iso(realize(boundary(1, 3), jh).set, two));
}

TEST_CASE("realizing a source with simplices beyond the bound is refused") {
  CHECK_THROWS_AS(realize(standard_simplex(3, 3), delta_cosimplicial(2, 3)), CapError);
}

TEST_CASE("Cut^n realized over the plain join is the prism") {
  for (int n = 0; n <= 2; ++n) {
    const int cap = 4;
    const auto r = BiRange::triangle(cap);
    const auto x = join_bicosimplicial(r, cap);
    const auto c = cut(n, r).set;
    CHECK(iso(realize(c, x).set, product(standard_simplex(n, cap), standard_simplex(1, cap))));
  }
}

TEST_CASE("Sing over Delta is the identity") {
  const auto d = delta_cosimplicial(2, 2);
  for (const auto& t : {horn(2, 1, 2), boundary(2, 2), suspension(boundary(1, 2)).carrier}) {
    const auto s = sing(d, t, 2);
    CHECK(iso(s.set(), t));
    const auto r = realize(t, d);
    CHECK(sing_unit(t, r, sing(d, r.set, 2)).bijective());
  }
  const auto pt = standard_simplex(0, 2);
  const auto jh = directed_join_bicosimplicial(BiRange::triangle(2), 2).restrict_horizontal();
  CHECK(iso(sing(jh, pt, 2).set(), pt));
}

TEST_CASE("realization is left adjoint to Sing on small inputs") {
  const int cap = 2;
  const auto x = directed_join_bicosimplicial(BiRange::triangle(cap), cap).restrict_horizontal();
  SearchBudget budget;
  for (const auto& s : {standard_simplex(1, cap), horn(2, 0, cap), boundary(2, cap)})
    for (const auto& t : {standard_simplex(1, cap), suspension(boundary(1, cap)).carrier}) {
      const auto lhs = count_maps(realize(s, x).set, t, budget);
      const auto rhs = count_maps(s, sing(x, t, cap).set(), budget);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("realization preserves pushouts") {
  const int cap = 3;
  const auto x = join_bicosimplicial(BiRange::triangle(cap), cap).restrict_vertical();
  const auto f = horn_inclusion(2, 1, cap);
  const auto p = pushout(f, f);  // two triangles glued along a horn
  const auto rp = realize(p.set, x).set;
  const auto ra = realize(f.source(), x), rb = realize(f.target(), x);
  const auto rf = realize_map(ra, rb, f);
  CHECK(iso(rp, pushout(rf, rf).set));
}

TEST_CASE("realization preserves injections when the coefficients are Reedy cofibrant") {
  const int cap = 3;
  // n |-> Delta^n x Delta^1
  const auto i1 = standard_simplex(1, cap);
  std::vector<SimplicialSet> terms;
  for (int n = 0; n <= 3; ++n) terms.push_back(product(standard_simplex(n, cap), i1));
  const auto x = make_cosimplicial(terms, [&](const Mono& a, int m, int n) {
    return product_map(delta_map(a, m, n, cap), SimplicialMap::identity(i1), terms[m], terms[n]);
  });
  CHECK_FALSE(x.check_identities().has_value());
  for (int n = 0; n <= 3; ++n) CHECK(reedy_boundary_check(x, n).ok());
  for (const auto& f : {horn_inclusion(2, 1, cap), boundary_inclusion(2, cap), horn_inclusion(3, 0, cap)}) {
    const auto ra = realize(f.source(), x), rb = realize(f.target(), x);
    CHECK(realize_map(ra, rb, f).injective());
  }
}

TEST_CASE("collapsing the blocks destroys Reedy cofibrancy over sSet") {
  const auto x = directed_join_bicosimplicial(BiRange::triangle(2), 2).restrict_horizontal();
  CHECK(reedy_boundary_check(x, 0).ok());
  CHECK_FALSE(reedy_boundary_check(x, 1).ok());
}

TEST_CASE("Reedy checks for Delta") {
  const auto d = delta_cosimplicial(3, 3);
  for (int n = 0; n <= 3; ++n) CHECK(reedy_boundary_check(d, n).ok());
  CHECK(pullback_criterion_check(d, 2, FaceSpec{0, 0}, FaceSpec{0, 1}));
  CHECK_THROWS_AS(pullback_criterion_check(d, 2, FaceSpec{0, 1}, FaceSpec{0, 1}), InputError);
}

TEST_CASE("dec of |B|_J recovers B") {
  const int cap = 5;
  const auto r = BiRange::square(2);
  const auto jx = directed_join_bicosimplicial(r, cap);
  std::vector<BiSimplicialSet> inputs;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) inputs.push_back(box(standard_simplex(i, cap), standard_simplex(j, cap), r));
  inputs.push_back(boundary_bisimplex(1, 1, r));
  for (const auto& b : inputs) {
    const auto real = realize_directed(b, jx);
    const auto k = pointed(real);
    CHECK(is_directed(k));
    const auto d = dec(k, r);
    CHECK(dec_unit(b, jx, real, d).bijective());
  }
}

TEST_CASE("|dec K|_J recovers K") {
  const int cap = 3;
  const auto r = BiRange::triangle(cap - 1);
  const auto jx = directed_join_bicosimplicial(r, cap);
  for (const auto& k : {suspension(standard_simplex(1, cap)), suspension(boundary(1, cap)), directed_join(1, 1, cap),
                        suspension_left(horn(2, 0, cap))}) {
    const auto d = dec(k, r).set;
    const auto re = realize_directed(d, jx).set;
    CHECK(iso(re, k.carrier));
  }
}

TEST_CASE("transformations induce maps on both sides") {
  const int cap = 2;
  const auto d = delta_cosimplicial(2, cap);
  CosimplicialTransformation id{d, d, {}};
  for (int n = 0; n <= 2; ++n) id.component.push_back(SimplicialMap::identity(d.term(n)));
  CHECK(id.natural());
  const auto s = horn(2, 0, cap);
  const auto r = realize(s, d);
  CHECK(apply_transformation(id, s, r, r) == SimplicialMap::identity(r.set));
  const auto sg = sing(d, boundary(2, cap), cap);
  CHECK(apply_transformation(id, sg, sg) == SimplicialMap::identity(sg.set()));
}

TEST_CASE("realization is stable under raising the cosimplicial bound") {
  const int cap = 3;
  const auto big = delta_cosimplicial(3, cap);
  for (const auto& s : {horn(2, 1, cap), boundary(2, cap), suspension(boundary(1, cap)).carrier}) {
    const auto a = realize(s, big.truncate(2)).set;
    const auto b = realize(s, big).set;
    CHECK(iso(a, b));
  }
}
