#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "wurst/coherent.hpp"

using namespace wurst;

namespace {

bool iso(const SimplicialSet& a, const SimplicialSet& b) { return is_isomorphic(a, b).has_value(); }

SimplicialSet cube_power(int n, int cap) {
  auto out = standard_simplex(0, cap);
  for (int k = 0; k < n; ++k) out = product(out, standard_simplex(1, cap));
  return out;
}

Chain to_chain(const std::vector<unsigned>& raw) { return Chain(raw.begin(), raw.end()); }

}  // namespace

TEST_CASE("Q(1,1) vertex count from the union-find oracle") {
  std::size_t classes = 0;
  oracle::raw_classes(1, 1, oracle::raw_chains(1, 1, 1), &classes);
  CHECK(classes == 4);
  CHECK(q_space(1, 1, 2).size(0) == classes);
}

TEST_CASE("canonical forms agree with the closure of the raw relation") {
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j)
      for (int len = 1; len <= 3; ++len) {
        if (i + j == 4 && len == 3) continue;  // covered by the acceptance run
        const auto chains = oracle::raw_chains(i, j, len);
        std::size_t classes = 0;
        const auto cls = oracle::raw_classes(i, j, chains, &classes);
        std::map<Chain, std::size_t> seen;
        bool agree = true;
        for (std::size_t c = 0; c < chains.size(); ++c) {
          auto [it, fresh] = seen.emplace(canonical_chain(to_chain(chains[c]), i, j), cls[c]);
          if (!fresh && it->second != cls[c]) agree = false;
        }
        INFO("i=", i, " j=", j, " len=", len);
        CHECK(agree);
        CHECK(seen.size() == classes);
        CHECK(q_space(i, j, len - 1).size(len - 1) == classes);
      }
}

TEST_CASE("Q faces are well defined on classes") {
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 3; ++j)
      for (const auto& raw : oracle::raw_chains(i, j, 3)) {
        const auto c = to_chain(raw), can = canonical_chain(c, i, j);
        for (int m = 0; m < 3; ++m) {
          Chain a = c, b = can;
          a.erase(a.begin() + m);
          b.erase(b.begin() + m);
          if (canonical_chain(a, i, j) != canonical_chain(b, i, j)) FAIL("face not well defined");
        }
      }
}

TEST_CASE("small Q terms") {
  CHECK(iso(q_space(0, 0, 3), standard_simplex(0, 3)));
  CHECK(iso(q_space(1, 0, 3), standard_simplex(1, 3)));
  CHECK(iso(q_space(0, 1, 3), standard_simplex(1, 3)));
  // Q(n,0) is a proper quotient of the n-cube from n = 2 on
  CHECK(q_space(2, 0, 2).size(0) == 3);
  CHECK_FALSE(iso(q_space(2, 0, 3), cube_power(2, 3)));
  for (int n = 0; n <= 3; ++n) {
    const auto cube = coherent_cube_keyed(0, n + 1, 3);
    CHECK(iso(cube.set, cube_power(n, 3)));
    const auto q = q_keyed(n, 0, 3);
    MapComponents c(4);
    for (int k = 0; k <= 3; ++k)
      for (const auto& ch : cube.keys[k]) c[k].push_back(q.at(k, canonical_chain(ch, n, 0)));
    CHECK(SimplicialMap(cube.set, q.set, std::move(c)).surjective());
  }
}

TEST_CASE("the bicosimplicial object Q") {
  const auto q = q_bicosimplicial(BiRange::triangle(3), 3);
  CHECK_FALSE(q.check_identities().has_value());
  const auto d0 = q.hcoface(1, 0, 0), d1 = q.hcoface(1, 0, 1);
  CHECK(d0(0, 0) != d1(0, 0));
  CHECK(q.term(1, 0).size(0) == 2);
}

TEST_CASE("coherent cubes and composition") {
  for (int a = 0; a < 3; ++a) CHECK(iso(coherent_cube(3, a, a + 1, 3), standard_simplex(0, 3)));
  CHECK(iso(coherent_cube(3, 0, 3, 3), product(standard_simplex(1, 3), standard_simplex(1, 3))));
  const auto u = cube_composition(0, 1, 2, 2);
  const auto whole = coherent_cube_keyed(0, 2, 2);
  CHECK(u.source().size(0) == 1);
  CHECK(u(0, 0) == whole.at(0, Chain{0b111}));
  const auto c3 = coherent_simplex(3, 2);
  CHECK_FALSE(c3.check_laws().has_value());
}

TEST_CASE("sigma on Q") {
  const auto q = q_keyed(1, 1, 2);
  const auto s = sigma_q(1, 1, 2);
  CHECK(s(0, q.at(0, canonical_chain(Chain{0b111}, 1, 1))) == 1);
  for (int n = 0; n <= 3; ++n) {
    const auto qn = q_keyed(n, 0, 2);
    const Subset full = (Subset{1} << (n + 2)) - 1;
    CHECK(sigma_q(n, 0, 2)(0, qn.at(0, canonical_chain(Chain{full}, n, 0))) == static_cast<SimplexId>(n));
  }
  // constant on oracle classes
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) {
      CHECK(sigma_q_well_defined(i, j));
      const auto chains = oracle::raw_chains(i, j, 1);
      std::size_t classes = 0;
      const auto cls = oracle::raw_classes(i, j, chains, &classes);
      std::map<std::size_t, int> value;
      bool ok = true;
      for (std::size_t c = 0; c < chains.size(); ++c) {
        int mx = 0;
        for (int p = 0; p <= i; ++p)
          if (chains[c][0] >> p & 1U) mx = p;
        auto [it, fresh] = value.emplace(cls[c], mx);
        if (!fresh && it->second != mx) ok = false;
      }
      CHECK(ok);
    }
}

TEST_CASE("tau") {
  CHECK(tau(0, 0, 2) == SimplicialMap::identity(q_space(0, 0, 2)));
  const auto a = q_keyed(1, 0, 2), b = q_keyed(0, 1, 2);
  const auto t = tau(1, 0, 2);
  // vertex {i0, j0} of Q(1,0) goes to {2 - j0, 2 - i0}
  CHECK(t(0, a.at(0, Chain{0b101})) == b.at(0, Chain{0b101}));
  CHECK(t(0, a.at(0, Chain{0b110})) == b.at(0, Chain{0b011}));
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) CHECK(compose(tau(j, i, 3), tau(i, j, 3)) == SimplicialMap::identity(q_space(i, j, 3)));
}

TEST_CASE("tau intertwines the flip with the reversal") {
  const auto q = q_bicosimplicial(BiRange::triangle(3), 2);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j)
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b)
          for (const auto& alpha : monotone_maps(a, i))
            for (const auto& beta : monotone_maps(b, j)) {
              const auto lhs = compose(tau(i, j, 2), q.apply(alpha, i, beta, j));
              const auto ra = compose(reversal_map(i), compose(alpha, reversal_map(a)));
              const auto rb = compose(reversal_map(j), compose(beta, reversal_map(b)));
              const auto rhs = compose(q.apply(rb, j, ra, i), tau(a, b, 2));
              if (!(lhs == rhs)) FAIL("tau naturality fails");
            }
}

TEST_CASE("W") {
  const auto w = w_object(3, 3);
  CHECK_FALSE(w.w.check_identities().has_value());
  CHECK(iso(w.w.term(0), standard_simplex(0, 3)));
  CHECK(iso(w.w.term(0), coherent_cube(1, 0, 1, 3)));
  const auto sw = sigma_w(w);
  CHECK(sw.natural());
  CHECK(sw.component[0] == terminal_map(w.w.term(0)));
  const auto squeeze = w_to_q_first(w);
  const auto sq = sigma_q_first(3, 3);
  CHECK(squeeze.natural());
  CHECK(sq.natural());
  for (int n = 0; n <= 3; ++n) CHECK(compose(sq.component[n], squeeze.component[n]) == sw.component[n]);
  const auto rev = w_reversal(w);
  CHECK(rev.natural());
  for (int n = 0; n <= 3; ++n) CHECK(rev.component[n].bijective());
}

TEST_CASE("W against the coherent mapping space of the suspension") {
  const auto w = w_object(2, 3);
  for (int n = 0; n <= 2; ++n) {
    const auto k = suspension(standard_simplex(n, 4));
    const auto c = frak_c_directed(k, 3);
    CHECK(nondegenerate_counts(c) == nondegenerate_counts(w.w.term(n)));
    CHECK(iso(c, w.w.term(n)));
  }
}

TEST_CASE("coherent mapping spaces of directed objects") {
  CHECK(iso(frak_c_directed(directed_interval(3), 3), standard_simplex(0, 3)));
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j) CHECK(iso(frak_c_directed(directed_join(i, j, 4), 3), q_space(i, j, 3)));
}

TEST_CASE("free directed categories and their nerves") {
  const auto f0 = free_directed(standard_simplex(0, 3));
  CHECK(f0.map[1][0].empty());
  SearchBudget budget;
  const auto n = coherent_nerve(f0, 3, budget);
  CHECK(iso(n, standard_simplex(1, 3)));
  for (int k = 0; k <= 3; ++k) CHECK(n.size(k) == oracle::count_monotone(k, 1));
  const auto c = free_directed(boundary(1, 2));
  CHECK(coherent_nerve(c, 2, budget).size(0) == 2);
  // two-pointed sum: F(K1 + K2)(0,1) is the sum of the mapping complexes
  const auto sum = disjoint_union(standard_simplex(1, 2), standard_simplex(0, 2)).set;
  CHECK(iso(free_directed(sum).map[0][1], sum));
}

TEST_CASE("nullhomotopy factors through Q") {
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 3; ++j) CHECK(nullhomotopy_check(i, j, 3));
}

TEST_CASE("Q is Reedy cofibrant on small bidegrees") {
  const auto q = q_bicosimplicial(BiRange::triangle(3), 3);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) CHECK(reedy_boundary_check(q, i, j).ok());
  CHECK(pullback_criterion_check(q, 2, 0, FaceSpec{0, 0}, FaceSpec{0, 1}));
  CHECK(pullback_criterion_check(q, 1, 1, FaceSpec{0, 0}, FaceSpec{1, 1}));
}

TEST_CASE("case lists of the cofibrancy argument match the computed preimages") {
  for (int len = 1; len <= 2; ++len) {
    const auto same = qcof_case_check(2, 1, FaceSpec{0, 2}, FaceSpec{0, 0}, len);
    CHECK(same.ok());
    CHECK(same.in_preimage > 0);
    CHECK(qcof_case_check(1, 2, FaceSpec{1, 1}, FaceSpec{1, 2}, len).ok());
    CHECK(qcof_case_check(1, 1, FaceSpec{0, 1}, FaceSpec{1, 0}, len).ok());
    CHECK(qcof_case_check(2, 0, FaceSpec{0, 0}, FaceSpec{0, 1}, len).ok());
  }
}
