#include "wurst/suites.hpp"

#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "wurst/homology.hpp"
#include "wurst/quasicat.hpp"
#include "wurst/realize.hpp"

namespace wurst {

namespace {

std::string bideg(const char* what, int i, int j) {
  return std::string(what) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
std::string deg(const char* what, int n) { return std::string(what) + std::to_string(n); }
std::string face(FaceSpec f) { return (f.direction == 0 ? "h" : "v") + std::to_string(f.index); }

std::string counts(const SimplicialSet& x) {
  std::string out;
  for (auto c : nondegenerate_counts(x)) out += (out.empty() ? "" : ",") + std::to_string(c);
  return "nondegenerate " + out;
}

std::string groups(const std::vector<HomologyGroup>& g) {
  std::string out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    out += (k ? " " : "") + ("H" + std::to_string(k) + "=" + std::to_string(g[k].betti));
    for (const auto& t : g[k].torsion) out += "+Z/" + t.str();
  }
  return out;
}

bool iso(const SimplicialSet& a, const SimplicialSet& b) { return is_isomorphic(a, b).has_value(); }

std::vector<FaceSpec> faces_of(int i, int j) {
  std::vector<FaceSpec> out;
  for (int a = 0; i >= 1 && a <= i; ++a) out.push_back({0, a});
  for (int b = 0; j >= 1 && b <= j; ++b) out.push_back({1, b});
  return out;
}

Check contractible(const std::string& name, const SimplicialSet& x, int up_to) {
  const auto r = contractibility_evidence(x, up_to);
  std::string detail = r.connected ? "connected" : "disconnected";
  if (r.failing_degree >= 0) detail += ", H" + std::to_string(r.failing_degree) + " nonzero";
  else detail += ", reduced homology zero through " + std::to_string(up_to);
  return {name, "weakly contractible", r.ok(), detail};
}

// Component label of each vertex, through the 1-skeleton.
std::vector<std::size_t> component_labels(const SimplicialSet& x) {
  std::vector<std::size_t> parent(x.size(0));
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  if (x.cap() >= 1)
    for (SimplexId e = 0; e < x.size(1); ++e) parent[find(x.face(1, 0, e))] = find(x.face(1, 1, e));
  std::vector<std::size_t> label(parent.size());
  for (std::size_t v = 0; v < parent.size(); ++v) label[v] = find(v);
  return label;
}

bool pi0_bijective(const SimplicialMap& f) {
  const auto src = component_labels(f.source()), tgt = component_labels(f.target());
  std::map<std::size_t, std::size_t> image;  // source component -> target component
  std::set<std::size_t> hit;
  for (SimplexId v = 0; v < src.size(); ++v) {
    const auto t = tgt[f(0, v)];
    auto [it, fresh] = image.emplace(src[v], t);
    if (!fresh && it->second != t) return false;
    hit.insert(t);
  }
  return hit.size() == image.size() && hit == std::set<std::size_t>(tgt.begin(), tgt.end());
}

}  // namespace

bool SuiteReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

SuiteReport suite_cube(SuiteBounds b) {
  SuiteReport r{"cube", {}};
  for (int n = 0; n <= b.max; ++n) {
    SimplicialSet cube = standard_simplex(0, b.cap);
    for (int k = 0; k < n; ++k) cube = product(cube, standard_simplex(1, b.cap));
    const auto q = q_space(n, 0, b.cap);
    r.checks.push_back({bideg("Q", n, 0) + " = (D1)^" + std::to_string(n), "Q(n,0) is the n-cube", iso(q, cube),
                        "Q " + counts(q) + "; cube " + counts(cube)});
    const auto c = coherent_cube(n + 1, 0, n + 1, b.cap);
    r.checks.push_back({"C[D" + std::to_string(n + 1) + "](0," + std::to_string(n + 1) + ") = (D1)^" + std::to_string(n),
                        "mapping complexes of C[Delta^n] are cubes", iso(c, cube), counts(c)});
  }
  return r;
}

SuiteReport suite_reedy_q(SuiteBounds b, int chain_length) {
  SuiteReport r{"reedy-q", {}};
  const auto q = q_bicosimplicial(BiRange::triangle(b.max), b.cap);
  for (int i = 0; i <= b.max; ++i)
    for (int j = 0; i + j <= b.max; ++j) {
      const auto rep = reedy_boundary_check(q, i, j);
      r.checks.push_back({"boundary " + bideg("Q", i, j), "Q is Reedy cofibrant", rep.ok(),
                          rep.well_defined ? (rep.injective ? "injective" : "not injective") : "ill-defined"});
    }
  for (int i = 0; i <= b.max; ++i)
    for (int j = 0; i + j <= b.max; ++j) {
      const auto fs = faces_of(i, j);
      for (int len = 1; len <= chain_length; ++len) {
        std::size_t chains = 0, preimage = 0, mismatches = 0;
        for (std::size_t x = 0; x < fs.size(); ++x)
          for (std::size_t y = x + 1; y < fs.size(); ++y) {
            const auto rep = qcof_case_check(i, j, fs[x], fs[y], len);
            chains += rep.chains;
            preimage += rep.in_preimage;
            mismatches += rep.mismatches;
          }
        if (fs.size() < 2) continue;
        r.checks.push_back({"case lists " + bideg("Q", i, j) + " length " + std::to_string(len),
                            "preimage of a face intersection is given by the case lists", mismatches == 0,
                            std::to_string(chains) + " chains, " + std::to_string(preimage) + " in preimages, " +
                                std::to_string(mismatches) + " mismatches"});
      }
    }
  return r;
}

SuiteReport suite_pullback(SuiteBounds b) {
  SuiteReport r{"pullback", {}};
  const auto q = q_bicosimplicial(BiRange::triangle(b.max), b.cap);
  for (int i = 0; i <= b.max; ++i)
    for (int j = 0; i + j <= b.max; ++j) {
      const auto fs = faces_of(i, j);
      for (std::size_t x = 0; x < fs.size(); ++x)
        for (std::size_t y = x + 1; y < fs.size(); ++y) {
          const bool mixed = fs[x].direction != fs[y].direction;
          r.checks.push_back({bideg("Q", i, j) + " " + face(fs[x]) + "/" + face(fs[y]),
                              "codimension-one faces of Q meet in a pullback",
                              pullback_criterion_check(q, i, j, fs[x], fs[y]), mixed ? "mixed" : "same direction"});
        }
    }
  return r;
}

SuiteReport suite_reedy_w(SuiteBounds b) {
  SuiteReport r{"reedy-w", {}};
  const auto w = w_object(b.max, b.cap);
  for (int n = 0; n <= b.max; ++n) {
    const auto rep = reedy_boundary_check(w.w, n);
    std::string sizes;
    for (auto s : rep.boundary_size) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    r.checks.push_back({"boundary " + deg("W", n), "|dDelta^n|_W -> W_n is a cofibration", rep.ok(),
                        "boundary sizes " + sizes});
  }
  return r;
}

SuiteReport suite_contractibility(SuiteBounds b) {
  SuiteReport r{"contractibility", {}};
  for (int i = 0; i <= b.max; ++i)
    for (int j = 0; i + j <= b.max; ++j) r.checks.push_back(contractible(bideg("Q", i, j), q_space(i, j, b.cap), b.cap - 1));
  const auto w = w_object(2, 3);
  for (int n = 0; n <= 2; ++n) r.checks.push_back(contractible(deg("W", n), w.w.term(n), 2));
  for (int n = 0; n <= 2; ++n)
    r.checks.push_back(contractible("diag Cut^" + std::to_string(n), diag(cut(n, BiRange::square(3)).set), 2));
  return r;
}

SuiteReport suite_nullhomotopy(SuiteBounds b) {
  SuiteReport r{"nullhomotopy", {}};
  for (int i = 0; i <= b.max; ++i)
    for (int j = 0; i + j <= b.max; ++j)
      r.checks.push_back({bideg("Q", i, j), "the cone on the join inclusion factors through Q",
                          nullhomotopy_check(i, j, b.cap), ""});
  return r;
}

SuiteReport suite_tautological(const EnrichedCategory& c, int x, int y, int cap, SearchBudget& budget,
                               const std::string& label) {
  SuiteReport r{"tautological", {}};
  const auto h = nerve_homs(c, x, y, cap, budget);
  const auto rep = tautological_iso_check(h);
  const std::string where = label + " " + std::to_string(x) + "->" + std::to_string(y);
  auto variant = [&](const char* name, const VariantReport& v) {
    r.checks.push_back({where + " " + name, "Sing of the mapping complex is the mapping space", v.ok(),
                        std::string(v.bijective ? "bijective" : "not bijective") + ", " +
                            (v.natural ? "natural" : "not natural")});
  };
  variant("middle", rep.middle);
  variant("left", rep.left);
  variant("right", rep.right);
  r.checks.push_back({where + " comparison", "comparison inclusions are induced by W -> Q",
                      rep.comparison_compatible, ""});
  return r;
}

SuiteReport suite_op_symmetry(const EnrichedCategory& c, int x, int y, int cap, SearchBudget& budget,
                              const std::string& label) {
  SuiteReport r{"op-symmetry", {}};
  const auto rep = op_symmetry_check(c, x, y, cap, budget);
  const std::string where = label + " " + std::to_string(x) + "->" + std::to_string(y);
  r.checks.push_back({where + " right/left", "tau identifies Hom^R with (Hom^L)^op", rep.right_left_iso, ""});
  r.checks.push_back({where + " middle", "the reversal of W identifies Hom with Hom^op", rep.middle_iso,
                      rep.middle_is_identity ? "identity" : "not the identity"});
  r.checks.push_back({where + " square", "the symmetries commute with the comparison inclusions",
                      rep.square_commutes, ""});
  return r;
}

SuiteReport suite_sigma(SuiteBounds b, SearchBudget& budget) {
  SuiteReport r{"sigma", {}};
  for (int i = 0; i <= b.max; ++i)
    for (int j = 0; i + j <= b.max; ++j)
      r.checks.push_back({"sigma on " + bideg("Q", i, j), "sigma is well defined on Q", sigma_q_well_defined(i, j), ""});

  const int cap = 3;
  const auto w = w_object(cap, cap);
  const auto sw = sigma_w(w);
  const auto squeeze = w_to_q_first(w);
  const auto sq = sigma_q_first(cap, cap);
  bool factors = sw.natural() && squeeze.natural() && sq.natural();
  for (int n = 0; n <= cap; ++n) factors = factors && compose(sq.component[n], squeeze.component[n]) == sw.component[n];
  r.checks.push_back({"W -> Q -> Delta", "sigma on W factors through Q", factors, ""});

  const auto point = standard_simplex(0, cap);
  const std::vector<std::pair<std::string, SimplicialSet>> spaces{
      {"point", point}, {"two points", disjoint_union(point, point).set}};
  const auto d = delta_cosimplicial(cap, cap);
  for (const auto& [name, t] : spaces) {
    const auto f = apply_transformation(sw, sing(d, t, cap, budget), sing(w.w, t, cap, budget));
    const auto cone = cone_acyclicity(f, 1);
    r.checks.push_back({"sigma* on " + name, "sigma* : T -> Sing_W(T) is a weak equivalence", cone.acyclic(),
                        "cone " + groups(cone.groups)});
    r.checks.push_back({"pi0 of sigma* on " + name, "sigma* is bijective on path components", pi0_bijective(f),
                        std::to_string(path_components(f.source())) + " -> " +
                            std::to_string(path_components(f.target()))});

    const auto c = free_directed(t);
    const auto nerve = coherent_nerve(c, cap + 1, budget);
    const auto cm = comparison_maps(nerve, 0, 1, cap, budget);
    const auto cl = cone_acyclicity(cm.left, 1);
    r.checks.push_back({"Hom^L -> Hom for F(" + name + ")", "the comparison Hom^L -> Hom is a weak equivalence",
                        cl.acyclic(), "cone " + groups(cl.groups)});
  }
  return r;
}

SuiteReport suite_flip(SuiteBounds b) {
  SuiteReport r{"flip", {}};
  const int cap = b.cap;
  const auto q = q_bicosimplicial(BiRange::triangle(b.max), cap);
  for (int i = 0; i <= b.max; ++i)
    for (int j = 0; i + j <= b.max; ++j) {
      const bool involution = compose(tau(j, i, cap), tau(i, j, cap)) == SimplicialMap::identity(q_space(i, j, cap));
      bool natural = true;
      for (int a = 0; a <= b.max && natural; ++a)
        for (int bb = 0; a + bb <= b.max && natural; ++bb)
          for (const auto& alpha : monotone_maps(a, i))
            for (const auto& beta : monotone_maps(bb, j)) {
              const auto lhs = compose(tau(i, j, cap), q.apply(alpha, i, beta, j));
              const auto ra = compose(reversal_map(i), compose(alpha, reversal_map(a)));
              const auto rb = compose(reversal_map(j), compose(beta, reversal_map(bb)));
              if (!(lhs == compose(q.apply(rb, j, ra, i), tau(a, bb, cap)))) natural = false;
            }
      r.checks.push_back({"tau on " + bideg("Q", i, j), "tau identifies Q^flip with Q^rev", involution && natural,
                          std::string(involution ? "involution" : "not an involution") + ", " +
                              (natural ? "natural" : "not natural")});
    }
  const auto w = w_object(b.max, cap);
  const auto wrev = w_reversal(w);
  for (int n = 0; n <= b.max; ++n)
    r.checks.push_back({"reversal of " + deg("W", n), "W^rev is isomorphic to W",
                        wrev.natural() && wrev.component[n].bijective(), ""});
  for (int n = 0; n <= 2; ++n) {
    const auto c = cut(n, BiRange::square(2)).set;
    const bool ok = flip(flip(c)) == c && rev(c) == lrev(rrev(c)) && rev(c) == rrev(lrev(c)) && lrev(lrev(c)) == c;
    r.checks.push_back({"involutions on Cut^" + std::to_string(n), "flip and the reversals are involutions", ok, ""});
  }
  return r;
}

SuiteReport suite_dec_equivalence(SuiteBounds b, SearchBudget& budget) {
  SuiteReport r{"dec-equivalence", {}};
  const int cap = 5;
  const auto range = BiRange::square(2);
  const auto jx = directed_join_bicosimplicial(range, cap);
  std::vector<std::pair<std::string, BiSimplicialSet>> inputs;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) inputs.push_back({bideg("box", i, j), box(standard_simplex(i, cap), standard_simplex(j, cap), range)});
  inputs.push_back({"boundary box(1,1)", boundary_bisimplex(1, 1, range)});
  for (const auto& [name, bs] : inputs) {
    const auto real = realize_directed(bs, jx);
    const auto k = pointed(real);
    const bool ok = is_directed(k) && dec_unit(bs, jx, real, dec(k, range, budget)).bijective();
    r.checks.push_back({"unit on " + name, "B -> dec |B|_J is an isomorphism", ok, ""});
  }
  const auto w = w_object(2, 3);
  for (int n = 0; n <= std::min(b.max, 2); ++n) {
    const auto k = suspension(standard_simplex(n, 4));
    const auto d = dec(k, BiRange::triangle(3), budget).set;
    r.checks.push_back({"dec S(D" + std::to_string(n) + ")", "dec of the suspension of Delta^n is Cut^n",
                        is_isomorphic(d, cut(n, BiRange::triangle(3)).set).has_value(), ""});
    r.checks.push_back({"C(S(D" + std::to_string(n) + "))", "the mapping complex of the suspension of Delta^n is W_n",
                        iso(frak_c_directed(k, 3), w.w.term(n)), ""});
    const auto tri = BiRange::triangle(4);
    const auto prism = realize(cut(n, tri).set, join_bicosimplicial(tri, 4)).set;
    r.checks.push_back({"|Cut^" + std::to_string(n) + "| over the join", "Cut^n realizes to Delta^n x Delta^1",
                        iso(prism, product(standard_simplex(n, 4), standard_simplex(1, 4))), ""});
  }
  return r;
}

SuiteReport suite_partition(const PointedDirected& k, SearchBudget& budget, const std::string& label) {
  SuiteReport r{"partition", {}};
  for (const auto& row : partition_formula(k, budget))
    r.checks.push_back({label + " level " + std::to_string(row.n), "simplices split by their vertex blocks",
                        row.lhs == row.rhs, std::to_string(row.lhs) + " = " + std::to_string(row.rhs)});
  return r;
}

std::string format_table(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  out << "suite\tcheck\tanchor\tresult\tdetail\n";
  for (const auto& rep : reports)
    for (const auto& c : rep.checks)
      out << rep.suite << '\t' << c.name << '\t' << c.anchor << '\t' << (c.pass ? "PASS" : "FAIL") << '\t' << c.detail
          << '\n';
  return out.str();
}

std::string format_json(const std::vector<SuiteReport>& reports) {
  auto out = nlohmann::json::array();
  for (const auto& rep : reports) {
    auto checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"check", c.name}, {"anchor", c.anchor}, {"pass", c.pass}, {"detail", c.detail}});
    out.push_back({{"suite", rep.suite}, {"pass", rep.pass()}, {"checks", checks}});
  }
  return out.dump(1) + "\n";
}

}  // namespace wurst
