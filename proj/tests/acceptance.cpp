// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact (tolerance 0);
// the data is finite and discrete.
//
// Usage: wurst_acceptance [--verbose] [--known-failure N]...
// Exit status is 0 when the set of failing criteria equals the set of known failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "oracles.hpp"
#include "wurst/quasicat.hpp"
#include "wurst/suites.hpp"

using namespace wurst;

namespace {

constexpr int kTolerance = 0;  // exact equality everywhere

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void add(const SuiteReport& r, const std::function<bool(const Check&)>& keep = {}) {
    for (const auto& c : r.checks) {
      if (keep && !keep(c)) continue;
      ++checks;
      if (!c.pass) {
        pass = false;
        failures.push_back(r.suite + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
      }
    }
  }
  void add(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

Outcome cube_identification() {
  Outcome o;
  o.add(suite_cube({3, 3}), [](const Check& c) { return starts_with(c.name, "Q("); });
  return o;
}

Outcome reedy_q() {
  Outcome o;
  o.add(suite_pullback({4, 3}));
  o.add(suite_reedy_q({4, 3}, 3));
  return o;
}

Outcome reedy_w() {
  Outcome o;
  o.add(suite_reedy_w({3, 4}));
  return o;
}

Outcome contractibility() {
  Outcome o;
  o.add(suite_contractibility({4, 4}));
  o.add(suite_nullhomotopy({4, 3}));
  return o;
}

const std::vector<std::pair<std::string, SimplicialSet>>& mapping_complexes() {
  static const std::vector<std::pair<std::string, SimplicialSet>> ks{{"F(D0)", standard_simplex(0, 3)},
                                                                     {"F(D1)", standard_simplex(1, 3)},
                                                                     {"F(dD1)", boundary(1, 3)},
                                                                     {"F(D2)", standard_simplex(2, 3)}};
  return ks;
}

Outcome tautological() {
  Outcome o;
  for (const auto& [name, k] : mapping_complexes()) {
    SearchBudget budget;
    o.add(suite_tautological(free_directed(k), 0, 1, 2, budget, name));
  }
  return o;
}

Outcome main_evidence() {
  Outcome o;
  SearchBudget budget;
  o.add(suite_sigma({0, 3}, budget), [](const Check& c) {
    return starts_with(c.name, "sigma*") || starts_with(c.name, "pi0") || starts_with(c.name, "Hom^L");
  });
  return o;
}

Outcome symmetry() {
  Outcome o;
  o.add(suite_flip({3, 2}));
  SearchBudget budget;
  o.add(suite_op_symmetry(free_directed(standard_simplex(1, 3)), 0, 1, 2, budget, "F(D1)"));
  return o;
}

Outcome dec_equivalence() {
  Outcome o;
  SearchBudget budget;
  o.add(suite_dec_equivalence({2, 5}, budget));
  return o;
}

Outcome partition() {
  Outcome o;
  SearchBudget budget;
  o.add(suite_partition(suspension(standard_simplex(1, 3)), budget, "S(D1)"));
  o.add(suite_partition(suspension(boundary(1, 3)), budget, "S(dD1)"));
  o.add(suite_partition(directed_join(1, 1, 3), budget, "J(1,1)"));
  return o;
}

// Values compared here come from the brute-force oracles, not from the library's search.
Outcome oracle_gate() {
  Outcome o;
  std::size_t classes = 0;
  oracle::raw_classes(1, 1, oracle::raw_chains(1, 1, 1), &classes);
  o.add(classes == 4, "Q(1,1) vertex count from union-find is " + std::to_string(classes));
  o.add(q_space(1, 1, 2).size(0) == classes, "Q(1,1) vertex count disagrees with the oracle");

  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j)
      for (int len = 1; len <= 3; ++len) {
        const auto chains = oracle::raw_chains(i, j, len);
        std::size_t n = 0;
        const auto cls = oracle::raw_classes(i, j, chains, &n);
        std::map<Chain, std::size_t> seen;
        bool agree = true;
        for (std::size_t c = 0; c < chains.size(); ++c) {
          auto [it, fresh] = seen.emplace(canonical_chain(Chain(chains[c].begin(), chains[c].end()), i, j), cls[c]);
          if (!fresh && it->second != cls[c]) agree = false;
        }
        const std::string where = "Q(" + std::to_string(i) + "," + std::to_string(j) + ") length " + std::to_string(len);
        o.add(agree && seen.size() == n, "canonical form disagrees with the closure on " + where);
        o.add(q_space(i, j, len - 1).size(len - 1) == n, "class count of " + where);
      }

  for (const auto& [name, k] : mapping_complexes()) {
    SearchBudget budget;
    const auto h = nerve_homs(free_directed(k), 0, 1, 2, budget);
    for (int n = 0; n <= 2; ++n) {
      const std::string where = name + " level " + std::to_string(n);
      o.add(h.middle.set.size(n) == oracle::brute_force_map_count(h.w.w.term(n), k), "Hom count of " + where);
      o.add(h.left.set.size(n) == oracle::brute_force_map_count(q_space(0, n, 3), k), "Hom^L count of " + where);
      o.add(h.right.set.size(n) == oracle::brute_force_map_count(q_space(n, 0, 3), k), "Hom^R count of " + where);
    }
  }

  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j)
      o.add(nondegenerate_counts(directed_join(i, j, 3).carrier) == oracle::collapsed_simplex_nondegenerate(i, j, 3),
            "J(" + std::to_string(i) + "," + std::to_string(j) + ") against the collapsed simplex");
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      o.add(standard_simplex(n, 3).size(m) == oracle::count_monotone(m, n), "simplex level count");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool verbose = false;
  std::set<int> known;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--verbose") verbose = true;
    else if (arg == "--known-failure" && a + 1 < argc) known.insert(std::stoi(argv[++a]));
    else {
      std::cerr << "usage: wurst_acceptance [--verbose] [--known-failure N]...\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Q(n,0) is isomorphic to the n-cube, n <= 3", cube_identification},
      {"Q is Reedy cofibrant: pullbacks and case lists, i+j <= 4", reedy_q},
      {"W is Reedy cofibrant, n <= 3, levels <= 4", reedy_w},
      {"contractibility evidence and the nullhomotopy", contractibility},
      {"tautological isomorphisms for F(K), levels <= 2", tautological},
      {"sigma* and Hom^L -> Hom are homology equivalences through degree 1", main_evidence},
      {"tau, W^rev and op symmetry", symmetry},
      {"dec and realization over J are inverse", dec_equivalence},
      {"partition counts, levels <= 3", partition},
      {"oracle gate", oracle_gate},
  };

  std::cout << "tolerance: " << kTolerance << " (exact)\n";
  std::set<int> failed;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const int id = static_cast<int>(c) + 1;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) failed.insert(id);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[c].first << "  ["
              << o.checks << " checks";
    if (verbose) std::cout << ", " << static_cast<int>(secs * 1000) << " ms";
    std::cout << "]\n";
    for (const auto& f : o.failures) std::cout << "    failed: " << f << '\n';
  }
  if (failed == known) return 0;
  for (int k : known)
    if (!failed.count(k)) std::cout << "criterion " << k << " was expected to fail but passed\n";
  return 1;
}
