#pragma once

#include <string>
#include <vector>

#include "wurst/coherent.hpp"

namespace wurst {

/// One line of a verification report. `anchor` names the claim being checked.
struct Check {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const;
};

/// Bounds shared by the suites. `max` bounds the cosimplicial degree (i + j, or n), `cap` the
/// simplicial level.
struct SuiteBounds {
  int max = 3;
  int cap = 3;
};

/// Q(n,0) against the cube (Delta^1)^n, n <= max; also the cube as Q's cover.
SuiteReport suite_cube(SuiteBounds b);
/// Boundary injectivity of Q for i + j <= max, and the case lists of the preimage argument for
/// chains of length 1..chain_length.
SuiteReport suite_reedy_q(SuiteBounds b, int chain_length);
/// Pullback squares of Q for every pair of distinct codimension-one faces, i + j <= max.
SuiteReport suite_pullback(SuiteBounds b);
/// Boundary injectivity of W_n for n <= max at levels <= cap.
SuiteReport suite_reedy_w(SuiteBounds b);
/// Reduced homology of Q(i,j) (i + j <= max) through cap - 1, of W_n and diag(Cut^n) for
/// n <= 2 through degree 2.
SuiteReport suite_contractibility(SuiteBounds b);
/// The factorization through Q for i + j <= max.
SuiteReport suite_nullhomotopy(SuiteBounds b);
/// Tautological isomorphisms for the mapping spaces of N(C) between objects x and y.
SuiteReport suite_tautological(const EnrichedCategory& c, int x, int y, int cap, SearchBudget& budget,
                               const std::string& label = "C");
SuiteReport suite_op_symmetry(const EnrichedCategory& c, int x, int y, int cap, SearchBudget& budget,
                              const std::string& label = "C");
/// sigma on Q and W, the induced map Sing_Delta(T) -> Sing_W(T) for T a point and two points,
/// and the comparison Hom^L -> Hom for the free directed categories on the same T.
SuiteReport suite_sigma(SuiteBounds b, SearchBudget& budget);
/// tau and the reversal of W.
SuiteReport suite_flip(SuiteBounds b);
/// dec against realization over the directed join, and Cut^n over the plain join.
SuiteReport suite_dec_equivalence(SuiteBounds b, SearchBudget& budget);
/// Both sides of the partition count of K at every level.
SuiteReport suite_partition(const PointedDirected& k, SearchBudget& budget, const std::string& label = "K");

/// Tab-separated table: suite, check, anchor, PASS/FAIL, detail.
std::string format_table(const std::vector<SuiteReport>& reports);
std::string format_json(const std::vector<SuiteReport>& reports);

}  // namespace wurst
