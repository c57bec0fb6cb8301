#pragma once

#include <string>
#include <vector>

#include "wurst/coherent.hpp"

namespace wurst {

enum class HomVariant { left, right, middle };
HomVariant parse_hom_variant(const std::string& name);
std::string to_string(HomVariant v);

/// Middle mapping space: level n lists maps Delta^n x Delta^1 -> X that are constant at x on
/// Delta^n x {0} and at y on Delta^n x {1}. Requires X.cap >= out_cap + 1.
KeyedSet<MapComponents> hom_middle_keyed(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap,
                                         SearchBudget& budget);
SimplicialSet hom_middle(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap, SearchBudget& budget);
/// Left mapping space: level n lists (n+1)-simplices with vertex 0 at x and d_0 constant at y.
KeyedSet<SimplexId> hom_left_keyed(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap);
/// Right mapping space: (n+1)-simplices with vertex n+1 at y and d_{n+1} constant at x.
KeyedSet<SimplexId> hom_right_keyed(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap);
SimplicialSet hom_left(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap);
SimplicialSet hom_right(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap);
SimplicialSet hom_space(const SimplicialSet& x_set, SimplexId x, SimplexId y, HomVariant v, int out_cap,
                        SearchBudget& budget);

/// The poset map [n] x [1] -> [m] given by f(p, e), as a map Delta^n x Delta^1 -> Delta^m.
SimplicialMap prism_map(int n, int m, const std::function<int(int, int)>& f, int cap);

/// Inclusions hom_left -> hom_middle <- hom_right, induced by (p,0) |-> 0, (p,1) |-> p+1 and
/// (p,0) |-> p, (p,1) |-> n+1.
struct ComparisonMaps {
  SimplicialMap left, right;
};
ComparisonMaps comparison_maps(const SimplicialSet& x_set, SimplexId x, SimplexId y, int out_cap,
                               SearchBudget& budget);

/// Everything needed to compare the mapping spaces of a coherent nerve with Sing of the
/// mapping complex. Built once, shared by the checks below.
struct NerveHoms {
  const EnrichedCategory* c = nullptr;
  int x = 0, y = 0, out_cap = 0;
  KeyedSet<NerveSimplex> nerve;
  KeyedSet<MapComponents> middle;
  KeyedSet<SimplexId> left, right;
  WObject w;
  Sing sing_w, sing_left, sing_right;  // over W, Q_{0,.} and Q_{.,0}
  /// The tautological level-wise maps Sing -> Hom, as simplex ids of the Hom spaces;
  /// kNoSimplex marks an image that is not a simplex of the Hom space.
  std::vector<std::vector<SimplexId>> phi_middle, phi_left, phi_right;
};
NerveHoms nerve_homs(const EnrichedCategory& c, int x, int y, int out_cap, SearchBudget& budget);

struct VariantReport {
  bool bijective = false;
  bool natural = false;
  bool ok() const { return bijective && natural; }
};
struct TautologicalReport {
  VariantReport middle, left, right;
  /// The comparison inclusions match precomposition with W -> Q_{0,.} and W -> Q_{.,0}.
  bool comparison_compatible = false;
  bool ok() const { return middle.ok() && left.ok() && right.ok() && comparison_compatible; }
};
TautologicalReport tautological_iso_check(const NerveHoms& h);
TautologicalReport tautological_iso_check(const EnrichedCategory& c, int x, int y, int out_cap,
                                          SearchBudget& budget);

struct OpSymmetryReport {
  bool right_left_iso = false;     // Hom^R -> (Hom^L)^op induced by tau
  bool middle_iso = false;         // Hom -> Hom^op induced by the reversal of W
  bool square_commutes = false;    // compatibility with the comparison inclusions
  bool middle_is_identity = false; // recorded, not required
  bool ok() const { return right_left_iso && middle_iso && square_commutes; }
};
OpSymmetryReport op_symmetry_check(const NerveHoms& h, SearchBudget& budget);
OpSymmetryReport op_symmetry_check(const EnrichedCategory& c, int x, int y, int out_cap, SearchBudget& budget);

struct HornReport {
  std::size_t horns = 0;
  std::size_t filled = 0;
  bool ok() const { return filled == horns; }
};
/// Every map Lambda^n_k -> X is tested for an extension over Delta^n.
HornReport horn_filler_check(const SimplicialSet& x, int n, int k, SearchBudget& budget);

}  // namespace wurst
