#pragma once

// A finite presheaf on a finite "degree" category where every generating operator
// either lowers (faces) or raises (degeneracies) the degree index. Simplicial and
// bisimplicial sets both flatten into this form, which lets one backtracking engine
// serve map enumeration and isomorphism search for both.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "wurst/errors.hpp"

namespace wurst {

using SimplexId = std::uint32_t;
inline constexpr SimplexId kNoSimplex = std::numeric_limits<SimplexId>::max();

struct GradedOp {
  int from = 0;
  int to = 0;
  std::vector<SimplexId> table;
};

struct GradedSet {
  std::vector<std::size_t> count;
  // faces[d]: operators out of degree d into strictly earlier degrees
  std::vector<std::vector<GradedOp>> faces;
  // degens[d]: operators into degree d from strictly earlier degrees
  std::vector<std::vector<GradedOp>> degens;

  int degrees() const { return static_cast<int>(count.size()); }
  std::size_t total() const;
};

/// Per-simplex degeneracy data: for degenerate x, one (operator index, source) pair with
/// x = degens[d][op].table[source].
struct DegeneracyInfo {
  std::vector<std::vector<std::int32_t>> op;
  std::vector<std::vector<SimplexId>> source;

  bool degenerate(int d, SimplexId x) const { return op[d][x] >= 0; }
};

DegeneracyInfo analyze_degeneracies(const GradedSet& g);

/// Both graded sets have the same degree and operator layout.
bool same_shape(const GradedSet& a, const GradedSet& b);

using MapComponents = std::vector<std::vector<SimplexId>>;

struct MapSearchOptions {
  /// Candidate filter; called for every (degree, source simplex, target simplex) decision,
  /// including forced values on degenerate simplices.
  std::function<bool(int, SimplexId, SimplexId)> allow;
  /// Isomorphism search mode: nondegenerate simplices go injectively to nondegenerate ones.
  bool iso_mode = false;
  /// Optional invariant colors; a source simplex may only go to a target of equal color.
  const std::vector<std::vector<std::uint64_t>>* source_colors = nullptr;
  const std::vector<std::vector<std::uint64_t>>* target_colors = nullptr;
};

/// Enumerates every map X -> Y (components commuting with all operators), in a
/// deterministic order. The visitor returns false to stop early.
void for_each_graded_map(const GradedSet& source, const GradedSet& target,
                         const MapSearchOptions& options, SearchBudget& budget,
                         const std::function<bool(const MapComponents&)>& visit);

/// Color refinement over faces and face-incidence counts; invariant under isomorphism.
std::vector<std::vector<std::uint64_t>> refine_colors(const GradedSet& g, int rounds = 3);

/// Returns an isomorphism X -> Y if one exists.
std::optional<MapComponents> find_graded_isomorphism(const GradedSet& source,
                                                     const GradedSet& target,
                                                     SearchBudget& budget);

/// True iff the components commute with every operator.
bool commutes(const GradedSet& source, const GradedSet& target, const MapComponents& f);

}  // namespace wurst
