#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wurst/cosimplicial.hpp"

namespace wurst {

/// A coend |S|_X together with the bookkeeping needed to evaluate induced maps.
/// Elements at level k are triples (degree, s, x) with s a simplex of S in that degree and
/// x a k-simplex of the matching term; they are numbered lexicographically.
struct Realization {
  SimplicialSet set;
  std::vector<std::pair<int, int>> degrees;         // simplicial: (n, 0); bisimplicial: (i, j)
  std::vector<std::size_t> source_size;              // |S| in each degree
  std::vector<std::vector<std::size_t>> term_size;   // [level][degree]
  std::vector<std::vector<std::size_t>> offset;      // [level][degree]
  std::vector<std::vector<SimplexId>> class_of;      // [level][element]
  std::vector<std::vector<std::size_t>> representative;  // [level][class] -> element

  struct Element {
    int degree;
    SimplexId s;
    SimplexId x;
  };
  std::size_t element(int level, int degree, SimplexId s, SimplexId x) const {
    return offset[level][degree] + s * term_size[level][degree] + x;
  }
  Element decode(int level, std::size_t e) const;
  SimplexId cls(int level, int degree, SimplexId s, SimplexId x) const {
    return class_of[level][element(level, degree, s, x)];
  }
};

/// |S|_X, using the degrees n <= min(S.cap, X.cocap). Throws CapError if S has a
/// nondegenerate simplex beyond X.cocap.
Realization realize(const SimplicialSet& s, const CosimplicialSSet& x);
/// |B|_X over the bidegrees of B's range (which must lie inside X's range).
Realization realize(const BiSimplicialSet& b, const BiCosimplicialSSet& x);

/// |f|_X : |S|_X -> |S'|_X.
SimplicialMap realize_map(const Realization& from, const Realization& to, const SimplicialMap& f);
SimplicialMap realize_map(const Realization& from, const Realization& to, const BiSimplicialMap& f);

/// Sing_X(T): level n lists the maps X.term(n) -> T in enumeration order, optionally
/// filtered by a per-level constraint.
struct Sing {
  KeyedSet<MapComponents> keyed;
  const SimplicialSet& set() const { return keyed.set; }
};
using SingConstraint = std::function<bool(int n, int level, SimplexId x, SimplexId target)>;
Sing sing(const CosimplicialSSet& x, const SimplicialSet& t, int out_cap, SearchBudget& budget,
          const SingConstraint& constraint = {});
Sing sing(const CosimplicialSSet& x, const SimplicialSet& t, int out_cap);

/// Sing_X(T) for a bicosimplicial X: bidegree (i, j) lists maps X.term(i, j) -> T.
KeyedBiSet<MapComponents> sing(const BiCosimplicialSSet& x, const SimplicialSet& t, BiRange range,
                               SearchBudget& budget);

/// Unit S -> Sing_X(|S|_X): s |-> (x |-> [(s, x)]).
SimplicialMap sing_unit(const SimplicialSet& s, const Realization& r, const Sing& sg);
BiSimplicialMap sing_unit(const BiSimplicialSet& b, const Realization& r, const KeyedBiSet<MapComponents>& sg);

/// The colimit of |B|_X in two-pointed simplicial sets, for X whose terms carry base vertices 0 and 1:
/// the coend with all copies of each base vertex glued. Throws InputError if B is empty.
Realization realize_directed(const BiSimplicialSet& b, const BiCosimplicialSSet& x);
/// The realization pointed by the images of vertices 0 and 1 of the first term.
PointedDirected pointed(const Realization& r);
/// Unit B -> dec(|B|_J): b in B_ij goes to the image of the top simplex of J_ij under b.
BiSimplicialMap dec_unit(const BiSimplicialSet& b, const BiCosimplicialSSet& x, const Realization& r,
                         const KeyedBiSet<SimplexId>& d);

/// eta_* : |S|_X -> |S|_Y.
SimplicialMap apply_transformation(const CosimplicialTransformation& eta, const SimplicialSet& s,
                                   const Realization& over_x, const Realization& over_y);
/// eta^* : Sing_Y(T) -> Sing_X(T).
SimplicialMap apply_transformation(const CosimplicialTransformation& eta, const Sing& over_y, const Sing& over_x);

/// Canonical map |dDelta^n|_X -> X_n is injective at every level (and well defined).
struct ReedyReport {
  bool well_defined = true;
  bool injective = true;
  std::vector<std::size_t> boundary_size;  // per level, |dDelta^n|_X
  bool ok() const { return well_defined && injective; }
};
ReedyReport reedy_boundary_check(const CosimplicialSSet& x, int n);
ReedyReport reedy_boundary_check(const BiCosimplicialSSet& x, int i, int j);

/// A codimension-one face of a (bi)simplex: direction 0 = horizontal (or the only one), 1 = vertical.
struct FaceSpec {
  int direction = 0;
  int index = 0;
};
/// |K n K'|_X -> |K|_X x_{|L|_X} |K'|_X is bijective at every level. L is Delta^n (simplicial,
/// j ignored) or Delta^i box Delta^j.
bool pullback_criterion_check(const CosimplicialSSet& x, int n, FaceSpec k, FaceSpec kp);
bool pullback_criterion_check(const BiCosimplicialSSet& x, int i, int j, FaceSpec k, FaceSpec kp);

}  // namespace wurst
