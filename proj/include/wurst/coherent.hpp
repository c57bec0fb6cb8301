#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wurst/realize.hpp"

namespace wurst {

/// A subset of [i] * [j] = [i+1+j] as a bitmask; bit p is element p, the left block is 0..i.
using Subset = std::uint32_t;
/// A weakly increasing chain S_0 <= ... <= S_k of subsets.
using Chain = std::vector<Subset>;

/// S meets both [i] and [j].
bool admissible(Subset s, int i, int j);
/// Canonical representative of the class of an admissible chain: every entry is intersected
/// with [max(S_0 n [i]), min(S_0 n [j])].
Chain canonical_chain(const Chain& c, int i, int j);
/// Elementwise image under phi * psi : [a] * [b] -> [i] * [j].
Subset join_image(Subset s, const Mono& phi, int i, const Mono& psi);
std::string subset_label(Subset s);

/// Q_{i,j}: canonical chains of admissible subsets, faces drop entries, degeneracies repeat them.
KeyedSet<Chain> q_keyed(int i, int j, int cap);
SimplicialSet q_space(int i, int j, int cap);
/// (i, j) |-> Q_{i,j}, structure maps by direct image.
BiCosimplicialSSet q_bicosimplicial(BiRange range, int cap);
/// n |-> Q_{n,0} and n |-> Q_{0,n}.
CosimplicialSSet q_first(int cocap, int cap);
CosimplicialSSet q_second(int cocap, int cap);

/// The mapping complex C[Delta^n](a, b): chains of subsets of [a, b] containing a and b.
KeyedSet<Chain> coherent_cube_keyed(int a, int b, int cap);
SimplicialSet coherent_cube(int n, int a, int b, int cap);
/// Composition by union C(b, c) x C(a, b) -> C(a, c), on the row-major product.
SimplicialMap cube_composition(int a, int b, int c, int cap);
/// C[theta](a, b) : C[Delta^m](a, b) -> C[Delta^n](theta a, theta b) by direct image; requires
/// theta(a) < theta(b).
SimplicialMap cube_map(const Mono& theta, int a, int b, int cap);

/// sigma : Q_{i,j} -> Delta^i * Delta^j = Delta^{i+1+j}, S |-> max(S n [i]).
SimplicialMap sigma_q(int i, int j, int cap);
/// Vertex-level check that related chains have the same image (on the raw, uncanonicalized
/// chains of length one).
bool sigma_q_well_defined(int i, int j);
/// tau : Q_{i,j} -> Q_{j,i} induced by p |-> i+1+j-p on [i] * [j].
SimplicialMap tau(int i, int j, int cap);

/// W_n = |Cut^n|_Q with the realizations kept for evaluating induced maps.
struct WObject {
  BiRange range;
  BiCosimplicialSSet q;
  std::vector<std::vector<KeyedSet<Chain>>> qkeyed;  // [i][j] inside the range
  std::vector<KeyedBiSet<Mono>> cuts;
  std::vector<Realization> real;
  CosimplicialSSet w;
};
/// W truncated at cocap, with simplicial cap `cap`; Q is truncated to total degree cocap.
WObject w_object(int cocap, int cap);
/// sigma : W -> Delta, [(c, q)] |-> c o sigma_q(q).
CosimplicialTransformation sigma_w(const WObject& w);
/// The squeeze W -> Q_{.,0}: [(c, q)] |-> image of q under c restricted to the left block.
/// Through it sigma_w factors as W -> Q_{.,0} -> Delta.
CosimplicialTransformation w_to_q_first(const WObject& w);
/// W -> Q_{0,.}: [(c, q)] |-> image of q under c restricted to the right block.
CosimplicialTransformation w_to_q_second(const WObject& w);
/// sigma on Q_{.,0}, i.e. sigma_q(n, 0) composed with the inclusion of Delta^n.
CosimplicialTransformation sigma_q_first(int cocap, int cap);
/// The isomorphism W -> W^rev, [(c, q)] |-> [(rev c rev, tau q)].
CosimplicialTransformation w_reversal(const WObject& w);

/// A small category enriched in truncated simplicial sets.
struct EnrichedCategory {
  int objects = 0;
  std::vector<std::vector<SimplicialSet>> map;              // map[x][y]
  std::vector<std::vector<std::vector<SimplicialMap>>> comp;  // comp[x][y][z] : map[y][z] x map[x][y] -> map[x][z]
  std::vector<SimplexId> identity;                             // vertex of map[x][x]

  int cap() const { return map[0][0].cap(); }
  SimplexId compose(int x, int y, int z, int level, SimplexId g, SimplexId f) const {
    return comp[x][y][z](level, product_id(map[x][y], level, g, f));
  }
  /// Associativity and unit laws at every level; returns the first failure.
  std::optional<std::string> check_laws() const;
};
/// Validates the laws; throws InputError on failure.
EnrichedCategory make_enriched(int objects, std::vector<std::vector<SimplicialSet>> map,
                               std::vector<std::vector<std::vector<SimplicialMap>>> comp,
                               std::vector<SimplexId> identity);
/// The directed two-object category with C(0,1) = K, C(0,0) = C(1,1) = Delta^0, C(1,0) empty.
EnrichedCategory free_directed(const SimplicialSet& k);
/// C[Delta^n].
EnrichedCategory coherent_simplex(int n, int cap);

/// C(K)(0, 1) for a directed K, as |dec K|_Q.
SimplicialSet frak_c_directed(const PointedDirected& k, int cap);

/// An n-simplex of the coherent nerve: objects x_0..x_n and the component C[Delta^n](a, b) ->
/// C(x_a, x_b) for each a < b, listed in lexicographic order of (a, b).
struct NerveSimplex {
  std::vector<int> objects;
  std::vector<MapComponents> components;
  friend auto operator<=>(const NerveSimplex&, const NerveSimplex&) = default;
};
KeyedSet<NerveSimplex> coherent_nerve_keyed(const EnrichedCategory& c, int out_cap, SearchBudget& budget);
SimplicialSet coherent_nerve(const EnrichedCategory& c, int out_cap, SearchBudget& budget);

/// The cone N * Delta^0 -> N onto the full subset descends to Q_{i,j} * Delta^0 -> Q_{i,j}
/// restricting to the identity on Q_{i,j}.
bool nullhomotopy_check(int i, int j, int cap);

/// Face-intersection preimages for the Reedy argument on Q: a chain S of admissible subsets of
/// [i] * [j] (uncanonicalized) whose class lies in the image of both given codimension-one faces
/// of the bisimplex, versus the case lists of the cofibrancy proof.
struct QcofReport {
  std::size_t chains = 0;        // chains examined
  std::size_t in_preimage = 0;   // computed preimage size
  std::size_t mismatches = 0;    // chains where the case list disagrees
  bool ok() const { return mismatches == 0; }
};
QcofReport qcof_case_check(int i, int j, FaceSpec k, FaceSpec kp, int chain_length);

}  // namespace wurst
