#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "wurst/sset.hpp"

namespace wurst {

using Integer = boost::multiprecision::cpp_int;
/// Dense integer matrix, row-major; every row has the same length.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Integer& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  bool is_zero() const;
};
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Normalized chains: basis in degree k = nondegenerate k-simplices, in id order.
struct ChainComplex {
  int cap = 0;
  std::vector<std::size_t> dims;
  std::vector<std::vector<SimplexId>> basis;
  /// boundary[k] : degree k -> degree k-1, a dims[k-1] x dims[k] matrix; boundary[0] is 0 x dims[0].
  std::vector<IntMatrix> boundary;
  /// Whether boundary[k-1] * boundary[k] = 0 throughout.
  bool squares_to_zero() const;
};
ChainComplex normalized_chains(const SimplicialSet& x);

struct SmithForm {
  std::vector<Integer> factors;  // nonzero invariant factors, positive, each dividing the next
  std::size_t rank = 0;
};
/// Pivot: smallest nonzero absolute value, ties broken by (row, column).
SmithForm smith_normal_form(IntMatrix m);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
  bool zero() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};
/// H_k of the normalized complex; degrees k >= cap are refused with CapError.
HomologyGroup homology(const ChainComplex& c, int k);
HomologyGroup homology(const SimplicialSet& x, int k);
std::vector<HomologyGroup> homology_table(const ChainComplex& c, int up_to);
/// Alternating sum of dims through `up_to`.
long long euler_characteristic(const ChainComplex& c, int up_to);

/// Evidence only: vanishing reduced homology does not certify weak contractibility.
struct ContractibilityReport {
  bool connected = false;
  int failing_degree = -1;  // first k in [1, up_to] with H_k != 0, or -1
  HomologyGroup witness;
  bool ok() const { return connected && failing_degree < 0; }
};
ContractibilityReport contractibility_evidence(const SimplicialSet& x, int up_to);

/// Path components through the 1-skeleton.
std::size_t path_components(const SimplicialSet& x);

/// The algebraic mapping cone of the induced chain map: cone_k = C_{k-1} + D_k with
/// d(c, d) = (-dc, f(c) + dd).
ChainComplex mapping_cone(const SimplicialMap& f);
struct ConeReport {
  std::vector<HomologyGroup> groups;  // H_k(cone), k = 0..up_to
  bool acyclic() const;
};
/// Requires up_to < cap - 1 on both sides.
ConeReport cone_acyclicity(const SimplicialMap& f, int up_to);

}  // namespace wurst
