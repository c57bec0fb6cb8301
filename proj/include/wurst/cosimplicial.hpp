#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wurst/bisset.hpp"

namespace wurst {

/// A cosimplicial simplicial set truncated at `cocap`; every term has the same cap.
class CosimplicialSSet {
 public:
  CosimplicialSSet() = default;
  /// coface[n][k] : term[n-1] -> term[n] (n >= 1), codegen[n][k] : term[n+1] -> term[n].
  CosimplicialSSet(std::vector<SimplicialSet> terms, std::vector<std::vector<SimplicialMap>> coface,
                   std::vector<std::vector<SimplicialMap>> codegen);

  int cocap() const { return static_cast<int>(term_.size()) - 1; }
  int cap() const { return term_.empty() ? -1 : term_[0].cap(); }
  const SimplicialSet& term(int n) const { return term_.at(static_cast<std::size_t>(n)); }
  const SimplicialMap& coface(int n, int k) const { return coface_[n][k]; }
  const SimplicialMap& codegen(int n, int k) const { return codegen_[n][k]; }
  /// X(alpha) : term[m] -> term[n] for alpha : [m] -> [n].
  SimplicialMap apply(const Mono& alpha, int n) const;
  /// Components of X(alpha) only; cheaper than apply for large terms.
  SimplexId apply_at(const Mono& alpha, int n, int level, SimplexId x) const;

  /// Functoriality on all composites of a monotone map with a generator; returns the first failure.
  std::optional<std::string> check_identities() const;
  /// Truncation to a smaller cocap.
  CosimplicialSSet truncate(int cocap) const;
  /// Precomposition with the reversal automorphism of the simplex category.
  CosimplicialSSet reversed() const;

 private:
  std::vector<SimplicialSet> term_;
  std::vector<std::vector<SimplicialMap>> coface_, codegen_;
};

/// A bicosimplicial simplicial set over the bidegrees of a BiRange.
class BiCosimplicialSSet {
 public:
  template <class T>
  using Grid = std::vector<std::vector<T>>;

  BiCosimplicialSSet() = default;
  /// hcoface[i][j][k] : term[i-1][j] -> term[i][j]; hcodegen[i][j][k] : term[i+1][j] -> term[i][j]; same vertically.
  BiCosimplicialSSet(BiRange range, Grid<SimplicialSet> terms, Grid<std::vector<SimplicialMap>> hcoface,
                     Grid<std::vector<SimplicialMap>> vcoface, Grid<std::vector<SimplicialMap>> hcodegen,
                     Grid<std::vector<SimplicialMap>> vcodegen);

  const BiRange& range() const { return range_; }
  int cap() const { return term_[0][0].cap(); }
  const SimplicialSet& term(int i, int j) const { return term_[i][j]; }
  const SimplicialMap& hcoface(int i, int j, int k) const { return hcoface_[i][j][k]; }
  const SimplicialMap& vcoface(int i, int j, int k) const { return vcoface_[i][j][k]; }
  const SimplicialMap& hcodegen(int i, int j, int k) const { return hcodegen_[i][j][k]; }
  const SimplicialMap& vcodegen(int i, int j, int k) const { return vcodegen_[i][j][k]; }

  /// X(alpha, beta) : term[a][b] -> term[i][j] for alpha : [a] -> [i], beta : [b] -> [j].
  SimplicialMap apply(const Mono& alpha, int i, const Mono& beta, int j) const;
  SimplexId apply_at(const Mono& alpha, int i, const Mono& beta, int j, int level, SimplexId x) const;

  std::optional<std::string> check_identities() const;
  /// The cosimplicial object n |-> term[n][0] (horizontal) or term[0][n] (vertical).
  CosimplicialSSet restrict_horizontal() const;
  CosimplicialSSet restrict_vertical() const;
  /// Swap the two directions.
  BiCosimplicialSSet flipped() const;
  /// Precompose both directions with reversal.
  BiCosimplicialSSet reversed() const;

 private:
  BiRange range_;
  Grid<SimplicialSet> term_;
  Grid<std::vector<SimplicialMap>> hcoface_, vcoface_, hcodegen_, vcodegen_;
};

/// Builds a cosimplicial object from terms and the action of arbitrary monotone maps.
CosimplicialSSet make_cosimplicial(std::vector<SimplicialSet> terms,
                                   const std::function<SimplicialMap(const Mono&, int, int)>& act);
BiCosimplicialSSet make_bicosimplicial(
    BiRange range, const std::function<SimplicialSet(int, int)>& term,
    const std::function<SimplicialMap(const Mono&, int, const Mono&, int, const SimplicialSet&, const SimplicialSet&)>& act);

/// n |-> Delta^n.
CosimplicialSSet delta_cosimplicial(int cocap, int cap);
/// The map Delta^m -> Delta^n induced by alpha (postcomposition on sequences).
SimplicialMap delta_map(const Mono& alpha, int m, int n, int cap);
/// (i, j) |-> Delta^i * Delta^j = Delta^{i+1+j}, the plain join.
BiCosimplicialSSet join_bicosimplicial(BiRange range, int cap);
/// (i, j) |-> J_{i,j}, the directed join with both blocks collapsed.
BiCosimplicialSSet directed_join_bicosimplicial(BiRange range, int cap);
/// (i, j) |-> Delta^i x Delta^j.
BiCosimplicialSSet product_bicosimplicial(BiRange range, int cap);

/// Levelwise maps between cosimplicial objects.
struct CosimplicialTransformation {
  CosimplicialSSet source, target;
  std::vector<SimplicialMap> component;
  /// Naturality against every coface and codegeneracy.
  bool natural() const;
};

}  // namespace wurst
