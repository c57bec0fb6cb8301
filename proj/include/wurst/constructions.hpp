#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "wurst/sset.hpp"

namespace wurst {

/// Delta^n truncated at `cap`; level k lists the monotone maps [k] -> [n] lexicographically.
SimplicialSet standard_simplex(int n, int cap);
/// Sub-simplicial set of Delta^n of simplices missing some vertex.
SimplicialSet boundary(int n, int cap);
/// Sub-simplicial set of Delta^n of simplices missing some vertex other than k.
SimplicialSet horn(int n, int k, int cap);
SimplicialSet empty_set(int cap);
/// Inclusions dDelta^n -> Delta^n and Lambda^n_k -> Delta^n.
SimplicialMap boundary_inclusion(int n, int cap);
SimplicialMap horn_inclusion(int n, int k, int cap);
/// Nerve of the poset on {0..size-1} with order `leq`; simplices are weakly increasing chains.
KeyedSet<Mono> nerve_of_poset(int size, const std::function<bool(int, int)>& leq, int cap);

/// The map Delta^n -> X classifying the n-simplex x.
SimplicialMap simplex_map(const SimplicialSet& x, int n, SimplexId s);

/// Sub-simplicial set generated by the given (level, simplex) pairs, with its inclusion.
struct Subobject {
  SimplicialSet set;
  SimplicialMap inclusion;
};
Subobject generated_subobject(const SimplicialSet& x, const std::vector<std::pair<int, SimplexId>>& generators);
/// The image of a map, as a subobject of its target.
Subobject image(const SimplicialMap& f);

struct Coproduct {
  SimplicialSet set;
  SimplicialMap inl, inr;
};
Coproduct disjoint_union(const SimplicialSet& x, const SimplicialSet& y);

/// Level n of X x Y lists pairs row-major: id = a * |Y_n| + b.
SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y);
inline SimplexId product_id(const SimplicialSet& y, int n, SimplexId a, SimplexId b) {
  return static_cast<SimplexId>(a * y.size(n) + b);
}
SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g, const SimplicialSet& source,
                          const SimplicialSet& target);
SimplicialMap projection_first(const SimplicialSet& prod, const SimplicialSet& x, const SimplicialSet& y);
SimplicialMap projection_second(const SimplicialSet& prod, const SimplicialSet& x, const SimplicialSet& y);

/// Join X * Y with (X*Y)_n = X_n + Y_n + sum_{i+j=n-1} X_i x Y_j, laid out in that order.
class Join {
 public:
  Join(SimplicialSet x, SimplicialSet y);

  struct Part {
    enum class Kind { left, right, pair } kind;
    int i = -1;  // degree of the left entry (pair), or level (left/right)
    SimplexId x = kNoSimplex;
    SimplexId y = kNoSimplex;
  };

  const SimplicialSet& set() const { return set_; }
  const SimplicialSet& left_factor() const { return x_; }
  const SimplicialSet& right_factor() const { return y_; }
  SimplexId left(int /*n*/, SimplexId x) const { return x; }
  SimplexId right(int n, SimplexId y) const { return static_cast<SimplexId>(x_.size(n) + y); }
  /// Pair (x in X_i, y in Y_j) as an (i+j+1)-simplex.
  SimplexId pair(int i, int j, SimplexId x, SimplexId y) const;
  Part decode(int n, SimplexId s) const;
  SimplicialMap inl() const;
  SimplicialMap inr() const;

 private:
  SimplicialSet x_, y_, set_;
  std::vector<std::vector<std::size_t>> offset_;  // offset_[n][i] for the X_i x Y_{n-1-i} block
};

/// Quotient by the smallest simplicial equivalence relation containing `identify`
/// (pairs at a given level). Classes are numbered by their least member.
struct Quotient {
  SimplicialSet set;
  SimplicialMap projection;
  std::vector<std::vector<SimplexId>> representative;  // per level, per class: least member
};
Quotient quotient(const SimplicialSet& x,
                  const std::vector<std::vector<std::pair<SimplexId, SimplexId>>>& identify);
/// Factors f : X -> T through a quotient of X; throws InputError if f is not constant on classes.
SimplicialMap descend(const Quotient& q, const SimplicialMap& f);

struct Pushout {
  SimplicialSet set;
  SimplicialMap inl, inr;
  Coproduct sum;
  Quotient quotient;
};
/// Pushout of X <-f- A -g-> Y.
Pushout pushout(const SimplicialMap& f, const SimplicialMap& g);
/// The map out of a pushout determined by compatible maps from both legs.
SimplicialMap pushout_map(const Pushout& p, const SimplicialMap& fx, const SimplicialMap& fy);

/// Unique map to Delta^0 (of the same cap).
SimplicialMap terminal_map(const SimplicialSet& x);
/// Unique map from the empty simplicial set.
SimplicialMap initial_map(const SimplicialSet& x);

/// Same simplices with d_i, s_i replaced by d_{n-i}, s_{n-i}.
SimplicialSet opposite(const SimplicialSet& x);
SimplicialMap opposite(const SimplicialMap& f, const SimplicialSet& source_op, const SimplicialSet& target_op);

/// A simplicial set with two distinguished distinct vertices.
struct PointedDirected {
  SimplicialSet carrier;
  SimplexId base0 = 0;
  SimplexId base1 = 1;
};

/// Exactly two vertices, every vertex sequence is a block of base0 followed by a block of
/// base1, and the only simplices over a single endpoint are the degenerate basepoints.
bool is_directed(const PointedDirected& k);
/// Number of leading base0 vertices of a simplex of a directed object.
int zeros_of(const PointedDirected& k, int n, SimplexId s);

/// S(K) = K x Delta^1 glued along K x dDelta^1 to dDelta^1.
PointedDirected suspension(const SimplicialSet& k);
/// (Delta^0 * K) glued along K to Delta^0; base0 is the cone point.
PointedDirected suspension_left(const SimplicialSet& k);
/// (K * Delta^0) glued along K to Delta^0; base1 is the cone point.
PointedDirected suspension_right(const SimplicialSet& k);

/// The comparison maps S^L(K) <- S(K) -> S^R(K).
struct SuspensionComparison {
  PointedDirected s, left, right;
  SimplicialMap to_left, to_right;
};
SuspensionComparison suspension_comparison(const SimplicialSet& k);

/// Delta^1 pointed by its endpoints; dDelta^1 likewise.
PointedDirected directed_interval(int cap);
PointedDirected directed_boundary_interval(int cap);

}  // namespace wurst
