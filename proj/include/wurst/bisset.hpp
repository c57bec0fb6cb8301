#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wurst/constructions.hpp"

namespace wurst {

/// Bidegrees (i, j) with i <= ch, j <= cv and i + j <= total.
struct BiRange {
  int ch = 0;
  int cv = 0;
  int total = 0;

  bool contains(int i, int j) const { return i >= 0 && j >= 0 && i <= ch && j <= cv && i + j <= total; }
  BiRange flipped() const { return BiRange{cv, ch, total}; }
  friend bool operator==(const BiRange&, const BiRange&) = default;
  static BiRange square(int cap) { return BiRange{cap, cap, 2 * cap}; }
  static BiRange triangle(int total) { return BiRange{total, total, total}; }
};

/// A bisimplicial set truncated to a BiRange. The first index is the horizontal direction.
class BiSimplicialSet {
 public:
  template <class T>
  using Grid = std::vector<std::vector<T>>;  // [i][j]
  using OpTables = std::vector<std::vector<SimplexId>>;  // [operator index][simplex]

  struct Tables {
    BiRange range;
    Grid<std::size_t> count;
    Grid<OpTables> hface, vface;    // d^h_k : B_ij -> B_{i-1,j}, d^v_k : B_ij -> B_{i,j-1}
    Grid<OpTables> hdegen, vdegen;  // s^h_k : B_ij -> B_{i+1,j}, s^v_k : B_ij -> B_{i,j+1}
    Grid<std::vector<std::string>> labels;

    explicit Tables(BiRange r = {});
  };

  BiSimplicialSet();
  explicit BiSimplicialSet(Tables tables);

  const BiRange& range() const { return data_->t.range; }
  bool in_range(int i, int j) const { return range().contains(i, j); }
  std::size_t size(int i, int j) const { return in_range(i, j) ? data_->t.count[i][j] : 0; }
  std::size_t total_size() const { return data_->graded.total(); }

  SimplexId hface(int i, int j, int k, SimplexId x) const { return data_->t.hface[i][j][k][x]; }
  SimplexId vface(int i, int j, int k, SimplexId x) const { return data_->t.vface[i][j][k][x]; }
  SimplexId hdegen(int i, int j, int k, SimplexId x) const { return data_->t.hdegen[i][j][k][x]; }
  SimplexId vdegen(int i, int j, int k, SimplexId x) const { return data_->t.vdegen[i][j][k][x]; }

  /// x . (alpha, beta) for alpha : [a] -> [i], beta : [b] -> [j].
  SimplexId act(int i, int j, SimplexId x, const Mono& alpha, const Mono& beta) const;
  bool is_degenerate(int i, int j, SimplexId x) const;
  std::vector<SimplexId> nondegenerate(int i, int j) const;
  std::string label(int i, int j, SimplexId x) const;

  const Tables& tables() const { return data_->t; }
  const GradedSet& graded() const { return data_->graded; }
  /// Bidegrees in flattened order, sorted by (i + j, i).
  const std::vector<std::pair<int, int>>& degrees() const { return data_->degrees; }
  int degree_index(int i, int j) const { return data_->index[i][j]; }

  friend bool operator==(const BiSimplicialSet& a, const BiSimplicialSet& b);

 private:
  struct Data {
    Tables t;
    GradedSet graded;
    std::vector<std::pair<int, int>> degrees;
    Grid<int> index;
    Grid<std::vector<std::uint8_t>> degenerate;
  };
  std::shared_ptr<const Data> data_;
};

class BiSimplicialMap {
 public:
  using Components = BiSimplicialSet::Grid<std::vector<SimplexId>>;

  BiSimplicialMap() = default;
  BiSimplicialMap(BiSimplicialSet source, BiSimplicialSet target, Components components);
  static BiSimplicialMap trusted(BiSimplicialSet source, BiSimplicialSet target, Components components);
  static BiSimplicialMap identity(const BiSimplicialSet& b);

  const BiSimplicialSet& source() const { return source_; }
  const BiSimplicialSet& target() const { return target_; }
  SimplexId operator()(int i, int j, SimplexId x) const { return comp_[i][j][x]; }
  const Components& components() const { return comp_; }
  bool bijective() const;

 private:
  BiSimplicialSet source_, target_;
  Components comp_;
};

BiSimplicialMap compose(const BiSimplicialMap& g, const BiSimplicialMap& f);

/// Flattened components in the order of degrees().
MapComponents flatten(const BiSimplicialSet& b, const BiSimplicialMap::Components& c);
BiSimplicialMap::Components unflatten(const BiSimplicialSet& b, const MapComponents& c);

std::optional<BiSimplicialMap> is_isomorphic(const BiSimplicialSet& a, const BiSimplicialSet& b,
                                             SearchBudget& budget);
std::optional<BiSimplicialMap> is_isomorphic(const BiSimplicialSet& a, const BiSimplicialSet& b);
std::size_t count_maps(const BiSimplicialSet& a, const BiSimplicialSet& b, SearchBudget& budget);

/// Keyed builder: levels[i][j] lists keys; operator images are computed on keys.
template <class Key>
struct KeyedBiSet {
  BiSimplicialSet set;
  BiSimplicialSet::Grid<std::vector<Key>> keys;
  BiSimplicialSet::Grid<std::map<Key, SimplexId>> index;

  SimplexId at(int i, int j, const Key& k) const {
    auto it = index[i][j].find(k);
    if (it == index[i][j].end())
      throw InputError("keyed bisimplicial set: missing key in bidegree (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
    return it->second;
  }
};

/// Op functions receive (i, j, k, key) and return the image key.
template <class Key, class HF, class VF, class HD, class VD, class LF>
KeyedBiSet<Key> build_bi_keyed(BiRange range, BiSimplicialSet::Grid<std::vector<Key>> levels, HF hf, VF vf,
                               HD hd, VD vd, LF lf) {
  KeyedBiSet<Key> out;
  const auto I = static_cast<std::size_t>(range.ch) + 1, J = static_cast<std::size_t>(range.cv) + 1;
  out.index.assign(I, std::vector<std::map<Key, SimplexId>>(J));
  for (int i = 0; i <= range.ch; ++i)
    for (int j = 0; j <= range.cv; ++j)
      if (range.contains(i, j))
        for (std::size_t s = 0; s < levels[i][j].size(); ++s)
          out.index[i][j].emplace(levels[i][j][s], static_cast<SimplexId>(s));
  BiSimplicialSet::Tables t(range);
  for (int i = 0; i <= range.ch; ++i)
    for (int j = 0; j <= range.cv; ++j) {
      if (!range.contains(i, j)) continue;
      const auto& lv = levels[i][j];
      t.count[i][j] = lv.size();
      auto fill = [&](BiSimplicialSet::OpTables& tab, int nops, int ti, int tj, auto fn) {
        tab.assign(static_cast<std::size_t>(nops), std::vector<SimplexId>(lv.size()));
        for (int k = 0; k < nops; ++k)
          for (std::size_t s = 0; s < lv.size(); ++s) tab[k][s] = out.at(ti, tj, fn(i, j, k, lv[s]));
      };
      if (i >= 1) fill(t.hface[i][j], i + 1, i - 1, j, hf);
      if (j >= 1) fill(t.vface[i][j], j + 1, i, j - 1, vf);
      if (range.contains(i + 1, j)) fill(t.hdegen[i][j], i + 1, i + 1, j, hd);
      if (range.contains(i, j + 1)) fill(t.vdegen[i][j], j + 1, i, j + 1, vd);
      for (const auto& k : lv) t.labels[i][j].push_back(lf(i, j, k));
    }
  out.set = BiSimplicialSet(std::move(t));
  out.keys = std::move(levels);
  return out;
}

/// Exterior product: B_ij = X_i x Y_j (row-major ids).
BiSimplicialSet box(const SimplicialSet& x, const SimplicialSet& y, BiRange range);
/// Cut^n: bidegree (i,j) lists the monotone maps [i+1+j] -> [n].
KeyedBiSet<Mono> cut(int n, BiRange range);
/// Cut^theta : Cut^n -> Cut^m by postcomposition with theta : [n] -> [m].
BiSimplicialMap cut_map(const Mono& theta, int n, int m, BiRange range);
/// dec(K)_ij: maps Delta^i * Delta^j -> K over Delta^1, i.e. (i+1+j)-simplices whose first i+1
/// vertices are base0 and the rest base1, keyed by that simplex. Requires the range's total below K.cap.
KeyedBiSet<SimplexId> dec(const PointedDirected& k, BiRange range, SearchBudget& budget);
KeyedBiSet<SimplexId> dec(const PointedDirected& k, BiRange range);

/// J_{i,j}: Delta^{i+1+j} with each block collapsed to a point. Simplices are keyed by vertex
/// sequences; those inside one block are replaced by the constant sequence at the block's first vertex.
KeyedSet<Mono> directed_join_keyed(int i, int j, int cap);
PointedDirected directed_join(int i, int j, int cap);
/// The same object through the literal pushout presentation.
PointedDirected directed_join_pushout(int i, int j, int cap);
Mono collapse_blocks(const Mono& seq, int i);

SimplicialSet diag(const BiSimplicialSet& b);
BiSimplicialSet flip(const BiSimplicialSet& b);
BiSimplicialSet lrev(const BiSimplicialSet& b);
BiSimplicialSet rrev(const BiSimplicialSet& b);
BiSimplicialSet rev(const BiSimplicialSet& b);

/// (dDelta^i box Delta^j) union (Delta^i box dDelta^j) inside Delta^i box Delta^j.
BiSimplicialSet boundary_bisimplex(int i, int j, BiRange range);
/// The boundary together with its inclusion into box(Delta^i, Delta^j).
std::pair<BiSimplicialSet, BiSimplicialMap> boundary_bisimplex_inclusion(int i, int j, BiRange range);
/// Sub-bisimplicial set of elements satisfying `keep` (must be closed), with its inclusion.
std::pair<BiSimplicialSet, BiSimplicialMap> bi_filter(const BiSimplicialSet& b,
                                                      const std::function<bool(int, int, SimplexId)>& keep);
BiSimplicialSet empty_biset(BiRange range);

/// Restrictions Delta^n box Delta^0 <- Cut^n -> Delta^0 box Delta^n.
BiSimplicialMap cut_restrict_left(int n, BiRange range);
BiSimplicialMap cut_restrict_right(int n, BiRange range);

/// Directed maps J_{i,j} -> K (basepoints preserved).
std::size_t directed_hom_count(int i, int j, const PointedDirected& k, SearchBudget& budget);
/// Both sides of |K_n| = 2 + sum_{i+j=n-1} |Hom_dir(J_{i,j}, K)| for n <= K.cap.
struct PartitionRow {
  int n;
  std::size_t lhs, rhs;
};
std::vector<PartitionRow> partition_formula(const PointedDirected& k, SearchBudget& budget);

}  // namespace wurst
