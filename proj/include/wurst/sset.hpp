#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wurst/errors.hpp"
#include "wurst/graded.hpp"
#include "wurst/monotone.hpp"

namespace wurst {

/// A simplicial set truncated at dimension `cap`, storing every simplex (degenerate ones
/// included) of each level 0..cap. Immutable; copies share storage.
class SimplicialSet {
 public:
  /// face[n][i][x] = d_i x for x in X_n (n >= 1); degen[n][i][x] = s_i x for x in X_n (n+1 <= cap).
  struct Tables {
    int cap = 0;
    std::vector<std::size_t> count;
    std::vector<std::vector<std::vector<SimplexId>>> face;
    std::vector<std::vector<std::vector<SimplexId>>> degen;
    std::vector<std::vector<std::string>> labels;  // optional, per level
  };

  SimplicialSet();  // the empty simplicial set with cap 0
  /// Validates table shapes and the simplicial identities; throws InputError on failure.
  explicit SimplicialSet(Tables tables);

  int cap() const { return data_->cap; }
  std::size_t size(int n) const { return data_->graded.count[static_cast<std::size_t>(n)]; }
  std::size_t total_size() const { return data_->graded.total(); }
  bool empty() const { return data_->graded.count[0] == 0; }

  SimplexId face(int n, int i, SimplexId x) const { return data_->graded.faces[n][i].table[x]; }
  /// s_i : X_n -> X_{n+1}
  SimplexId degen(int n, int i, SimplexId x) const {
    return data_->graded.degens[n + 1][i].table[x];
  }
  bool is_degenerate(int n, SimplexId x) const { return data_->degenerate[n][x] != 0; }
  std::vector<SimplexId> nondegenerate(int n) const;
  /// Highest level carrying a nondegenerate simplex (-1 if empty).
  int dimension() const;

  /// x . alpha for x in X_n and alpha : [m] -> [n]; the result lies in X_m.
  SimplexId act(int n, SimplexId x, const Mono& alpha) const;
  std::vector<SimplexId> vertices(int n, SimplexId x) const;
  /// The totally degenerate n-simplex on vertex v.
  SimplexId constant(int n, SimplexId v) const;

  std::string label(int n, SimplexId x) const;
  bool has_labels() const { return !data_->labels.empty(); }

  const GradedSet& graded() const { return data_->graded; }
  Tables tables() const;

  /// Identical tables (not isomorphism).
  friend bool operator==(const SimplicialSet& a, const SimplicialSet& b);

 private:
  struct Data {
    int cap = 0;
    GradedSet graded;
    std::vector<std::vector<std::uint8_t>> degenerate;
    std::vector<std::vector<std::string>> labels;
  };
  std::shared_ptr<const Data> data_;
};

/// Level-wise function commuting with faces and degeneracies.
class SimplicialMap {
 public:
  SimplicialMap() = default;
  /// Validates that the components commute with all operators.
  SimplicialMap(SimplicialSet source, SimplicialSet target, MapComponents components);

  static SimplicialMap identity(const SimplicialSet& x);
  /// No validation; for internal construction of maps known to be simplicial.
  static SimplicialMap trusted(SimplicialSet source, SimplicialSet target, MapComponents components);

  const SimplicialSet& source() const { return source_; }
  const SimplicialSet& target() const { return target_; }
  SimplexId operator()(int n, SimplexId x) const { return comp_[n][x]; }
  const MapComponents& components() const { return comp_; }

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) { return a.comp_ == b.comp_; }

 private:
  SimplicialSet source_, target_;
  MapComponents comp_;
};

/// g o f
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Checks every simplicial identity within the cap; returns a description of the first
/// violation, or nothing.
std::optional<std::string> check_simplicial_identities(const SimplicialSet::Tables& t);

/// All nondegenerate simplices of each level, listed by level.
std::vector<std::size_t> nondegenerate_counts(const SimplicialSet& x);

/// Maps X -> Y found by backtracking over nondegenerate simplices. `allow` may restrict
/// the image of individual simplices.
std::vector<SimplicialMap> enumerate_maps(const SimplicialSet& x, const SimplicialSet& y,
                                          SearchBudget& budget,
                                          const std::function<bool(int, SimplexId, SimplexId)>& allow = {});
/// Streaming form; the visitor returns false to stop.
void for_each_map(const SimplicialSet& x, const SimplicialSet& y, SearchBudget& budget,
                  const std::function<bool(const MapComponents&)>& visit,
                  const std::function<bool(int, SimplexId, SimplexId)>& allow = {});
std::size_t count_maps(const SimplicialSet& x, const SimplicialSet& y, SearchBudget& budget,
                       const std::function<bool(int, SimplexId, SimplexId)>& allow = {});

/// An isomorphism witness X -> Y, if any. Caps must agree.
std::optional<SimplicialMap> is_isomorphic(const SimplicialSet& x, const SimplicialSet& y,
                                           SearchBudget& budget);
std::optional<SimplicialMap> is_isomorphic(const SimplicialSet& x, const SimplicialSet& y);

/// Builds a simplicial set whose simplices are keyed values. Each level lists its keys;
/// face/degeneracy images are computed on keys and looked up.
template <class Key>
struct KeyedSet {
  SimplicialSet set;
  std::vector<std::vector<Key>> keys;
  std::vector<std::map<Key, SimplexId>> index;

  SimplexId find(int n, const Key& k) const {
    auto it = index[static_cast<std::size_t>(n)].find(k);
    if (it == index[static_cast<std::size_t>(n)].end()) return kNoSimplex;
    return it->second;
  }
  SimplexId at(int n, const Key& k) const {
    const SimplexId id = find(n, k);
    if (id == kNoSimplex) throw InputError("keyed simplicial set: key not present at level " + std::to_string(n));
    return id;
  }
};

template <class Key, class FaceFn, class DegenFn, class LabelFn>
KeyedSet<Key> build_keyed(int cap, std::vector<std::vector<Key>> levels, FaceFn face_fn,
                          DegenFn degen_fn, LabelFn label_fn) {
  KeyedSet<Key> out;
  out.index.resize(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    auto& lv = levels[static_cast<std::size_t>(n)];
    for (std::size_t s = 0; s < lv.size(); ++s)
      out.index[static_cast<std::size_t>(n)].emplace(lv[s], static_cast<SimplexId>(s));
  }
  SimplicialSet::Tables t;
  t.cap = cap;
  t.count.resize(static_cast<std::size_t>(cap) + 1);
  t.face.resize(static_cast<std::size_t>(cap) + 1);
  t.degen.resize(static_cast<std::size_t>(cap) + 1);
  t.labels.resize(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    const auto& lv = levels[static_cast<std::size_t>(n)];
    t.count[n] = lv.size();
    if (n >= 1) {
      t.face[n].assign(static_cast<std::size_t>(n) + 1, std::vector<SimplexId>(lv.size()));
      for (int i = 0; i <= n; ++i)
        for (std::size_t s = 0; s < lv.size(); ++s)
          t.face[n][i][s] = out.at(n - 1, face_fn(n, i, lv[s]));
    }
    if (n + 1 <= cap) {
      t.degen[n].assign(static_cast<std::size_t>(n) + 1, std::vector<SimplexId>(lv.size()));
      for (int i = 0; i <= n; ++i)
        for (std::size_t s = 0; s < lv.size(); ++s)
          t.degen[n][i][s] = out.at(n + 1, degen_fn(n, i, lv[s]));
    }
    t.labels[n].reserve(lv.size());
    for (const auto& k : lv) t.labels[n].push_back(label_fn(n, k));
  }
  out.set = SimplicialSet(std::move(t));
  out.keys = std::move(levels);
  return out;
}

/// Key helpers for simplices given as vertex sequences (chains, monotone maps).
Mono delete_entry(const Mono& seq, int i);
Mono repeat_entry(const Mono& seq, int i);
std::string sequence_label(const Mono& seq);

}  // namespace wurst
