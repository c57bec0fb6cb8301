#include "wurst/bisset.hpp"

#include <algorithm>

namespace wurst {

BiSimplicialSet::Tables::Tables(BiRange r) : range(r) {
  const auto I = static_cast<std::size_t>(r.ch) + 1, J = static_cast<std::size_t>(r.cv) + 1;
  count.assign(I, std::vector<std::size_t>(J, 0));
  hface.assign(I, std::vector<OpTables>(J));
  vface = hface;
  hdegen = hface;
  vdegen = hface;
  labels.assign(I, std::vector<std::vector<std::string>>(J));
}

namespace {

void check_op(const BiSimplicialSet::OpTables& tab, std::size_t nops, std::size_t src, std::size_t dst,
              const char* what) {
  if (tab.size() != nops) throw InputError(std::string("bisimplicial set: wrong number of ") + what);
  for (const auto& row : tab) {
    if (row.size() != src) throw InputError(std::string("bisimplicial set: bad table size for ") + what);
    for (auto y : row)
      if (y >= dst) throw InputError(std::string("bisimplicial set: value out of range in ") + what);
  }
}

// The row (fixed j) or column (fixed i) as a simplicial set's tables.
SimplicialSet::Tables line(const BiSimplicialSet::Tables& t, bool horizontal, int fixed) {
  const auto& r = t.range;
  int cap = -1;
  while (horizontal ? r.contains(cap + 1, fixed) : r.contains(fixed, cap + 1)) ++cap;
  SimplicialSet::Tables s;
  s.cap = cap;
  for (int n = 0; n <= cap; ++n) {
    const int i = horizontal ? n : fixed, j = horizontal ? fixed : n;
    s.count.push_back(t.count[i][j]);
    s.face.push_back(horizontal ? t.hface[i][j] : t.vface[i][j]);
    s.degen.push_back(horizontal ? t.hdegen[i][j] : t.vdegen[i][j]);
  }
  return s;
}

void validate(const BiSimplicialSet::Tables& t) {
  const auto& r = t.range;
  if (r.ch < 0 || r.cv < 0 || r.total < 0) throw InputError("bisimplicial set: negative range");
  for (int i = 0; i <= r.ch; ++i)
    for (int j = 0; j <= r.cv; ++j) {
      if (!r.contains(i, j)) continue;
      const auto c = t.count[i][j];
      check_op(t.hface[i][j], i >= 1 ? i + 1 : 0, c, i >= 1 ? t.count[i - 1][j] : 0, "horizontal faces");
      check_op(t.vface[i][j], j >= 1 ? j + 1 : 0, c, j >= 1 ? t.count[i][j - 1] : 0, "vertical faces");
      check_op(t.hdegen[i][j], r.contains(i + 1, j) ? i + 1 : 0, c, r.contains(i + 1, j) ? t.count[i + 1][j] : 0,
               "horizontal degeneracies");
      check_op(t.vdegen[i][j], r.contains(i, j + 1) ? j + 1 : 0, c, r.contains(i, j + 1) ? t.count[i][j + 1] : 0,
               "vertical degeneracies");
    }
  for (int j = 0; j <= r.cv && j <= r.total; ++j)
    if (auto err = check_simplicial_identities(line(t, true, j)))
      throw InputError("bisimplicial set: horizontal " + *err);
  for (int i = 0; i <= r.ch && i <= r.total; ++i)
    if (auto err = check_simplicial_identities(line(t, false, i)))
      throw InputError("bisimplicial set: vertical " + *err);
  for (int i = 0; i <= r.ch; ++i)
    for (int j = 0; j <= r.cv; ++j) {
      if (!r.contains(i, j)) continue;
      for (SimplexId x = 0; x < t.count[i][j]; ++x) {
        for (int k = 0; k <= i && i >= 1; ++k)
          for (int l = 0; l <= j && j >= 1; ++l)
            if (t.hface[i][j - 1][k][t.vface[i][j][l][x]] != t.vface[i - 1][j][l][t.hface[i][j][k][x]])
              throw InputError("bisimplicial set: horizontal and vertical faces do not commute");
        if (r.contains(i, j + 1))
          for (int k = 0; k <= i && i >= 1; ++k)
            for (int l = 0; l <= j; ++l)
              if (t.hface[i][j + 1][k][t.vdegen[i][j][l][x]] != t.vdegen[i - 1][j][l][t.hface[i][j][k][x]])
                throw InputError("bisimplicial set: horizontal faces and vertical degeneracies do not commute");
        if (r.contains(i + 1, j))
          for (int k = 0; k <= i; ++k)
            for (int l = 0; l <= j && j >= 1; ++l)
              if (t.vface[i + 1][j][l][t.hdegen[i][j][k][x]] != t.hdegen[i][j - 1][k][t.vface[i][j][l][x]])
                throw InputError("bisimplicial set: vertical faces and horizontal degeneracies do not commute");
        if (r.contains(i + 1, j + 1))
          for (int k = 0; k <= i; ++k)
            for (int l = 0; l <= j; ++l)
              if (t.hdegen[i][j + 1][k][t.vdegen[i][j][l][x]] != t.vdegen[i + 1][j][l][t.hdegen[i][j][k][x]])
                throw InputError("bisimplicial set: degeneracies do not commute");
      }
    }
}

}  // namespace

BiSimplicialSet::BiSimplicialSet() : BiSimplicialSet(Tables(BiRange{})) {}

BiSimplicialSet::BiSimplicialSet(Tables t) {
  validate(t);
  auto d = std::make_shared<Data>();
  const auto& r = t.range;
  for (int s = 0; s <= r.total; ++s)
    for (int i = 0; i <= s; ++i)
      if (r.contains(i, s - i)) d->degrees.emplace_back(i, s - i);
  d->index.assign(static_cast<std::size_t>(r.ch) + 1, std::vector<int>(static_cast<std::size_t>(r.cv) + 1, -1));
  for (std::size_t q = 0; q < d->degrees.size(); ++q) d->index[d->degrees[q].first][d->degrees[q].second] = static_cast<int>(q);
  auto& g = d->graded;
  const auto nd = d->degrees.size();
  g.count.resize(nd);
  g.faces.resize(nd);
  g.degens.resize(nd);
  for (std::size_t q = 0; q < nd; ++q) {
    const auto [i, j] = d->degrees[q];
    g.count[q] = t.count[i][j];
    for (const auto& tab : t.hface[i][j]) g.faces[q].push_back(GradedOp{static_cast<int>(q), d->index[i - 1][j], tab});
    for (const auto& tab : t.vface[i][j]) g.faces[q].push_back(GradedOp{static_cast<int>(q), d->index[i][j - 1], tab});
    if (i >= 1)
      for (const auto& tab : t.hdegen[i - 1][j]) g.degens[q].push_back(GradedOp{d->index[i - 1][j], static_cast<int>(q), tab});
    if (j >= 1)
      for (const auto& tab : t.vdegen[i][j - 1]) g.degens[q].push_back(GradedOp{d->index[i][j - 1], static_cast<int>(q), tab});
  }
  d->degenerate.assign(static_cast<std::size_t>(r.ch) + 1, std::vector<std::vector<std::uint8_t>>(static_cast<std::size_t>(r.cv) + 1));
  for (std::size_t q = 0; q < nd; ++q) {
    const auto [i, j] = d->degrees[q];
    d->degenerate[i][j].assign(t.count[i][j], 0);
    for (const auto& op : g.degens[q])
      for (auto y : op.table) d->degenerate[i][j][y] = 1;
  }
  d->t = std::move(t);
  data_ = std::move(d);
}

SimplexId BiSimplicialSet::act(int i, int j, SimplexId x, const Mono& alpha, const Mono& beta) const {
  const auto ha = factor(alpha, i), vb = factor(beta, j);
  int a = i, b = j;
  // faces first in both directions, then degeneracies, so intermediate bidegrees stay in range
  for (auto it = ha.rbegin(); it != ha.rend(); ++it)
    if (it->kind == DeltaGenerator::Kind::coface) x = hface(a--, b, it->index, x);
  for (auto it = vb.rbegin(); it != vb.rend(); ++it)
    if (it->kind == DeltaGenerator::Kind::coface) x = vface(a, b--, it->index, x);
  for (auto it = ha.rbegin(); it != ha.rend(); ++it)
    if (it->kind == DeltaGenerator::Kind::codegeneracy) {
      if (!in_range(a + 1, b)) throw CapError("bisimplicial action leaves the range");
      x = hdegen(a++, b, it->index, x);
    }
  for (auto it = vb.rbegin(); it != vb.rend(); ++it)
    if (it->kind == DeltaGenerator::Kind::codegeneracy) {
      if (!in_range(a, b + 1)) throw CapError("bisimplicial action leaves the range");
      x = vdegen(a, b++, it->index, x);
    }
  return x;
}

bool BiSimplicialSet::is_degenerate(int i, int j, SimplexId x) const { return data_->degenerate[i][j][x] != 0; }

std::vector<SimplexId> BiSimplicialSet::nondegenerate(int i, int j) const {
  std::vector<SimplexId> out;
  for (SimplexId x = 0; x < size(i, j); ++x)
    if (!is_degenerate(i, j, x)) out.push_back(x);
  return out;
}

std::string BiSimplicialSet::label(int i, int j, SimplexId x) const {
  const auto& l = data_->t.labels[i][j];
  if (x < l.size() && !l[x].empty()) return l[x];
  return std::to_string(i) + "," + std::to_string(j) + ":" + std::to_string(x);
}

bool operator==(const BiSimplicialSet& a, const BiSimplicialSet& b) {
  if (a.data_ == b.data_) return true;
  const auto &ta = a.tables(), &tb = b.tables();
  return ta.range == tb.range && ta.count == tb.count && ta.hface == tb.hface && ta.vface == tb.vface &&
         ta.hdegen == tb.hdegen && ta.vdegen == tb.vdegen;
}

MapComponents flatten(const BiSimplicialSet& b, const BiSimplicialMap::Components& c) {
  MapComponents out;
  for (auto [i, j] : b.degrees()) out.push_back(c[i][j]);
  return out;
}

BiSimplicialMap::Components unflatten(const BiSimplicialSet& b, const MapComponents& c) {
  const auto& r = b.range();
  BiSimplicialMap::Components out(static_cast<std::size_t>(r.ch) + 1,
                                  std::vector<std::vector<SimplexId>>(static_cast<std::size_t>(r.cv) + 1));
  for (std::size_t q = 0; q < b.degrees().size(); ++q) out[b.degrees()[q].first][b.degrees()[q].second] = c[q];
  return out;
}

BiSimplicialMap::BiSimplicialMap(BiSimplicialSet source, BiSimplicialSet target, Components components)
    : source_(std::move(source)), target_(std::move(target)), comp_(std::move(components)) {
  if (!(source_.range() == target_.range())) throw InputError("bisimplicial map: ranges differ");
  for (auto [i, j] : source_.degrees()) {
    if (comp_.size() <= static_cast<std::size_t>(i) || comp_[i].size() <= static_cast<std::size_t>(j) ||
        comp_[i][j].size() != source_.size(i, j))
      throw InputError("bisimplicial map: component size mismatch");
    for (auto y : comp_[i][j])
      if (y >= target_.size(i, j)) throw InputError("bisimplicial map: value out of range");
  }
  if (!commutes(source_.graded(), target_.graded(), flatten(source_, comp_)))
    throw InputError("bisimplicial map: components do not commute with the structure maps");
}

BiSimplicialMap BiSimplicialMap::trusted(BiSimplicialSet source, BiSimplicialSet target, Components components) {
  BiSimplicialMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.comp_ = std::move(components);
  return f;
}

BiSimplicialMap BiSimplicialMap::identity(const BiSimplicialSet& b) {
  MapComponents c;
  for (auto [i, j] : b.degrees()) {
    std::vector<SimplexId> v(b.size(i, j));
    for (SimplexId s = 0; s < v.size(); ++s) v[s] = s;
    c.push_back(std::move(v));
  }
  return trusted(b, b, unflatten(b, c));
}

bool BiSimplicialMap::bijective() const {
  for (auto [i, j] : source_.degrees()) {
    if (source_.size(i, j) != target_.size(i, j)) return false;
    std::vector<std::uint8_t> seen(target_.size(i, j), 0);
    for (auto y : comp_[i][j]) {
      if (seen[y]) return false;
      seen[y] = 1;
    }
  }
  return true;
}

BiSimplicialMap compose(const BiSimplicialMap& g, const BiSimplicialMap& f) {
  auto c = f.components();
  for (auto [i, j] : f.source().degrees())
    for (auto& y : c[i][j]) y = g(i, j, y);
  return BiSimplicialMap::trusted(f.source(), g.target(), std::move(c));
}

std::optional<BiSimplicialMap> is_isomorphic(const BiSimplicialSet& a, const BiSimplicialSet& b,
                                             SearchBudget& budget) {
  if (!(a.range() == b.range())) throw InputError("isomorphism test: ranges differ");
  auto c = find_graded_isomorphism(a.graded(), b.graded(), budget);
  if (!c) return std::nullopt;
  return BiSimplicialMap(a, b, unflatten(a, *c));
}

std::optional<BiSimplicialMap> is_isomorphic(const BiSimplicialSet& a, const BiSimplicialSet& b) {
  SearchBudget budget;
  return is_isomorphic(a, b, budget);
}

std::size_t count_maps(const BiSimplicialSet& a, const BiSimplicialSet& b, SearchBudget& budget) {
  if (!(a.range() == b.range())) throw InputError("map count: ranges differ");
  std::size_t n = 0;
  for_each_graded_map(a.graded(), b.graded(), MapSearchOptions{}, budget, [&](const MapComponents&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace wurst
