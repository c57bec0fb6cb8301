#include <map>

#include "wurst/cosimplicial.hpp"

namespace wurst {

namespace {

template <class T>
BiCosimplicialSSet::Grid<T> grid(const BiRange& r) {
  return BiCosimplicialSSet::Grid<T>(static_cast<std::size_t>(r.ch) + 1, std::vector<T>(static_cast<std::size_t>(r.cv) + 1));
}

Mono join_maps(const Mono& alpha, int i, const Mono& beta) {
  Mono out = alpha;
  for (int v : beta) out.push_back(i + 1 + v);
  return out;
}

}  // namespace

BiCosimplicialSSet::BiCosimplicialSSet(BiRange range, Grid<SimplicialSet> terms, Grid<std::vector<SimplicialMap>> hcoface,
                                       Grid<std::vector<SimplicialMap>> vcoface,
                                       Grid<std::vector<SimplicialMap>> hcodegen,
                                       Grid<std::vector<SimplicialMap>> vcodegen)
    : range_(range),
      term_(std::move(terms)),
      hcoface_(std::move(hcoface)),
      vcoface_(std::move(vcoface)),
      hcodegen_(std::move(hcodegen)),
      vcodegen_(std::move(vcodegen)) {
  for (int i = 0; i <= range_.ch; ++i)
    for (int j = 0; j <= range_.cv; ++j) {
      if (!range_.contains(i, j)) continue;
      if (term_[i][j].cap() != term_[0][0].cap()) throw InputError("bicosimplicial object: terms have different caps");
      if (hcoface_[i][j].size() != static_cast<std::size_t>(i >= 1 ? i + 1 : 0) ||
          vcoface_[i][j].size() != static_cast<std::size_t>(j >= 1 ? j + 1 : 0) ||
          hcodegen_[i][j].size() != static_cast<std::size_t>(range_.contains(i + 1, j) ? i + 1 : 0) ||
          vcodegen_[i][j].size() != static_cast<std::size_t>(range_.contains(i, j + 1) ? j + 1 : 0))
        throw InputError("bicosimplicial object: wrong number of structure maps");
    }
}

SimplicialMap BiCosimplicialSSet::apply(const Mono& alpha, int i, const Mono& beta, int j) const {
  int a = static_cast<int>(alpha.size()) - 1, b = static_cast<int>(beta.size()) - 1;
  SimplicialMap f = SimplicialMap::identity(term(a, b));
  const auto ha = factor(alpha, i), vb = factor(beta, j);
  for (const auto& st : ha)
    if (st.kind == DeltaGenerator::Kind::codegeneracy) f = compose(hcodegen(--a, b, st.index), f);
  for (const auto& st : vb)
    if (st.kind == DeltaGenerator::Kind::codegeneracy) f = compose(vcodegen(a, --b, st.index), f);
  for (const auto& st : ha)
    if (st.kind == DeltaGenerator::Kind::coface) f = compose(hcoface(++a, b, st.index), f);
  for (const auto& st : vb)
    if (st.kind == DeltaGenerator::Kind::coface) f = compose(vcoface(a, ++b, st.index), f);
  return f;
}

SimplexId BiCosimplicialSSet::apply_at(const Mono& alpha, int i, const Mono& beta, int j, int level, SimplexId x) const {
  int a = static_cast<int>(alpha.size()) - 1, b = static_cast<int>(beta.size()) - 1;
  const auto ha = factor(alpha, i), vb = factor(beta, j);
  for (const auto& st : ha)
    if (st.kind == DeltaGenerator::Kind::codegeneracy) x = hcodegen(--a, b, st.index)(level, x);
  for (const auto& st : vb)
    if (st.kind == DeltaGenerator::Kind::codegeneracy) x = vcodegen(a, --b, st.index)(level, x);
  for (const auto& st : ha)
    if (st.kind == DeltaGenerator::Kind::coface) x = hcoface(++a, b, st.index)(level, x);
  for (const auto& st : vb)
    if (st.kind == DeltaGenerator::Kind::coface) x = vcoface(a, ++b, st.index)(level, x);
  return x;
}

std::optional<std::string> BiCosimplicialSSet::check_identities() const {
  const auto& r = range_;
  for (int i = 0; i <= r.ch; ++i)
    for (int j = 0; j <= r.cv; ++j)
      for (int a = 0; a <= r.ch; ++a)
        for (int b = 0; b <= r.cv; ++b) {
          if (!r.contains(i, j) || !r.contains(a, b)) continue;
          for (const auto& alpha : monotone_maps(a, i))
            for (const auto& beta : monotone_maps(b, j)) {
              const auto f = apply(alpha, i, beta, j);
              if (r.contains(a, j) &&
                  !(f == compose(apply(alpha, i, identity_map(j), j), apply(identity_map(a), a, beta, j))))
                return "bicosimplicial directions do not commute";
              if (r.contains(i, b) &&
                  !(f == compose(apply(identity_map(i), i, beta, j), apply(alpha, i, identity_map(b), b))))
                return "bicosimplicial directions do not commute";
              std::vector<std::tuple<Mono, int, bool>> gens;
              if (r.contains(i + 1, j))
                for (int k = 0; k <= i + 1; ++k) gens.emplace_back(coface_map(i + 1, k), i + 1, true);
              for (int k = 0; k < i; ++k) gens.emplace_back(codegeneracy_map(i - 1, k), i - 1, true);
              if (r.contains(i, j + 1))
                for (int k = 0; k <= j + 1; ++k) gens.emplace_back(coface_map(j + 1, k), j + 1, false);
              for (int k = 0; k < j; ++k) gens.emplace_back(codegeneracy_map(j - 1, k), j - 1, false);
              for (const auto& [g, t, horizontal] : gens) {
                const auto lhs = horizontal ? apply(compose(g, alpha), t, beta, j) : apply(alpha, i, compose(g, beta), t);
                const auto step = horizontal ? apply(g, t, identity_map(j), j) : apply(identity_map(i), i, g, t);
                if (!(lhs == compose(step, f))) return "bicosimplicial identity fails";
              }
            }
        }
  return std::nullopt;
}

CosimplicialSSet BiCosimplicialSSet::restrict_horizontal() const {
  const int N = std::min(range_.ch, range_.total);
  std::vector<SimplicialSet> terms;
  std::vector<std::vector<SimplicialMap>> cf(static_cast<std::size_t>(N) + 1), cd(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    terms.push_back(term_[n][0]);
    cf[n] = hcoface_[n][0];
    cd[n] = hcodegen_[n][0];
  }
  return CosimplicialSSet(std::move(terms), std::move(cf), std::move(cd));
}

CosimplicialSSet BiCosimplicialSSet::restrict_vertical() const {
  const int N = std::min(range_.cv, range_.total);
  std::vector<SimplicialSet> terms;
  std::vector<std::vector<SimplicialMap>> cf(static_cast<std::size_t>(N) + 1), cd(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    terms.push_back(term_[0][n]);
    cf[n] = vcoface_[0][n];
    cd[n] = vcodegen_[0][n];
  }
  return CosimplicialSSet(std::move(terms), std::move(cf), std::move(cd));
}

BiCosimplicialSSet BiCosimplicialSSet::flipped() const {
  const auto r = range_.flipped();
  auto t = grid<SimplicialSet>(r);
  auto hc = grid<std::vector<SimplicialMap>>(r), vc = hc, hd = hc, vd = hc;
  for (int i = 0; i <= r.ch; ++i)
    for (int j = 0; j <= r.cv; ++j) {
      if (!r.contains(i, j)) continue;
      t[i][j] = term_[j][i];
      hc[i][j] = vcoface_[j][i];
      vc[i][j] = hcoface_[j][i];
      hd[i][j] = vcodegen_[j][i];
      vd[i][j] = hcodegen_[j][i];
    }
  return BiCosimplicialSSet(r, std::move(t), std::move(hc), std::move(vc), std::move(hd), std::move(vd));
}

BiCosimplicialSSet BiCosimplicialSSet::reversed() const {
  auto out = *this;
  for (auto* g : {&out.hcoface_, &out.vcoface_, &out.hcodegen_, &out.vcodegen_})
    for (auto& row : *g)
      for (auto& v : row) std::reverse(v.begin(), v.end());
  return out;
}

BiCosimplicialSSet make_bicosimplicial(
    BiRange r, const std::function<SimplicialSet(int, int)>& term,
    const std::function<SimplicialMap(const Mono&, int, const Mono&, int, const SimplicialSet&, const SimplicialSet&)>& act) {
  auto t = grid<SimplicialSet>(r);
  for (int i = 0; i <= r.ch; ++i)
    for (int j = 0; j <= r.cv; ++j)
      if (r.contains(i, j)) t[i][j] = term(i, j);
  auto hc = grid<std::vector<SimplicialMap>>(r), vc = hc, hd = hc, vd = hc;
  for (int i = 0; i <= r.ch; ++i)
    for (int j = 0; j <= r.cv; ++j) {
      if (!r.contains(i, j)) continue;
      const auto idj = identity_map(j), idi = identity_map(i);
      if (i >= 1)
        for (int k = 0; k <= i; ++k) hc[i][j].push_back(act(coface_map(i, k), i, idj, j, t[i - 1][j], t[i][j]));
      if (j >= 1)
        for (int k = 0; k <= j; ++k) vc[i][j].push_back(act(idi, i, coface_map(j, k), j, t[i][j - 1], t[i][j]));
      if (r.contains(i + 1, j))
        for (int k = 0; k <= i; ++k) hd[i][j].push_back(act(codegeneracy_map(i, k), i, idj, j, t[i + 1][j], t[i][j]));
      if (r.contains(i, j + 1))
        for (int k = 0; k <= j; ++k) vd[i][j].push_back(act(idi, i, codegeneracy_map(j, k), j, t[i][j + 1], t[i][j]));
    }
  return BiCosimplicialSSet(r, std::move(t), std::move(hc), std::move(vc), std::move(hd), std::move(vd));
}

BiCosimplicialSSet join_bicosimplicial(BiRange range, int cap) {
  return make_bicosimplicial(
      range, [cap](int i, int j) { return standard_simplex(i + 1 + j, cap); },
      [cap](const Mono& a, int i, const Mono& b, int j, const SimplicialSet&, const SimplicialSet&) {
        const int m = static_cast<int>(a.size() + b.size()) - 1;
        return delta_map(join_maps(a, i, b), m, i + 1 + j, cap);
      });
}

BiCosimplicialSSet directed_join_bicosimplicial(BiRange range, int cap) {
  std::map<std::pair<int, int>, KeyedSet<Mono>> cache;
  auto keyed = [&](int i, int j) -> const KeyedSet<Mono>& {
    auto it = cache.find({i, j});
    if (it == cache.end()) it = cache.emplace(std::make_pair(i, j), directed_join_keyed(i, j, cap)).first;
    return it->second;
  };
  return make_bicosimplicial(
      range, [&](int i, int j) { return keyed(i, j).set; },
      [&](const Mono& a, int i, const Mono& b, int j, const SimplicialSet& src, const SimplicialSet& dst) {
        const int sa = static_cast<int>(a.size()) - 1, sb = static_cast<int>(b.size()) - 1;
        const auto& from = keyed(sa, sb);
        const auto& to = keyed(i, j);
        const auto ab = join_maps(a, i, b);
        MapComponents c(static_cast<std::size_t>(cap) + 1);
        for (int k = 0; k <= cap; ++k)
          for (const auto& seq : from.keys[k]) c[k].push_back(to.at(k, collapse_blocks(compose(ab, seq), i)));
        return SimplicialMap::trusted(src, dst, std::move(c));
      });
}

BiCosimplicialSSet product_bicosimplicial(BiRange range, int cap) {
  return make_bicosimplicial(
      range, [cap](int i, int j) { return product(standard_simplex(i, cap), standard_simplex(j, cap)); },
      [cap](const Mono& a, int i, const Mono& b, int j, const SimplicialSet& src, const SimplicialSet& dst) {
        const int sa = static_cast<int>(a.size()) - 1, sb = static_cast<int>(b.size()) - 1;
        return product_map(delta_map(a, sa, i, cap), delta_map(b, sb, j, cap), src, dst);
      });
}

}  // namespace wurst
