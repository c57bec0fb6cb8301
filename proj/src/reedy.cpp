#include <set>
#include <unordered_map>

#include "wurst/realize.hpp"

namespace wurst {

namespace {

// images[k][class] from an element-level evaluation, checking it is constant on classes
ReedyReport classify(const Realization& r, const std::function<SimplexId(int, const Realization::Element&)>& eval,
                     const std::function<std::size_t(int)>& target_size) {
  ReedyReport rep;
  const int cap = r.set.cap();
  for (int k = 0; k <= cap; ++k) {
    const auto nc = r.representative[k].size();
    rep.boundary_size.push_back(nc);
    std::vector<SimplexId> img(nc, kNoSimplex);
    for (std::size_t e = 0; e < r.class_of[k].size(); ++e) {
      const auto v = eval(k, r.decode(k, e));
      auto& slot = img[r.class_of[k][e]];
      if (slot == kNoSimplex) slot = v;
      else if (slot != v) rep.well_defined = false;
    }
    std::vector<std::uint8_t> seen(target_size(k), 0);
    for (auto v : img) {
      if (seen[v]) rep.injective = false;
      seen[v] = 1;
    }
  }
  return rep;
}

bool pullback_bijective(const SimplicialMap& p, const SimplicialMap& q, const SimplicialMap* u,
                        const SimplicialMap* v) {
  const int cap = p.source().cap();
  for (int k = 0; k <= cap; ++k) {
    std::unordered_map<SimplexId, std::pair<std::size_t, std::size_t>> fibre;
    for (SimplexId y = 0; y < p.source().size(k); ++y) ++fibre[p(k, y)].first;
    for (SimplexId y = 0; y < q.source().size(k); ++y) ++fibre[q(k, y)].second;
    std::size_t pairs = 0;
    for (const auto& [key, c] : fibre) pairs += c.first * c.second;
    if (u == nullptr) {
      if (pairs != 0) return false;
      continue;
    }
    const auto nc = u->source().size(k);
    if (nc != pairs) return false;
    std::set<std::pair<SimplexId, SimplexId>> seen;
    for (SimplexId c = 0; c < nc; ++c) {
      const auto a = (*u)(k, c), b = (*v)(k, c);
      if (p(k, a) != q(k, b)) return false;
      if (!seen.emplace(a, b).second) return false;
    }
  }
  return true;
}

}  // namespace

ReedyReport reedy_boundary_check(const CosimplicialSSet& x, int n) {
  if (n < 0 || n > x.cocap()) throw CapError("reedy_boundary_check: degree outside the cosimplicial bound");
  const auto bd = boundary(n, x.cap());
  const auto r = realize(bd, x);
  std::vector<std::vector<Mono>> seqs;
  for (int m = 0; m < static_cast<int>(r.degrees.size()); ++m) {
    seqs.emplace_back();
    for (auto& a : monotone_maps(m, n)) {
      bool surj = is_surjective(a, n);
      if (!surj) seqs.back().push_back(std::move(a));
    }
  }
  return classify(
      r, [&](int k, const Realization::Element& el) { return x.apply_at(seqs[el.degree][el.s], n, k, el.x); },
      [&](int k) { return x.term(n).size(k); });
}

ReedyReport reedy_boundary_check(const BiCosimplicialSSet& x, int i, int j) {
  if (!x.range().contains(i, j)) throw CapError("reedy_boundary_check: bidegree outside the range");
  const auto [bd, inc] = boundary_bisimplex_inclusion(i, j, x.range());
  const auto r = realize(bd, x);
  std::vector<std::pair<std::vector<Mono>, std::vector<Mono>>> seqs;
  for (auto [p, q] : r.degrees) seqs.emplace_back(monotone_maps(p, i), monotone_maps(q, j));
  return classify(
      r,
      [&](int k, const Realization::Element& el) {
        const auto [p, q] = r.degrees[el.degree];
        const auto id = inc(p, q, el.s);
        const auto& [as, bs] = seqs[el.degree];
        return x.apply_at(as[id / bs.size()], i, bs[id % bs.size()], j, k, el.x);
      },
      [&](int k) { return x.term(i, j).size(k); });
}

bool pullback_criterion_check(const CosimplicialSSet& x, int n, FaceSpec k, FaceSpec kp) {
  int a = k.index, b = kp.index;
  if (n < 1 || n > x.cocap() || a == b || a < 0 || b < 0 || a > n || b > n)
    throw InputError("pullback_criterion_check: need two distinct codimension-one faces");
  if (a > b) std::swap(a, b);
  const auto& p = x.coface(n, a);
  const auto& q = x.coface(n, b);
  if (n == 1) return pullback_bijective(p, q, nullptr, nullptr);
  const auto& u = x.coface(n - 1, b - 1);
  const auto& v = x.coface(n - 1, a);
  return pullback_bijective(p, q, &u, &v);
}

bool pullback_criterion_check(const BiCosimplicialSSet& x, int i, int j, FaceSpec k, FaceSpec kp) {
  if (!x.range().contains(i, j)) throw InputError("pullback_criterion_check: bidegree outside the range");
  if (k.direction > kp.direction) std::swap(k, kp);
  auto bad = [](int idx, int dim) { return dim < 1 || idx < 0 || idx > dim; };
  if (k.direction == kp.direction) {
    int a = k.index, b = kp.index;
    const bool h = k.direction == 0;
    const int dim = h ? i : j;
    if (a == b || bad(a, dim) || bad(b, dim)) throw InputError("pullback_criterion_check: need two distinct faces");
    if (a > b) std::swap(a, b);
    const auto& p = h ? x.hcoface(i, j, a) : x.vcoface(i, j, a);
    const auto& q = h ? x.hcoface(i, j, b) : x.vcoface(i, j, b);
    if (dim == 1) return pullback_bijective(p, q, nullptr, nullptr);
    const auto& u = h ? x.hcoface(i - 1, j, b - 1) : x.vcoface(i, j - 1, b - 1);
    const auto& v = h ? x.hcoface(i - 1, j, a) : x.vcoface(i, j - 1, a);
    return pullback_bijective(p, q, &u, &v);
  }
  const int a = k.index, b = kp.index;
  if (bad(a, i) || bad(b, j)) throw InputError("pullback_criterion_check: face index out of range");
  const auto& p = x.hcoface(i, j, a);
  const auto& q = x.vcoface(i, j, b);
  const auto& u = x.vcoface(i - 1, j, b);
  const auto& v = x.hcoface(i, j - 1, a);
  return pullback_bijective(p, q, &u, &v);
}

}  // namespace wurst
