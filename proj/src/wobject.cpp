#include <algorithm>
#include <bit>

#include "wurst/coherent.hpp"

namespace wurst {

namespace {

Mono max_left(const Chain& c, int i) {
  Mono seq;
  for (auto s : c) seq.push_back(31 - std::countl_zero(s & ((Subset{2} << i) - 1)));
  return seq;
}

Subset reversed_subset(Subset s, int n) {
  Subset out = 0;
  for (int p = 0; p <= n; ++p)
    if (s >> p & 1U) out |= Subset{1} << (n - p);
  return out;
}

// Evaluates a per-element rule on every element of every class, checks it is constant on
// classes and returns the resulting components.
MapComponents on_classes(const Realization& r, const std::function<SimplexId(int, const Realization::Element&)>& rule) {
  const int cap = r.set.cap();
  MapComponents c(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k) {
    c[k].assign(r.representative[k].size(), kNoSimplex);
    for (std::size_t e = 0; e < r.class_of[k].size(); ++e) {
      const SimplexId v = rule(k, r.decode(k, e));
      auto& slot = c[k][r.class_of[k][e]];
      if (slot == kNoSimplex) slot = v;
      if (slot != v) throw InputError("induced map is not constant on coend classes");
    }
  }
  return c;
}

}  // namespace

WObject w_object(int cocap, int cap) {
  WObject w;
  w.range = BiRange::triangle(cocap);
  w.q = q_bicosimplicial(w.range, cap);
  w.qkeyed.resize(static_cast<std::size_t>(cocap) + 1);
  for (int i = 0; i <= cocap; ++i)
    for (int j = 0; i + j <= cocap; ++j) w.qkeyed[i].push_back(q_keyed(i, j, cap));
  std::vector<SimplicialSet> terms;
  for (int n = 0; n <= cocap; ++n) {
    w.cuts.push_back(cut(n, w.range));
    w.real.push_back(realize(w.cuts.back().set, w.q));
    terms.push_back(w.real.back().set);
  }
  w.w = make_cosimplicial(terms, [&](const Mono& theta, int m, int n) {
    return realize_map(w.real[m], w.real[n], cut_map(theta, m, n, w.range));
  });
  return w;
}

CosimplicialTransformation sigma_w(const WObject& w) {
  const int cocap = w.w.cocap(), cap = w.w.cap();
  CosimplicialTransformation t{w.w, delta_cosimplicial(cocap, cap), {}};
  for (int n = 0; n <= cocap; ++n) {
    const auto& r = w.real[n];
    auto c = on_classes(r, [&](int k, const Realization::Element& el) {
      const auto [i, j] = r.degrees[el.degree];
      const auto& seq = w.cuts[n].keys[i][j][el.s];
      return monotone_rank(compose(seq, max_left(w.qkeyed[i][j].keys[k][el.x], i)), n);
    });
    t.component.push_back(SimplicialMap(r.set, t.target.term(n), std::move(c)));
  }
  return t;
}

namespace {

// [(c, q)] |-> image of q under c on one block and the constant map on the other.
CosimplicialTransformation squeeze(const WObject& w, bool keep_left) {
  const int cocap = w.w.cocap(), cap = w.w.cap();
  CosimplicialTransformation t{w.w, keep_left ? q_first(cocap, cap) : q_second(cocap, cap), {}};
  for (int n = 0; n <= cocap; ++n) {
    const auto target = keep_left ? q_keyed(n, 0, cap) : q_keyed(0, n, cap);
    const auto& r = w.real[n];
    auto c = on_classes(r, [&](int k, const Realization::Element& el) {
      const auto [i, j] = r.degrees[el.degree];
      const auto& seq = w.cuts[n].keys[i][j][el.s];
      Mono phi(seq.begin(), seq.begin() + i + 1), psi(seq.begin() + i + 1, seq.end());
      if (keep_left)
        psi.assign(psi.size(), 0);
      else
        phi.assign(phi.size(), 0);
      Chain img;
      for (auto s : w.qkeyed[i][j].keys[k][el.x]) img.push_back(join_image(s, phi, keep_left ? n : 0, psi));
      return keep_left ? target.at(k, canonical_chain(img, n, 0)) : target.at(k, canonical_chain(img, 0, n));
    });
    t.component.push_back(SimplicialMap(r.set, t.target.term(n), std::move(c)));
  }
  return t;
}

}  // namespace

CosimplicialTransformation w_to_q_first(const WObject& w) { return squeeze(w, true); }
CosimplicialTransformation w_to_q_second(const WObject& w) { return squeeze(w, false); }

CosimplicialTransformation sigma_q_first(int cocap, int cap) {
  CosimplicialTransformation t{q_first(cocap, cap), delta_cosimplicial(cocap, cap), {}};
  for (int n = 0; n <= cocap; ++n) {
    const auto q = q_keyed(n, 0, cap);
    MapComponents c(static_cast<std::size_t>(cap) + 1);
    for (int k = 0; k <= cap; ++k)
      for (const auto& ch : q.keys[k]) c[k].push_back(monotone_rank(max_left(ch, n), n));
    t.component.push_back(SimplicialMap(t.source.term(n), t.target.term(n), std::move(c)));
  }
  return t;
}

CosimplicialTransformation w_reversal(const WObject& w) {
  const int cocap = w.w.cocap();
  CosimplicialTransformation t{w.w, w.w.reversed(), {}};
  for (int n = 0; n <= cocap; ++n) {
    const auto& r = w.real[n];
    const auto& bi = w.cuts[n].set;
    auto c = on_classes(r, [&](int k, const Realization::Element& el) {
      const auto [i, j] = r.degrees[el.degree];
      const int m = i + 1 + j;
      const auto& seq = w.cuts[n].keys[i][j][el.s];
      const auto flipped = compose(reversal_map(n), compose(seq, reversal_map(m)));
      Chain img;
      for (auto s : w.qkeyed[i][j].keys[k][el.x]) img.push_back(reversed_subset(s, m));
      const SimplexId x = w.qkeyed[j][i].at(k, canonical_chain(img, j, i));
      return r.cls(k, bi.degree_index(j, i), w.cuts[n].at(j, i, flipped), x);
    });
    t.component.push_back(SimplicialMap(r.set, r.set, std::move(c)));
  }
  return t;
}

SimplicialSet frak_c_directed(const PointedDirected& k, int cap) {
  if (!is_directed(k)) throw InputError("frak_c_directed: input is not directed");
  const auto range = BiRange::triangle(k.carrier.cap() - 1);
  const auto d = dec(k, range);
  return realize(d.set, q_bicosimplicial(range, cap)).set;
}

}  // namespace wurst
