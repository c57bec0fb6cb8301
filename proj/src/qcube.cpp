#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "wurst/coherent.hpp"

namespace wurst {

namespace {

Subset interval(int lo, int hi) {
  if (hi < lo) return 0;
  return static_cast<Subset>(((std::uint64_t{1} << (hi + 1)) - 1) ^ ((std::uint64_t{1} << lo) - 1));
}

int lowest(Subset s) { return std::countr_zero(s); }
int highest(Subset s) { return 31 - std::countl_zero(s); }

Chain chain_delete(const Chain& c, int k) {
  Chain out = c;
  out.erase(out.begin() + k);
  return out;
}

Chain chain_repeat(const Chain& c, int k) {
  Chain out = c;
  out.insert(out.begin() + k, c[static_cast<std::size_t>(k)]);
  return out;
}

std::string chain_label(const Chain& c) {
  std::string s;
  for (std::size_t m = 0; m < c.size(); ++m) s += (m ? "<" : "") + subset_label(c[m]);
  return s;
}

// Every weakly increasing chain of length len whose entries lie between `bottom` and
// bottom | free: each free element enters at some position or never.
void for_each_chain(Subset bottom, Subset free, int len, bool bottom_fixed,
                    const std::function<void(const Chain&)>& visit) {
  std::vector<int> elems;
  for (int p = 0; p < 32; ++p)
    if (free >> p & 1U) elems.push_back(p);
  const int first = bottom_fixed ? 1 : 0;
  const int choices = len - first + 1;  // entry positions first..len-1, or never
  std::vector<int> when(elems.size(), first);
  while (true) {
    Chain c(static_cast<std::size_t>(len), bottom);
    for (std::size_t e = 0; e < elems.size(); ++e)
      for (int m = when[e]; m < len; ++m) c[m] |= Subset{1} << elems[e];
    visit(c);
    std::size_t e = 0;
    for (; e < elems.size(); ++e) {
      if (++when[e] < first + choices) break;
      when[e] = first;
    }
    if (e == elems.size()) return;
  }
}

Chain map_chain(const Chain& c, const std::function<Subset(Subset)>& f) {
  Chain out;
  out.reserve(c.size());
  for (auto s : c) out.push_back(f(s));
  return out;
}

Subset reverse_subset(Subset s, int n) {
  Subset out = 0;
  for (int p = 0; p <= n; ++p)
    if (s >> p & 1U) out |= Subset{1} << (n - p);
  return out;
}

Mono max_left_sequence(const Chain& c, int i) {
  Mono seq;
  for (auto s : c) seq.push_back(highest(s & interval(0, i)));
  return seq;
}

}  // namespace

bool admissible(Subset s, int i, int j) {
  return (s & interval(0, i)) != 0 && (s & interval(i + 1, i + 1 + j)) != 0;
}

Chain canonical_chain(const Chain& c, int i, int j) {
  if (c.empty() || !admissible(c[0], i, j)) throw InputError("canonical_chain: first entry is not admissible");
  const int i0 = highest(c[0] & interval(0, i));
  const int j0 = lowest(c[0] & interval(i + 1, i + 1 + j));
  const Subset keep = interval(i0, j0);
  return map_chain(c, [keep](Subset s) { return s & keep; });
}

Subset join_image(Subset s, const Mono& phi, int i, const Mono& psi) {
  const int a = static_cast<int>(phi.size()) - 1;
  Subset out = 0;
  for (int p = 0; p < 32; ++p) {
    if (!(s >> p & 1U)) continue;
    out |= Subset{1} << (p <= a ? phi[p] : i + 1 + psi[p - a - 1]);
  }
  return out;
}

std::string subset_label(Subset s) {
  std::string out = "{";
  for (int p = 0; p < 32; ++p)
    if (s >> p & 1U) out += (out.size() > 1 ? "," : "") + std::to_string(p);
  return out + "}";
}

KeyedSet<Chain> q_keyed(int i, int j, int cap) {
  if (i < 0 || j < 0 || i + j + 2 > 32) throw InputError("q_space: bidegree out of bounds");
  std::vector<std::vector<Chain>> levels(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k) {
    for (int i0 = 0; i0 <= i; ++i0)
      for (int j0 = i + 1; j0 <= i + 1 + j; ++j0)
        for_each_chain((Subset{1} << i0) | (Subset{1} << j0), interval(i0 + 1, j0 - 1), k + 1, true,
                       [&](const Chain& c) { levels[k].push_back(c); });
    std::sort(levels[k].begin(), levels[k].end());
  }
  return build_keyed<Chain>(
      cap, std::move(levels),
      [i, j](int, int q, const Chain& c) { return canonical_chain(chain_delete(c, q), i, j); },
      [](int, int q, const Chain& c) { return chain_repeat(c, q); }, [](int, const Chain& c) { return chain_label(c); });
}

SimplicialSet q_space(int i, int j, int cap) { return q_keyed(i, j, cap).set; }

BiCosimplicialSSet q_bicosimplicial(BiRange range, int cap) {
  std::map<std::pair<int, int>, KeyedSet<Chain>> cache;
  auto keyed = [&](int i, int j) -> const KeyedSet<Chain>& {
    auto it = cache.find({i, j});
    if (it == cache.end()) it = cache.emplace(std::make_pair(i, j), q_keyed(i, j, cap)).first;
    return it->second;
  };
  return make_bicosimplicial(
      range, [&](int i, int j) { return keyed(i, j).set; },
      [&](const Mono& phi, int i, const Mono& psi, int j, const SimplicialSet& src, const SimplicialSet& dst) {
        const int a = static_cast<int>(phi.size()) - 1, b = static_cast<int>(psi.size()) - 1;
        const auto& from = keyed(a, b);
        const auto& to = keyed(i, j);
        MapComponents c(static_cast<std::size_t>(cap) + 1);
        for (int k = 0; k <= cap; ++k)
          for (const auto& ch : from.keys[k])
            c[k].push_back(
                to.at(k, canonical_chain(map_chain(ch, [&](Subset s) { return join_image(s, phi, i, psi); }), i, j)));
        return SimplicialMap::trusted(src, dst, std::move(c));
      });
}

CosimplicialSSet q_first(int cocap, int cap) {
  return q_bicosimplicial(BiRange{cocap, 0, cocap}, cap).restrict_horizontal();
}

CosimplicialSSet q_second(int cocap, int cap) {
  return q_bicosimplicial(BiRange{0, cocap, cocap}, cap).restrict_vertical();
}

KeyedSet<Chain> coherent_cube_keyed(int a, int b, int cap) {
  if (a < 0 || a > b || b >= 32) throw InputError("coherent_cube: need 0 <= a <= b");
  std::vector<std::vector<Chain>> levels(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k) {
    for_each_chain((Subset{1} << a) | (Subset{1} << b), interval(a + 1, b - 1), k + 1, false,
                   [&](const Chain& c) { levels[k].push_back(c); });
    std::sort(levels[k].begin(), levels[k].end());
  }
  return build_keyed<Chain>(
      cap, std::move(levels), [](int, int q, const Chain& c) { return chain_delete(c, q); },
      [](int, int q, const Chain& c) { return chain_repeat(c, q); }, [](int, const Chain& c) { return chain_label(c); });
}

SimplicialSet coherent_cube(int n, int a, int b, int cap) {
  if (b > n) throw InputError("coherent_cube: need b <= n");
  return coherent_cube_keyed(a, b, cap).set;
}

SimplicialMap cube_composition(int a, int b, int c, int cap) {
  const auto lo = coherent_cube_keyed(a, b, cap), hi = coherent_cube_keyed(b, c, cap),
             whole = coherent_cube_keyed(a, c, cap);
  const auto src = product(hi.set, lo.set);
  MapComponents comp(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k)
    for (const auto& x : hi.keys[k])
      for (const auto& y : lo.keys[k]) {
        Chain u(x.size());
        for (std::size_t m = 0; m < x.size(); ++m) u[m] = x[m] | y[m];
        comp[k].push_back(whole.at(k, u));
      }
  return SimplicialMap::trusted(src, whole.set, std::move(comp));
}

SimplicialMap cube_map(const Mono& theta, int a, int b, int cap) {
  if (theta[a] >= theta[b] && a != b) throw InputError("cube_map: theta identifies the endpoints");
  const auto src = coherent_cube_keyed(a, b, cap), dst = coherent_cube_keyed(theta[a], theta[b], cap);
  MapComponents comp(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k)
    for (const auto& ch : src.keys[k])
      comp[k].push_back(dst.at(k, map_chain(ch, [&](Subset s) {
                                  Subset out = 0;
                                  for (int p = a; p <= b; ++p)
                                    if (s >> p & 1U) out |= Subset{1} << theta[p];
                                  return out;
                                })));
  return SimplicialMap::trusted(src.set, dst.set, std::move(comp));
}

SimplicialMap sigma_q(int i, int j, int cap) {
  const auto q = q_keyed(i, j, cap);
  const int n = i + 1 + j;
  MapComponents comp(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k)
    for (const auto& ch : q.keys[k]) comp[k].push_back(monotone_rank(max_left_sequence(ch, i), n));
  return SimplicialMap(q.set, standard_simplex(n, cap), std::move(comp));
}

bool sigma_q_well_defined(int i, int j) {
  const int n = i + 1 + j;
  for (Subset s = 1; s < (Subset{1} << (n + 1)); ++s) {
    if (!admissible(s, i, j)) continue;
    const Chain c{s};
    if (max_left_sequence(c, i) != max_left_sequence(canonical_chain(c, i, j), i)) return false;
  }
  return true;
}

SimplicialMap tau(int i, int j, int cap) {
  const auto src = q_keyed(i, j, cap), dst = q_keyed(j, i, cap);
  const int n = i + 1 + j;
  MapComponents comp(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k)
    for (const auto& ch : src.keys[k])
      comp[k].push_back(dst.at(k, canonical_chain(map_chain(ch, [n](Subset s) { return reverse_subset(s, n); }), j, i)));
  return SimplicialMap(src.set, dst.set, std::move(comp));
}

bool nullhomotopy_check(int i, int j, int cap) {
  const auto q = q_keyed(i, j, cap);
  const int n = i + 1 + j;
  const Subset full = interval(0, n);
  const Join jn(q.set, standard_simplex(0, cap));
  // value of the cone map on (raw chain of length a+1) followed by b+1 cone entries, per Q class
  std::vector<std::vector<std::map<int, SimplexId>>> cone(static_cast<std::size_t>(cap) + 1);
  for (int a = 0; a < cap; ++a) {
    cone[a].resize(q.set.size(a));
    bool consistent = true;
    for_each_chain((Subset{1} << 0) | (Subset{1} << n), interval(1, n - 1), a + 1, false, [&](const Chain& raw) {
      const SimplexId cls = q.at(a, canonical_chain(raw, i, j));
      for (int b = 0; a + 1 + b <= cap; ++b) {
        Chain ext = raw;
        ext.insert(ext.end(), static_cast<std::size_t>(b) + 1, full);
        const SimplexId v = q.at(a + 1 + b, canonical_chain(ext, i, j));
        auto [it, fresh] = cone[a][cls].emplace(b, v);
        if (!fresh && it->second != v) consistent = false;
      }
    });
    if (!consistent) return false;
  }
  MapComponents comp(static_cast<std::size_t>(cap) + 1);
  const Chain top{interval(i, i + 1)};
  for (int m = 0; m <= cap; ++m)
    for (SimplexId s = 0; s < jn.set().size(m); ++s) {
      const auto part = jn.decode(m, s);
      switch (part.kind) {
        case Join::Part::Kind::left:
          comp[m].push_back(part.x);
          break;
        case Join::Part::Kind::right:
          comp[m].push_back(q.set.constant(m, q.at(0, top)));
          break;
        case Join::Part::Kind::pair: {
          const auto& vals = cone[part.i][part.x];
          const auto it = vals.find(m - 1 - part.i);
          if (it == vals.end()) return false;  // some class has no raw lift in the cube
          comp[m].push_back(it->second);
          break;
        }
      }
    }
  try {
    const SimplicialMap h(jn.set(), q.set, std::move(comp));
    return compose(h, jn.inl()) == SimplicialMap::identity(q.set);
  } catch (const InputError&) {
    return false;
  }
}

QcofReport qcof_case_check(int i, int j, FaceSpec k, FaceSpec kp, int chain_length) {
  if (k.direction == kp.direction && k.index == kp.index) throw InputError("qcof_case_check: faces must differ");
  for (const auto& f : {k, kp})
    if (f.index < 0 || f.index > (f.direction == 0 ? i : j) || (f.direction == 0 ? i : j) < 1)
      throw InputError("qcof_case_check: face index out of range");
  if (k.direction == 1 && kp.direction == 0) std::swap(k, kp);
  if (k.direction == kp.direction && k.index < kp.index) std::swap(k, kp);  // k is the larger index
  const int n = i + 1 + j, level = chain_length - 1;

  // image of Q(phi, psi) at `level`, as a set of canonical chains
  auto image = [&](const Mono& phi, const Mono& psi) {
    const int a = static_cast<int>(phi.size()) - 1, b = static_cast<int>(psi.size()) - 1;
    const auto src = q_keyed(a, b, level);
    std::set<Chain> out;
    for (const auto& ch : src.keys[level])
      out.insert(canonical_chain(map_chain(ch, [&](Subset s) { return join_image(s, phi, i, psi); }), i, j));
    return out;
  };
  auto face_maps = [&](FaceSpec f) {
    return f.direction == 0 ? std::make_pair(coface_map(i, f.index), identity_map(j))
                            : std::make_pair(identity_map(i), coface_map(j, f.index));
  };
  const auto [p1, s1] = face_maps(k);
  const auto [p2, s2] = face_maps(kp);
  const auto img1 = image(p1, s1), img2 = image(p2, s2);
  // the double face
  Mono phi = identity_map(i), psi = identity_map(j);
  if (k.direction == 0 && kp.direction == 0 && i >= 2)
    phi = compose(coface_map(i, k.index), coface_map(i - 1, kp.index));
  else if (k.direction == 1 && kp.direction == 1 && j >= 2)
    psi = compose(coface_map(j, k.index), coface_map(j - 1, kp.index));
  else if (k.direction != kp.direction) {
    phi = coface_map(i, k.index);
    psi = coface_map(j, kp.index);
  }
  std::set<Chain> img12;  // empty when two faces of an edge meet in no bisimplex
  const bool edge = k.direction == kp.direction && (k.direction == 0 ? i : j) == 1;
  if (!edge) img12 = image(phi, psi);

  auto meets = [](Subset s, int lo, int hi) { return (s & interval(lo, hi)) != 0; };
  QcofReport rep;
  for_each_chain(0, interval(0, n), chain_length, false, [&](const Chain& raw) {
    if (!admissible(raw[0], i, j)) return;
    ++rep.chains;
    const Subset s0 = raw.front(), sn = raw.back();
    auto a_h = [&](int x) { return meets(s0, x + 1, i); };
    auto b_h = [&](int x) { return !(sn >> x & 1U); };
    auto a_v = [&](int y) { return meets(s0, i + 1, i + y); };
    auto b_v = [&](int y) { return !(sn >> (i + 1 + y) & 1U); };
    bool cases = false;
    if (k.direction == 0 && kp.direction == 0) {
      const int kk = k.index, l = kp.index;
      cases = a_h(kk) || (a_h(l) && b_h(kk)) || (b_h(kk) && b_h(l));
    } else if (k.direction == 1 && kp.direction == 1) {
      const int kk = k.index, l = kp.index;
      cases = a_v(l) || (a_v(kk) && b_v(l)) || (b_v(kk) && b_v(l));
    } else {
      const int kk = k.index, l = kp.index;
      cases = (a_h(kk) && a_v(l)) || (a_h(kk) && b_v(l)) || (b_h(kk) && a_v(l)) || (b_h(kk) && b_v(l));
    }
    const auto c = canonical_chain(raw, i, j);
    const bool in_both = img1.count(c) && img2.count(c);
    const bool in_double = img12.count(c) > 0;
    if (in_both) ++rep.in_preimage;
    if (in_both != cases || in_double != cases) ++rep.mismatches;
  });
  return rep;
}

}  // namespace wurst
