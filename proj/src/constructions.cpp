#include <algorithm>
#include <set>

#include "wurst/constructions.hpp"

namespace wurst {

namespace {

SimplicialSet::Tables blank_tables(int cap) {
  SimplicialSet::Tables t;
  t.cap = cap;
  t.count.assign(static_cast<std::size_t>(cap) + 1, 0);
  t.face.resize(static_cast<std::size_t>(cap) + 1);
  t.degen.resize(static_cast<std::size_t>(cap) + 1);
  return t;
}

void size_operators(SimplicialSet::Tables& t) {
  for (int n = 0; n <= t.cap; ++n) {
    if (n >= 1) t.face[n].assign(static_cast<std::size_t>(n) + 1, std::vector<SimplexId>(t.count[n]));
    if (n + 1 <= t.cap) t.degen[n].assign(static_cast<std::size_t>(n) + 1, std::vector<SimplexId>(t.count[n]));
  }
}

SimplicialSet filtered_simplex(int n, int cap, const std::function<bool(const Mono&)>& keep) {
  if (cap < 0) throw InputError("negative cap");
  std::vector<std::vector<Mono>> levels(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k)
    for (auto& a : monotone_maps(k, n))
      if (keep(a)) levels[k].push_back(std::move(a));
  return build_keyed<Mono>(
             cap, std::move(levels), [](int, int i, const Mono& a) { return delete_entry(a, i); },
             [](int, int i, const Mono& a) { return repeat_entry(a, i); },
             [](int, const Mono& a) { return sequence_label(a); })
      .set;
}

std::vector<bool> image_mask(const Mono& a, int n) {
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int v : a) hit[v] = true;
  return hit;
}

}  // namespace

SimplicialSet standard_simplex(int n, int cap) {
  if (n < 0) throw InputError("standard_simplex: negative dimension");
  return filtered_simplex(n, cap, [](const Mono&) { return true; });
}

SimplicialSet boundary(int n, int cap) {
  if (n < 0) throw InputError("boundary: negative dimension");
  return filtered_simplex(n, cap, [n](const Mono& a) {
    auto hit = image_mask(a, n);
    return std::find(hit.begin(), hit.end(), false) != hit.end();
  });
}

SimplicialSet horn(int n, int k, int cap) {
  if (n < 1) throw InputError("horn: need n >= 1");
  if (k < 0 || k > n) throw InputError("horn: index out of range");
  return filtered_simplex(n, cap, [n, k](const Mono& a) {
    auto hit = image_mask(a, n);
    hit[k] = true;
    return std::find(hit.begin(), hit.end(), false) != hit.end();
  });
}

namespace {

SimplicialMap filtered_inclusion(const SimplicialSet& sub, int n, int cap,
                                 const std::function<bool(const Mono&)>& keep) {
  MapComponents c(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k) {
    const auto maps = monotone_maps(k, n);
    for (SimplexId s = 0; s < maps.size(); ++s)
      if (keep(maps[s])) c[k].push_back(s);
  }
  return SimplicialMap::trusted(sub, standard_simplex(n, cap), std::move(c));
}

}  // namespace

SimplicialMap boundary_inclusion(int n, int cap) {
  return filtered_inclusion(boundary(n, cap), n, cap, [n](const Mono& a) {
    auto hit = image_mask(a, n);
    return std::find(hit.begin(), hit.end(), false) != hit.end();
  });
}

SimplicialMap horn_inclusion(int n, int k, int cap) {
  return filtered_inclusion(horn(n, k, cap), n, cap, [n, k](const Mono& a) {
    auto hit = image_mask(a, n);
    hit[k] = true;
    return std::find(hit.begin(), hit.end(), false) != hit.end();
  });
}

SimplicialSet empty_set(int cap) {
  auto t = blank_tables(cap);
  size_operators(t);
  return SimplicialSet(std::move(t));
}

KeyedSet<Mono> nerve_of_poset(int size, const std::function<bool(int, int)>& leq, int cap) {
  std::vector<std::vector<Mono>> levels(static_cast<std::size_t>(cap) + 1);
  Mono chain;
  std::function<void()> extend = [&]() {
    const int k = static_cast<int>(chain.size()) - 1;
    if (k >= 0) levels[k].push_back(chain);
    if (k == cap) return;
    for (int p = 0; p < size; ++p) {
      if (!chain.empty() && !leq(chain.back(), p)) continue;
      chain.push_back(p);
      extend();
      chain.pop_back();
    }
  };
  extend();
  for (auto& lv : levels) std::sort(lv.begin(), lv.end());
  return build_keyed<Mono>(
      cap, std::move(levels), [](int, int i, const Mono& a) { return delete_entry(a, i); },
      [](int, int i, const Mono& a) { return repeat_entry(a, i); },
      [](int, const Mono& a) { return sequence_label(a); });
}

SimplicialMap simplex_map(const SimplicialSet& x, int n, SimplexId s) {
  const auto delta = standard_simplex(n, x.cap());
  MapComponents c(static_cast<std::size_t>(x.cap()) + 1);
  for (int k = 0; k <= x.cap(); ++k) {
    const auto maps = monotone_maps(k, n);
    c[k].reserve(maps.size());
    for (const auto& a : maps) c[k].push_back(x.act(n, s, a));
  }
  return SimplicialMap::trusted(delta, x, std::move(c));
}

Subobject generated_subobject(const SimplicialSet& x, const std::vector<std::pair<int, SimplexId>>& generators) {
  const int cap = x.cap();
  std::vector<std::vector<std::uint8_t>> mark(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) mark[n].assign(x.size(n), 0);
  std::vector<std::pair<int, SimplexId>> stack;
  auto push = [&](int n, SimplexId s) {
    if (!mark[n][s]) {
      mark[n][s] = 1;
      stack.emplace_back(n, s);
    }
  };
  for (auto [n, s] : generators) push(n, s);
  while (!stack.empty()) {
    auto [n, s] = stack.back();
    stack.pop_back();
    if (n >= 1)
      for (int i = 0; i <= n; ++i) push(n - 1, x.face(n, i, s));
    if (n + 1 <= cap)
      for (int i = 0; i <= n; ++i) push(n + 1, x.degen(n, i, s));
  }
  auto t = blank_tables(cap);
  std::vector<std::vector<SimplexId>> new_id(static_cast<std::size_t>(cap) + 1);
  MapComponents inc(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    new_id[n].assign(x.size(n), kNoSimplex);
    for (SimplexId s = 0; s < x.size(n); ++s)
      if (mark[n][s]) {
        new_id[n][s] = static_cast<SimplexId>(inc[n].size());
        inc[n].push_back(s);
      }
    t.count[n] = inc[n].size();
  }
  size_operators(t);
  if (x.has_labels()) t.labels.resize(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n)
    for (SimplexId a = 0; a < inc[n].size(); ++a) {
      const SimplexId s = inc[n][a];
      if (n >= 1)
        for (int i = 0; i <= n; ++i) t.face[n][i][a] = new_id[n - 1][x.face(n, i, s)];
      if (n + 1 <= cap)
        for (int i = 0; i <= n; ++i) t.degen[n][i][a] = new_id[n + 1][x.degen(n, i, s)];
      if (x.has_labels()) t.labels[n].push_back(x.label(n, s));
    }
  SimplicialSet sub(std::move(t));
  return Subobject{sub, SimplicialMap::trusted(sub, x, std::move(inc))};
}

Subobject image(const SimplicialMap& f) {
  std::vector<std::pair<int, SimplexId>> gens;
  for (int n = 0; n <= f.source().cap(); ++n)
    for (auto y : f.components()[n]) gens.emplace_back(n, y);
  return generated_subobject(f.target(), gens);
}

Coproduct disjoint_union(const SimplicialSet& x, const SimplicialSet& y) {
  if (x.cap() != y.cap()) throw InputError("disjoint_union: caps differ");
  const int cap = x.cap();
  auto t = blank_tables(cap);
  for (int n = 0; n <= cap; ++n) t.count[n] = x.size(n) + y.size(n);
  size_operators(t);
  const bool labels = x.has_labels() || y.has_labels();
  if (labels) t.labels.resize(static_cast<std::size_t>(cap) + 1);
  MapComponents l(static_cast<std::size_t>(cap) + 1), r(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    const auto off = static_cast<SimplexId>(x.size(n));
    const auto off_up = n + 1 <= cap ? static_cast<SimplexId>(x.size(n + 1)) : 0;
    const auto off_down = n >= 1 ? static_cast<SimplexId>(x.size(n - 1)) : 0;
    for (SimplexId s = 0; s < x.size(n); ++s) {
      l[n].push_back(s);
      if (n >= 1)
        for (int i = 0; i <= n; ++i) t.face[n][i][s] = x.face(n, i, s);
      if (n + 1 <= cap)
        for (int i = 0; i <= n; ++i) t.degen[n][i][s] = x.degen(n, i, s);
      if (labels) t.labels[n].push_back("L" + x.label(n, s));
    }
    for (SimplexId s = 0; s < y.size(n); ++s) {
      r[n].push_back(off + s);
      if (n >= 1)
        for (int i = 0; i <= n; ++i) t.face[n][i][off + s] = off_down + y.face(n, i, s);
      if (n + 1 <= cap)
        for (int i = 0; i <= n; ++i) t.degen[n][i][off + s] = off_up + y.degen(n, i, s);
      if (labels) t.labels[n].push_back("R" + y.label(n, s));
    }
  }
  SimplicialSet u(std::move(t));
  return Coproduct{u, SimplicialMap::trusted(x, u, std::move(l)), SimplicialMap::trusted(y, u, std::move(r))};
}

SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y) {
  if (x.cap() != y.cap()) throw InputError("product: caps differ");
  const int cap = x.cap();
  auto t = blank_tables(cap);
  for (int n = 0; n <= cap; ++n) t.count[n] = x.size(n) * y.size(n);
  size_operators(t);
  const bool labels = x.has_labels() || y.has_labels();
  if (labels) t.labels.resize(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n)
    for (SimplexId a = 0; a < x.size(n); ++a)
      for (SimplexId b = 0; b < y.size(n); ++b) {
        const SimplexId s = product_id(y, n, a, b);
        if (n >= 1)
          for (int i = 0; i <= n; ++i)
            t.face[n][i][s] = product_id(y, n - 1, x.face(n, i, a), y.face(n, i, b));
        if (n + 1 <= cap)
          for (int i = 0; i <= n; ++i)
            t.degen[n][i][s] = product_id(y, n + 1, x.degen(n, i, a), y.degen(n, i, b));
        if (labels) t.labels[n].push_back("(" + x.label(n, a) + "," + y.label(n, b) + ")");
      }
  return SimplicialSet(std::move(t));
}

SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g, const SimplicialSet& source,
                          const SimplicialSet& target) {
  const int cap = source.cap();
  MapComponents c(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    c[n].resize(source.size(n));
    const auto ys = g.source().size(n);
    for (SimplexId a = 0; a < f.source().size(n); ++a)
      for (SimplexId b = 0; b < ys; ++b)
        c[n][a * ys + b] = product_id(g.target(), n, f(n, a), g(n, b));
  }
  return SimplicialMap::trusted(source, target, std::move(c));
}

SimplicialMap projection_first(const SimplicialSet& prod, const SimplicialSet& x, const SimplicialSet& y) {
  MapComponents c(static_cast<std::size_t>(prod.cap()) + 1);
  for (int n = 0; n <= prod.cap(); ++n)
    for (SimplexId s = 0; s < prod.size(n); ++s) c[n].push_back(static_cast<SimplexId>(s / y.size(n)));
  return SimplicialMap::trusted(prod, x, std::move(c));
}

SimplicialMap projection_second(const SimplicialSet& prod, const SimplicialSet& x, const SimplicialSet& y) {
  (void)x;
  MapComponents c(static_cast<std::size_t>(prod.cap()) + 1);
  for (int n = 0; n <= prod.cap(); ++n)
    for (SimplexId s = 0; s < prod.size(n); ++s) c[n].push_back(static_cast<SimplexId>(s % y.size(n)));
  return SimplicialMap::trusted(prod, y, std::move(c));
}

SimplicialMap terminal_map(const SimplicialSet& x) {
  const auto pt = standard_simplex(0, x.cap());
  MapComponents c(static_cast<std::size_t>(x.cap()) + 1);
  for (int n = 0; n <= x.cap(); ++n) c[n].assign(x.size(n), 0);
  return SimplicialMap::trusted(x, pt, std::move(c));
}

SimplicialMap initial_map(const SimplicialSet& x) {
  MapComponents c(static_cast<std::size_t>(x.cap()) + 1);
  return SimplicialMap::trusted(empty_set(x.cap()), x, std::move(c));
}

SimplicialSet opposite(const SimplicialSet& x) {
  auto t = x.tables();
  for (int n = 0; n <= t.cap; ++n) {
    std::reverse(t.face[n].begin(), t.face[n].end());
    std::reverse(t.degen[n].begin(), t.degen[n].end());
  }
  return SimplicialSet(std::move(t));
}

SimplicialMap opposite(const SimplicialMap& f, const SimplicialSet& source_op, const SimplicialSet& target_op) {
  return SimplicialMap(source_op, target_op, f.components());
}

}  // namespace wurst
