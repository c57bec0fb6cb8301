#include "wurst/constructions.hpp"

namespace wurst {

bool is_directed(const PointedDirected& k) {
  const auto& x = k.carrier;
  if (x.size(0) != 2 || k.base0 == k.base1 || k.base0 >= 2 || k.base1 >= 2) return false;
  for (int n = 0; n <= x.cap(); ++n)
    for (SimplexId s = 0; s < x.size(n); ++s) {
      const auto v = x.vertices(n, s);
      int z = 0;
      while (z <= n && v[z] == k.base0) ++z;
      for (int p = z; p <= n; ++p)
        if (v[p] != k.base1) return false;
      if (z == n + 1 && s != x.constant(n, k.base0)) return false;
      if (z == 0 && s != x.constant(n, k.base1)) return false;
    }
  return true;
}

int zeros_of(const PointedDirected& k, int n, SimplexId s) {
  const auto v = k.carrier.vertices(n, s);
  int z = 0;
  while (z <= n && v[z] == k.base0) ++z;
  return z;
}

PointedDirected directed_interval(int cap) { return PointedDirected{standard_simplex(1, cap), 0, 1}; }

PointedDirected directed_boundary_interval(int cap) { return PointedDirected{boundary(1, cap), 0, 1}; }

namespace {

struct SuspensionData {
  SimplicialSet d1, interval;
  Pushout p;
};

SuspensionData suspension_pushout(const SimplicialSet& k) {
  const int cap = k.cap();
  SuspensionData d;
  d.d1 = boundary(1, cap);
  d.interval = standard_simplex(1, cap);
  const auto kd = product(k, d.d1);
  const auto ki = product(k, d.interval);
  const auto f = product_map(SimplicialMap::identity(k), boundary_inclusion(1, cap), kd, ki);
  const auto g = projection_second(kd, k, d.d1);
  d.p = pushout(f, g);
  return d;
}

Pushout cone_pushout(const Join& /*j*/, const SimplicialMap& k_in) {
  return pushout(k_in, terminal_map(k_in.source()));
}

// Map dDelta^1 -> T sending the two vertices to a and b.
SimplicialMap endpoints_map(const SimplicialSet& d1, const SimplicialSet& t, SimplexId a, SimplexId b) {
  MapComponents c(static_cast<std::size_t>(t.cap()) + 1);
  for (int n = 0; n <= t.cap(); ++n) c[n] = {t.constant(n, a), t.constant(n, b)};
  return SimplicialMap::trusted(d1, t, std::move(c));
}

}  // namespace

PointedDirected suspension(const SimplicialSet& k) {
  auto d = suspension_pushout(k);
  return PointedDirected{d.p.set, d.p.inr(0, 0), d.p.inr(0, 1)};
}

PointedDirected suspension_left(const SimplicialSet& k) {
  const Join j(standard_simplex(0, k.cap()), k);
  const auto p = cone_pushout(j, j.inr());
  return PointedDirected{p.set, p.inl(0, j.left(0, 0)), p.inr(0, 0)};
}

PointedDirected suspension_right(const SimplicialSet& k) {
  const Join j(k, standard_simplex(0, k.cap()));
  const auto p = cone_pushout(j, j.inl());
  return PointedDirected{p.set, p.inr(0, 0), p.inl(0, j.right(0, 0))};
}

SuspensionComparison suspension_comparison(const SimplicialSet& k) {
  const int cap = k.cap();
  auto d = suspension_pushout(k);
  const auto ki = product(k, d.interval);
  SuspensionComparison out;
  out.s = PointedDirected{d.p.set, d.p.inr(0, 0), d.p.inr(0, 1)};

  const Join jl(standard_simplex(0, cap), k);
  const auto pl = cone_pushout(jl, jl.inr());
  out.left = PointedDirected{pl.set, pl.inl(0, jl.left(0, 0)), pl.inr(0, 0)};
  const Join jr(k, standard_simplex(0, cap));
  const auto pr = cone_pushout(jr, jr.inl());
  out.right = PointedDirected{pr.set, pr.inr(0, 0), pr.inl(0, jr.right(0, 0))};

  MapComponents cl(static_cast<std::size_t>(cap) + 1), cr(static_cast<std::size_t>(cap) + 1);
  for (int m = 0; m <= cap; ++m) {
    cl[m].resize(ki.size(m));
    cr[m].resize(ki.size(m));
    for (SimplexId x = 0; x < k.size(m); ++x)
      for (SimplexId t = 0; t < d.interval.size(m); ++t) {
        const auto tv = d.interval.vertices(m, t);
        int z = 0;
        while (z <= m && tv[z] == 0) ++z;
        SimplexId l, r;
        if (z == m + 1) {
          l = jl.left(m, 0);
          r = jr.left(m, x);
        } else if (z == 0) {
          l = jl.right(m, x);
          r = jr.right(m, 0);
        } else {
          Mono tail, head;
          for (int p = z; p <= m; ++p) tail.push_back(p);
          for (int p = 0; p < z; ++p) head.push_back(p);
          l = jl.pair(z - 1, m - z, 0, k.act(m, x, tail));
          r = jr.pair(z - 1, m - z, k.act(m, x, head), 0);
        }
        const SimplexId s = product_id(d.interval, m, x, t);
        cl[m][s] = pl.inl(m, l);
        cr[m][s] = pr.inl(m, r);
      }
  }
  const SimplicialMap fl(ki, pl.set, std::move(cl));
  const SimplicialMap fr(ki, pr.set, std::move(cr));
  out.to_left = pushout_map(d.p, fl, endpoints_map(d.d1, pl.set, out.left.base0, out.left.base1));
  out.to_right = pushout_map(d.p, fr, endpoints_map(d.d1, pr.set, out.right.base0, out.right.base1));
  return out;
}

}  // namespace wurst
