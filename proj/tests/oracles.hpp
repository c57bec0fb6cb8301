#pragma once

// Brute-force reference computations. These deliberately avoid the library's search
// engine and representation tricks; they work from definitions directly.

#include <cstddef>
#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wurst/sset.hpp"

namespace oracle {

/// Number of weakly increasing sequences of length m+1 in {0..n}, by exhaustive listing.
inline std::size_t count_monotone(int m, int n) {
  std::size_t count = 0;
  std::vector<int> seq(static_cast<std::size_t>(m) + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos > m) {
      ++count;
      return;
    }
    for (int v = lo; v <= n; ++v) {
      seq[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
  return count;
}

inline std::vector<std::vector<int>> all_monotone(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq(static_cast<std::size_t>(m) + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos > m) {
      out.push_back(seq);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      seq[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

/// Nondegenerate n-simplices of Delta^p x Delta^q: pairs of sequences whose zip has no
/// two equal consecutive entries.
inline std::size_t nondegenerate_pairs(int p, int q, int n) {
  std::size_t count = 0;
  for (const auto& a : all_monotone(n, p))
    for (const auto& b : all_monotone(n, q)) {
      bool nd = true;
      for (int k = 0; k < n; ++k)
        if (a[k] == a[k + 1] && b[k] == b[k + 1]) nd = false;
      if (nd) ++count;
    }
  return count;
}

/// S(dDelta^1): simplices of dDelta^1 x Delta^1 are (constant vertex a, sequence t); those
/// with t constant collapse to one of two points. Counts nondegenerate classes per level.
inline std::vector<std::size_t> suspension_of_two_points_nondegenerate(int cap) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= cap; ++n) {
    std::size_t c = n == 0 ? 2 : 0;  // the two collapse points are degenerate above level 0
    for (int a = 0; a < 2; ++a)
      for (const auto& t : all_monotone(n, 1)) {
        if (t.front() == t.back()) continue;
        bool nd = true;
        for (int k = 0; k < n; ++k)
          if (t[k] == t[k + 1]) nd = false;
        if (nd) ++c;
      }
    out.push_back(c);
  }
  return out;
}

/// Counts simplicial maps by assigning every simplex of every level (degenerate ones
/// included), checking faces against the level below and degeneracies from it.
inline std::size_t brute_force_map_count(const wurst::SimplicialSet& x, const wurst::SimplicialSet& y) {
  using wurst::SimplexId;
  const int cap = x.cap();
  std::vector<std::vector<SimplexId>> f(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) f[n].assign(x.size(n), 0);
  std::size_t count = 0;
  std::function<void(int, SimplexId)> rec = [&](int n, SimplexId s) {
    if (n > cap) {
      ++count;
      return;
    }
    if (s == x.size(n)) {
      rec(n + 1, 0);
      return;
    }
    for (SimplexId t = 0; t < y.size(n); ++t) {
      bool ok = true;
      for (int i = 0; i <= n && n >= 1 && ok; ++i)
        if (y.face(n, i, t) != f[n - 1][x.face(n, i, s)]) ok = false;
      for (int i = 0; i < n && ok; ++i)
        for (SimplexId u = 0; u < x.size(n - 1) && ok; ++u)
          if (x.degen(n - 1, i, u) == s && y.degen(n - 1, i, f[n - 1][u]) != t) ok = false;
      if (!ok) continue;
      f[n][s] = t;
      rec(n, s + 1);
    }
  };
  rec(0, 0);
  return count;
}

}  // namespace oracle

namespace oracle {

/// Nondegenerate simplices of Delta^{i+1+j} with each block collapsed, computed by a
/// generic union-find over vertex sequences closed under faces and degeneracies.
inline std::vector<std::size_t> collapsed_simplex_nondegenerate(int i, int j, int cap) {
  const int top = i + 1 + j;
  std::vector<std::size_t> out;
  std::vector<std::vector<std::vector<int>>> seqs;
  std::vector<std::vector<int>> parent;
  for (int n = 0; n <= cap; ++n) {
    seqs.push_back(all_monotone(n, top));
    parent.emplace_back(seqs[n].size());
    for (std::size_t s = 0; s < seqs[n].size(); ++s) parent[n][s] = static_cast<int>(s);
  }
  auto idx = [&](int n, const std::vector<int>& v) {
    return static_cast<int>(std::find(seqs[n].begin(), seqs[n].end(), v) - seqs[n].begin());
  };
  std::function<int(int, int)> find = [&](int n, int a) { return parent[n][a] == a ? a : parent[n][a] = find(n, parent[n][a]); };
  auto unite = [&](int n, int a, int b) {
    a = find(n, a);
    b = find(n, b);
    if (a == b) return false;
    parent[n][std::max(a, b)] = std::min(a, b);
    return true;
  };
  for (int n = 0; n <= cap; ++n)
    for (std::size_t s = 0; s < seqs[n].size(); ++s) {
      const auto& v = seqs[n][s];
      if (v.back() <= i) unite(n, static_cast<int>(s), idx(n, std::vector<int>(n + 1, 0)));
      if (v.front() > i) unite(n, static_cast<int>(s), idx(n, std::vector<int>(n + 1, i + 1)));
    }
  for (bool changed = true; changed;) {
    changed = false;
    for (int n = 0; n <= cap; ++n)
      for (std::size_t a = 0; a < seqs[n].size(); ++a)
        for (std::size_t b = a + 1; b < seqs[n].size(); ++b) {
          if (find(n, static_cast<int>(a)) != find(n, static_cast<int>(b))) continue;
          for (int k = 0; k <= n && n >= 1; ++k) {
            auto fa = seqs[n][a], fb = seqs[n][b];
            fa.erase(fa.begin() + k);
            fb.erase(fb.begin() + k);
            changed |= unite(n - 1, idx(n - 1, fa), idx(n - 1, fb));
          }
          for (int k = 0; k <= n && n + 1 <= cap; ++k) {
            auto fa = seqs[n][a], fb = seqs[n][b];
            fa.insert(fa.begin() + k, fa[k]);
            fb.insert(fb.begin() + k, fb[k]);
            changed |= unite(n + 1, idx(n + 1, fa), idx(n + 1, fb));
          }
        }
  }
  for (int n = 0; n <= cap; ++n) {
    // a class is degenerate iff some member is a degenerate sequence or is identified
    // with a degeneracy of a lower class
    std::set<int> classes, degenerate;
    for (std::size_t s = 0; s < seqs[n].size(); ++s) {
      const int c = find(n, static_cast<int>(s));
      classes.insert(c);
      const auto& v = seqs[n][s];
      for (int k = 0; k < n; ++k)
        if (v[k] == v[k + 1]) degenerate.insert(c);
    }
    out.push_back(classes.size() - degenerate.size());
  }
  return out;
}

/// Vertices (a, b) of Delta^i x Delta^j with a not surjective onto [i] or b not onto [j].
inline std::size_t boundary_bisimplex_vertices(int i, int j) {
  std::size_t c = 0;
  for (int a = 0; a <= i; ++a)
    for (int b = 0; b <= j; ++b)
      if (i > 0 || j > 0) ++c;
  return c;
}

/// All weakly increasing chains S_0 <= ... <= S_{len-1} of subsets of {0..i+1+j} meeting both
/// {0..i} and {i+1..i+1+j}, listed by nested loops over subsets.
inline std::vector<std::vector<unsigned>> raw_chains(int i, int j, int len) {
  const int n = i + 1 + j;
  const unsigned left = (1U << (i + 1)) - 1, all = (1U << (n + 1)) - 1, right = all & ~left;
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (unsigned s = 0; s <= all; ++s) {
      if (!(s & left) || !(s & right)) continue;
      if (!cur.empty() && (cur.back() & ~s)) continue;
      cur.push_back(s);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

/// Class index of every raw chain under the closure of the relation "share i0 <= i < j0 in S_0
/// with equal truncations to [i0, j0]", by union-find over all chains.
inline std::vector<std::size_t> raw_classes(int i, int j, const std::vector<std::vector<unsigned>>& chains,
                                            std::size_t* count) {
  const int n = i + 1 + j;
  std::vector<std::size_t> parent(chains.size());
  for (std::size_t c = 0; c < chains.size(); ++c) parent[c] = c;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::vector<unsigned>, std::size_t> first;
  for (std::size_t c = 0; c < chains.size(); ++c)
    for (int i0 = 0; i0 <= i; ++i0)
      for (int j0 = i + 1; j0 <= n; ++j0) {
        if (!(chains[c][0] >> i0 & 1U) || !(chains[c][0] >> j0 & 1U)) continue;
        unsigned keep = 0;
        for (int p = i0; p <= j0; ++p) keep |= 1U << p;
        std::vector<unsigned> key{static_cast<unsigned>(i0), static_cast<unsigned>(j0)};
        for (auto s : chains[c]) key.push_back(s & keep);
        auto [it, fresh] = first.emplace(key, c);
        if (!fresh) parent[find(c)] = find(it->second);
      }
  std::map<std::size_t, std::size_t> number;
  std::vector<std::size_t> cls(chains.size());
  for (std::size_t c = 0; c < chains.size(); ++c) {
    auto [it, fresh] = number.emplace(find(c), number.size());
    cls[c] = it->second;
  }
  *count = number.size();
  return cls;
}

/// Rank over the rationals by plain Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<long long>> rows) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Q q = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= q * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Invariant factors as quotients of successive gcds of k x k minors (small matrices only).
inline std::vector<boost::multiprecision::cpp_int> invariant_factors_by_minors(
    const std::vector<std::vector<long long>>& m) {
  using Z = boost::multiprecision::cpp_int;
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  std::function<Z(const std::vector<std::size_t>&, const std::vector<std::size_t>&)> det =
      [&](const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) -> Z {
    if (rs.size() == 1) return Z(m[rs[0]][cs[0]]);
    Z total = 0;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      std::vector<std::size_t> sub_r(rs.begin() + 1, rs.end()), sub_c;
      for (std::size_t l = 0; l < cs.size(); ++l)
        if (l != k) sub_c.push_back(cs[l]);
      const Z term = Z(m[rs[0]][cs[k]]) * det(sub_r, sub_c);
      total += (k % 2 == 0) ? term : Z(-term);
    }
    return total;
  };
  std::function<void(std::size_t, std::size_t, std::size_t, std::vector<std::size_t>&,
                     const std::function<void(const std::vector<std::size_t>&)>&)>
      subsets = [&](std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    const std::function<void(const std::vector<std::size_t>&)>& visit) {
        if (cur.size() == k) {
          visit(cur);
          return;
        }
        for (std::size_t x = from; x < n; ++x) {
          cur.push_back(x);
          subsets(n, k, x + 1, cur, visit);
          cur.pop_back();
        }
      };
  std::vector<Z> factors;
  Z previous = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Z g = 0;
    std::vector<std::size_t> rs, cs;
    subsets(rows, k, 0, rs, [&](const std::vector<std::size_t>& r) {
      subsets(cols, k, 0, cs, [&](const std::vector<std::size_t>& c) { g = gcd(g, abs(det(r, c))); });
    });
    if (g == 0) break;
    factors.push_back(g / previous);
    previous = g;
  }
  return factors;
}

}  // namespace oracle
