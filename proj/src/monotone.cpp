#include "wurst/monotone.hpp"

#include <cassert>

namespace wurst {

namespace {

void extend(std::vector<Mono>& out, Mono& cur, int m, int n) {
  if (static_cast<int>(cur.size()) == m + 1) {
    out.push_back(cur);
    return;
  }
  const int lo = cur.empty() ? 0 : cur.back();
  for (int v = lo; v <= n; ++v) {
    cur.push_back(v);
    extend(out, cur, m, n);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Mono> monotone_maps(int m, int n) {
  std::vector<Mono> out;
  if (m >= 0 && n < 0) return out;
  Mono cur;
  extend(out, cur, m, n);
  return out;
}

Mono coface_map(int n, int k) {
  Mono a(n);
  for (int p = 0; p < n; ++p) a[p] = p < k ? p : p + 1;
  return a;
}

Mono codegeneracy_map(int n, int k) {
  Mono a(n + 2);
  for (int p = 0; p <= n + 1; ++p) a[p] = p <= k ? p : p - 1;
  return a;
}

Mono identity_map(int n) {
  Mono a(n + 1);
  for (int p = 0; p <= n; ++p) a[p] = p;
  return a;
}

Mono reversal_map(int n) {
  Mono a(n + 1);
  for (int p = 0; p <= n; ++p) a[p] = n - p;
  return a;
}

Mono compose(const Mono& a, const Mono& b) {
  Mono c(b.size());
  for (std::size_t p = 0; p < b.size(); ++p) c[p] = a[b[p]];
  return c;
}

bool is_monotone(const Mono& a) {
  for (std::size_t p = 1; p < a.size(); ++p)
    if (a[p] < a[p - 1]) return false;
  return true;
}

bool is_injective(const Mono& a) {
  for (std::size_t p = 1; p < a.size(); ++p)
    if (a[p] == a[p - 1]) return false;
  return true;
}

bool is_surjective(const Mono& a, int n) {
  if (a.empty()) return n < 0;
  if (a.front() != 0 || a.back() != n) return false;
  for (std::size_t p = 1; p < a.size(); ++p)
    if (a[p] - a[p - 1] > 1) return false;
  return true;
}

std::vector<DeltaGenerator> factor(const Mono& alpha, int n) {
  assert(is_monotone(alpha));
  std::vector<DeltaGenerator> steps;
  // surjective part: repeatedly collapse the first repeated pair
  Mono image = alpha;
  for (;;) {
    std::size_t p = 1;
    while (p < image.size() && image[p] != image[p - 1]) ++p;
    if (p >= image.size()) break;
    const int m = static_cast<int>(image.size()) - 1;
    steps.push_back({DeltaGenerator::Kind::codegeneracy, m - 1, static_cast<int>(p - 1)});
    image.erase(image.begin() + static_cast<std::ptrdiff_t>(p));
  }
  // injective part: insert missing values in increasing order
  int r = static_cast<int>(image.size()) - 1;
  std::size_t q = 0;
  for (int v = 0; v <= n; ++v) {
    if (q < image.size() && image[q] == v) {
      ++q;
      continue;
    }
    ++r;
    steps.push_back({DeltaGenerator::Kind::coface, r, v});
  }
  return steps;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint32_t monotone_rank(const Mono& a, int n) {
  const int len = static_cast<int>(a.size());
  std::uint64_t r = 0;
  int prev = 0;
  for (int p = 0; p < len; ++p) {
    const int rest = len - 1 - p;
    // sequences with a smaller entry here: the tail is any monotone sequence of length rest in [v, n]
    for (int v = prev; v < a[p]; ++v) r += binomial(n - v + rest, rest);
    prev = a[p];
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace wurst
