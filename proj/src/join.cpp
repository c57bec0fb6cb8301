#include "wurst/constructions.hpp"

namespace wurst {

Join::Join(SimplicialSet x, SimplicialSet y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.cap() != y_.cap()) throw InputError("join: caps differ");
  const int cap = x_.cap();
  offset_.resize(static_cast<std::size_t>(cap) + 1);
  SimplicialSet::Tables t;
  t.cap = cap;
  t.count.resize(static_cast<std::size_t>(cap) + 1);
  t.face.resize(static_cast<std::size_t>(cap) + 1);
  t.degen.resize(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    std::size_t total = x_.size(n) + y_.size(n);
    for (int i = 0; i <= n - 1; ++i) {
      offset_[n].push_back(total);
      total += x_.size(i) * y_.size(n - 1 - i);
    }
    t.count[n] = total;
  }
  const bool labels = x_.has_labels() || y_.has_labels();
  if (labels) t.labels.resize(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    if (n >= 1) t.face[n].assign(static_cast<std::size_t>(n) + 1, std::vector<SimplexId>(t.count[n]));
    if (n + 1 <= cap) t.degen[n].assign(static_cast<std::size_t>(n) + 1, std::vector<SimplexId>(t.count[n]));
    for (SimplexId s = 0; s < t.count[n]; ++s) {
      const Part p = decode(n, s);
      switch (p.kind) {
        case Part::Kind::left:
          if (n >= 1)
            for (int k = 0; k <= n; ++k) t.face[n][k][s] = left(n - 1, x_.face(n, k, p.x));
          if (n + 1 <= cap)
            for (int k = 0; k <= n; ++k) t.degen[n][k][s] = left(n + 1, x_.degen(n, k, p.x));
          if (labels) t.labels[n].push_back(x_.label(n, p.x) + "*");
          break;
        case Part::Kind::right:
          if (n >= 1)
            for (int k = 0; k <= n; ++k) t.face[n][k][s] = right(n - 1, y_.face(n, k, p.y));
          if (n + 1 <= cap)
            for (int k = 0; k <= n; ++k) t.degen[n][k][s] = right(n + 1, y_.degen(n, k, p.y));
          if (labels) t.labels[n].push_back("*" + y_.label(n, p.y));
          break;
        case Part::Kind::pair: {
          const int i = p.i;
          const int j = n - 1 - i;
          for (int k = 0; k <= n && n >= 1; ++k) {
            SimplexId f;
            if (k <= i) {
              f = i == 0 ? right(n - 1, p.y) : pair(i - 1, j, x_.face(i, k, p.x), p.y);
            } else {
              const int kk = k - i - 1;
              f = j == 0 ? left(n - 1, p.x) : pair(i, j - 1, p.x, y_.face(j, kk, p.y));
            }
            t.face[n][k][s] = f;
          }
          if (n + 1 <= cap)
            for (int k = 0; k <= n; ++k)
              t.degen[n][k][s] = k <= i ? pair(i + 1, j, x_.degen(i, k, p.x), p.y)
                                        : pair(i, j + 1, p.x, y_.degen(j, k - i - 1, p.y));
          if (labels) t.labels[n].push_back(x_.label(i, p.x) + "*" + y_.label(j, p.y));
          break;
        }
      }
    }
  }
  set_ = SimplicialSet(std::move(t));
}

SimplexId Join::pair(int i, int j, SimplexId x, SimplexId y) const {
  const int n = i + j + 1;
  return static_cast<SimplexId>(offset_[n][i] + x * y_.size(j) + y);
}

Join::Part Join::decode(int n, SimplexId s) const {
  if (s < x_.size(n)) return Part{Part::Kind::left, n, s, kNoSimplex};
  if (s < x_.size(n) + y_.size(n)) return Part{Part::Kind::right, n, kNoSimplex, static_cast<SimplexId>(s - x_.size(n))};
  int i = n - 1;
  while (offset_[n][i] > s) --i;
  const int j = n - 1 - i;
  const auto r = s - offset_[n][i];
  return Part{Part::Kind::pair, i, static_cast<SimplexId>(r / y_.size(j)), static_cast<SimplexId>(r % y_.size(j))};
}

SimplicialMap Join::inl() const {
  MapComponents c(static_cast<std::size_t>(x_.cap()) + 1);
  for (int n = 0; n <= x_.cap(); ++n)
    for (SimplexId s = 0; s < x_.size(n); ++s) c[n].push_back(left(n, s));
  return SimplicialMap::trusted(x_, set_, std::move(c));
}

SimplicialMap Join::inr() const {
  MapComponents c(static_cast<std::size_t>(y_.cap()) + 1);
  for (int n = 0; n <= y_.cap(); ++n)
    for (SimplexId s = 0; s < y_.size(n); ++s) c[n].push_back(right(n, s));
  return SimplicialMap::trusted(y_, set_, std::move(c));
}

}  // namespace wurst
