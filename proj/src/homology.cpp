#include "wurst/homology.hpp"

#include <algorithm>
#include <numeric>

#include "wurst/errors.hpp"

namespace wurst {

namespace {

std::vector<std::vector<SimplexId>> index_of_basis(const SimplicialSet& x, const std::vector<std::vector<SimplexId>>& basis) {
  std::vector<std::vector<SimplexId>> idx(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    idx[k].assign(x.size(static_cast<int>(k)), kNoSimplex);
    for (std::size_t b = 0; b < basis[k].size(); ++b) idx[k][basis[k][b]] = static_cast<SimplexId>(b);
  }
  return idx;
}

// Matrix of the induced map on normalized chains in degree k.
IntMatrix chain_map(const SimplicialMap& f, const ChainComplex& c, const ChainComplex& d,
                    const std::vector<std::vector<SimplexId>>& d_index, int k) {
  IntMatrix m(d.dims[k], c.dims[k]);
  for (std::size_t col = 0; col < c.dims[k]; ++col) {
    const SimplexId y = f(k, c.basis[k][col]);
    if (d_index[k][y] != kNoSimplex) m.at(d_index[k][y], col) = 1;
  }
  return m;
}

class Smith {
 public:
  explicit Smith(IntMatrix m) : m_(std::move(m)) {}

  SmithForm run() {
    SmithForm out;
    const std::size_t limit = std::min(m_.rows, m_.cols);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!place_pivot(t, t, m_.rows, t, m_.cols)) break;
      while (true) {
        bool clean = true;
        for (std::size_t r = t + 1; r < m_.rows; ++r)
          if (!m_.at(r, t).is_zero()) {
            const Integer q = m_.at(r, t) / m_.at(t, t);
            add_row(r, t, -q, t);
            if (!m_.at(r, t).is_zero()) clean = false;
          }
        for (std::size_t c = t + 1; c < m_.cols; ++c)
          if (!m_.at(t, c).is_zero()) {
            const Integer q = m_.at(t, c) / m_.at(t, t);
            add_col(c, t, -q, t);
            if (!m_.at(t, c).is_zero()) clean = false;
          }
        if (!clean) {
          place_pivot_cross(t);
          continue;
        }
        if (const auto bad = non_divisible(t)) {
          add_row(t, *bad, 1, t);
          continue;
        }
        break;
      }
      out.factors.push_back(abs(m_.at(t, t)));
      ++out.rank;
    }
    return out;
  }

 private:
  // Moves the smallest nonzero entry of the block into (t, t); false if the block is zero.
  bool place_pivot(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    std::size_t br = 0, bc = 0;
    bool found = false;
    Integer best;
    for (std::size_t r = r0; r < r1; ++r)
      for (std::size_t c = c0; c < c1; ++c) {
        const auto& v = m_.at(r, c);
        if (v.is_zero()) continue;
        if (!found || abs(v) < best) {
          best = abs(v);
          br = r;
          bc = c;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  // Smallest nonzero entry of row t and column t, tie-broken by position.
  void place_pivot_cross(std::size_t t) {
    std::size_t br = t, bc = t;
    Integer best = abs(m_.at(t, t));
    for (std::size_t r = t + 1; r < m_.rows; ++r)
      if (!m_.at(r, t).is_zero() && abs(m_.at(r, t)) < best) {
        best = abs(m_.at(r, t));
        br = r;
        bc = t;
      }
    for (std::size_t c = t + 1; c < m_.cols; ++c)
      if (!m_.at(t, c).is_zero() && abs(m_.at(t, c)) < best) {
        best = abs(m_.at(t, c));
        br = t;
        bc = c;
      }
    swap_rows(t, br);
    swap_cols(t, bc);
  }

  std::optional<std::size_t> non_divisible(std::size_t t) const {
    const Integer& p = m_.at(t, t);
    for (std::size_t r = t + 1; r < m_.rows; ++r)
      for (std::size_t c = t + 1; c < m_.cols; ++c)
        if (!Integer(m_.at(r, c) % p).is_zero()) return r;
    return std::nullopt;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m_.cols; ++c) std::swap(m_.at(a, c), m_.at(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m_.rows; ++r) std::swap(m_.at(r, a), m_.at(r, b));
  }
  // row[dst] += q * row[src], columns from `from` on (earlier columns are zero in both).
  void add_row(std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
    for (std::size_t c = from; c < m_.cols; ++c)
      if (!m_.at(src, c).is_zero()) m_.at(dst, c) += q * m_.at(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
    for (std::size_t r = from; r < m_.rows; ++r)
      if (!m_.at(r, src).is_zero()) m_.at(r, dst) += q * m_.at(r, src);
  }

  IntMatrix m_;
};

}  // namespace

bool IntMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](const Integer& v) { return v.is_zero(); });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw InputError("multiply: shape mismatch");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols; ++c) out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return out;
}

bool ChainComplex::squares_to_zero() const {
  for (std::size_t k = 2; k < boundary.size(); ++k)
    if (!multiply(boundary[k - 1], boundary[k]).is_zero()) return false;
  return true;
}

ChainComplex normalized_chains(const SimplicialSet& x) {
  ChainComplex c;
  c.cap = x.cap();
  for (int k = 0; k <= c.cap; ++k) {
    c.basis.push_back(x.nondegenerate(k));
    c.dims.push_back(c.basis.back().size());
  }
  const auto idx = index_of_basis(x, c.basis);
  c.boundary.emplace_back(0, c.dims[0]);
  for (int k = 1; k <= c.cap; ++k) {
    IntMatrix m(c.dims[k - 1], c.dims[k]);
    for (std::size_t col = 0; col < c.dims[k]; ++col)
      for (int i = 0; i <= k; ++i) {
        const SimplexId f = x.face(k, i, c.basis[k][col]);
        if (idx[k - 1][f] != kNoSimplex) m.at(idx[k - 1][f], col) += (i % 2 == 0) ? 1 : -1;
      }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

SmithForm smith_normal_form(IntMatrix m) { return Smith(std::move(m)).run(); }

namespace {

HomologyGroup group(const ChainComplex& c, int k, std::size_t rank_out, const SmithForm& in) {
  HomologyGroup h;
  h.betti = c.dims[k] - rank_out - in.rank;
  for (const auto& f : in.factors)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

void require_degree(const ChainComplex& c, int k) {
  if (k < 0) throw InputError("homology: negative degree");
  if (k >= c.cap)
    throw CapError("homology: degree " + std::to_string(k) + " is not below the cap " + std::to_string(c.cap));
}

}  // namespace

HomologyGroup homology(const ChainComplex& c, int k) {
  require_degree(c, k);
  const std::size_t rank_out = k == 0 ? 0 : smith_normal_form(c.boundary[k]).rank;
  return group(c, k, rank_out, smith_normal_form(c.boundary[k + 1]));
}

HomologyGroup homology(const SimplicialSet& x, int k) { return homology(normalized_chains(x), k); }

std::vector<HomologyGroup> homology_table(const ChainComplex& c, int up_to) {
  require_degree(c, up_to);
  std::vector<HomologyGroup> out;
  std::size_t rank_out = 0;
  for (int k = 0; k <= up_to; ++k) {
    const auto in = smith_normal_form(c.boundary[k + 1]);
    out.push_back(group(c, k, rank_out, in));
    rank_out = in.rank;
  }
  return out;
}

long long euler_characteristic(const ChainComplex& c, int up_to) {
  long long chi = 0;
  for (int k = 0; k <= up_to && k <= c.cap; ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(c.dims[k]);
  return chi;
}

std::size_t path_components(const SimplicialSet& x) {
  std::vector<SimplexId> parent(x.size(0));
  std::iota(parent.begin(), parent.end(), SimplexId{0});
  auto find = [&](SimplexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = x.size(0);
  if (x.cap() >= 1)
    for (SimplexId e = 0; e < x.size(1); ++e) {
      const SimplexId a = find(x.face(1, 0, e)), b = find(x.face(1, 1, e));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  return components;
}

ContractibilityReport contractibility_evidence(const SimplicialSet& x, int up_to) {
  ContractibilityReport rep;
  rep.connected = !x.empty() && path_components(x) == 1;
  const auto table = homology_table(normalized_chains(x), up_to);
  for (int k = 1; k <= up_to; ++k) {
    const auto& h = table[k];
    if (!h.zero()) {
      rep.failing_degree = k;
      rep.witness = h;
      break;
    }
  }
  return rep;
}

ChainComplex mapping_cone(const SimplicialMap& f) {
  const auto c = normalized_chains(f.source()), d = normalized_chains(f.target());
  const auto d_index = index_of_basis(f.target(), d.basis);
  ChainComplex cone;
  cone.cap = std::min(c.cap + 1, d.cap);
  auto cdim = [&](int k) { return k < 0 ? std::size_t{0} : c.dims[k]; };
  for (int k = 0; k <= cone.cap; ++k) {
    cone.dims.push_back(cdim(k - 1) + d.dims[k]);
    cone.basis.emplace_back();  // cone generators are not simplices
  }
  cone.boundary.emplace_back(0, cone.dims[0]);
  for (int k = 1; k <= cone.cap; ++k) {
    IntMatrix m(cone.dims[k - 1], cone.dims[k]);
    const std::size_t top = cdim(k - 2), left = cdim(k - 1);
    if (k >= 2)
      for (std::size_t r = 0; r < top; ++r)
        for (std::size_t col = 0; col < left; ++col) m.at(r, col) = -c.boundary[k - 1].at(r, col);
    {
      const auto fk = chain_map(f, c, d, d_index, k - 1);
      for (std::size_t r = 0; r < d.dims[k - 1]; ++r)
        for (std::size_t col = 0; col < left; ++col) m.at(top + r, col) = fk.at(r, col);
    }
    for (std::size_t r = 0; r < d.dims[k - 1]; ++r)
      for (std::size_t col = 0; col < d.dims[k]; ++col) m.at(top + r, left + col) = d.boundary[k].at(r, col);
    cone.boundary.push_back(std::move(m));
  }
  return cone;
}

bool ConeReport::acyclic() const {
  return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& h) { return h.zero(); });
}

ConeReport cone_acyclicity(const SimplicialMap& f, int up_to) {
  const int cap = std::min(f.source().cap(), f.target().cap());
  if (up_to < 0 || up_to >= cap - 1)
    throw CapError("cone_acyclicity: need up_to < cap - 1 (cap " + std::to_string(cap) + ")");
  ConeReport rep;
  rep.groups = homology_table(mapping_cone(f), up_to);
  return rep;
}

}  // namespace wurst
