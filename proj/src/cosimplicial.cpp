#include "wurst/cosimplicial.hpp"

#include <map>

namespace wurst {

CosimplicialSSet::CosimplicialSSet(std::vector<SimplicialSet> terms, std::vector<std::vector<SimplicialMap>> coface,
                                   std::vector<std::vector<SimplicialMap>> codegen)
    : term_(std::move(terms)), coface_(std::move(coface)), codegen_(std::move(codegen)) {
  const auto nt = term_.size();
  if (nt == 0) throw InputError("cosimplicial object: no terms");
  for (const auto& t : term_)
    if (t.cap() != term_[0].cap()) throw InputError("cosimplicial object: terms have different caps");
  if (coface_.size() != nt || codegen_.size() != nt) throw InputError("cosimplicial object: structure map shape");
  for (std::size_t n = 0; n < nt; ++n) {
    if (coface_[n].size() != (n >= 1 ? n + 1 : 0) || codegen_[n].size() != (n + 1 < nt ? n + 1 : 0))
      throw InputError("cosimplicial object: wrong number of structure maps at " + std::to_string(n));
  }
}

SimplicialMap CosimplicialSSet::apply(const Mono& alpha, int n) const {
  const int m = static_cast<int>(alpha.size()) - 1;
  SimplicialMap f = SimplicialMap::identity(term(m));
  for (const auto& st : factor(alpha, n)) {
    if (st.kind == DeltaGenerator::Kind::codegeneracy) {
      f = compose(codegen(st.target, st.index), f);
    } else {
      f = compose(coface(st.target, st.index), f);
    }
  }
  return f;
}

SimplexId CosimplicialSSet::apply_at(const Mono& alpha, int n, int level, SimplexId x) const {
  for (const auto& st : factor(alpha, n))
    x = st.kind == DeltaGenerator::Kind::codegeneracy ? codegen(st.target, st.index)(level, x)
                                                       : coface(st.target, st.index)(level, x);
  return x;
}

std::optional<std::string> CosimplicialSSet::check_identities() const {
  const int N = cocap();
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= N; ++m)
      for (const auto& alpha : monotone_maps(m, n)) {
        const auto fa = apply(alpha, n);
        std::vector<std::pair<Mono, int>> gens;
        if (n + 1 <= N)
          for (int k = 0; k <= n + 1; ++k) gens.emplace_back(coface_map(n + 1, k), n + 1);
        for (int k = 0; k < n; ++k) gens.emplace_back(codegeneracy_map(n - 1, k), n - 1);
        for (const auto& [g, t] : gens) {
          const auto lhs = apply(compose(g, alpha), t);
          const auto rhs = compose(apply(g, t), fa);
          if (!(lhs == rhs))
            return "cosimplicial identity fails for " + sequence_label(alpha) + " followed by " + sequence_label(g);
        }
      }
  return std::nullopt;
}

CosimplicialSSet CosimplicialSSet::truncate(int cocap) const {
  if (cocap > this->cocap()) throw CapError("truncate: cocap beyond available terms");
  std::vector<SimplicialSet> t(term_.begin(), term_.begin() + cocap + 1);
  std::vector<std::vector<SimplicialMap>> cf(coface_.begin(), coface_.begin() + cocap + 1);
  std::vector<std::vector<SimplicialMap>> cd(codegen_.begin(), codegen_.begin() + cocap + 1);
  cd[static_cast<std::size_t>(cocap)].clear();
  return CosimplicialSSet(std::move(t), std::move(cf), std::move(cd));
}

CosimplicialSSet CosimplicialSSet::reversed() const {
  auto cf = coface_;
  auto cd = codegen_;
  for (auto& v : cf) std::reverse(v.begin(), v.end());
  for (auto& v : cd) std::reverse(v.begin(), v.end());
  return CosimplicialSSet(term_, std::move(cf), std::move(cd));
}

CosimplicialSSet make_cosimplicial(std::vector<SimplicialSet> terms,
                                   const std::function<SimplicialMap(const Mono&, int, int)>& act) {
  const int N = static_cast<int>(terms.size()) - 1;
  std::vector<std::vector<SimplicialMap>> cf(terms.size()), cd(terms.size());
  for (int n = 0; n <= N; ++n) {
    if (n >= 1)
      for (int k = 0; k <= n; ++k) cf[n].push_back(act(coface_map(n, k), n - 1, n));
    if (n + 1 <= N)
      for (int k = 0; k <= n; ++k) cd[n].push_back(act(codegeneracy_map(n, k), n + 1, n));
  }
  return CosimplicialSSet(std::move(terms), std::move(cf), std::move(cd));
}

SimplicialMap delta_map(const Mono& alpha, int m, int n, int cap) {
  const auto src = standard_simplex(m, cap), dst = standard_simplex(n, cap);
  MapComponents c(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k) {
    std::map<Mono, SimplexId> idx;
    const auto targets = monotone_maps(k, n);
    for (SimplexId s = 0; s < targets.size(); ++s) idx.emplace(targets[s], s);
    for (const auto& a : monotone_maps(k, m)) c[k].push_back(idx.at(compose(alpha, a)));
  }
  return SimplicialMap::trusted(src, dst, std::move(c));
}

CosimplicialSSet delta_cosimplicial(int cocap, int cap) {
  std::vector<SimplicialSet> terms;
  for (int n = 0; n <= cocap; ++n) terms.push_back(standard_simplex(n, cap));
  return make_cosimplicial(std::move(terms), [cap](const Mono& a, int m, int n) { return delta_map(a, m, n, cap); });
}

bool CosimplicialTransformation::natural() const {
  for (int n = 0; n <= source.cocap(); ++n) {
    if (n >= 1)
      for (int k = 0; k <= n; ++k)
        if (!(compose(component[n], source.coface(n, k)) == compose(target.coface(n, k), component[n - 1])))
          return false;
    if (n + 1 <= source.cocap())
      for (int k = 0; k <= n; ++k)
        if (!(compose(component[n], source.codegen(n, k)) == compose(target.codegen(n, k), component[n + 1])))
          return false;
  }
  return true;
}

}  // namespace wurst
