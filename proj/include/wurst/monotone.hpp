#pragma once

#include <cstdint>
#include <vector>

namespace wurst {

/// A weakly monotone map [m] -> [n], stored as its value sequence of length m+1.
using Mono = std::vector<int>;

/// All monotone maps [m] -> [n] in lexicographic order. m = -1 yields the single empty map.
std::vector<Mono> monotone_maps(int m, int n);

/// Coface delta_k : [n-1] -> [n], the injection missing k.
Mono coface_map(int n, int k);
/// Codegeneracy sigma_k : [n+1] -> [n], hitting k twice.
Mono codegeneracy_map(int n, int k);
/// Identity of [n].
Mono identity_map(int n);
/// Order reversal of [n].
Mono reversal_map(int n);

/// (a o b)(p) = a(b(p)).
Mono compose(const Mono& a, const Mono& b);

bool is_monotone(const Mono& a);
bool is_injective(const Mono& a);
bool is_surjective(const Mono& a, int n);

/// One elementary step of the epi-mono factorization of a monotone map.
struct DeltaGenerator {
  enum class Kind : std::uint8_t { coface, codegeneracy };
  Kind kind;
  int target;  // target object [target]
  int index;
};

/// Writes alpha : [m] -> [n] as a composite of generators, listed in the order they are
/// applied (first codegeneracies, then cofaces).
std::vector<DeltaGenerator> factor(const Mono& alpha, int n);

/// Binomial coefficient for small arguments.
std::uint64_t binomial(int n, int k);

/// Position of a monotone map [m] -> [n] in the lexicographic order of monotone_maps(m, n),
/// i.e. its simplex id in standard_simplex(n).
std::uint32_t monotone_rank(const Mono& a, int n);

}  // namespace wurst
