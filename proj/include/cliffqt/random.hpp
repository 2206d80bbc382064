#pragma once

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "cliffqt/qtype.hpp"

namespace cliffqt {

/// splitmix64 finaliser; used to derive independent per-trial and
/// per-symbol seeds from one user seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline double default_density(int n) { return n <= 10 ? 1.0 : 0.002; }

namespace detail {

// Draws straight from the engine so streams are identical across standard
// library implementations.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool bernoulli(double p) { return p >= 1.0 || unit() < p; }

  template <Scalar S>
  S coefficient() {
    if constexpr (ScalarTraits<S>::backend == Backend::Exact) {
      // Nonzero numerator in [-9, 9], denominator in {1, 2, 3}.
      long num = static_cast<long>(below(9)) + 1;
      if (below(2)) num = -num;
      const long den = static_cast<long>(below(3)) + 1;
      Rational r(num, den);
      r.canonicalize();
      return r;
    } else {
      double x = 0.0;
      while (x == 0.0) x = 2.0 * unit() - 1.0;
      return x;
    }
  }

  // Uniform r-subset of {0..n-1} as a bit mask.
  std::uint64_t subset(int n, int r) {
    std::uint64_t mask = 0;
    for (int chosen = 0; chosen < r;) {
      const std::uint64_t bit = std::uint64_t{1} << below(static_cast<std::uint64_t>(n));
      if (!(mask & bit)) {
        mask |= bit;
        ++chosen;
      }
    }
    return mask;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace detail

/// Random element of the subspace t: each blade of a rank ≡ k (mod 4) for an
/// atom k̄ ∈ t gets a nonzero real coefficient with probability `density`
/// (imaginary atoms: a purely imaginary one). Deterministic per seed.
/// Small algebras are enumerated; above 2^22 blades the support is sampled
/// per rank with a binomially distributed term count.
template <Scalar S = Rational>
Multivector<S> random_instance(TypeSet t, const Signature& sig, Field field,
                               std::uint64_t seed, double density) {
  if (!(density > 0.0 && density <= 1.0)) throw UsageError("density must lie in (0, 1]");
  if (field == Field::Real && t.has_imaginary())
    throw UsageError("imaginary type atoms require the complex field");
  using Coef = Coefficient<S>;
  std::vector<std::pair<Blade, Coef>> terms;
  if (t.empty()) return Multivector<S>(sig, field);
  detail::Draw draw(seed);
  const int n = sig.n();

  auto wants = [&](int rank, bool imaginary) {
    return t.contains(TypeAtom{main_type_of_rank(rank), imaginary});
  };

  if (n <= 22) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < count; ++m) {
      const int r = std::popcount(m);
      Coef c;
      if (wants(r, false) && draw.bernoulli(density)) c.re = draw.coefficient<S>();
      if (wants(r, true) && draw.bernoulli(density)) c.im = draw.coefficient<S>();
      if (!c.is_zero()) terms.emplace_back(Blade{m}, std::move(c));
    }
    return Multivector<S>::adopt_sorted(sig, field, std::move(terms));
  }

  std::mt19937_64 counter(mix_seed(seed, 0xC0FFEE));
  for (int r = 0; r <= n; ++r)
    for (bool imaginary : {false, true}) {
      if (!wants(r, imaginary)) continue;
      const std::uint64_t population = binomial(n, r);
      std::binomial_distribution<std::uint64_t> how_many(population, density);
      const std::uint64_t target = how_many(counter);
      std::unordered_set<std::uint64_t> seen;
      while (seen.size() < target) {
        const std::uint64_t m = draw.subset(n, r);
        if (!seen.insert(m).second) continue;
        Coef c;
        (imaginary ? c.im : c.re) = draw.coefficient<S>();
        terms.emplace_back(Blade{m}, std::move(c));
      }
    }
  return Multivector<S>::from_terms(sig, field, std::move(terms));
}

}  // namespace cliffqt
