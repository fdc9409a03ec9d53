#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domval/integration.hpp"
#include "domval/poset.hpp"
#include "domval/rational.hpp"
#include "domval/valuation.hpp"

namespace domval {

class BiIntegrand;
class KleisliMap;

// Deterministic pseudo-random stream (splitmix64). The standard library
// distributions are implementation-defined, so everything random in this
// project goes through this type: identical seeds give identical streams on
// every platform, which the reproducibility contracts require.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, n); n must be positive. The modulo bias is
  // irrelevant for test-instance generation and keeps the stream portable.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  bool coin() { return next() & 1; }

  // k/denominator with k drawn from {0,...,max_numerator}.
  Rational grid(std::uint64_t max_numerator, std::uint64_t denominator = 64) {
    return Rational(static_cast<long long>(below(max_numerator + 1)),
                    static_cast<long long>(denominator));
  }

  // An independent stream for trial number `index` of the stream seeded here.
  Rng split(std::uint64_t index) const {
    Rng derived(state_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    derived.next();
    return derived;
  }

 private:
  std::uint64_t state_;
};

// Random poset with 1..max_elems elements: a random permutation serves as a
// linear extension and covers are inserted forward along it, so the result is
// acyclic by construction.
PosetPtr random_poset(Rng& rng, std::size_t max_elems, const std::string& name = "g");

// Random simple valuation. Masses live on the k/64 grid; the subprobability
// constraint is met constructively by drawing each weight from the budget
// left by the previous ones.
SimpleValuation random_valuation(Rng& rng, PosetPtr poset);

// Random upper set: a random subset, closed upward.
UpperSet random_upper_set(Rng& rng, PosetPtr poset);

// Random monotone [0,1]-valued map: random k/64 seeds completed monotonically
// by taking the max over each element's downward cone.
Integrand random_integrand(Rng& rng, PosetPtr poset);

// Random monotone bivariate map, same completion scheme on the product order.
BiIntegrand random_bi_integrand(Rng& rng, PosetPtr left, PosetPtr right);

// Random monotone map src -> tgt: ranks along a random ascending chain in
// tgt, with the ranks themselves monotonically completed.
MonotoneMap random_monotone_map(Rng& rng, PosetPtr source, PosetPtr target);

// Random Scott-continuous Kleisli map src -> valuations on tgt: a convex
// mixture of dirac-composed random monotone maps. Continuity holds by
// construction and is re-validated by the constructor's flow check.
KleisliMap random_kleisli_map(Rng& rng, PosetPtr source, PosetPtr target);

}  // namespace domval
