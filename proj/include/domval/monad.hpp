#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domval/integration.hpp"
#include "domval/poset.hpp"
#include "domval/rational.hpp"
#include "domval/valuation.hpp"

namespace domval {

// A map from a finite poset into the valuations on another, continuous in the
// stochastic order: x <= y implies table[x] <= table[y]. Continuity is
// validated at construction with the flow check, so every KleisliMap in
// circulation is a legitimate Kleisli arrow of the valuations monad.
class KleisliMap {
 public:
  // Raises Errc::continuity_violation if the table is not monotone in the
  // stochastic order, Errc::poset_mismatch if an entry lives elsewhere.
  static KleisliMap make(PosetPtr source, PosetPtr target, std::vector<SimpleValuation> table);
  // x |-> dirac(x), the unit as a Kleisli arrow.
  static KleisliMap from_unit(PosetPtr poset);
  // x |-> dirac(g(x)), a monotone map lifted along the unit.
  static KleisliMap from_monotone(const MonotoneMap& g);
  static KleisliMap constant(PosetPtr source, const SimpleValuation& value);

  const PosetPtr& source() const { return source_; }
  const PosetPtr& target() const { return target_; }
  const SimpleValuation& at(std::size_t i) const { return table_[i]; }
  const std::vector<SimpleValuation>& table() const { return table_; }

 private:
  KleisliMap(PosetPtr source, PosetPtr target, std::vector<SimpleValuation> table)
      : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {}

  PosetPtr source_;
  PosetPtr target_;
  std::vector<SimpleValuation> table_;
};

// A monotone map left x right -> [0,1] on the componentwise product order,
// stored row-major in the left index. Monotonicity on the product order is
// validated at construction.
class BiIntegrand {
 public:
  static BiIntegrand make(PosetPtr left, PosetPtr right, std::vector<Rational> values);
  static BiIntegrand constant(PosetPtr left, PosetPtr right, Rational value);

  const PosetPtr& left() const { return left_; }
  const PosetPtr& right() const { return right_; }
  const Rational& at(std::size_t i, std::size_t j) const { return values_[i * right_->size() + j]; }
  const std::vector<Rational>& values() const { return values_; }

  // h(x_i, .) as an integrand on the right poset; monotone because h is.
  Integrand slice_left(std::size_t i) const;
  // h(., y_j) on the left poset.
  Integrand slice_right(std::size_t j) const;
  // The same function as an integrand on product(left, right). Element order
  // of product() matches the row-major layout here.
  Integrand on_product() const;

 private:
  BiIntegrand(PosetPtr left, PosetPtr right, std::vector<Rational> values)
      : left_(std::move(left)), right_(std::move(right)), values_(std::move(values)) {}

  PosetPtr left_;
  PosetPtr right_;
  std::vector<Rational> values_;
};

// The unit: the Dirac valuation at x.
SimpleValuation unit(PosetPtr poset, std::size_t x);

// Functor action: atoms pushed through g. Satisfies
// mass(vmap(g, nu), U) = mass(nu, preimage(g, U)) for every upper set U.
SimpleValuation vmap(const MonotoneMap& g, const SimpleValuation& nu);

// Kleisli extension: the mixture sum_i w_i * f(x_i). For every upper set U,
// mass(kleisli_ext(f, nu), U) = integrate(x |-> f(x)(U), nu).
SimpleValuation kleisli_ext(const KleisliMap& f, const SimpleValuation& nu);

// Left strength: dirac(x) paired with nu, landing on product(d, nu.poset()).
SimpleValuation strength(const PosetPtr& d, std::size_t x, const SimpleValuation& nu);

// Right strength: nu paired with dirac(y), landing on product(nu.poset(), e).
SimpleValuation costrength(const SimpleValuation& nu, const PosetPtr& e, std::size_t y);

// The independent product: atoms (x_i, y_j) with weights w_i * v_j on
// product(nu.poset(), mu.poset()). Equals both iterated double-strength
// composites; their agreement is commutativity on this fragment.
SimpleValuation product_valuation(const SimpleValuation& nu, const SimpleValuation& mu);

struct FubiniResult {
  Rational lhs;  // inner integral over the right poset, outer over the left
  Rational rhs;  // the other order
  bool equal;
};

// Both iterated integrals of h against (nu, mu), each inner integral checked
// monotone before the outer integration runs.
FubiniResult fubini_check(const SimpleValuation& nu, const SimpleValuation& mu,
                          const BiIntegrand& h);

// integral of h against kleisli_ext(f, mu) vs the iterated form
// integral over C of (integral of h against f(t)) d mu. Exact equality.
bool disintegration_check(const KleisliMap& f, const SimpleValuation& mu, const Integrand& h);

struct CentralWitness {
  PosetPtr other;        // the poset E of the failing trial
  SimpleValuation mu;    // the valuation on E
  BiIntegrand h;         // the bivariate integrand
  std::uint64_t trial;   // trial index that produced it
  Rational lhs;
  Rational rhs;
};

struct CentralReport {
  bool falsified = false;
  std::optional<CentralWitness> witness;
  std::uint64_t trials = 0;
  // Digest of every generated (E, mu, h) instance; two runs with the same
  // seed produce the same digest, making determinism checkable.
  std::uint64_t stream_digest = 0;
};

// Randomized refutation attempt on the centrality property of nu: generates
// (E, mu, h) instances and reports the first trial where the two iterated
// integrals differ. Simple valuations are central, so for every input this
// can produce the report must come back unfalsified; the operation exists to
// make that claim executable.
//
// At finite scale the quantification over "all valuations on E" collapses to
// simple valuations - there are no others on a finite poset - so the
// generator draws exactly those.
CentralReport central_falsifier(const SimpleValuation& nu, std::uint64_t trials,
                                std::uint64_t seed);

struct LawCount {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct MonadLawReport {
  LawCount left_unit;    // f-dagger(dirac(x)) = f(x)
  LawCount right_unit;   // unit-dagger(nu) = nu
  LawCount associativity;  // (g-dagger of f)-dagger = g-dagger of f-dagger
  std::uint64_t trials = 0;

  bool all_passed() const {
    return left_unit.failed == 0 && right_unit.failed == 0 && associativity.failed == 0;
  }
};

// Monad laws on random instances (posets up to max_elems), each side computed
// independently and compared as exact atom tables.
MonadLawReport check_monad_laws(std::uint64_t trials, std::uint64_t seed,
                                std::size_t max_elems = 6);

}  // namespace domval
