#pragma once

#include <vector>

#include "domval/poset.hpp"
#include "domval/rational.hpp"
#include "domval/valuation.hpp"

namespace domval {

// A monotone map from a finite poset into [0,1], i.e. a Scott-continuous
// [0,1]-valued function at finite scale. Total and validated at construction.
class Integrand {
 public:
  // values[i] is the value at element i; raises Errc::invalid_value for
  // entries outside [0,1] and Errc::not_monotone for order violations.
  static Integrand make(PosetPtr poset, std::vector<Rational> values);
  static Integrand constant(PosetPtr poset, Rational value);

  const PosetPtr& poset() const { return poset_; }
  const Rational& at(std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }

 private:
  Integrand(PosetPtr poset, std::vector<Rational> values)
      : poset_(std::move(poset)), values_(std::move(values)) {}

  PosetPtr poset_;
  std::vector<Rational> values_;
};

// Integral of h against a simple valuation in closed form: the weighted sum
// of h over the atoms. Equal to integrate_riemann_oracle on every input.
Rational integrate(const Integrand& h, const SimpleValuation& nu);

// The same integral computed from the defining Riemann expression
// integral_0^1 nu(h^{-1}(t,1]) dt, reduced exactly to a finite sum over the
// threshold sets of h. Kept as an independent oracle for integrate().
Rational integrate_riemann_oracle(const Integrand& h, const SimpleValuation& nu);

// The threshold set {x : h(x) >= t}, upper by monotonicity of h.
UpperSet threshold_set(const Integrand& h, const Rational& t);

}  // namespace domval
