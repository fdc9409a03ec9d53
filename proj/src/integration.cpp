#include "domval/integration.hpp"

#include <algorithm>

namespace domval {

Integrand Integrand::make(PosetPtr poset, std::vector<Rational> values) {
  const std::size_t n = poset->size();
  if (values.size() != n) {
    raise(Errc::unknown_element, "integrand is not total on poset '" + poset->name() + "'");
  }
  for (const auto& v : values) {
    if (!in_unit_interval(v)) {
      raise(Errc::invalid_value, "integrand value " + v.to_string() + " outside [0,1]");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (poset->leq(i, j) && values[i] > values[j]) {
        raise(Errc::not_monotone, "integrand decreases from '" + poset->element(i) + "' to '" +
                                      poset->element(j) + "'");
      }
    }
  }
  return Integrand(std::move(poset), std::move(values));
}

Integrand Integrand::constant(PosetPtr poset, Rational value) {
  std::vector<Rational> values(poset->size(), value);
  return make(std::move(poset), std::move(values));
}

Rational integrate(const Integrand& h, const SimpleValuation& nu) {
  if (!same_poset(h.poset(), nu.poset())) {
    raise(Errc::poset_mismatch, "integrand and valuation on different posets");
  }
  Rational sum;
  for (const auto& [idx, w] : nu.atoms()) sum += w * h.at(idx);
  return sum;
}

UpperSet threshold_set(const Integrand& h, const Rational& t) {
  std::vector<bool> members(h.poset()->size(), false);
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = h.at(i) >= t;
  return UpperSet::make(h.poset(), std::move(members));
}

Rational integrate_riemann_oracle(const Integrand& h, const SimpleValuation& nu) {
  if (!same_poset(h.poset(), nu.poset())) {
    raise(Errc::poset_mismatch, "integrand and valuation on different posets");
  }
  // The defining expression integrates t |-> nu({x : h(x) > t}) over [0,1].
  // Let 0 = t_0 < t_1 < ... < t_k be the distinct values of h together with
  // 0. For t in [t_{j-1}, t_j) the strict superlevel set {h > t} equals the
  // closed one {h >= t_j}, because h takes no value inside (t_{j-1}, t_j);
  // and for t >= t_k it is empty. So the integrand in t is a step function
  // and the Riemann integral collapses to the exact finite sum
  //   sum_j (t_j - t_{j-1}) * nu({h >= t_j}).
  // Note the half-open (t, 1] becomes a closed threshold at the NEXT value
  // t_j, not at t_{j-1}; using {h >= t_{j-1}} would overcount by the mass of
  // the level set of t_{j-1}.
  std::vector<Rational> thresholds = h.values();
  thresholds.push_back(Rational(0));
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  Rational sum;
  for (std::size_t j = 1; j < thresholds.size(); ++j) {
    UpperSet level = threshold_set(h, thresholds[j]);
    sum += (thresholds[j] - thresholds[j - 1]) * nu.mass(level);
  }
  return sum;
}

}  // namespace domval
