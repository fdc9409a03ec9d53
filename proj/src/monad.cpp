#include "domval/monad.hpp"

#include <algorithm>

#include "domval/generators.hpp"

namespace domval {

KleisliMap KleisliMap::make(PosetPtr source, PosetPtr target,
                            std::vector<SimpleValuation> table) {
  const std::size_t n = source->size();
  if (table.size() != n) {
    raise(Errc::unknown_element, "Kleisli table is not total on poset '" + source->name() + "'");
  }
  for (const auto& v : table) {
    if (!same_poset(v.poset(), target)) {
      raise(Errc::poset_mismatch, "Kleisli table entry lives on poset '" + v.poset()->name() +
                                      "', expected '" + target->name() + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !source->leq(i, j)) continue;
      if (!stochastic_leq_flow(table[i], table[j])) {
        raise(Errc::continuity_violation,
              "Kleisli map not monotone in the stochastic order between '" + source->element(i) +
                  "' and '" + source->element(j) + "'");
      }
    }
  }
  return KleisliMap(std::move(source), std::move(target), std::move(table));
}

KleisliMap KleisliMap::from_unit(PosetPtr poset) {
  std::vector<SimpleValuation> table;
  table.reserve(poset->size());
  for (std::size_t i = 0; i < poset->size(); ++i) {
    table.push_back(SimpleValuation::dirac(poset, i));
  }
  PosetPtr target = poset;
  return KleisliMap(std::move(poset), std::move(target), std::move(table));
}

KleisliMap KleisliMap::from_monotone(const MonotoneMap& g) {
  std::vector<SimpleValuation> table;
  table.reserve(g.source()->size());
  for (std::size_t i = 0; i < g.source()->size(); ++i) {
    table.push_back(SimpleValuation::dirac(g.target(), g.apply(i)));
  }
  return KleisliMap(g.source(), g.target(), std::move(table));
}

KleisliMap KleisliMap::constant(PosetPtr source, const SimpleValuation& value) {
  std::vector<SimpleValuation> table(source->size(), value);
  return KleisliMap(std::move(source), value.poset(), std::move(table));
}

BiIntegrand BiIntegrand::make(PosetPtr left, PosetPtr right, std::vector<Rational> values) {
  const std::size_t nl = left->size();
  const std::size_t nr = right->size();
  if (values.size() != nl * nr) {
    raise(Errc::unknown_element, "bivariate integrand is not total on '" + left->name() + "' x '" +
                                     right->name() + "'");
  }
  for (const auto& v : values) {
    if (!in_unit_interval(v)) {
      raise(Errc::invalid_value, "integrand value " + v.to_string() + " outside [0,1]");
    }
  }
  // Monotone in each coordinate separately iff monotone on the product order.
  for (std::size_t i = 0; i < nl; ++i) {
    for (std::size_t i2 = 0; i2 < nl; ++i2) {
      if (!left->leq(i, i2)) continue;
      for (std::size_t j = 0; j < nr; ++j) {
        if (values[i * nr + j] > values[i2 * nr + j]) {
          raise(Errc::not_monotone, "bivariate integrand decreases in the left coordinate");
        }
      }
    }
  }
  for (std::size_t j = 0; j < nr; ++j) {
    for (std::size_t j2 = 0; j2 < nr; ++j2) {
      if (!right->leq(j, j2)) continue;
      for (std::size_t i = 0; i < nl; ++i) {
        if (values[i * nr + j] > values[i * nr + j2]) {
          raise(Errc::not_monotone, "bivariate integrand decreases in the right coordinate");
        }
      }
    }
  }
  return BiIntegrand(std::move(left), std::move(right), std::move(values));
}

BiIntegrand BiIntegrand::constant(PosetPtr left, PosetPtr right, Rational value) {
  std::vector<Rational> values(left->size() * right->size(), value);
  return make(std::move(left), std::move(right), std::move(values));
}

Integrand BiIntegrand::slice_left(std::size_t i) const {
  std::vector<Rational> values(right_->size());
  for (std::size_t j = 0; j < values.size(); ++j) values[j] = at(i, j);
  return Integrand::make(right_, std::move(values));
}

Integrand BiIntegrand::slice_right(std::size_t j) const {
  std::vector<Rational> values(left_->size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = at(i, j);
  return Integrand::make(left_, std::move(values));
}

Integrand BiIntegrand::on_product() const {
  return Integrand::make(product(left_, right_), values_);
}

SimpleValuation unit(PosetPtr poset, std::size_t x) {
  return SimpleValuation::dirac(std::move(poset), x);
}

SimpleValuation vmap(const MonotoneMap& g, const SimpleValuation& nu) {
  if (!same_poset(nu.poset(), g.source())) {
    raise(Errc::poset_mismatch, "valuation is not on the map's source poset");
  }
  std::vector<SimpleValuation::Atom> atoms;
  atoms.reserve(nu.atoms().size());
  for (const auto& [idx, w] : nu.atoms()) atoms.emplace_back(g.apply(idx), w);
  return SimpleValuation::make(g.target(), std::move(atoms));
}

SimpleValuation kleisli_ext(const KleisliMap& f, const SimpleValuation& nu) {
  if (!same_poset(nu.poset(), f.source())) {
    raise(Errc::poset_mismatch, "valuation is not on the Kleisli map's source poset");
  }
  std::vector<SimpleValuation::Atom> atoms;
  for (const auto& [idx, w] : nu.atoms()) {
    for (const auto& [target_idx, v] : f.at(idx).atoms()) {
      atoms.emplace_back(target_idx, w * v);
    }
  }
  // Total mass is sum_i w_i * mass(f(x_i)) <= sum_i w_i <= 1, so make cannot
  // reject; it still asserts that.
  return SimpleValuation::make(f.target(), std::move(atoms));
}

SimpleValuation strength(const PosetPtr& d, std::size_t x, const SimpleValuation& nu) {
  if (x >= d->size()) {
    raise(Errc::unknown_element, "index out of range in poset '" + d->name() + "'");
  }
  PosetPtr prod = product(d, nu.poset());
  const std::size_t nr = nu.poset()->size();
  std::vector<SimpleValuation::Atom> atoms;
  atoms.reserve(nu.atoms().size());
  for (const auto& [idx, w] : nu.atoms()) atoms.emplace_back(x * nr + idx, w);
  return SimpleValuation::make(std::move(prod), std::move(atoms));
}

SimpleValuation costrength(const SimpleValuation& nu, const PosetPtr& e, std::size_t y) {
  if (y >= e->size()) {
    raise(Errc::unknown_element, "index out of range in poset '" + e->name() + "'");
  }
  PosetPtr prod = product(nu.poset(), e);
  const std::size_t nr = e->size();
  std::vector<SimpleValuation::Atom> atoms;
  atoms.reserve(nu.atoms().size());
  for (const auto& [idx, w] : nu.atoms()) atoms.emplace_back(idx * nr + y, w);
  return SimpleValuation::make(std::move(prod), std::move(atoms));
}

SimpleValuation product_valuation(const SimpleValuation& nu, const SimpleValuation& mu) {
  PosetPtr prod = product(nu.poset(), mu.poset());
  const std::size_t nr = mu.poset()->size();
  std::vector<SimpleValuation::Atom> atoms;
  atoms.reserve(nu.atoms().size() * mu.atoms().size());
  for (const auto& [i, w] : nu.atoms()) {
    for (const auto& [j, v] : mu.atoms()) {
      atoms.emplace_back(i * nr + j, w * v);
    }
  }
  return SimpleValuation::make(std::move(prod), std::move(atoms));
}

FubiniResult fubini_check(const SimpleValuation& nu, const SimpleValuation& mu,
                          const BiIntegrand& h) {
  if (!same_poset(nu.poset(), h.left()) || !same_poset(mu.poset(), h.right())) {
    raise(Errc::poset_mismatch, "fubini operands on mismatched posets");
  }
  const std::size_t nl = h.left()->size();
  const std::size_t nr = h.right()->size();

  // Inner integral over the right poset for each fixed left element; the
  // Integrand constructor is the required monotonicity gate before the outer
  // integration.
  std::vector<Rational> inner_left(nl);
  for (std::size_t i = 0; i < nl; ++i) inner_left[i] = integrate(h.slice_left(i), mu);
  Rational lhs = integrate(Integrand::make(h.left(), std::move(inner_left)), nu);

  std::vector<Rational> inner_right(nr);
  for (std::size_t j = 0; j < nr; ++j) inner_right[j] = integrate(h.slice_right(j), nu);
  Rational rhs = integrate(Integrand::make(h.right(), std::move(inner_right)), mu);

  return FubiniResult{lhs, rhs, lhs == rhs};
}

bool disintegration_check(const KleisliMap& f, const SimpleValuation& mu, const Integrand& h) {
  if (!same_poset(mu.poset(), f.source()) || !same_poset(h.poset(), f.target())) {
    raise(Errc::poset_mismatch, "disintegration operands on mismatched posets");
  }
  Rational direct = integrate(h, kleisli_ext(f, mu));

  std::vector<Rational> inner(f.source()->size());
  for (std::size_t t = 0; t < inner.size(); ++t) inner[t] = integrate(h, f.at(t));
  Rational iterated = integrate(Integrand::make(f.source(), std::move(inner)), mu);

  return direct == iterated;
}

namespace {

std::uint64_t mix_digest(std::uint64_t digest, std::uint64_t value) {
  digest ^= value + 0x9e3779b97f4a7c15ULL + (digest << 6) + (digest >> 2);
  return digest;
}

std::uint64_t digest_rational(std::uint64_t digest, const Rational& r) {
  digest = mix_digest(digest, static_cast<std::uint64_t>(r.num()));
  return mix_digest(digest, static_cast<std::uint64_t>(r.den()));
}

std::uint64_t digest_instance(std::uint64_t digest, const PosetPtr& e, const SimpleValuation& mu,
                              const BiIntegrand& h) {
  digest = mix_digest(digest, e->size());
  for (std::size_t i = 0; i < e->size(); ++i) {
    for (std::size_t j = 0; j < e->size(); ++j) {
      digest = mix_digest(digest, e->leq(i, j) ? 1 : 0);
    }
  }
  for (const auto& [idx, w] : mu.atoms()) {
    digest = mix_digest(digest, idx);
    digest = digest_rational(digest, w);
  }
  for (const auto& v : h.values()) digest = digest_rational(digest, v);
  return digest;
}

}  // namespace

CentralReport central_falsifier(const SimpleValuation& nu, std::uint64_t trials,
                                std::uint64_t seed) {
  if (trials < 1) raise(Errc::invalid_value, "at least one trial required");
  CentralReport report;
  report.trials = trials;
  Rng root(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = root.split(t);
    PosetPtr e = random_poset(rng, 5, "w" + std::to_string(t));
    SimpleValuation mu = random_valuation(rng, e);
    BiIntegrand h = random_bi_integrand(rng, nu.poset(), e);
    report.stream_digest = digest_instance(report.stream_digest, e, mu, h);
    FubiniResult result = fubini_check(nu, mu, h);
    if (!result.equal) {
      report.falsified = true;
      report.witness = CentralWitness{e, mu, h, t, result.lhs, result.rhs};
      return report;
    }
  }
  return report;
}

MonadLawReport check_monad_laws(std::uint64_t trials, std::uint64_t seed, std::size_t max_elems) {
  MonadLawReport report;
  report.trials = trials;
  Rng root(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = root.split(t);
    PosetPtr d = random_poset(rng, max_elems, "d" + std::to_string(t));
    PosetPtr e = random_poset(rng, max_elems, "e" + std::to_string(t));
    PosetPtr c = random_poset(rng, max_elems, "c" + std::to_string(t));
    KleisliMap f = random_kleisli_map(rng, d, e);
    KleisliMap g = random_kleisli_map(rng, e, c);
    SimpleValuation nu = random_valuation(rng, d);
    std::size_t x = rng.below(d->size());

    // Left unit: extending f along the unit at x returns f(x).
    bool left_ok = kleisli_ext(f, unit(d, x)) == f.at(x);
    (left_ok ? report.left_unit.passed : report.left_unit.failed) += 1;

    // Right unit: extending the unit is the identity.
    bool right_ok = kleisli_ext(KleisliMap::from_unit(d), nu) == nu;
    (right_ok ? report.right_unit.passed : report.right_unit.failed) += 1;

    // Associativity: both composites computed independently.
    std::vector<SimpleValuation> composed;
    composed.reserve(d->size());
    for (std::size_t i = 0; i < d->size(); ++i) composed.push_back(kleisli_ext(g, f.at(i)));
    SimpleValuation via_composition = kleisli_ext(KleisliMap::make(d, c, std::move(composed)), nu);
    SimpleValuation via_stages = kleisli_ext(g, kleisli_ext(f, nu));
    bool assoc_ok = via_composition == via_stages;
    (assoc_ok ? report.associativity.passed : report.associativity.failed) += 1;
  }
  return report;
}

}  // namespace domval
