#include <doctest.h>

#include "domval/generators.hpp"
#include "domval/integration.hpp"
#include "support.hpp"

using namespace domval;
using testsupport::antichain;
using testsupport::chain;
using testsupport::errc_of;
using testsupport::r;

TEST_CASE("integrand construction enforces monotonicity and range") {
  auto p = chain(2);
  CHECK(errc_of([&] { Integrand::make(p, {r(1), r(1, 2)}); }) == Errc::not_monotone);
  CHECK(errc_of([&] { Integrand::make(p, {r(0), r(3, 2)}); }) == Errc::invalid_value);
  CHECK(errc_of([&] { Integrand::make(p, {r(0)}); }) == Errc::unknown_element);
  CHECK(Integrand::make(p, {r(1, 3), r(1)}).at(1) == r(1));
}

TEST_CASE("closed-form integral basics") {
  auto p = chain(2);
  auto nu = SimpleValuation::make_from_ids(p, {{"a", r(1, 2)}, {"b", r(1, 4)}});

  CHECK(integrate(Integrand::constant(p, r(2, 5)), nu) == r(2, 5) * nu.total_mass());
  CHECK(integrate(Integrand::make(p, {r(1, 3), r(1)}), SimpleValuation::dirac(p, "a")) == r(1, 3));
  CHECK(errc_of([&] {
          integrate(Integrand::constant(antichain(2), r(1)), nu);
        }) == Errc::poset_mismatch);
}

TEST_CASE("the worked five-twelfths instance, both routes") {
  auto p = chain(2);
  auto nu = SimpleValuation::make_from_ids(p, {{"a", r(1, 2)}, {"b", r(1, 4)}});
  auto h = Integrand::make(p, {r(1, 3), r(1)});
  CHECK(integrate(h, nu) == r(5, 12));
  CHECK(integrate_riemann_oracle(h, nu) == r(5, 12));
}

TEST_CASE("Riemann oracle degenerate cases") {
  auto p = chain(3);
  auto nu = SimpleValuation::make_from_ids(p, {{"a", r(1, 8)}, {"c", r(3, 8)}});
  CHECK(integrate_riemann_oracle(Integrand::constant(p, r(0)), nu) == r(0));
  CHECK(integrate_riemann_oracle(Integrand::constant(p, r(1)), nu) == nu.total_mass());
  CHECK(integrate_riemann_oracle(Integrand::constant(p, r(1)), SimpleValuation::zero(p)) == r(0));
}

TEST_CASE("oracle equivalence on random instances") {
  Rng rng(21);
  for (int i = 0; i < 400; ++i) {
    auto p = random_poset(rng, 8, "p");
    auto h = random_integrand(rng, p);
    auto nu = random_valuation(rng, p);
    CHECK(integrate(h, nu) == integrate_riemann_oracle(h, nu));
  }
}

TEST_CASE("linearity in the valuation") {
  Rng rng(22);
  for (int i = 0; i < 120; ++i) {
    auto p = random_poset(rng, 6, "p");
    auto h = random_integrand(rng, p);
    auto nu1 = random_valuation(rng, p);
    auto nu2 = random_valuation(rng, p);
    Rational a(static_cast<long long>(rng.below(33)), 64);
    Rational b(static_cast<long long>(rng.below(33)), 64);
    std::vector<SimpleValuation::Atom> mixture;
    for (const auto& [idx, w] : nu1.atoms()) mixture.emplace_back(idx, a * w);
    for (const auto& [idx, w] : nu2.atoms()) mixture.emplace_back(idx, b * w);
    auto combined = SimpleValuation::make(p, std::move(mixture));
    CHECK(integrate(h, combined) == a * integrate(h, nu1) + b * integrate(h, nu2));
  }
}

TEST_CASE("monotonicity in both arguments") {
  Rng rng(23);
  for (int i = 0; i < 120; ++i) {
    auto p = random_poset(rng, 6, "p");
    auto h1 = random_integrand(rng, p);
    auto h2_seed = random_integrand(rng, p);
    // Pointwise max of two monotone maps is monotone and dominates h1.
    std::vector<Rational> larger(p->size());
    for (std::size_t k = 0; k < p->size(); ++k) larger[k] = std::max(h1.at(k), h2_seed.at(k));
    auto h2 = Integrand::make(p, std::move(larger));
    auto nu = random_valuation(rng, p);
    CHECK(integrate(h1, nu) <= integrate(h2, nu));

    auto bigger = testsupport::perturb_up(rng, nu);
    CHECK(integrate(h1, nu) <= integrate(h1, bigger));
  }
}

TEST_CASE("threshold sets are upper sets at every level") {
  Rng rng(24);
  for (int i = 0; i < 80; ++i) {
    auto p = random_poset(rng, 7, "p");
    auto h = random_integrand(rng, p);
    Rational t(static_cast<long long>(rng.below(65)), 64);
    // Construction validates upward closure and would raise otherwise.
    auto level = threshold_set(h, t);
    CHECK(is_upper_set(*p, level.members()));
  }
}
