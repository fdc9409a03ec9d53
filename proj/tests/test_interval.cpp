#include <doctest.h>

#include "domval/generators.hpp"
#include "domval/interval.hpp"
#include "support.hpp"

using namespace domval;
using testsupport::antichain;
using testsupport::chain;
using testsupport::errc_of;
using testsupport::r;
using testsupport::random_cdf;
using testsupport::random_stepmap;
using testsupport::vee;

namespace {

Cdf tent() {
  return Cdf::make("tent", {{r(0), r(0), r(0)}, {r(1, 2), r(1, 4), r(1, 4)}, {r(1), r(1), r(1)}});
}

// Atom 1/2 at 0, atom 1/4 at 1/2, rest uniform.
Cdf atomic() {
  return Cdf::make("atomic",
                   {{r(0), r(0), r(1, 2)}, {r(1, 2), r(5, 8), r(7, 8)}, {r(1), r(1), r(1)}});
}

}  // namespace

TEST_CASE("lebesgue masses of half-open intervals") {
  auto f = Cdf::lebesgue();
  CHECK(f.value_at(r(1)) - f.value_at(r(0)) == r(1));
  CHECK(f.value_at(r(3, 4)) - f.value_at(r(1, 4)) == r(1, 2));
  CHECK(f.value_at(r(1, 3)) - f.value_at(r(1, 3)) == r(0));
  CHECK(f.total_mass() == r(1));
  CHECK(f.atom_at_zero() == r(0));
}

TEST_CASE("cdf validation") {
  CHECK(errc_of([] { Cdf::make("bad", {}); }) == Errc::invalid_value);
  CHECK(errc_of([] {
          Cdf::make("bad", {{r(1, 4), r(0), r(0)}, {r(1), r(1), r(1)}});
        }) == Errc::invalid_value);  // must start at 0
  CHECK(errc_of([] {
          Cdf::make("bad", {{r(0), r(0), r(1, 2)}, {r(1), r(1, 4), r(1, 4)}});
        }) == Errc::invalid_value);  // decreasing
  CHECK(errc_of([] {
          Cdf::make("bad", {{r(0), r(1, 8), r(1, 4)}, {r(1), r(1), r(1)}});
        }) == Errc::invalid_value);  // left value at 0 must be 0
}

TEST_CASE("atoms appear as jumps") {
  auto f = atomic();
  CHECK(f.atom_at_zero() == r(1, 2));
  CHECK(f.value_at(r(0)) == r(1, 2));
  CHECK(f.left_value_at(r(1, 2)) == r(5, 8));
  CHECK(f.value_at(r(1, 2)) == r(7, 8));
  CHECK(f.total_mass() == r(1));
  // interpolation between breakpoints
  CHECK(f.value_at(r(1, 4)) == r(9, 16));
}

TEST_CASE("cell masses sum to the total") {
  for (const Cdf& f : {Cdf::lebesgue(), tent(), atomic()}) {
    for (std::size_t level : {0u, 1u, 2u, 3u}) {
      Rational sum;
      for (std::size_t k = 0; k < (std::size_t(1) << level); ++k) {
        sum += cell_mass(f, level, k);
      }
      CHECK(sum == f.total_mass());
    }
  }
  CHECK(cell_mass(atomic(), 1, 0) == r(5, 8));  // zero atom lands in cell 0
  CHECK(cell_mass(atomic(), 1, 1) == r(3, 8));  // midpoint atom in the right cell
  CHECK(cell_mass(tent(), 2, 0) == r(1, 8));
  CHECK(cell_mass(tent(), 2, 3) == r(3, 8));
}

TEST_CASE("pushforward of lebesgue along the level-one split") {
  auto p = chain(2);
  auto f = StepMap::make("f", 1, p, {0, 1});
  auto pushed = pushforward(Cdf::lebesgue(), f);
  CHECK(pushed.weight_at(0) == r(1, 2));
  CHECK(pushed.weight_at(1) == r(1, 2));

  auto finer = StepMap::make("g", 2, p, {0, 0, 1, 1});
  CHECK(pushforward(Cdf::lebesgue(), finer) == pushed);
}

TEST_CASE("pushforward of a constant map is a scaled Dirac") {
  auto p = vee();
  auto constant = StepMap::constant("c", 2, p, 1);
  for (const Cdf& f : {Cdf::lebesgue(), tent(), atomic()}) {
    auto pushed = pushforward(f, constant);
    CHECK(pushed.atoms().size() == 1);
    CHECK(pushed.weight_at(1) == f.total_mass());
  }
}

TEST_CASE("refining a step map does not change the pushforward") {
  Rng rng(61);
  for (int i = 0; i < 40; ++i) {
    auto p = random_poset(rng, 5, "p");
    auto f = random_stepmap(rng, "f", rng.below(4), p);
    auto cdf = random_cdf(rng, "F");
    CHECK(pushforward(cdf, f) == pushforward(cdf, f.refined_to(f.level() + 1)));
  }
}

TEST_CASE("mass on opens equals the measured interval preimage") {
  Rng rng(62);
  for (int i = 0; i < 60; ++i) {
    auto p = random_poset(rng, 5, "p");
    auto f = random_stepmap(rng, "f", 1 + rng.below(4), p);
    auto cdf = random_cdf(rng, "F");
    auto pushed = pushforward(cdf, f);
    for (const auto& open : enumerate_upper_sets(p)) {
      CHECK(pushed.mass(open) == preimage_mass(cdf, f, open));
    }
  }
}

TEST_CASE("pointwise comparison of step maps") {
  auto p = vee();
  auto bottom = StepMap::make("bot", 1, p, {0, 0});
  auto split = StepMap::make("split", 1, p, {1, 2});
  CHECK(check_pointwise_leq(bottom, bottom));
  CHECK(check_pointwise_leq(bottom, split));
  CHECK_FALSE(check_pointwise_leq(split, bottom));

  auto anti = antichain(2);
  CHECK_FALSE(check_pointwise_leq(StepMap::make("x", 1, anti, {0, 1}),
                                  StepMap::make("y", 1, anti, {1, 0})));

  // Levels may differ; comparison happens on the common refinement.
  auto coarse = StepMap::constant("c", 0, p, 0);
  CHECK(check_pointwise_leq(coarse, split));
}

TEST_CASE("change of variable identity") {
  auto p = chain(2);
  auto f = StepMap::make("f", 1, p, {0, 1});
  auto g = Integrand::make(p, {r(0), r(1)});
  CHECK(change_of_variable_check(g, f, Cdf::lebesgue()));
  // direct route: 0 * 1/2 + 1 * 1/2 = 1/2
  CHECK(integrate(g, pushforward(Cdf::lebesgue(), f)) == r(1, 2));

  CHECK(change_of_variable_check(Integrand::constant(p, r(2, 3)), f, tent()));
  CHECK(change_of_variable_check(g, StepMap::constant("c", 2, p, 1), atomic()));

  Rng rng(63);
  for (int i = 0; i < 80; ++i) {
    auto q = random_poset(rng, 5, "q");
    CHECK(change_of_variable_check(random_integrand(rng, q),
                                   random_stepmap(rng, "f", rng.below(5), q),
                                   random_cdf(rng, "F")));
  }
}

TEST_CASE("refinement chains push forward monotonically") {
  auto p = vee();
  auto bottom = StepMap::make("bot", 1, p, {0, 0});
  auto split = StepMap::make("split", 1, p, {1, 2});
  CHECK(refinement_chain_check({bottom, bottom, bottom}, Cdf::lebesgue()));
  CHECK(refinement_chain_check({bottom, split}, Cdf::lebesgue()));
  CHECK(stochastic_leq_flow(pushforward(Cdf::lebesgue(), bottom),
                            pushforward(Cdf::lebesgue(), split)));
  CHECK(errc_of([&] { refinement_chain_check({split, bottom}, Cdf::lebesgue()); }) ==
        Errc::chain_not_monotone);

  Rng rng(64);
  for (int i = 0; i < 40; ++i) {
    auto q = random_poset(rng, 5, "q");
    auto f0 = random_stepmap(rng, "f", 1 + rng.below(3), q);
    auto f1 = testsupport::bump_up(rng, f0);
    auto f2 = testsupport::bump_up(rng, f1);
    CHECK(refinement_chain_check({f0, f1, f2}, random_cdf(rng, "F")));
  }
}

TEST_CASE("pointwise order transports to the stochastic order") {
  Rng rng(66);
  for (int i = 0; i < 50; ++i) {
    auto p = random_poset(rng, 5, "p");
    auto f = random_stepmap(rng, "f", 1 + rng.below(3), p);
    auto g = testsupport::bump_up(rng, f);
    auto cdf = random_cdf(rng, "F");
    REQUIRE(check_pointwise_leq(f, g));
    CHECK(stochastic_leq_flow(pushforward(cdf, f), pushforward(cdf, g)));
  }
}

TEST_CASE("cdf evaluation rejects points outside the interval") {
  auto f = Cdf::lebesgue();
  CHECK(errc_of([&] { f.value_at(r(3, 2)); }) == Errc::invalid_value);
  CHECK(errc_of([&] { f.left_value_at(r(-1, 2)); }) == Errc::invalid_value);
}

TEST_CASE("interval valuations commute with everything") {
  auto d = chain(2, "d");
  auto e = antichain(2, "e");
  auto h = BiIntegrand::make(d, e, {r(1, 8), r(1, 4), r(1, 2), r(1, 4)});
  auto mu = SimpleValuation::make_from_ids(e, {{"a", r(1, 4)}, {"b", r(1, 2)}});

  CHECK(interval_fubini_check(Cdf::lebesgue(), StepMap::constant("c", 1, d, 1), mu, h));
  CHECK(interval_fubini_check(atomic(), StepMap::make("f", 2, d, {0, 0, 1, 1}), mu, h));

  auto nothing = Cdf::make("zero", {{r(0), r(0), r(0)}, {r(1), r(0), r(0)}});
  CHECK(interval_fubini_check(nothing, StepMap::make("f", 1, d, {0, 1}), mu, h));

  Rng rng(65);
  for (int i = 0; i < 60; ++i) {
    auto dp = random_poset(rng, 5, "d");
    auto ep = random_poset(rng, 5, "e");
    CHECK(interval_fubini_check(random_cdf(rng, "F"),
                                random_stepmap(rng, "f", 1 + rng.below(3), dp),
                                random_valuation(rng, ep), random_bi_integrand(rng, dp, ep)));
  }
}

TEST_CASE("step map validation") {
  auto p = chain(2);
  CHECK(errc_of([&] { StepMap::make("f", 1, p, {0}); }) == Errc::invalid_value);
  CHECK(errc_of([&] { StepMap::make("f", 1, p, {0, 7}); }) == Errc::unknown_element);
  CHECK(errc_of([&] { StepMap::make("f", 40, p, {}); }) == Errc::too_large);
  auto f = StepMap::make("f", 1, p, {0, 1});
  CHECK(errc_of([&] { f.refined_to(0); }) == Errc::invalid_value);
}
