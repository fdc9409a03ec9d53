#include <doctest.h>

#include "domval/generators.hpp"
#include "domval/monad.hpp"
#include "support.hpp"

using namespace domval;
using testsupport::antichain;
using testsupport::chain;
using testsupport::errc_of;
using testsupport::r;

namespace {

// f(a) = dirac c, f(b) = (dirac c + dirac d)/2, the running Kleisli example.
// The source must be an antichain: dirac c and the even split are
// stochastically incomparable, so this table is only continuous when a and b
// are unrelated.
KleisliMap example_kleisli(const PosetPtr& src, const PosetPtr& tgt) {
  std::vector<SimpleValuation> table;
  table.push_back(SimpleValuation::dirac(tgt, "c"));
  table.push_back(
      SimpleValuation::make_from_ids(tgt, {{"c", r(1, 2)}, {"d", r(1, 2)}}));
  return KleisliMap::make(src, tgt, std::move(table));
}

PosetPtr cd_antichain(const std::string& name = "t") {
  return build_poset(name, {"c", "d"}, {});
}

}  // namespace

TEST_CASE("unit is the Dirac valuation") {
  auto p = chain(2);
  CHECK(unit(p, 0) == SimpleValuation::dirac(p, "a"));
  auto top = UpperSet::from_ids(p, {"b"});
  CHECK(unit(p, 1).mass(top) == r(1));
  CHECK(unit(p, 0).mass(top) == r(0));
}

TEST_CASE("Kleisli map construction validates continuity") {
  auto src = chain(2);
  auto tgt = antichain(2, "t");
  std::vector<SimpleValuation> bad;
  bad.push_back(SimpleValuation::dirac(tgt, "a"));
  bad.push_back(SimpleValuation::dirac(tgt, "b"));  // dirac a and dirac b incomparable
  CHECK(errc_of([&] { KleisliMap::make(src, tgt, std::move(bad)); }) ==
        Errc::continuity_violation);

  std::vector<SimpleValuation> undersized;
  undersized.push_back(SimpleValuation::dirac(tgt, "a"));
  CHECK(errc_of([&] { KleisliMap::make(src, tgt, std::move(undersized)); }) ==
        Errc::unknown_element);
}

TEST_CASE("vmap pushes atoms through a monotone map") {
  auto p = chain(2);
  auto nu = SimpleValuation::make_from_ids(p, {{"a", r(1, 2)}, {"b", r(1, 4)}});

  CHECK(vmap(MonotoneMap::identity(p), nu) == nu);

  auto point = antichain(1, "pt");
  auto collapse = MonotoneMap::constant(p, point, 0);
  auto pushed = vmap(collapse, nu);
  CHECK(pushed.atoms().size() == 1);
  CHECK(pushed.weight_at(0) == r(3, 4));
}

TEST_CASE("vmap satisfies the preimage mass identity") {
  Rng rng(41);
  for (int i = 0; i < 80; ++i) {
    auto src = random_poset(rng, 6, "s");
    auto tgt = random_poset(rng, 6, "t");
    auto g = random_monotone_map(rng, src, tgt);
    auto nu = random_valuation(rng, src);
    auto pushed = vmap(g, nu);
    for (const auto& u : enumerate_upper_sets(tgt)) {
      CHECK(pushed.mass(u) == nu.mass(preimage(g, u)));
    }
  }
}

TEST_CASE("vmap is functorial") {
  Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    auto a = random_poset(rng, 5, "a");
    auto b = random_poset(rng, 5, "b");
    auto c = random_poset(rng, 5, "c");
    auto f = random_monotone_map(rng, a, b);
    auto g = random_monotone_map(rng, b, c);
    auto nu = random_valuation(rng, a);
    CHECK(vmap(MonotoneMap::identity(a), nu) == nu);
    CHECK(vmap(compose(g, f), nu) == vmap(g, vmap(f, nu)));
  }
}

TEST_CASE("kleisli_ext computes the mixture") {
  auto src = antichain(2, "s");
  auto tgt = cd_antichain();
  auto f = example_kleisli(src, tgt);
  auto nu = SimpleValuation::make_from_ids(src, {{"a", r(1, 2)}, {"b", r(1, 4)}});
  auto out = kleisli_ext(f, nu);
  CHECK(out.weight_at(0) == r(5, 8));
  CHECK(out.weight_at(1) == r(1, 8));
}

TEST_CASE("unit laws of the Kleisli extension") {
  auto src = antichain(2, "s");
  auto tgt = cd_antichain();
  auto f = example_kleisli(src, tgt);
  CHECK(kleisli_ext(f, unit(src, 0)) == f.at(0));
  CHECK(kleisli_ext(f, unit(src, 1)) == f.at(1));

  auto nu = SimpleValuation::make_from_ids(src, {{"a", r(1, 2)}, {"b", r(1, 4)}});
  CHECK(kleisli_ext(KleisliMap::from_unit(src), nu) == nu);
}

TEST_CASE("Kleisli-integral coherence on every open") {
  Rng rng(43);
  for (int i = 0; i < 60; ++i) {
    auto src = random_poset(rng, 5, "s");
    auto tgt = random_poset(rng, 5, "t");
    auto f = random_kleisli_map(rng, src, tgt);
    auto nu = random_valuation(rng, src);
    auto extended = kleisli_ext(f, nu);
    for (const auto& u : enumerate_upper_sets(tgt)) {
      std::vector<Rational> values(src->size());
      for (std::size_t x = 0; x < src->size(); ++x) values[x] = f.at(x).mass(u);
      // Integrand::make is the monotonicity gate on the inner map.
      auto inner = Integrand::make(src, std::move(values));
      CHECK(extended.mass(u) == integrate(inner, nu));
    }
  }
}

TEST_CASE("strength pairs a point with a valuation") {
  auto d = chain(2, "d");
  auto e = antichain(2, "e");

  auto dy = SimpleValuation::dirac(e, "b");
  auto paired = strength(d, 0, dy);
  CHECK(paired == SimpleValuation::dirac(paired.poset(), "(a,b)"));

  CHECK(strength(d, 0, SimpleValuation::zero(e)).is_zero());

  auto mu = SimpleValuation::make_from_ids(e, {{"a", r(1, 2)}, {"b", r(1, 4)}});
  auto s = strength(d, 0, mu);
  CHECK(s.weight_at(s.poset()->index_of("(a,a)")) == r(1, 2));
  CHECK(s.weight_at(s.poset()->index_of("(a,b)")) == r(1, 4));
}

TEST_CASE("product valuation on Diracs and weights") {
  auto d = chain(2, "d");
  auto e = antichain(2, "e");
  auto prod = product_valuation(SimpleValuation::dirac(d, "a"), SimpleValuation::dirac(e, "b"));
  CHECK(prod == SimpleValuation::dirac(prod.poset(), "(a,b)"));

  auto half_a = SimpleValuation::make_from_ids(d, {{"a", r(1, 2)}});
  auto half_c = SimpleValuation::make_from_ids(e, {{"a", r(1, 2)}});
  auto quarter = product_valuation(half_a, half_c);
  CHECK(quarter.weight_at(quarter.poset()->index_of("(a,a)")) == r(1, 4));
  CHECK(quarter.total_mass() == r(1, 4));
}

TEST_CASE("product valuation equals both double-strength composites") {
  Rng rng(44);
  for (int i = 0; i < 50; ++i) {
    auto d = random_poset(rng, 4, "d");
    auto e = random_poset(rng, 4, "e");
    auto nu = random_valuation(rng, d);
    auto mu = random_valuation(rng, e);
    auto direct = product_valuation(nu, mu);

    // nu outer: x |-> (dirac x) (x) mu.
    std::vector<SimpleValuation> left_table;
    for (std::size_t x = 0; x < d->size(); ++x) left_table.push_back(strength(d, x, mu));
    auto left = kleisli_ext(KleisliMap::make(d, direct.poset(), std::move(left_table)), nu);

    // mu outer: y |-> nu (x) (dirac y).
    std::vector<SimpleValuation> right_table;
    for (std::size_t y = 0; y < e->size(); ++y) right_table.push_back(costrength(nu, e, y));
    auto right = kleisli_ext(KleisliMap::make(e, direct.poset(), std::move(right_table)), mu);

    CHECK(direct == left);
    CHECK(direct == right);
    CHECK(direct.total_mass() == nu.total_mass() * mu.total_mass());
  }
}

TEST_CASE("fubini on degenerate inputs") {
  auto d = chain(2, "d");
  auto e = antichain(2, "e");
  auto h = BiIntegrand::make(d, e, {r(1, 8), r(1, 4), r(1, 2), r(1, 4)});

  auto result = fubini_check(SimpleValuation::dirac(d, "a"), SimpleValuation::dirac(e, "a"), h);
  CHECK(result.equal);
  CHECK(result.lhs == h.at(0, 0));

  auto nu = SimpleValuation::make_from_ids(d, {{"a", r(1, 2)}, {"b", r(1, 4)}});
  auto mu = SimpleValuation::make_from_ids(e, {{"a", r(1, 4)}, {"b", r(1, 2)}});
  auto ones = fubini_check(nu, mu, BiIntegrand::constant(d, e, r(1)));
  CHECK(ones.equal);
  CHECK(ones.lhs == nu.total_mass() * mu.total_mass());
}

TEST_CASE("fubini three-way agreement on random triples") {
  Rng rng(45);
  for (int i = 0; i < 150; ++i) {
    auto d = random_poset(rng, 6, "d");
    auto e = random_poset(rng, 6, "e");
    auto nu = random_valuation(rng, d);
    auto mu = random_valuation(rng, e);
    auto h = random_bi_integrand(rng, d, e);
    auto result = fubini_check(nu, mu, h);
    CHECK(result.equal);
    CHECK(result.lhs == integrate(h.on_product(), product_valuation(nu, mu)));
  }
}

TEST_CASE("bi-integrand validation") {
  auto d = chain(2, "d");
  auto e = antichain(2, "e");
  // decreasing along the chain in the left coordinate
  CHECK(errc_of([&] { BiIntegrand::make(d, e, {r(1), r(1), r(0), r(0)}); }) == Errc::not_monotone);
  CHECK(errc_of([&] { BiIntegrand::make(d, e, {r(0), r(0), r(1)}); }) == Errc::unknown_element);
}

TEST_CASE("disintegration identity") {
  auto c = antichain(2, "c");
  auto d = cd_antichain("d");
  auto f = example_kleisli(c, d);
  auto h = Integrand::make(d, {r(1, 3), r(2, 3)});

  // mu a point mass: both sides are the integral against f at that point.
  CHECK(disintegration_check(f, SimpleValuation::dirac(c, "a"), h));
  CHECK(disintegration_check(f, SimpleValuation::dirac(c, "b"), h));

  // f constant: both sides are mass(mu) times the integral against the value.
  auto rho = SimpleValuation::make_from_ids(d, {{"c", r(1, 4)}, {"d", r(1, 4)}});
  auto constant_f = KleisliMap::constant(c, rho);
  auto mu = SimpleValuation::make_from_ids(c, {{"a", r(1, 8)}, {"b", r(3, 8)}});
  CHECK(disintegration_check(constant_f, mu, h));

  Rng rng(46);
  for (int i = 0; i < 150; ++i) {
    auto cp = random_poset(rng, 6, "c");
    auto dp = random_poset(rng, 6, "d");
    CHECK(disintegration_check(random_kleisli_map(rng, cp, dp), random_valuation(rng, cp),
                               random_integrand(rng, dp)));
  }
}

TEST_CASE("central falsifier never falsifies simple valuations") {
  auto p = chain(2);
  auto report = central_falsifier(SimpleValuation::dirac(p, "a"), 60, 17);
  CHECK_FALSE(report.falsified);
  CHECK_FALSE(report.witness.has_value());

  auto nu = SimpleValuation::make_from_ids(p, {{"a", r(1, 2)}, {"b", r(1, 4)}});
  CHECK_FALSE(central_falsifier(nu, 120, 99).falsified);
}

TEST_CASE("central falsifier is deterministic under the seed") {
  auto p = testsupport::vee();
  auto nu = SimpleValuation::make_from_ids(p, {{"bot", r(1, 2)}, {"l", r(1, 4)}});
  auto first = central_falsifier(nu, 80, 7);
  auto second = central_falsifier(nu, 80, 7);
  CHECK(first.stream_digest == second.stream_digest);
  CHECK(first.falsified == second.falsified);
  auto other_seed = central_falsifier(nu, 80, 8);
  CHECK(first.stream_digest != other_seed.stream_digest);
}

TEST_CASE("monad laws hold on random instances") {
  auto report = check_monad_laws(200, 3);
  CHECK(report.all_passed());
  CHECK(report.left_unit.passed == 200);
  CHECK(report.right_unit.passed == 200);
  CHECK(report.associativity.passed == 200);
}

TEST_CASE("cross-poset operands are rejected") {
  auto c2 = chain(2, "c2");
  auto a2 = antichain(2, "a2");
  auto nu_chain = SimpleValuation::dirac(c2, "a");
  auto nu_anti = SimpleValuation::dirac(a2, "a");

  CHECK(errc_of([&] { vmap(MonotoneMap::identity(a2), nu_chain); }) == Errc::poset_mismatch);
  CHECK(errc_of([&] { kleisli_ext(KleisliMap::from_unit(a2), nu_chain); }) ==
        Errc::poset_mismatch);
  CHECK(errc_of([&] {
          fubini_check(nu_anti, nu_anti, BiIntegrand::constant(c2, a2, r(1, 2)));
        }) == Errc::poset_mismatch);
  CHECK(errc_of([&] { strength(c2, 5, nu_anti); }) == Errc::unknown_element);
  CHECK(errc_of([&] {
          disintegration_check(KleisliMap::from_unit(c2), nu_anti,
                               Integrand::constant(c2, r(0)));
        }) == Errc::poset_mismatch);
}
