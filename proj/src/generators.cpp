#include "domval/generators.hpp"

#include <algorithm>
#include <numeric>

#include "domval/monad.hpp"

namespace domval {

PosetPtr random_poset(Rng& rng, std::size_t max_elems, const std::string& name) {
  const std::size_t n = 1 + rng.below(max_elems);
  std::vector<std::string> elems;
  elems.reserve(n);
  for (std::size_t i = 0; i < n; ++i) elems.push_back("e" + std::to_string(i));

  // A random permutation acts as a linear extension; covers only go forward
  // along it, which is the acyclicity repair.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  std::vector<std::pair<std::string, std::string>> covers;
  if (n > 1) {
    const std::size_t attempts = rng.below(2 * n);
    for (std::size_t a = 0; a < attempts; ++a) {
      std::size_t i = rng.below(n - 1);
      std::size_t j = i + 1 + rng.below(n - 1 - i);
      covers.emplace_back(elems[order[i]], elems[order[j]]);
    }
  }
  return build_poset(name, std::move(elems), covers);
}

SimpleValuation random_valuation(Rng& rng, PosetPtr poset) {
  const std::size_t n = poset->size();
  std::vector<SimpleValuation::Atom> atoms;
  long long budget = 64;
  for (std::size_t i = 0; i < n && budget > 0; ++i) {
    if (rng.coin()) continue;
    long long k = static_cast<long long>(rng.below(static_cast<std::uint64_t>(budget) + 1));
    budget -= k;
    if (k > 0) atoms.emplace_back(i, Rational(k, 64));
  }
  return SimpleValuation::make(std::move(poset), std::move(atoms));
}

UpperSet random_upper_set(Rng& rng, PosetPtr poset) {
  std::vector<bool> members(poset->size(), false);
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = rng.coin();
  return UpperSet::make(poset, upward_closure(*poset, std::move(members)));
}

Integrand random_integrand(Rng& rng, PosetPtr poset) {
  const std::size_t n = poset->size();
  std::vector<Rational> seeds(n);
  for (auto& s : seeds) s = rng.grid(64);
  std::vector<Rational> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational best = Rational(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (poset->leq(j, i)) best = std::max(best, seeds[j]);
    }
    values[i] = best;
  }
  return Integrand::make(std::move(poset), std::move(values));
}

BiIntegrand random_bi_integrand(Rng& rng, PosetPtr left, PosetPtr right) {
  const std::size_t nl = left->size();
  const std::size_t nr = right->size();
  std::vector<Rational> seeds(nl * nr);
  for (auto& s : seeds) s = rng.grid(64);
  std::vector<Rational> values(nl * nr);
  for (std::size_t i = 0; i < nl; ++i) {
    for (std::size_t j = 0; j < nr; ++j) {
      Rational best = Rational(0);
      for (std::size_t i2 = 0; i2 < nl; ++i2) {
        if (!left->leq(i2, i)) continue;
        for (std::size_t j2 = 0; j2 < nr; ++j2) {
          if (right->leq(j2, j)) best = std::max(best, seeds[i2 * nr + j2]);
        }
      }
      values[i * nr + j] = best;
    }
  }
  return BiIntegrand::make(std::move(left), std::move(right), std::move(values));
}

MonotoneMap random_monotone_map(Rng& rng, PosetPtr source, PosetPtr target) {
  const std::size_t n = source->size();
  const std::size_t m = target->size();

  // Random ascending chain in the target.
  std::vector<std::size_t> chain{rng.below(m)};
  const std::size_t hops = rng.below(4);
  for (std::size_t h = 0; h < hops; ++h) {
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < m; ++j) {
      if (target->leq(chain.back(), j) && j != chain.back()) above.push_back(j);
    }
    if (above.empty()) break;
    chain.push_back(above[rng.below(above.size())]);
  }

  // Random ranks into the chain, completed monotonically over downward cones.
  std::vector<std::size_t> seeds(n);
  for (auto& s : seeds) s = rng.below(chain.size());
  std::vector<std::size_t> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rank = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (source->leq(j, i)) rank = std::max(rank, seeds[j]);
    }
    table[i] = chain[rank];
  }
  return MonotoneMap::make(std::move(source), std::move(target), std::move(table));
}

KleisliMap random_kleisli_map(Rng& rng, PosetPtr source, PosetPtr target) {
  const std::size_t parts = 1 + rng.below(3);
  std::vector<MonotoneMap> maps;
  std::vector<Rational> weights;
  long long budget = 64;
  for (std::size_t l = 0; l < parts; ++l) {
    maps.push_back(random_monotone_map(rng, source, target));
    long long k = (l + 1 == parts && rng.coin())
                      ? budget  // occasionally spend the rest: full-mass maps
                      : static_cast<long long>(rng.below(static_cast<std::uint64_t>(budget) + 1));
    budget -= k;
    weights.emplace_back(k, 64);
  }
  std::vector<SimpleValuation> table;
  table.reserve(source->size());
  for (std::size_t i = 0; i < source->size(); ++i) {
    std::vector<SimpleValuation::Atom> atoms;
    for (std::size_t l = 0; l < parts; ++l) {
      if (!weights[l].is_zero()) atoms.emplace_back(maps[l].apply(i), weights[l]);
    }
    table.push_back(SimpleValuation::make(target, std::move(atoms)));
  }
  return KleisliMap::make(std::move(source), std::move(target), std::move(table));
}

}  // namespace domval
