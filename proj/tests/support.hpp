#pragma once

// Shared helpers for the unit and acceptance suites: tiny poset builders,
// error-code capture, and the random instance makers the product library does
// not need (CDFs, step maps, upward perturbations, swap-program pairs).

#include <string>
#include <utility>
#include <vector>

#include "domval/error.hpp"
#include "domval/generators.hpp"
#include "domval/interval.hpp"
#include "domval/poset.hpp"
#include "domval/rational.hpp"
#include "domval/valuation.hpp"

namespace testsupport {

using domval::PosetPtr;
using domval::Rational;

inline Rational r(long long p, long long q = 1) { return Rational(p, q); }

inline PosetPtr chain(std::size_t n, const std::string& name = "chain") {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) elems.push_back(std::string(1, char('a' + i)));
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(elems[i], elems[i + 1]);
  return domval::build_poset(name, std::move(elems), covers);
}

inline PosetPtr antichain(std::size_t n, const std::string& name = "anti") {
  std::vector<std::string> elems;
  for (std::size_t i = 0; i < n; ++i) elems.push_back(std::string(1, char('a' + i)));
  return domval::build_poset(name, std::move(elems), {});
}

// bot below both l and r.
inline PosetPtr vee(const std::string& name = "vee") {
  return domval::build_poset(name, {"bot", "l", "r"}, {{"bot", "l"}, {"bot", "r"}});
}

template <class F>
domval::Errc errc_of(F&& fn) {
  try {
    std::forward<F>(fn)();
  } catch (const domval::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected the operation to raise an error");
}

// Brute-force upper-set count straight from the definition, the oracle for
// enumerate_upper_sets.
inline std::size_t count_upper_sets_brute_force(const domval::FinitePoset& p) {
  const std::size_t n = p.size();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    bool upper = true;
    for (std::size_t i = 0; i < n && upper; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (std::size_t j = 0; j < n && upper; ++j) {
        if (p.leq(i, j) && !((mask >> j) & 1)) upper = false;
      }
    }
    if (upper) ++count;
  }
  return count;
}

// A valuation guaranteed >= nu in the stochastic order: every atom moves to
// some element above it (a feasible transport is the construction itself),
// and extra mass may be added on top.
inline domval::SimpleValuation perturb_up(domval::Rng& rng, const domval::SimpleValuation& nu) {
  const auto& poset = *nu.poset();
  std::vector<domval::SimpleValuation::Atom> atoms;
  for (const auto& [idx, w] : nu.atoms()) {
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < poset.size(); ++j) {
      if (poset.leq(idx, j)) above.push_back(j);
    }
    atoms.emplace_back(above[rng.below(above.size())], w);
  }
  Rational headroom = Rational(1) - nu.total_mass();
  if (!headroom.is_zero() && rng.coin()) {
    long long steps = static_cast<long long>(rng.below(4));
    atoms.emplace_back(rng.below(poset.size()), headroom * Rational(steps, 4));
  }
  return domval::SimpleValuation::make(nu.poset(), std::move(atoms));
}

// Random piecewise-linear CDF with optional jumps: breakpoints on a 1/8 grid,
// cumulative values climbing a k/64 grid.
inline domval::Cdf random_cdf(domval::Rng& rng, const std::string& name) {
  std::vector<Rational> xs{Rational(0), Rational(1)};
  std::size_t inner = rng.below(3);
  for (std::size_t i = 0; i < inner; ++i) {
    Rational x(static_cast<long long>(1 + rng.below(7)), 8);
    bool fresh = true;
    for (const auto& seen : xs) fresh = fresh && seen != x;
    if (fresh) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<domval::Cdf::Point> points;
  long long cursor = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    long long left = cursor;
    if (i == 0) left = 0;
    long long jump = rng.coin() ? static_cast<long long>(rng.below(64 - left + 1)) : 0;
    long long right = left + jump;
    points.push_back({xs[i], Rational(left, 64), Rational(right, 64)});
    cursor = right;
    if (i + 1 < xs.size()) {
      cursor += static_cast<long long>(rng.below(64 - cursor + 1));
    }
  }
  return domval::Cdf::make(name, std::move(points));
}

inline domval::StepMap random_stepmap(domval::Rng& rng, const std::string& name, std::size_t level,
                                      PosetPtr target) {
  std::vector<std::size_t> cells(std::size_t(1) << level);
  for (auto& c : cells) c = rng.below(target->size());
  return domval::StepMap::make(name, level, std::move(target), std::move(cells));
}

// A pointwise-larger step map at the next dyadic level: each refined cell may
// move to any element above its current value.
inline domval::StepMap bump_up(domval::Rng& rng, const domval::StepMap& f) {
  domval::StepMap refined = f.refined_to(f.level() + 1);
  const auto& poset = *f.target();
  std::vector<std::size_t> cells = refined.cells();
  for (auto& c : cells) {
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < poset.size(); ++j) {
      if (poset.leq(c, j)) above.push_back(j);
    }
    c = above[rng.below(above.size())];
  }
  return domval::StepMap::make(f.name() + "+", refined.level(), f.target(), std::move(cells));
}

// Source texts of two programs that differ only in the order of two
// independent lets. Both posets are antichains, so every generated dispatch
// is continuous and evaluation cannot reject.
struct SwapPair {
  std::string first;
  std::string second;
};

inline std::string leaf_expr(domval::Rng& rng, const std::string& poset, std::size_t elems) {
  auto elem = [&](std::size_t i) { return poset + "." + std::string(1, char('a' + i)); };
  switch (rng.below(3)) {
    case 0: return "const " + elem(rng.below(elems));
    case 1: return "fail " + poset;
    default: {
      Rational bias(static_cast<long long>(rng.below(65)), 64);
      return "choice " + bias.to_string() + " (const " + elem(rng.below(elems)) + ") (const " +
             elem(rng.below(elems)) + ")";
    }
  }
}

inline SwapPair make_swap_pair(domval::Rng& rng) {
  const std::size_t na = 2 + rng.below(2);
  const std::size_t nb = 2 + rng.below(2);
  const std::size_t nr = 3;
  auto decl = [](const std::string& name, std::size_t n) {
    std::string out = "poset " + name + " { ";
    for (std::size_t i = 0; i < n; ++i) out += "elem " + std::string(1, char('a' + i)) + " ; ";
    return out + "}\n";
  };
  std::string header = decl("pa", na) + decl("pb", nb) + decl("res", nr);

  std::string e1 = leaf_expr(rng, "pa", na);
  std::string e2 = leaf_expr(rng, "pb", nb);

  // The body dispatches on x, and under each arm may dispatch on y.
  std::string body = "case var x { ";
  for (std::size_t i = 0; i < na; ++i) {
    std::string arm;
    if (rng.coin()) {
      arm = "case var y { ";
      for (std::size_t j = 0; j < nb; ++j) {
        arm += std::string(1, char('a' + j)) + " -> " + leaf_expr(rng, "res", nr) + " ; ";
      }
      arm += "}";
    } else {
      arm = leaf_expr(rng, "res", nr);
    }
    body += std::string(1, char('a' + i)) + " -> " + arm + " ; ";
  }
  body += "}";

  SwapPair pair;
  pair.first = header + "main = let x = " + e1 + " in let y = " + e2 + " in " + body + "\n";
  pair.second = header + "main = let y = " + e2 + " in let x = " + e1 + " in " + body + "\n";
  return pair;
}

}  // namespace testsupport
