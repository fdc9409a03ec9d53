#pragma once

#include <string>
#include <vector>

#include "domval/integration.hpp"
#include "domval/monad.hpp"
#include "domval/poset.hpp"
#include "domval/rational.hpp"
#include "domval/valuation.hpp"

namespace domval {

// A subprobability valuation on [0,1] described by its cumulative mass
// function F(t) = mass of [0,t]. Piecewise linear between breakpoints, with
// a left and a right value stored per breakpoint so that atoms appear as
// jumps; the jump at 0 is the atom at 0 (the left value there is fixed to 0).
// Everything is an exact rational.
class Cdf {
 public:
  struct Point {
    Rational x;      // breakpoint, in [0,1]
    Rational left;   // mass of [0,x), i.e. the limit from below
    Rational right;  // mass of [0,x]
  };

  // Validates: x strictly increasing from 0 to 1, values nondecreasing
  // through every left/right pair, total mass (right value at 1) <= 1.
  static Cdf make(std::string name, std::vector<Point> points);
  // The Lebesgue valuation: F(t) = t.
  static Cdf lebesgue();

  const std::string& name() const { return name_; }
  const std::vector<Point>& points() const { return points_; }

  // F(t): mass of [0,t].
  Rational value_at(const Rational& t) const;
  // F-(t): mass of [0,t); differs from F(t) exactly at atoms.
  Rational left_value_at(const Rational& t) const;

  Rational total_mass() const { return points_.back().right; }
  Rational atom_at_zero() const { return points_.front().right; }

  // Mass of [a,b) for 0 <= a <= b <= 1.
  Rational mass_left_closed(const Rational& a, const Rational& b) const;
  // Mass of [a,1].
  Rational mass_to_end(const Rational& a) const;

 private:
  Cdf(std::string name, std::vector<Point> points)
      : name_(std::move(name)), points_(std::move(points)) {}

  std::string name_;
  std::vector<Point> points_;
};

// A dyadic step function into a finite poset: 2^level cells, cell k covering
// [k/2^level, (k+1)/2^level), the last cell closed at 1. The half-open
// convention puts an atom sitting on a dyadic boundary into the cell to its
// right, and the atom at 0 into cell 0, so preimages of sets of poset
// elements are exact finite unions of CDF-measurable intervals.
class StepMap {
 public:
  static constexpr std::size_t kMaxLevel = 20;

  static StepMap make(std::string name, std::size_t level, PosetPtr target,
                      std::vector<std::size_t> cells);
  static StepMap constant(std::string name, std::size_t level, PosetPtr target,
                          std::size_t value);

  const std::string& name() const { return name_; }
  std::size_t level() const { return level_; }
  const PosetPtr& target() const { return target_; }
  const std::vector<std::size_t>& cells() const { return cells_; }
  std::size_t cell_count() const { return cells_.size(); }
  std::size_t at(std::size_t k) const { return cells_[k]; }

  // The same function at a finer dyadic level (cells replicated).
  StepMap refined_to(std::size_t level) const;

  // Left endpoint of cell k, as a rational.
  Rational cell_left(std::size_t k) const;
  Rational cell_right(std::size_t k) const;

 private:
  StepMap(std::string name, std::size_t level, PosetPtr target, std::vector<std::size_t> cells)
      : name_(std::move(name)), level_(level), target_(std::move(target)), cells_(std::move(cells)) {}

  std::string name_;
  std::size_t level_;
  PosetPtr target_;
  std::vector<std::size_t> cells_;
};

// Mass the CDF assigns to cell k of a level-m step map: [k/2^m, (k+1)/2^m),
// closed at 1 for the last cell.
Rational cell_mass(const Cdf& f, std::size_t level, std::size_t k);

// The push-forward of the valuation described by cdf along the step map:
// each poset element receives the CDF-mass of the union of its cells. For
// every upper set O, mass(pushforward, O) equals the CDF-mass of the exact
// interval union f^{-1}(O); preimage_mass computes that independently.
SimpleValuation pushforward(const Cdf& cdf, const StepMap& f);

// CDF-mass of f^{-1}(O) measured as maximal merged dyadic intervals, not as
// a per-cell sum; the independent route for the push-forward contract.
Rational preimage_mass(const Cdf& cdf, const StepMap& f, const UpperSet& o);

// f(x) <= g(x) at every point, decided cellwise on the common refinement.
bool check_pointwise_leq(const StepMap& f, const StepMap& g);

// integrate(g, pushforward(cdf, f)) against the direct cell sum of g(f(.))
// as a step function on [0,1]. Exact equality; always true.
bool change_of_variable_check(const Integrand& g, const StepMap& f, const Cdf& cdf);

// Consecutive pushforwards of a pointwise-ascending chain of step maps are
// ascending in the stochastic order. Raises Errc::chain_not_monotone if the
// chain itself is not pointwise ascending.
bool refinement_chain_check(const std::vector<StepMap>& chain, const Cdf& cdf);

// Fubini commutation of the pushforward valuation against an arbitrary
// (mu, h); push-forwards from [0,1] commute with everything.
bool interval_fubini_check(const Cdf& cdf, const StepMap& f, const SimpleValuation& mu,
                           const BiIntegrand& h);

}  // namespace domval
