#include "domval/interval.hpp"

#include <algorithm>
#include <map>

namespace domval {

Cdf Cdf::make(std::string name, std::vector<Point> points) {
  if (points.empty()) raise(Errc::invalid_value, "cdf '" + name + "' has no breakpoints");
  if (points.front().x != Rational(0) || points.back().x != Rational(1)) {
    raise(Errc::invalid_value, "cdf '" + name + "' must span breakpoints 0 to 1");
  }
  if (!points.front().left.is_zero()) {
    raise(Errc::invalid_value, "cdf '" + name + "' must have left value 0 at x=0");
  }
  const Rational* previous = nullptr;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& pt = points[i];
    if (!in_unit_interval(pt.x) || !in_unit_interval(pt.left) || !in_unit_interval(pt.right)) {
      raise(Errc::invalid_value, "cdf '" + name + "' has a value outside [0,1]");
    }
    if (i > 0 && points[i - 1].x >= pt.x) {
      raise(Errc::invalid_value, "cdf '" + name + "' breakpoints must strictly increase");
    }
    if (pt.left > pt.right || (previous && *previous > pt.left)) {
      raise(Errc::invalid_value, "cdf '" + name + "' cumulative values must be nondecreasing");
    }
    previous = &pt.right;
  }
  return Cdf(std::move(name), std::move(points));
}

Cdf Cdf::lebesgue() {
  return make("lebesgue", {{Rational(0), Rational(0), Rational(0)},
                           {Rational(1), Rational(1), Rational(1)}});
}

namespace {

// Index of the last breakpoint with x <= t.
std::size_t segment_of(const std::vector<Cdf::Point>& points, const Rational& t) {
  std::size_t lo = 0;
  std::size_t hi = points.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (points[mid].x <= t) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

Rational interpolate(const Cdf::Point& a, const Cdf::Point& b, const Rational& t) {
  return a.right + (b.left - a.right) * (t - a.x) / (b.x - a.x);
}

}  // namespace

Rational Cdf::value_at(const Rational& t) const {
  if (!in_unit_interval(t)) raise(Errc::invalid_value, "cdf evaluated outside [0,1]");
  std::size_t i = segment_of(points_, t);
  if (points_[i].x == t) return points_[i].right;
  return interpolate(points_[i], points_[i + 1], t);
}

Rational Cdf::left_value_at(const Rational& t) const {
  if (!in_unit_interval(t)) raise(Errc::invalid_value, "cdf evaluated outside [0,1]");
  std::size_t i = segment_of(points_, t);
  if (points_[i].x == t) return points_[i].left;
  return interpolate(points_[i], points_[i + 1], t);
}

Rational Cdf::mass_left_closed(const Rational& a, const Rational& b) const {
  if (a > b) raise(Errc::invalid_value, "interval endpoints out of order");
  return left_value_at(b) - left_value_at(a);
}

Rational Cdf::mass_to_end(const Rational& a) const { return total_mass() - left_value_at(a); }

StepMap StepMap::make(std::string name, std::size_t level, PosetPtr target,
                      std::vector<std::size_t> cells) {
  if (level > kMaxLevel) {
    raise(Errc::too_large, "step map level " + std::to_string(level) + " exceeds " +
                               std::to_string(kMaxLevel));
  }
  const std::size_t expected = std::size_t(1) << level;
  if (cells.size() != expected) {
    raise(Errc::invalid_value, "step map '" + name + "' needs " + std::to_string(expected) +
                                   " cells, got " + std::to_string(cells.size()));
  }
  for (std::size_t c : cells) {
    if (c >= target->size()) {
      raise(Errc::unknown_element, "step map cell value out of range in poset '" + target->name() + "'");
    }
  }
  return StepMap(std::move(name), level, std::move(target), std::move(cells));
}

StepMap StepMap::constant(std::string name, std::size_t level, PosetPtr target,
                          std::size_t value) {
  std::vector<std::size_t> cells(std::size_t(1) << level, value);
  return make(std::move(name), level, std::move(target), std::move(cells));
}

StepMap StepMap::refined_to(std::size_t level) const {
  if (level < level_) raise(Errc::invalid_value, "cannot coarsen a step map");
  if (level > kMaxLevel) raise(Errc::too_large, "refinement level too large");
  const std::size_t factor = std::size_t(1) << (level - level_);
  std::vector<std::size_t> cells;
  cells.reserve(cells_.size() * factor);
  for (std::size_t c : cells_) {
    for (std::size_t r = 0; r < factor; ++r) cells.push_back(c);
  }
  return StepMap(name_, level, target_, std::move(cells));
}

Rational StepMap::cell_left(std::size_t k) const {
  return Rational(static_cast<long long>(k), static_cast<long long>(cells_.size()));
}

Rational StepMap::cell_right(std::size_t k) const {
  return Rational(static_cast<long long>(k + 1), static_cast<long long>(cells_.size()));
}

Rational cell_mass(const Cdf& f, std::size_t level, std::size_t k) {
  const long long cells = 1LL << level;
  Rational left(static_cast<long long>(k), cells);
  if (k + 1 == static_cast<std::size_t>(cells)) return f.mass_to_end(left);
  return f.mass_left_closed(left, Rational(static_cast<long long>(k + 1), cells));
}

SimpleValuation pushforward(const Cdf& cdf, const StepMap& f) {
  std::map<std::size_t, Rational> weights;
  for (std::size_t k = 0; k < f.cell_count(); ++k) {
    weights[f.at(k)] += cell_mass(cdf, f.level(), k);
  }
  std::vector<SimpleValuation::Atom> atoms(weights.begin(), weights.end());
  return SimpleValuation::make(f.target(), std::move(atoms));
}

Rational preimage_mass(const Cdf& cdf, const StepMap& f, const UpperSet& o) {
  if (!same_poset(o.poset(), f.target())) {
    raise(Errc::poset_mismatch, "upper set is not on the step map's target poset");
  }
  // Merge the selected cells into maximal intervals first; each interval is
  // then measured in one piece.
  Rational sum;
  const std::size_t n = f.cell_count();
  std::size_t k = 0;
  while (k < n) {
    if (!o.contains(f.at(k))) {
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k < n && o.contains(f.at(k))) ++k;
    if (k == n) {
      sum += cdf.mass_to_end(f.cell_left(start));
    } else {
      sum += cdf.mass_left_closed(f.cell_left(start), f.cell_left(k));
    }
  }
  return sum;
}

bool check_pointwise_leq(const StepMap& f, const StepMap& g) {
  if (!same_poset(f.target(), g.target())) {
    raise(Errc::poset_mismatch, "step maps into different posets");
  }
  const std::size_t level = std::max(f.level(), g.level());
  StepMap fr = f.refined_to(level);
  StepMap gr = g.refined_to(level);
  const FinitePoset& target = *f.target();
  for (std::size_t k = 0; k < fr.cell_count(); ++k) {
    if (!target.leq(fr.at(k), gr.at(k))) return false;
  }
  return true;
}

bool change_of_variable_check(const Integrand& g, const StepMap& f, const Cdf& cdf) {
  if (!same_poset(g.poset(), f.target())) {
    raise(Errc::poset_mismatch, "integrand is not on the step map's target poset");
  }
  Rational via_pushforward = integrate(g, pushforward(cdf, f));
  // g after f is itself a dyadic step function, so its integral against the
  // interval valuation is the exact finite sum over cells.
  Rational direct;
  for (std::size_t k = 0; k < f.cell_count(); ++k) {
    direct += g.at(f.at(k)) * cell_mass(cdf, f.level(), k);
  }
  return via_pushforward == direct;
}

bool refinement_chain_check(const std::vector<StepMap>& chain, const Cdf& cdf) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!check_pointwise_leq(chain[i], chain[i + 1])) {
      raise(Errc::chain_not_monotone,
            "chain is not pointwise ascending at step " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!stochastic_leq_flow(pushforward(cdf, chain[i]), pushforward(cdf, chain[i + 1]))) {
      return false;
    }
  }
  return true;
}

bool interval_fubini_check(const Cdf& cdf, const StepMap& f, const SimpleValuation& mu,
                           const BiIntegrand& h) {
  return fubini_check(pushforward(cdf, f), mu, h).equal;
}

}  // namespace domval
