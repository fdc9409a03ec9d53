#pragma once

#include <utility>
#include <vector>

#include "domval/poset.hpp"
#include "domval/rational.hpp"

namespace domval {

// A simple subprobability valuation: a finite weighted sum of Dirac
// valuations with total weight at most one. Atoms are kept in canonical form
// (sorted by element index, strictly positive weights), so equality of atom
// tables is equality of the valuations as functions on all upper sets.
//
// On a finite poset every continuous valuation is of this shape, so this one
// type covers the whole implemented fragment. The mass deficit 1 - Σw is
// meaningful (it models failure in the language module) and is never
// normalized away.
class SimpleValuation {
 public:
  using Atom = std::pair<std::size_t, Rational>;

  // Merges duplicate elements, drops zero weights, rejects negative weights
  // and total mass above one.
  static SimpleValuation make(PosetPtr poset, std::vector<Atom> atoms);
  static SimpleValuation make_from_ids(PosetPtr poset,
                                       const std::vector<std::pair<std::string, Rational>>& atoms);
  static SimpleValuation dirac(PosetPtr poset, std::size_t x);
  static SimpleValuation dirac(PosetPtr poset, std::string_view id);
  static SimpleValuation zero(PosetPtr poset);

  const PosetPtr& poset() const { return poset_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const Rational& total_mass() const { return total_mass_; }
  bool is_zero() const { return atoms_.empty(); }

  // Weight of the atom at element i, zero if absent.
  Rational weight_at(std::size_t i) const;

  // Evaluation on a Scott open: the weight of the atoms lying in u.
  Rational mass(const UpperSet& u) const;

  // Pointwise rescaling by c in [0,1] (zero atoms dropped when c = 0).
  SimpleValuation scaled(const Rational& c) const;

  std::string to_string() const;

  friend bool operator==(const SimpleValuation& a, const SimpleValuation& b) {
    return same_poset(a.poset_, b.poset_) && a.atoms_ == b.atoms_;
  }

 private:
  SimpleValuation(PosetPtr poset, std::vector<Atom> atoms, Rational total)
      : poset_(std::move(poset)), atoms_(std::move(atoms)), total_mass_(std::move(total)) {}

  PosetPtr poset_;
  std::vector<Atom> atoms_;
  Rational total_mass_;
};

// Exhaustive modularity check nu(U) + nu(V) = nu(U u V) + nu(U n V) over all
// pairs of upper sets. Always true for a SimpleValuation; kept as a
// regression oracle for the mass computation.
bool check_modularity(const SimpleValuation& nu, std::size_t bound = kDefaultEnumBound);

// Stochastic order by definition: nu1(U) <= nu2(U) for every upper set U.
// Requires the carrier to be within the enumeration bound.
bool stochastic_leq_exhaustive(const SimpleValuation& nu1, const SimpleValuation& nu2,
                               std::size_t bound = kDefaultEnumBound);

// Stochastic order as transport feasibility: nu1 <= nu2 iff all of nu1's mass
// can be routed upward into nu2's atoms without exceeding their weights.
// Decided by an exact-rational max-flow; agrees with the exhaustive check on
// every input (property-tested) and has no size bound.
bool stochastic_leq_flow(const SimpleValuation& nu1, const SimpleValuation& nu2);

enum class StochasticOrder { less, equal, greater, incomparable };

// Both directions of the flow check at once.
StochasticOrder compare_stochastic(const SimpleValuation& nu1, const SimpleValuation& nu2);

const char* to_string(StochasticOrder order);

}  // namespace domval
