#include "domval/valuation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace domval {

SimpleValuation SimpleValuation::make(PosetPtr poset, std::vector<Atom> atoms) {
  std::map<std::size_t, Rational> merged;
  for (auto& [idx, w] : atoms) {
    if (idx >= poset->size()) {
      raise(Errc::unknown_element, "atom index out of range in poset '" + poset->name() + "'");
    }
    if (w.is_negative()) {
      raise(Errc::negative_weight, "atom at '" + poset->element(idx) + "' has weight " + w.to_string());
    }
    merged[idx] += w;
  }
  std::vector<Atom> canonical;
  Rational total;
  for (auto& [idx, w] : merged) {
    if (w.is_zero()) continue;
    total += w;
    canonical.emplace_back(idx, w);
  }
  if (total > Rational(1)) {
    raise(Errc::mass_exceeds_one, "total mass " + total.to_string() + " exceeds one");
  }
  return SimpleValuation(std::move(poset), std::move(canonical), std::move(total));
}

SimpleValuation SimpleValuation::make_from_ids(
    PosetPtr poset, const std::vector<std::pair<std::string, Rational>>& atoms) {
  std::vector<Atom> indexed;
  indexed.reserve(atoms.size());
  for (const auto& [id, w] : atoms) indexed.emplace_back(poset->index_of(id), w);
  return make(std::move(poset), std::move(indexed));
}

SimpleValuation SimpleValuation::dirac(PosetPtr poset, std::size_t x) {
  if (x >= poset->size()) {
    raise(Errc::unknown_element, "index out of range in poset '" + poset->name() + "'");
  }
  return SimpleValuation(std::move(poset), {{x, Rational(1)}}, Rational(1));
}

SimpleValuation SimpleValuation::dirac(PosetPtr poset, std::string_view id) {
  std::size_t x = poset->index_of(id);
  return dirac(std::move(poset), x);
}

SimpleValuation SimpleValuation::zero(PosetPtr poset) {
  return SimpleValuation(std::move(poset), {}, Rational(0));
}

Rational SimpleValuation::weight_at(std::size_t i) const {
  for (const auto& [idx, w] : atoms_) {
    if (idx == i) return w;
    if (idx > i) break;
  }
  return Rational(0);
}

Rational SimpleValuation::mass(const UpperSet& u) const {
  if (!same_poset(u.poset(), poset_)) {
    raise(Errc::poset_mismatch, "upper set is not on the valuation's poset");
  }
  Rational sum;
  for (const auto& [idx, w] : atoms_) {
    if (u.contains(idx)) sum += w;
  }
  return sum;
}

SimpleValuation SimpleValuation::scaled(const Rational& c) const {
  if (c.is_negative() || c > Rational(1)) {
    raise(Errc::invalid_value, "scale factor " + c.to_string() + " outside [0,1]");
  }
  std::vector<Atom> atoms;
  if (!c.is_zero()) {
    atoms.reserve(atoms_.size());
    for (const auto& [idx, w] : atoms_) atoms.emplace_back(idx, w * c);
  }
  return SimpleValuation(poset_, std::move(atoms), total_mass_ * c);
}

std::string SimpleValuation::to_string() const {
  if (atoms_.empty()) return "(zero)";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, w] : atoms_) {
    if (!first) out << ", ";
    out << w.to_string() << " " << poset_->element(idx);
    first = false;
  }
  return out.str();
}

bool check_modularity(const SimpleValuation& nu, std::size_t bound) {
  auto opens = enumerate_upper_sets(nu.poset(), bound);
  for (const auto& u : opens) {
    Rational mu = nu.mass(u);
    for (const auto& v : opens) {
      Rational lhs = mu + nu.mass(v);
      Rational rhs = nu.mass(union_of(u, v)) + nu.mass(intersection_of(u, v));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool stochastic_leq_exhaustive(const SimpleValuation& nu1, const SimpleValuation& nu2,
                               std::size_t bound) {
  if (!same_poset(nu1.poset(), nu2.poset())) {
    raise(Errc::poset_mismatch, "valuations on different posets");
  }
  for (const auto& u : enumerate_upper_sets(nu1.poset(), bound)) {
    if (nu1.mass(u) > nu2.mass(u)) return false;
  }
  return true;
}

namespace {

// Edmonds-Karp over exact rational capacities. Node and arc orders follow the
// atom tables, so runs are reproducible.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : head_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, Rational capacity) {
    head_[from].push_back(arcs_.size());
    arcs_.push_back({to, std::move(capacity)});
    head_[to].push_back(arcs_.size());
    arcs_.push_back({from, Rational(0)});
  }

  Rational max_flow(std::size_t source, std::size_t sink) {
    Rational total;
    while (true) {
      std::vector<std::size_t> via(head_.size(), kNone);
      std::deque<std::size_t> queue{source};
      std::vector<bool> seen(head_.size(), false);
      seen[source] = true;
      while (!queue.empty() && !seen[sink]) {
        std::size_t node = queue.front();
        queue.pop_front();
        for (std::size_t arc : head_[node]) {
          const auto& [to, residual] = arcs_[arc];
          if (seen[to] || residual.is_zero()) continue;
          seen[to] = true;
          via[to] = arc;
          queue.push_back(to);
        }
      }
      if (!seen[sink]) return total;
      Rational bottleneck = arcs_[via[sink]].second;
      for (std::size_t node = sink; node != source;) {
        std::size_t arc = via[node];
        bottleneck = std::min(bottleneck, arcs_[arc].second);
        node = arcs_[arc ^ 1].first;
      }
      for (std::size_t node = sink; node != source;) {
        std::size_t arc = via[node];
        arcs_[arc].second -= bottleneck;
        arcs_[arc ^ 1].second += bottleneck;
        node = arcs_[arc ^ 1].first;
      }
      total += bottleneck;
    }
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::pair<std::size_t, Rational>> arcs_;  // (to, residual capacity)
  std::vector<std::vector<std::size_t>> head_;
};

}  // namespace

bool stochastic_leq_flow(const SimpleValuation& nu1, const SimpleValuation& nu2) {
  if (!same_poset(nu1.poset(), nu2.poset())) {
    raise(Errc::poset_mismatch, "valuations on different posets");
  }
  const auto& lower = nu1.atoms();
  const auto& upper = nu2.atoms();
  if (lower.empty()) return true;

  // Bipartite transport network. A feasible split of nu1's atoms over nu2's
  // atoms along the order relation exists iff the max flow ships all of
  // nu1's mass; nu2's surplus just leaves sink arcs unsaturated.
  const std::size_t source = 0;
  const std::size_t sink = 1 + lower.size() + upper.size();
  FlowNetwork net(sink + 1);
  const Rational& everything = nu1.total_mass();
  for (std::size_t i = 0; i < lower.size(); ++i) {
    net.add_arc(source, 1 + i, lower[i].second);
  }
  const FinitePoset& p = *nu1.poset();
  for (std::size_t i = 0; i < lower.size(); ++i) {
    for (std::size_t j = 0; j < upper.size(); ++j) {
      if (p.leq(lower[i].first, upper[j].first)) {
        net.add_arc(1 + i, 1 + lower.size() + j, everything);
      }
    }
  }
  for (std::size_t j = 0; j < upper.size(); ++j) {
    net.add_arc(1 + lower.size() + j, sink, upper[j].second);
  }
  return net.max_flow(source, sink) == everything;
}

StochasticOrder compare_stochastic(const SimpleValuation& nu1, const SimpleValuation& nu2) {
  bool le = stochastic_leq_flow(nu1, nu2);
  bool ge = stochastic_leq_flow(nu2, nu1);
  if (le && ge) return StochasticOrder::equal;
  if (le) return StochasticOrder::less;
  if (ge) return StochasticOrder::greater;
  return StochasticOrder::incomparable;
}

const char* to_string(StochasticOrder order) {
  switch (order) {
    case StochasticOrder::less: return "LEQ";
    case StochasticOrder::equal: return "EQ";
    case StochasticOrder::greater: return "GEQ";
    case StochasticOrder::incomparable: return "INCOMPARABLE";
  }
  return "?";
}

}  // namespace domval
