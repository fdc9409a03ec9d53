#include "domval/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace domval {

PosetPtr build_poset(std::string name, std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& covers) {
  auto poset = std::shared_ptr<FinitePoset>(new FinitePoset());
  poset->name_ = std::move(name);
  poset->elems_ = std::move(elements);

  const std::size_t n = poset->elems_.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = poset->index_.emplace(poset->elems_[i], i);
    if (!inserted) {
      raise(Errc::duplicate_element,
            "element '" + poset->elems_[i] + "' declared twice in poset '" + poset->name_ + "'");
    }
  }

  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    std::size_t i = poset->index_of(lo);
    std::size_t j = poset->index_of(hi);
    rel[i * n + j] = 1;
  }

  // Reflexive-transitive closure by iterated boolean matrix multiplication:
  // square the relation until it stops changing.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint8_t> next = rel;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!rel[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (rel[k * n + j] && !next[i * n + j]) {
            next[i * n + j] = 1;
            changed = true;
          }
        }
      }
    }
    rel = std::move(next);
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rel[i * n + j] && rel[j * n + i]) {
        raise(Errc::cycle_detected, "cover relation of poset '" + poset->name_ +
                                        "' has a cycle through '" + poset->elems_[i] + "' and '" +
                                        poset->elems_[j] + "'");
      }
    }
  }

  poset->leq_ = std::move(rel);
  return poset;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> result;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k) {
        if (k != i && k != j && leq(i, k) && leq(k, j)) direct = false;
      }
      if (direct) result.emplace_back(i, j);
    }
  }
  return result;
}

bool is_upper_set(const FinitePoset& p, const std::vector<bool>& members) {
  const std::size_t n = p.size();
  if (members.size() != n) {
    raise(Errc::unknown_element, "membership vector size does not match poset '" + p.name() + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!members[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (p.leq(i, j) && !members[j]) return false;
    }
  }
  return true;
}

std::vector<bool> upward_closure(const FinitePoset& p, std::vector<bool> members) {
  const std::size_t n = p.size();
  std::vector<bool> closed(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!members[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (p.leq(i, j)) closed[j] = true;
    }
  }
  return closed;
}

UpperSet UpperSet::make(PosetPtr poset, std::vector<bool> members) {
  if (!is_upper_set(*poset, members)) {
    raise(Errc::not_upper_set, "subset of poset '" + poset->name() + "' is not upward closed");
  }
  return UpperSet(std::move(poset), std::move(members));
}

UpperSet UpperSet::from_indices(PosetPtr poset, const std::vector<std::size_t>& indices) {
  std::vector<bool> members(poset->size(), false);
  for (std::size_t i : indices) {
    if (i >= poset->size()) {
      raise(Errc::unknown_element, "index out of range in poset '" + poset->name() + "'");
    }
    members[i] = true;
  }
  return make(std::move(poset), std::move(members));
}

UpperSet UpperSet::from_ids(PosetPtr poset, const std::vector<std::string>& ids) {
  std::vector<bool> members(poset->size(), false);
  for (const auto& id : ids) members[poset->index_of(id)] = true;
  return make(std::move(poset), std::move(members));
}

UpperSet UpperSet::empty(PosetPtr poset) {
  std::vector<bool> members(poset->size(), false);
  return UpperSet(std::move(poset), std::move(members));
}

UpperSet UpperSet::full(PosetPtr poset) {
  std::vector<bool> members(poset->size(), true);
  return UpperSet(std::move(poset), std::move(members));
}

UpperSet UpperSet::principal(PosetPtr poset, std::size_t x) {
  const std::size_t n = poset->size();
  if (x >= n) raise(Errc::unknown_element, "index out of range in poset '" + poset->name() + "'");
  std::vector<bool> members(n, false);
  for (std::size_t j = 0; j < n; ++j) members[j] = poset->leq(x, j);
  return UpperSet(std::move(poset), std::move(members));
}

std::size_t UpperSet::count() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

bool UpperSet::subset_of(const UpperSet& other) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] && !other.members_[i]) return false;
  }
  return true;
}

UpperSet union_of(const UpperSet& a, const UpperSet& b) {
  if (!same_poset(a.poset_, b.poset_)) raise(Errc::poset_mismatch, "upper sets on different posets");
  std::vector<bool> members(a.members_.size());
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = a.members_[i] || b.members_[i];
  return UpperSet(a.poset_, std::move(members));
}

UpperSet intersection_of(const UpperSet& a, const UpperSet& b) {
  if (!same_poset(a.poset_, b.poset_)) raise(Errc::poset_mismatch, "upper sets on different posets");
  std::vector<bool> members(a.members_.size());
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = a.members_[i] && b.members_[i];
  return UpperSet(a.poset_, std::move(members));
}

std::string UpperSet::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!members_[i]) continue;
    if (!first) out << ",";
    out << poset_->element(i);
    first = false;
  }
  out << "}";
  return out.str();
}

std::vector<UpperSet> enumerate_upper_sets(const PosetPtr& p, std::size_t bound) {
  const std::size_t n = p->size();
  if (n > bound) {
    raise(Errc::too_large, "poset '" + p->name() + "' has " + std::to_string(n) +
                               " elements, enumeration bound is " + std::to_string(bound));
  }
  // Precomputed principal filters: mask is upper iff it contains the whole
  // up-set of each of its members.
  std::vector<std::uint32_t> up(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p->leq(i, j)) up[i] |= std::uint32_t(1) << j;
    }
  }
  std::vector<UpperSet> result;
  const std::uint64_t limit = std::uint64_t(1) << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    bool upper = true;
    for (std::size_t i = 0; i < n && upper; ++i) {
      if ((mask >> i) & 1) upper = (up[i] & ~mask) == 0;
    }
    if (!upper) continue;
    std::vector<bool> members(n, false);
    for (std::size_t i = 0; i < n; ++i) members[i] = (mask >> i) & 1;
    result.push_back(UpperSet::make(p, std::move(members)));
  }
  return result;
}

PosetPtr product(const PosetPtr& p, const PosetPtr& q) {
  auto out = std::shared_ptr<FinitePoset>(new FinitePoset());
  out->name_ = "(" + p->name() + "*" + q->name() + ")";
  const std::size_t np = p->size();
  const std::size_t nq = q->size();
  const std::size_t n = np * nq;
  out->elems_.reserve(n);
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < nq; ++j) {
      out->elems_.push_back("(" + p->element(i) + "," + q->element(j) + ")");
    }
  }
  for (std::size_t k = 0; k < n; ++k) out->index_.emplace(out->elems_[k], k);
  out->leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < nq; ++j) {
      for (std::size_t i2 = 0; i2 < np; ++i2) {
        for (std::size_t j2 = 0; j2 < nq; ++j2) {
          if (p->leq(i, i2) && q->leq(j, j2)) {
            out->leq_[(i * nq + j) * n + (i2 * nq + j2)] = 1;
          }
        }
      }
    }
  }
  return out;
}

bool check_monotone(const FinitePoset& source, const FinitePoset& target,
                    const std::vector<std::size_t>& table) {
  const std::size_t n = source.size();
  if (table.size() != n) {
    raise(Errc::unknown_element, "map table is not total on poset '" + source.name() + "'");
  }
  for (std::size_t v : table) {
    if (v >= target.size()) {
      raise(Errc::unknown_element, "map value out of range in poset '" + target.name() + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (source.leq(i, j) && !target.leq(table[i], table[j])) return false;
    }
  }
  return true;
}

bool check_monotone(const MonotoneMap& m) {
  return check_monotone(*m.source(), *m.target(), m.table());
}

MonotoneMap MonotoneMap::make(PosetPtr source, PosetPtr target, std::vector<std::size_t> table) {
  if (!check_monotone(*source, *target, table)) {
    raise(Errc::not_monotone, "map from '" + source->name() + "' to '" + target->name() +
                                  "' is not order-preserving");
  }
  return MonotoneMap(std::move(source), std::move(target), std::move(table));
}

MonotoneMap MonotoneMap::from_ids(PosetPtr source, PosetPtr target,
                                  const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::size_t> table(source->size(), target->size());
  std::vector<bool> seen(source->size(), false);
  for (const auto& [from, to] : pairs) {
    std::size_t i = source->index_of(from);
    if (seen[i]) raise(Errc::duplicate_element, "map defined twice at '" + from + "'");
    seen[i] = true;
    table[i] = target->index_of(to);
  }
  for (std::size_t i = 0; i < source->size(); ++i) {
    if (!seen[i]) {
      raise(Errc::unknown_element, "map missing a value at '" + source->element(i) + "'");
    }
  }
  return make(std::move(source), std::move(target), std::move(table));
}

MonotoneMap MonotoneMap::identity(PosetPtr p) {
  std::vector<std::size_t> table(p->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  PosetPtr target = p;
  return MonotoneMap(std::move(p), std::move(target), std::move(table));
}

MonotoneMap MonotoneMap::constant(PosetPtr source, PosetPtr target, std::size_t value) {
  if (value >= target->size()) {
    raise(Errc::unknown_element, "index out of range in poset '" + target->name() + "'");
  }
  std::vector<std::size_t> table(source->size(), value);
  return MonotoneMap(std::move(source), std::move(target), std::move(table));
}

UpperSet preimage(const MonotoneMap& m, const UpperSet& u) {
  if (!same_poset(u.poset(), m.target())) {
    raise(Errc::poset_mismatch, "upper set is not on the map's target poset");
  }
  std::vector<bool> members(m.source()->size(), false);
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = u.contains(m.apply(i));
  return UpperSet::make(m.source(), std::move(members));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!same_poset(f.target(), g.source())) {
    raise(Errc::poset_mismatch, "composition endpoint mismatch");
  }
  std::vector<std::size_t> table(f.source()->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = g.apply(f.apply(i));
  return MonotoneMap::make(f.source(), g.target(), std::move(table));
}

}  // namespace domval
