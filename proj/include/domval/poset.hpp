#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domval/error.hpp"

namespace domval {

class FinitePoset;
using PosetPtr = std::shared_ptr<const FinitePoset>;

// Ceiling for exhaustive upper-set enumeration: 2^16 subsets.
inline constexpr std::size_t kDefaultEnumBound = 16;

// A finite partially ordered set. Elements are opaque string identifiers;
// the order is stored as a full reflexive-transitive-antisymmetric relation
// over positional indices. Instances are immutable after construction and
// safe to share across threads.
//
// A finite poset is trivially directed-complete (every directed subset has a
// greatest element), and its Scott topology consists of exactly the upper
// sets: no proper directed supremum exists for an upper set to be
// inaccessible by. Likewise Scott-continuity of a map between finite posets
// degenerates to monotonicity. Those two facts are relied on throughout and
// are not restated at every use site.
class FinitePoset {
 public:
  std::size_t size() const { return elems_.size(); }
  const std::string& name() const { return name_; }
  const std::string& element(std::size_t i) const { return elems_[i]; }
  const std::vector<std::string>& elements() const { return elems_; }

  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j] != 0; }

  std::size_t index_of(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
      raise(Errc::unknown_element, "element '" + std::string(id) + "' not in poset '" + name_ + "'");
    }
    return it->second;
  }

  std::optional<std::size_t> find(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Covering pairs (i, j): i < j with nothing strictly between. This is the
  // transitive reduction, used when serializing a poset back to text.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  // Structural equality: same element identifiers in the same order, same
  // relation. Names are labels and do not participate.
  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.elems_ == b.elems_ && a.leq_ == b.leq_;
  }

 private:
  FinitePoset() = default;

  std::string name_;
  std::vector<std::string> elems_;
  std::vector<std::uint8_t> leq_;  // row-major size*size
  std::map<std::string, std::size_t, std::less<>> index_;

  friend PosetPtr build_poset(std::string name, std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& covers);
  friend PosetPtr product(const PosetPtr& p, const PosetPtr& q);
};

inline bool same_poset(const FinitePoset& a, const FinitePoset& b) {
  return &a == &b || a == b;
}

inline bool same_poset(const PosetPtr& a, const PosetPtr& b) { return same_poset(*a, *b); }

// Builds a poset from element identifiers and a covering relation. The full
// order is the reflexive-transitive closure of the covers, computed by
// iterated boolean matrix multiplication; a closure that violates
// antisymmetry means the input had a cycle.
PosetPtr build_poset(std::string name, std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& covers);

// An upward-closed subset of a poset, i.e. a Scott-open set of the finite
// poset. Validated at construction; instances always satisfy the invariant.
class UpperSet {
 public:
  // Validates upward closure; raises Errc::not_upper_set otherwise.
  static UpperSet make(PosetPtr poset, std::vector<bool> members);
  static UpperSet from_indices(PosetPtr poset, const std::vector<std::size_t>& indices);
  static UpperSet from_ids(PosetPtr poset, const std::vector<std::string>& ids);
  static UpperSet empty(PosetPtr poset);
  static UpperSet full(PosetPtr poset);
  // The principal upper set of x (everything above x).
  static UpperSet principal(PosetPtr poset, std::size_t x);

  const PosetPtr& poset() const { return poset_; }
  bool contains(std::size_t i) const { return members_[i]; }
  const std::vector<bool>& members() const { return members_; }
  std::size_t count() const;
  bool is_empty() const { return count() == 0; }

  bool subset_of(const UpperSet& other) const;

  friend UpperSet union_of(const UpperSet& a, const UpperSet& b);
  friend UpperSet intersection_of(const UpperSet& a, const UpperSet& b);

  friend bool operator==(const UpperSet& a, const UpperSet& b) {
    return same_poset(a.poset_, b.poset_) && a.members_ == b.members_;
  }

  std::string to_string() const;

 private:
  UpperSet(PosetPtr poset, std::vector<bool> members)
      : poset_(std::move(poset)), members_(std::move(members)) {}

  PosetPtr poset_;
  std::vector<bool> members_;
};

// True iff the subset is upward closed in p.
bool is_upper_set(const FinitePoset& p, const std::vector<bool>& members);

// The smallest upper set containing the given subset.
std::vector<bool> upward_closure(const FinitePoset& p, std::vector<bool> members);

// Every upper set of p exactly once, in ascending bitmask order (so the empty
// set comes first and the full carrier last). Requires p.size() <= bound.
std::vector<UpperSet> enumerate_upper_sets(const PosetPtr& p, std::size_t bound = kDefaultEnumBound);

// Componentwise product order on the Cartesian product of carriers. Element
// ids are rendered "(x,y)"; index layout is row-major in the left factor.
//
// On finite posets the Scott topology of a product coincides with the product
// topology (both are just the upper sets of the componentwise order), which is
// why the Fubini-style identities checked in the monad module hold without
// exception at this scale: the infinite-dcpo mismatch between the two
// topologies never materializes on finite carriers.
PosetPtr product(const PosetPtr& p, const PosetPtr& q);

// For a product poset built by product(), recover the component indices of
// element k.
inline std::pair<std::size_t, std::size_t> product_split(std::size_t k, std::size_t right_size) {
  return {k / right_size, k % right_size};
}

// A monotone (= Scott-continuous, at finite scale) total map between finite
// posets.
class MonotoneMap {
 public:
  // Validates totality and order preservation; raises Errc::not_monotone.
  static MonotoneMap make(PosetPtr source, PosetPtr target, std::vector<std::size_t> table);
  static MonotoneMap from_ids(PosetPtr source, PosetPtr target,
                              const std::vector<std::pair<std::string, std::string>>& pairs);
  static MonotoneMap identity(PosetPtr p);
  static MonotoneMap constant(PosetPtr source, PosetPtr target, std::size_t value);

  const PosetPtr& source() const { return source_; }
  const PosetPtr& target() const { return target_; }
  std::size_t apply(std::size_t i) const { return table_[i]; }
  const std::vector<std::size_t>& table() const { return table_; }

 private:
  MonotoneMap(PosetPtr source, PosetPtr target, std::vector<std::size_t> table)
      : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {}

  PosetPtr source_;
  PosetPtr target_;
  std::vector<std::size_t> table_;
};

// True iff table is total on source and order-preserving into target.
bool check_monotone(const FinitePoset& source, const FinitePoset& target,
                    const std::vector<std::size_t>& table);
bool check_monotone(const MonotoneMap& m);

// g^{-1}(U) for an upper set U of m's target; upper in the source because m
// is monotone.
UpperSet preimage(const MonotoneMap& m, const UpperSet& u);

// h = g after f.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

}  // namespace domval
