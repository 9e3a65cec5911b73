#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "impsplit/base.hpp"
#include "impsplit/closure.hpp"

namespace impsplit {

/// Cap on closure computations for one enumeration call.
inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 25;

/// The full family of closed sets, in lectic enumeration order.
struct ClosureSystem {
  Bitset universe;
  std::vector<Bitset> sets;
  std::unordered_set<Bitset, BitsetHash> lookup;

  bool contains(const Bitset& c) const { return lookup.count(c) > 0; }
  std::size_t size() const { return sets.size(); }
};

/// Lectic (NextClosure-style) traversal; cost scales with the output, not
/// with 2^|U|. Throws BudgetExceeded past `budget` closure calls.
ClosureSystem enumerate_closed_sets(const ImplicationBase& base,
                                    std::size_t budget = kDefaultBudget);

/// Independent second oracle: filter all 2^|U| subsets through is_model.
/// Requires |U| <= 20.
ClosureSystem enumerate_closed_sets_filter(const ImplicationBase& base);

/// Closed sets with exactly one upper cover; the top set is excluded.
SetFamily meet_irreducibles_oracle(const ImplicationBase& base,
                                   std::size_t budget = kDefaultBudget);

/// {C closed | C ∩ u2 = c2}; both u2 and c2 must be closed.
SetFamily extensions_oracle(const ImplicationBase& base, const Bitset& c2,
                            const Bitset& u2, std::size_t budget = kDefaultBudget);

SetFamily ideal_of(const ClosureSystem& cs, const Bitset& c);
SetFamily filter_of(const ClosureSystem& cs, const Bitset& c);

/// All unions of one member from each system; ground tables must agree and
/// the universes must be disjoint.
ClosureSystem direct_product(const ClosureSystem& cs1, const ClosureSystem& cs2);

/// Inclusion-minimal closed strict supersets of c.
SetFamily covers_of(const ClosureSystem& cs, const Bitset& c);

}  // namespace impsplit
