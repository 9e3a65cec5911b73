#pragma once

#include <cstdint>
#include <vector>

#include "impsplit/base.hpp"

namespace impsplit {

/// Forward-chaining closure engine. Occurrence lists are built once per base;
/// each call uses its own counter scratch, so a shared instance is safe for
/// concurrent queries.
class ClosureFn {
 public:
  explicit ClosureFn(const ImplicationBase& base);
  Bitset operator()(const Bitset& seed) const;

 private:
  const ImplicationBase* base_;
  std::vector<std::vector<std::int32_t>> occurs_;  // element -> implication ids
  std::vector<std::int32_t> premise_size_;
};

Bitset closure(const ImplicationBase& base, const Bitset& seed);
bool is_model(const ImplicationBase& base, const Bitset& x);

/// True iff both bases describe the same closure system over the same
/// universe. Bases over distinct ground tables are matched by token.
bool equivalent(const ImplicationBase& b1, const ImplicationBase& b2);

}  // namespace impsplit
