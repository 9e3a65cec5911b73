#include "impsplit/closure.hpp"

namespace impsplit {

ClosureFn::ClosureFn(const ImplicationBase& base)
    : base_(&base), occurs_(base.width()) {
  premise_size_.reserve(base.size());
  std::int32_t id = 0;
  for (const auto& imp : base.implications()) {
    premise_size_.push_back(static_cast<std::int32_t>(imp.premise.count()));
    imp.premise.for_each([&](std::size_t e) { occurs_[e].push_back(id); });
    ++id;
  }
}

// Counter-per-implication chaining: each premise counter drops when one of
// its elements enters the set; the implication fires exactly once, when the
// counter reaches zero. Total work is linear in the base size per call.
Bitset ClosureFn::operator()(const Bitset& seed) const {
  if (!seed.is_subset_of(base_->universe()))
    throw ElementOutOfGround("seed is not contained in the universe");
  Bitset x = seed;
  std::vector<std::int32_t> remaining = premise_size_;
  std::vector<std::size_t> queue = x.indices();
  const auto imps = base_->implications();
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::int32_t id : occurs_[queue[qi]]) {
      if (--remaining[static_cast<std::size_t>(id)] != 0) continue;
      imps[static_cast<std::size_t>(id)].conclusion.for_each([&](std::size_t b) {
        if (!x.test(b)) {
          x.set(b);
          queue.push_back(b);
        }
      });
    }
  }
  return x;
}

Bitset closure(const ImplicationBase& base, const Bitset& seed) {
  return ClosureFn(base)(seed);
}

bool is_model(const ImplicationBase& base, const Bitset& x) {
  if (!x.is_subset_of(base.universe()))
    throw ElementOutOfGround("candidate set is not contained in the universe");
  for (const auto& imp : base.implications())
    if (imp.premise.is_subset_of(x) && !imp.conclusion.is_subset_of(x)) return false;
  return true;
}

bool equivalent(const ImplicationBase& b1, const ImplicationBase& b2) {
  ImplicationBase other = b2;
  if (b1.ground() != b2.ground()) other = rebase(b2, b1.ground());
  if (other.universe() != b1.universe())
    throw GroundMismatch("bases range over different universes");

  ClosureFn cl1(b1);
  ClosureFn cl2(other);
  for (const auto& imp : b1.implications())
    if (!imp.conclusion.is_subset_of(cl2(imp.premise))) return false;
  for (const auto& imp : other.implications())
    if (!imp.conclusion.is_subset_of(cl1(imp.premise))) return false;
  return true;
}

}  // namespace impsplit
