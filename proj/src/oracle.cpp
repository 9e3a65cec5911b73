#include "impsplit/oracle.hpp"

#include <algorithm>

namespace impsplit {

namespace {

class BudgetedClosure {
 public:
  BudgetedClosure(const ImplicationBase& base, std::size_t budget)
      : fn_(base), budget_(budget) {}

  Bitset operator()(const Bitset& seed) {
    if (++used_ > budget_)
      throw BudgetExceeded("closed-set enumeration exceeded its budget");
    return fn_(seed);
  }

 private:
  ClosureFn fn_;
  std::size_t budget_;
  std::size_t used_ = 0;
};

}  // namespace

ClosureSystem enumerate_closed_sets(const ImplicationBase& base, std::size_t budget) {
  BudgetedClosure cl(base, budget);
  const Bitset& top = base.universe();
  const std::vector<std::size_t> elems = top.indices();
  const std::size_t width = base.width();

  ClosureSystem out;
  out.universe = top;
  Bitset a = cl(Bitset(width));
  out.sets.push_back(a);

  // Lectic successor: strip elements from the largest position downwards; at
  // the first gap whose closure introduces nothing below it, commit.
  while (a != top) {
    bool advanced = false;
    for (std::size_t pos = elems.size(); pos-- > 0;) {
      const std::size_t e = elems[pos];
      if (a.test(e)) {
        a.reset(e);
        continue;
      }
      Bitset b = cl(a | Bitset::single(width, e));
      Bitset fresh = b - a;
      if (static_cast<std::size_t>(fresh.lowest()) == e) {
        a = std::move(b);
        out.sets.push_back(a);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  out.lookup.insert(out.sets.begin(), out.sets.end());
  return out;
}

ClosureSystem enumerate_closed_sets_filter(const ImplicationBase& base) {
  const std::vector<std::size_t> elems = base.universe().indices();
  if (elems.size() > 20)
    throw BudgetExceeded("filter oracle is limited to 20 elements");
  ClosureSystem out;
  out.universe = base.universe();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << elems.size()); ++mask) {
    Bitset s(base.width());
    for (std::size_t i = 0; i < elems.size(); ++i)
      if ((mask >> i) & 1u) s.set(elems[i]);
    if (is_model(base, s)) out.sets.push_back(std::move(s));
  }
  out.lookup.insert(out.sets.begin(), out.sets.end());
  return out;
}

SetFamily meet_irreducibles_oracle(const ImplicationBase& base, std::size_t budget) {
  ClosureSystem cs = enumerate_closed_sets(base, budget);
  ClosureFn cl(base);
  SetFamily out;
  out.universe = base.universe();
  for (const auto& c : cs.sets) {
    if (c == cs.universe) continue;
    std::vector<Bitset> above;
    (cs.universe - c).for_each([&](std::size_t u) {
      above.push_back(cl(c | Bitset::single(base.width(), u)));
    });
    if (minimal_sets(std::move(above)).size() == 1) out.members.push_back(c);
  }
  out.sort_canonical();
  return out;
}

SetFamily extensions_oracle(const ImplicationBase& base, const Bitset& c2,
                            const Bitset& u2, std::size_t budget) {
  ClosureFn cl(base);
  if (cl(u2) != u2) throw NotClosed("u2 is not closed");
  if (!c2.is_subset_of(u2) || cl(c2) != c2)
    throw NotClosed("c2 is not a closed subset of u2");
  ClosureSystem cs = enumerate_closed_sets(base, budget);
  SetFamily out;
  out.universe = base.universe();
  for (const auto& c : cs.sets)
    if ((c & u2) == c2) out.members.push_back(c);
  out.sort_canonical();
  return out;
}

SetFamily ideal_of(const ClosureSystem& cs, const Bitset& c) {
  if (!cs.contains(c)) throw NotClosed("set is not a member of the closure system");
  SetFamily out;
  out.universe = cs.universe;
  for (const auto& s : cs.sets)
    if (s.is_subset_of(c)) out.members.push_back(s);
  out.sort_canonical();
  return out;
}

SetFamily filter_of(const ClosureSystem& cs, const Bitset& c) {
  if (!cs.contains(c)) throw NotClosed("set is not a member of the closure system");
  SetFamily out;
  out.universe = cs.universe;
  for (const auto& s : cs.sets)
    if (c.is_subset_of(s)) out.members.push_back(s);
  out.sort_canonical();
  return out;
}

ClosureSystem direct_product(const ClosureSystem& cs1, const ClosureSystem& cs2) {
  if (cs1.universe.capacity() != cs2.universe.capacity())
    throw GroundMismatch("systems use different ground tables");
  if (cs1.universe.intersects(cs2.universe))
    throw GroundOverlap("universes overlap");
  ClosureSystem out;
  out.universe = cs1.universe | cs2.universe;
  out.sets.reserve(cs1.size() * cs2.size());
  for (const auto& a : cs1.sets)
    for (const auto& b : cs2.sets) out.sets.push_back(a | b);
  std::sort(out.sets.begin(), out.sets.end(), size_lex_less);
  out.lookup.insert(out.sets.begin(), out.sets.end());
  return out;
}

SetFamily covers_of(const ClosureSystem& cs, const Bitset& c) {
  if (!cs.contains(c)) throw NotClosed("set is not a member of the closure system");
  std::vector<Bitset> above;
  for (const auto& s : cs.sets)
    if (c.is_subset_of(s) && s != c) above.push_back(s);
  SetFamily out;
  out.universe = cs.universe;
  out.members = minimal_sets(std::move(above));
  out.sort_canonical();
  return out;
}

}  // namespace impsplit
