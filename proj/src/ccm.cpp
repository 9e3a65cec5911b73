#include "impsplit/ccm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace impsplit {

SetFamily MeetSet::family() const {
  SetFamily f;
  f.universe = universe;
  f.members = sets;
  return f;
}

void MeetSet::sort_canonical() {
  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return size_lex_less(sets[a], sets[b]);
  });
  std::vector<Bitset> s;
  std::vector<MeetOrigin> o;
  s.reserve(sets.size());
  o.reserve(origins.size());
  for (std::size_t i : order) {
    s.push_back(std::move(sets[i]));
    o.push_back(origins[i]);
  }
  sets = std::move(s);
  origins = std::move(o);
}

SetFamily max_ext(const SplitReport& split, const SetFamily& m1, const Bitset& c2) {
  if (split.kind != SplitKind::AcyclicSplit)
    throw InconsistentInput("maximal extensions require an acyclic split");
  Border bm = negative_border(split.i1, split.ibip, c2);
  Border bp = ldual(split.i1, m1, bm);
  SetFamily out;
  out.universe = split.u1 | split.u2;
  out.members.reserve(bp.sets.size());
  for (const auto& p : bp.sets) out.members.push_back(p | c2);
  out.sort_canonical();
  return out;
}

MeetSet combine_meets(const SplitReport& split, const SetFamily& m1, const SetFamily& m2,
                      CcmStats* stats) {
  if (split.kind != SplitKind::AcyclicSplit)
    throw InconsistentInput("combining meets requires an acyclic split");
#ifndef NDEBUG
  {
    // closedness of the inputs is a recursion invariant; re-checked in
    // debug builds only
    ClosureFn cl1(split.i1), cl2(split.i2);
    for (const auto& m : m1.members) assert(cl1(m) == m);
    for (const auto& m : m2.members) assert(cl2(m) == m);
  }
#endif

  MeetSet out;
  out.universe = split.u1 | split.u2;
  std::unordered_set<Bitset, BitsetHash> seen;

  for (const auto& nm : m1.members) {
    Bitset lifted = nm | split.u2;
    if (!seen.insert(lifted).second) {
      if (stats) ++stats->duplicate_emissions;
      continue;
    }
    out.sets.push_back(std::move(lifted));
    out.origins.push_back(MeetOrigin::Type1);
  }
  for (const auto& m2_set : m2.members) {
    for (auto& ext : max_ext(split, m1, m2_set).members) {
      if (!seen.insert(ext).second) {
        if (stats) ++stats->duplicate_emissions;
        continue;
      }
      out.sets.push_back(std::move(ext));
      out.origins.push_back(MeetOrigin::Type2);
    }
  }

  if (stats)
    stats->combines.push_back({m1.members.size(), m2.members.size(), out.sets.size()});
  out.sort_canonical();
  return out;
}

std::optional<LayeredPartition> detect_layering(const ImplicationBase& base) {
  Condensation cond = component_condensation(base);
  for (bool internal : cond.internal_head)
    if (internal) return std::nullopt;

  const std::size_t nb = cond.blocks.size();
  std::vector<std::size_t> indegree(nb, 0);
  for (const auto& outs : cond.arcs)
    for (int to : outs) ++indegree[static_cast<std::size_t>(to)];

  // Kahn topological sort; the ready block with the smallest element goes
  // first, so the layering is deterministic.
  auto smaller = [&](std::size_t a, std::size_t b) {
    return cond.blocks[a].lowest() > cond.blocks[b].lowest();
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(smaller)> ready(
      smaller);
  for (std::size_t b = 0; b < nb; ++b)
    if (indegree[b] == 0) ready.push(b);

  LayeredPartition out;
  while (!ready.empty()) {
    std::size_t b = ready.top();
    ready.pop();
    out.blocks.push_back(cond.blocks[b]);
    for (int to : cond.arcs[b])
      if (--indegree[static_cast<std::size_t>(to)] == 0)
        ready.push(static_cast<std::size_t>(to));
  }
  if (out.blocks.size() != nb) return std::nullopt;  // cycle among blocks
  return out;
}

namespace {

SetFamily boolean_coatoms(const Bitset& universe) {
  SetFamily f;
  f.universe = universe;
  universe.for_each([&](std::size_t i) {
    Bitset s = universe;
    s.reset(i);
    f.members.push_back(std::move(s));
  });
  f.sort_canonical();
  return f;
}

MeetSet singleton_meets(const Bitset& universe, std::size_t width) {
  MeetSet out;
  out.universe = universe;
  out.sets.push_back(Bitset(width));
  out.origins.push_back(MeetOrigin::LeafOracle);
  return out;
}

MeetSet oracle_meets(const ImplicationBase& b, std::size_t budget, CcmStats* stats) {
  SetFamily m = meet_irreducibles_oracle(b, budget);
  if (stats) ++stats->oracle_leaves;
  MeetSet out;
  out.universe = b.universe();
  out.sets = std::move(m.members);
  out.origins.assign(out.sets.size(), MeetOrigin::LeafOracle);
  return out;
}

MeetSet ccm_rec(const ImplicationBase& b, const CcmOptions& opts, CcmStats* stats) {
  const std::size_t n = b.universe().count();
  if (n == 0) return MeetSet{b.universe(), {}, {}};
  if (n == 1) return singleton_meets(b.universe(), b.width());

  auto cut = find_acyclic_split(b);
  if (!cut) return oracle_meets(b, opts.budget, stats);

  SplitReport rep = is_split(b, cut->first, cut->second);
  MeetSet m1 = ccm_rec(rep.i1, opts, stats);
  MeetSet m2 = ccm_rec(rep.i2, opts, stats);
  return combine_meets(rep, m1.family(), m2.family(), stats);
}

}  // namespace

MeetSet ccm(const ImplicationBase& base, const CcmOptions& opts, CcmStats* stats) {
  switch (opts.strategy) {
    case CcmStrategy::Oracle:
      if (base.universe().none()) return MeetSet{base.universe(), {}, {}};
      return oracle_meets(base, opts.budget, stats);
    case CcmStrategy::Layered: {
      auto layering = detect_layering(base);
      if (!layering)
        throw InconsistentInput("base admits no layering into forward blocks");
      return ccm_layered(base, *layering, opts, stats);
    }
    case CcmStrategy::Auto:
    default: {
      if (auto layering = detect_layering(base))
        return ccm_layered(base, *layering, opts, stats);
      return ccm_rec(base, opts, stats);
    }
  }
}

MeetSet ccm_layered(const ImplicationBase& base, const LayeredPartition& layering,
                    const CcmOptions& opts, CcmStats* stats) {
  (void)opts;
  if (stats) stats->layered = true;
  const std::size_t k = layering.blocks.size();
  if (k == 0) return MeetSet{base.universe(), {}, {}};

  Bitset covered(base.width());
  std::size_t total = 0;
  for (const auto& block : layering.blocks) {
    covered |= block;
    total += block.count();
  }
  if (covered != base.universe() || total != covered.count())
    throw InconsistentInput("layering blocks do not partition the universe");

  // Fold the splits (block_i, later blocks) from the back. Every left base
  // must be empty, so its meets are the Boolean co-atoms of the block.
  const Bitset& last = layering.blocks[k - 1];
  if (restrict_to(base, last).size() != 0)
    throw InconsistentInput("layering block contains implications");
  SetFamily coatoms = boolean_coatoms(last);
  MeetSet acc;
  acc.universe = last;
  acc.sets = coatoms.members;
  acc.origins.assign(acc.sets.size(), MeetOrigin::LeafOracle);
  acc.sort_canonical();

  Bitset suffix = last;
  for (std::size_t i = k - 1; i-- > 0;) {
    const Bitset& block = layering.blocks[i];
    Bitset next = block | suffix;
    ImplicationBase sub = restrict_to(base, next);
    SplitReport rep = is_split(sub, block, suffix);
    if (rep.kind != SplitKind::AcyclicSplit || rep.u1 != block ||
        rep.i1.size() != 0)
      throw InconsistentInput("layering does not induce acyclic splits");
    acc = combine_meets(rep, boolean_coatoms(block), acc.family(), stats);
    suffix = std::move(next);
  }
  return acc;
}

}  // namespace impsplit
