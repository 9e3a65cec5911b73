#include "impsplit/dualize.hpp"

#include <algorithm>

namespace impsplit {

// Berge multiplication with inclusion-minimal pruning after every edge. A
// partial transversal meeting the next edge is kept as is; otherwise it
// branches over the edge's vertices.
Hypergraph min_transversals(const Hypergraph& h) {
  Hypergraph out;
  out.vertices = h.vertices;

  std::vector<Bitset> edges = minimal_sets(h.edges);
  for (const auto& e : edges)
    if (e.none()) return out;  // an empty edge admits no transversal

  std::vector<Bitset> tr = {Bitset(h.vertices.capacity())};
  for (const auto& e : edges) {
    std::vector<Bitset> next;
    next.reserve(tr.size());
    for (const auto& t : tr) {
      if (t.intersects(e)) {
        next.push_back(t);
        continue;
      }
      e.for_each([&](std::size_t v) {
        Bitset grown = t;
        grown.set(v);
        next.push_back(std::move(grown));
      });
    }
    tr = minimal_sets(std::move(next));
  }
  std::sort(tr.begin(), tr.end(), size_lex_less);
  out.edges = std::move(tr);
  return out;
}

Border negative_border(const ImplicationBase& i1, const ImplicationBase& ibip,
                       const Bitset& c2) {
  ClosureFn cl1(i1);
  std::vector<Bitset> closures;
  const ImplicationBase cross = unit_expand(ibip);
  for (const auto& imp : cross.implications()) {
    const std::size_t head = static_cast<std::size_t>(imp.conclusion.lowest());
    if (c2.test(head)) continue;
    closures.push_back(cl1(imp.premise));
  }
  Border out;
  out.polarity = Polarity::Negative;
  out.universe = i1.universe();
  out.sets = minimal_sets(std::move(closures));
  std::sort(out.sets.begin(), out.sets.end(), size_lex_less);
  return out;
}

Border ldual(const ImplicationBase& i1, const SetFamily& m1, const Border& bminus) {
  ClosureFn cl1(i1);
  for (const auto& b : bminus.sets)
    if (cl1(b) != b)
      throw InconsistentInput("negative border member is not a closed set");

  Border out;
  out.polarity = Polarity::Positive;
  out.universe = i1.universe();
  const Bitset& top = i1.universe();

  if (bminus.sets.empty()) {
    out.sets = {top};
    return out;
  }

  Hypergraph tr = min_transversals(Hypergraph{top, bminus.sets});

  if (i1.size() == 0) {
    // Boolean closure system: maximal avoiders are complements of minimal
    // transversals.
    for (const auto& t : tr.edges) out.sets.push_back(top - t);
    std::sort(out.sets.begin(), out.sets.end(), size_lex_less);
    return out;
  }

  // Every maximal closed avoider C misses a minimal transversal T of the
  // border, and for each t in T some meet-irreducible above C excludes t;
  // C is then the intersection of those choices. Enumerate choices per
  // transversal, keeping only maximal partial intersections.
  std::vector<Bitset> results;
  for (const auto& t : tr.edges) {
    std::vector<Bitset> partial = {top};
    bool dead = false;
    for (std::size_t v : t.indices()) {
      std::vector<Bitset> grown;
      for (const auto& p : partial)
        for (const auto& m : m1.members)
          if (!m.test(v)) grown.push_back(p & m);
      if (grown.empty()) {
        dead = true;
        break;
      }
      partial = maximal_sets(std::move(grown));
    }
    if (!dead) results.insert(results.end(), partial.begin(), partial.end());
  }
  out.sets = maximal_sets(std::move(results));
  std::sort(out.sets.begin(), out.sets.end(), size_lex_less);
  return out;
}

bool verify_dual(const ImplicationBase& i1, const Border& bminus, const Border& bplus,
                 std::size_t budget) {
  if (!is_antichain(bminus.sets) || !is_antichain(bplus.sets)) return false;
  ClosureSystem cs = enumerate_closed_sets(i1, budget);
  for (const auto& b : bminus.sets)
    if (!cs.contains(b)) return false;
  for (const auto& p : bplus.sets)
    if (!cs.contains(p)) return false;
  for (const auto& c : cs.sets) {
    bool in_filter = false;
    for (const auto& b : bminus.sets)
      if (b.is_subset_of(c)) {
        in_filter = true;
        break;
      }
    bool in_ideal = false;
    for (const auto& p : bplus.sets)
      if (c.is_subset_of(p)) {
        in_ideal = true;
        break;
      }
    if (in_filter == in_ideal) return false;
  }
  return true;
}

}  // namespace impsplit
