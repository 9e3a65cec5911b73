#pragma once

#include <optional>
#include <vector>

#include "impsplit/base.hpp"
#include "impsplit/dualize.hpp"
#include "impsplit/oracle.hpp"
#include "impsplit/split.hpp"

namespace impsplit {

enum class MeetOrigin { Type1, Type2, LeafOracle };

/// Meet-irreducible closed sets with the provenance of the final combining
/// step: lifted from the u1 side (Type1), maximal extensions of u2-side
/// meets (Type2), or produced at a leaf.
struct MeetSet {
  Bitset universe;
  std::vector<Bitset> sets;
  std::vector<MeetOrigin> origins;

  SetFamily family() const;
  void sort_canonical();
};

struct CombineRecord {
  std::size_t left, right, combined;
};

struct CcmStats {
  std::vector<CombineRecord> combines;
  std::size_t oracle_leaves = 0;
  std::size_t duplicate_emissions = 0;
  bool layered = false;
};

enum class CcmStrategy { Auto, Layered, Oracle };

struct CcmOptions {
  CcmStrategy strategy = CcmStrategy::Auto;
  std::size_t budget = kDefaultBudget;
};

/// Maximal extensions of c2 across an acyclic split: the positive border of
/// the c2-violating premise closures, each joined with c2.
SetFamily max_ext(const SplitReport& split, const SetFamily& m1, const Bitset& c2);

/// Meet-irreducibles of the whole system from those of the two sides of an
/// acyclic split: {M1 ∪ u2} plus the maximal extensions of each M2.
MeetSet combine_meets(const SplitReport& split, const SetFamily& m1, const SetFamily& m2,
                      CcmStats* stats = nullptr);

/// Ordered partition where every implication points from one block into a
/// strictly later one.
struct LayeredPartition {
  std::vector<Bitset> blocks;
};

std::optional<LayeredPartition> detect_layering(const ImplicationBase& base);

/// Enumerate the meet-irreducible elements of the closure system of `base`.
/// Recurses over acyclic splits, falling back to the enumeration oracle on
/// sub-bases without one.
MeetSet ccm(const ImplicationBase& base, const CcmOptions& opts = {},
            CcmStats* stats = nullptr);

/// Layered fast path: every split has an empty left base, so each maximal-
/// extension query is pure hypergraph dualization. Never calls the oracle.
MeetSet ccm_layered(const ImplicationBase& base, const LayeredPartition& layering,
                    const CcmOptions& opts = {}, CcmStats* stats = nullptr);

}  // namespace impsplit
