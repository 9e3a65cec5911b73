#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "impsplit/base.hpp"

namespace impsplit {

/// Partition of the universe into premise-connected components, blocks sorted
/// by their smallest element.
struct ComponentPartition {
  std::vector<Bitset> blocks;
  std::vector<int> block_of;  // ground index -> block id, -1 outside universe
};

ComponentPartition premise_components(const ImplicationBase& base);

bool has_split(const ImplicationBase& base);

/// The bipartition (C, U \ C) for the block C containing the smallest
/// element, when more than one block exists.
std::optional<std::pair<Bitset, Bitset>> find_split(const ImplicationBase& base);

enum class SplitKind { NotASplit, Split, AcyclicSplit };

struct SplitReport {
  Bitset u1, u2;
  SplitKind kind = SplitKind::NotASplit;
  ImplicationBase i1, i2, ibip;       // filled when kind != NotASplit
  std::optional<Implication> violation;  // premise straddling both sides
};

/// Classify a bipartition. On AcyclicSplit the report is oriented so every
/// cross implication has its premise in u1.
SplitReport is_split(const ImplicationBase& base, const Bitset& u1, const Bitset& u2);

/// Digraph over premise-connected components: an arc B -> B' records an
/// implication with premise in B and head in B'. Heads landing in their own
/// premise block are flagged instead of looped.
struct Condensation {
  std::vector<Bitset> blocks;
  std::vector<std::vector<int>> arcs;
  std::vector<bool> internal_head;
};

Condensation component_condensation(const ImplicationBase& base);

/// Bipartition from the strongly connected components of the condensation:
/// u2 is the sink component containing the smallest element among sinks, u1
/// everything else, so cross implications all point u1 -> u2.
std::optional<std::pair<Bitset, Bitset>> find_acyclic_split(const ImplicationBase& base);

/// Strongly connected components of a digraph, as vertex -> component id.
std::vector<int> strongly_connected_components(std::size_t n,
                                               const std::vector<std::vector<int>>& arcs,
                                               std::size_t& count);

}  // namespace impsplit
