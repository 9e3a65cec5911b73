#pragma once

#include <vector>

#include "impsplit/base.hpp"
#include "impsplit/oracle.hpp"

namespace impsplit {

struct Hypergraph {
  Bitset vertices;
  std::vector<Bitset> edges;
};

/// Inclusion-minimal transversals. Tr of an empty edge set is {∅}; any empty
/// edge kills every transversal.
Hypergraph min_transversals(const Hypergraph& h);

enum class Polarity { Negative, Positive };

/// An antichain of closed sets splitting a closure system into the filter
/// above it (negative) or the ideal below it (positive).
struct Border {
  Polarity polarity = Polarity::Negative;
  Bitset universe;
  std::vector<Bitset> sets;
};

/// Minimal closed sets of i1 forced out of the extensions of c2: the
/// inclusion-minimal closures of cross premises whose head c2 misses.
Border negative_border(const ImplicationBase& i1, const ImplicationBase& ibip,
                       const Bitset& c2);

/// The positive border dual to bminus inside the closure system of i1:
/// maximal closed sets containing no member of bminus. With no implications
/// this is plain hypergraph dualization (complements of minimal
/// transversals); otherwise maximal avoiders are assembled as intersections
/// of meet-irreducibles chosen along minimal transversals of bminus.
Border ldual(const ImplicationBase& i1, const SetFamily& m1, const Border& bminus);

/// Exhaustive duality check against the enumerated closure system of i1:
/// every closed set lies in exactly one of the filter of bminus and the
/// ideal of bplus.
bool verify_dual(const ImplicationBase& i1, const Border& bminus, const Border& bplus,
                 std::size_t budget = kDefaultBudget);

}  // namespace impsplit
