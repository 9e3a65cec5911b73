#pragma once

// Shared builders and small independent oracles for the test suites. The
// oracles here deliberately re-derive results by brute force so library
// paths are checked against code that does not share their logic.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "impsplit/base.hpp"
#include "impsplit/generate.hpp"

namespace testutil {

using impsplit::Bitset;
using impsplit::ImplicationBase;

/// Compact base builder with single-character tokens:
/// base_of("1234", "12>3 23>4 4>1").
inline ImplicationBase base_of(const std::string& ground_chars, const std::string& imps) {
  std::vector<std::string> tokens;
  for (char c : ground_chars) tokens.emplace_back(1, c);
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> list;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    auto gt = cur.find('>');
    std::vector<std::string> lhs, rhs;
    for (std::size_t i = 0; i < gt; ++i) lhs.emplace_back(1, cur[i]);
    for (std::size_t i = gt + 1; i < cur.size(); ++i) rhs.emplace_back(1, cur[i]);
    list.emplace_back(std::move(lhs), std::move(rhs));
    cur.clear();
  };
  for (char c : imps) {
    if (c == ' ')
      flush();
    else
      cur += c;
  }
  flush();
  return impsplit::make_base(tokens, list);
}

/// Set from single-character tokens; "" is the empty set.
inline Bitset bits(const ImplicationBase& b, const std::string& chars) {
  Bitset out(b.width());
  for (char c : chars)
    out.set(static_cast<std::size_t>(b.ground()->find(std::string(1, c))));
  return out;
}

inline std::vector<Bitset> fam(const ImplicationBase& b,
                               const std::vector<std::string>& sets) {
  std::vector<Bitset> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(bits(b, s));
  return out;
}

inline bool same_family(std::vector<Bitset> a, std::vector<Bitset> b) {
  std::sort(a.begin(), a.end(), impsplit::size_lex_less);
  std::sort(b.begin(), b.end(), impsplit::size_lex_less);
  return a == b;
}

inline ImplicationBase random_base(std::uint64_t seed, std::size_t n, std::size_t m,
                                   std::size_t p) {
  impsplit::GeneratorSpec spec;
  spec.n = n;
  spec.m = m;
  spec.max_premise = p;
  spec.mode = impsplit::GenMode::Random;
  spec.seed = seed;
  return impsplit::generate_base(spec);
}

// ---- independent oracles -------------------------------------------------

/// Round-based chaining, quadratic on purpose.
inline Bitset naive_closure(const ImplicationBase& b, Bitset x) {
  for (;;) {
    Bitset next = x;
    for (const auto& imp : b.implications())
      if (imp.premise.is_subset_of(next)) next |= imp.conclusion;
    if (next == x) return x;
    x = std::move(next);
  }
}

inline bool naive_model(const ImplicationBase& b, const Bitset& x) {
  for (const auto& imp : b.implications())
    if (imp.premise.is_subset_of(x) && !imp.conclusion.is_subset_of(x)) return false;
  return true;
}

/// All closed sets by filtering every subset of the universe.
inline std::vector<Bitset> brute_closed_sets(const ImplicationBase& b) {
  const std::vector<std::size_t> elems = b.universe().indices();
  std::vector<Bitset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << elems.size()); ++mask) {
    Bitset s(b.width());
    for (std::size_t i = 0; i < elems.size(); ++i)
      if ((mask >> i) & 1u) s.set(elems[i]);
    if (naive_model(b, s)) out.push_back(std::move(s));
  }
  return out;
}

/// Meet-irreducibles as the closed sets with exactly one inclusion-minimal
/// closed strict superset.
inline std::vector<Bitset> brute_meets(const ImplicationBase& b) {
  std::vector<Bitset> closed = brute_closed_sets(b);
  std::vector<Bitset> out;
  for (const auto& c : closed) {
    if (c == b.universe()) continue;
    std::vector<Bitset> strict_above;
    for (const auto& d : closed)
      if (c.is_subset_of(d) && d != c) strict_above.push_back(d);
    std::size_t covers = 0;
    for (const auto& d : strict_above) {
      bool minimal = true;
      for (const auto& e : strict_above)
        if (e != d && e.is_subset_of(d)) minimal = false;
      if (minimal) ++covers;
    }
    if (covers == 1) out.push_back(c);
  }
  return out;
}

/// Minimal transversals by filtering every vertex subset.
inline std::vector<Bitset> brute_transversals(std::size_t width,
                                              const std::vector<Bitset>& edges) {
  std::vector<Bitset> hitting;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << width); ++mask) {
    Bitset s(width);
    for (std::size_t i = 0; i < width; ++i)
      if ((mask >> i) & 1u) s.set(i);
    bool hits_all = true;
    for (const auto& e : edges)
      if (!s.intersects(e)) {
        hits_all = false;
        break;
      }
    if (hits_all) hitting.push_back(std::move(s));
  }
  std::vector<Bitset> out;
  for (const auto& t : hitting) {
    bool minimal = true;
    for (const auto& u : hitting)
      if (u != t && u.is_subset_of(t)) minimal = false;
    if (minimal) out.push_back(t);
  }
  return out;
}

/// Every bipartition (X, U \ X) of the universe with both sides nonempty;
/// each unordered pair appears once.
inline std::vector<std::pair<Bitset, Bitset>> all_bipartitions(const ImplicationBase& b) {
  const std::vector<std::size_t> elems = b.universe().indices();
  std::vector<std::pair<Bitset, Bitset>> out;
  if (elems.size() < 2) return out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (elems.size() - 1)); ++mask) {
    Bitset x(b.width());
    for (std::size_t i = 0; i < elems.size(); ++i)
      if ((mask >> i) & 1u) x.set(elems[i]);
    out.emplace_back(x, b.universe() - x);
  }
  return out;
}

}  // namespace testutil
