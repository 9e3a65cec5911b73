#pragma once

#include <istream>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "impsplit/bitset.hpp"
#include "impsplit/errors.hpp"

namespace impsplit {

/// Interned element tokens. Tokens are sorted lexicographically, so dense
/// index order and token order coincide for every base built through this
/// module.
struct Ground {
  std::vector<std::string> tokens;
  std::unordered_map<std::string, int> index;

  static std::shared_ptr<const Ground> make(std::vector<std::string> toks);
  int find(std::string_view tok) const;
  std::size_t size() const { return tokens.size(); }
};

using GroundPtr = std::shared_ptr<const Ground>;

struct Implication {
  Bitset premise;
  Bitset conclusion;
  bool operator==(const Implication&) const = default;
};

/// Canonical order: by premise, then conclusion, each compared as ascending
/// token sequences.
bool implication_less(const Implication& a, const Implication& b);

/// An implicational base over a sub-universe of an interned ground set.
/// Immutable after construction apart from release_implications(), which the
/// tree builders use to drop a consumed base before recursing.
class ImplicationBase {
 public:
  ImplicationBase() = default;
  ImplicationBase(GroundPtr ground, Bitset universe, std::vector<Implication> imps);

  const GroundPtr& ground() const { return ground_; }
  const Bitset& universe() const { return universe_; }
  std::span<const Implication> implications() const& { return imps_; }
  // rvalue overload returns by value so iterating a temporary's implications
  // cannot dangle
  std::vector<Implication> implications() && { return std::move(imps_); }
  std::size_t size() const { return imps_.size(); }

  /// Bit width shared by every set of this base (= |ground tokens|).
  std::size_t width() const { return ground_ ? ground_->size() : 0; }

  void release_implications() {
    imps_.clear();
    imps_.shrink_to_fit();
  }

 private:
  GroundPtr ground_;
  Bitset universe_;
  std::vector<Implication> imps_;
};

/// Build a base from token lists; the ground set is the union of `tokens`
/// and every mentioned element.
ImplicationBase make_base(
    const std::vector<std::string>& tokens,
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>&
        implications);

ImplicationBase parse_base(std::istream& in);
ImplicationBase parse_base(const std::string& text);

/// Canonical text form: ground directive, then normalized implications sorted
/// by (premise, conclusion).
std::string serialize(const ImplicationBase& base);

std::string format_set(const Ground& ground, const Bitset& set);
std::string format_implication(const Ground& ground, const Implication& imp);

/// Remove premise elements from conclusions; drop implications whose
/// conclusion becomes empty. Order and duplicates are preserved.
ImplicationBase normalize(const ImplicationBase& base);

/// {A -> b | A -> B in I, b in B \ A}.
ImplicationBase unit_expand(const ImplicationBase& base);

/// Unit implications fully inside `subset`; the result ranges over `subset`.
ImplicationBase restrict_to(const ImplicationBase& base, const Bitset& subset);

/// Unit implications crossing between u1 and u2. A premise straddling both
/// sides throws NotASplitError.
ImplicationBase bipartite_part(const ImplicationBase& base, const Bitset& u1,
                               const Bitset& u2);

/// Re-express a base over another ground table containing the same tokens.
ImplicationBase rebase(const ImplicationBase& base, const GroundPtr& target);

struct SetFamily {
  Bitset universe;
  std::vector<Bitset> members;

  void sort_canonical();  // by (size, lex)
  bool contains(const Bitset& s) const;
  bool operator==(const SetFamily&) const = default;
};

/// {S ∩ subset | S ∈ family}, duplicates collapsed.
SetFamily trace(const SetFamily& family, const Bitset& subset);

std::vector<Bitset> dedup_sets(std::vector<Bitset> sets);
std::vector<Bitset> minimal_sets(std::vector<Bitset> sets);
std::vector<Bitset> maximal_sets(std::vector<Bitset> sets);
bool is_antichain(std::span<const Bitset> sets);

}  // namespace impsplit
