#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace impsplit {

/// Fixed-width bit vector sized to the ground set of a base. Binary
/// operations require operands of identical capacity.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits)
      : nbits_(nbits), words_(word_count(nbits), 0) {}

  static Bitset full(std::size_t nbits) {
    Bitset b(nbits);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  static Bitset single(std::size_t nbits, std::size_t i) {
    Bitset b(nbits);
    b.set(i);
    return b;
  }

  std::size_t capacity() const { return nbits_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  Bitset& set(std::size_t i) {
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    return *this;
  }
  Bitset& reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    return *this;
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset& o) const = default;

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// Smallest set index, or -1 when empty.
  int lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i])
        return static_cast<int>(i * 64 +
                                static_cast<std::size_t>(std::countr_zero(words_[i])));
    return -1;
  }

  bool has_any_above(std::size_t i) const {
    std::size_t wi = i >> 6;
    if (wi >= words_.size()) return false;
    std::uint64_t mask = ~std::uint64_t{0} << (i & 63);
    mask &= mask << 1;  // strictly above i
    if ((i & 63) == 63) mask = 0;
    if (words_[wi] & mask) return true;
    for (std::size_t w = wi + 1; w < words_.size(); ++w)
      if (words_[w]) return true;
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ nbits_);
  }

 private:
  static std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }
  void trim() {
    if (nbits_ % 64 != 0 && !words_.empty())
      words_.back() &= (~std::uint64_t{0} >> (64 - (nbits_ % 64)));
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

/// Lexicographic order on the ascending index sequences of two sets; a strict
/// prefix sorts first.
inline bool lex_less(const Bitset& a, const Bitset& b) {
  Bitset diff = a;
  diff -= b;
  Bitset diff2 = b;
  diff2 -= a;
  int da = diff.lowest();
  int db = diff2.lowest();
  if (da < 0 && db < 0) return false;  // equal
  // One side is contained in the other: the smaller set wins only when it is
  // a genuine prefix, i.e. has nothing beyond the first difference.
  if (da < 0) return !a.has_any_above(static_cast<std::size_t>(db));
  if (db < 0) return b.has_any_above(static_cast<std::size_t>(da));
  // Otherwise both own elements past the common prefix, so the smaller first
  // difference decides.
  return da < db;
}

inline bool size_lex_less(const Bitset& a, const Bitset& b) {
  std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

}  // namespace impsplit
