#include "impsplit/generate.hpp"

#include <algorithm>
#include <random>

namespace impsplit {

GenMode parse_gen_mode(const std::string& name) {
  if (name == "random") return GenMode::Random;
  if (name == "acyclic") return GenMode::Acyclic;
  if (name == "layered") return GenMode::Layered;
  if (name == "ranked") return GenMode::Ranked;
  if (name == "chain") return GenMode::Chain;
  throw InfeasibleSpec("unknown generator mode: " + name);
}

std::string gen_mode_name(GenMode mode) {
  switch (mode) {
    case GenMode::Random: return "random";
    case GenMode::Acyclic: return "acyclic";
    case GenMode::Layered: return "layered";
    case GenMode::Ranked: return "ranked";
    case GenMode::Chain: return "chain";
  }
  return "random";
}

namespace {

// mt19937_64 plus a rejection sampler, so draws do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::size_t below(std::size_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

 private:
  std::mt19937_64 eng_;
};

// k distinct values from [lo, lo+range), ascending.
std::vector<std::size_t> sample_distinct(Rng& rng, std::size_t lo, std::size_t range,
                                         std::size_t k) {
  std::vector<std::size_t> pool(range);
  for (std::size_t i = 0; i < range; ++i) pool[i] = lo + i;
  for (std::size_t i = 0; i < k; ++i)
    std::swap(pool[i], pool[i + rng.below(range - i)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Does `head` reach any premise element through the implication digraph?
bool creates_cycle(const std::vector<std::vector<std::size_t>>& adj,
                   const std::vector<std::size_t>& premise, std::size_t head) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{head};
  seen[head] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t p : premise)
      if (v == p) return true;
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return false;
}

std::vector<std::string> number_tokens(std::size_t n) {
  std::vector<std::string> toks(n);
  for (std::size_t i = 0; i < n; ++i) toks[i] = std::to_string(i + 1);
  return toks;
}

using RawImps = std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>;

void push_imp(RawImps& out, const std::vector<std::string>& toks,
              const std::vector<std::size_t>& premise, std::size_t head) {
  std::vector<std::string> lhs;
  lhs.reserve(premise.size());
  for (std::size_t p : premise) lhs.push_back(toks[p]);
  out.emplace_back(std::move(lhs), std::vector<std::string>{toks[head]});
}

// Near-even contiguous blocks.
std::vector<std::pair<std::size_t, std::size_t>> block_ranges(std::size_t n,
                                                              std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t len = n / k + (i < n % k ? 1 : 0);
    out.emplace_back(start, len);
    start += len;
  }
  return out;
}

}  // namespace

ImplicationBase generate_base(const GeneratorSpec& spec) {
  if (spec.n < 1) throw InfeasibleSpec("ground size must be at least 1");
  if (spec.max_premise < 1) throw InfeasibleSpec("premise size bound must be at least 1");
  const std::vector<std::string> toks = number_tokens(spec.n);
  Rng rng(spec.seed);
  RawImps imps;

  switch (spec.mode) {
    case GenMode::Random: {
      if (spec.n < 2 && spec.m > 0)
        throw InfeasibleSpec("implications need a head outside the premise");
      for (std::size_t j = 0; j < spec.m; ++j) {
        std::size_t s = 1 + rng.below(std::min(spec.max_premise, spec.n - 1));
        auto premise = sample_distinct(rng, 0, spec.n, s);
        // head drawn uniformly among elements outside the premise
        std::size_t pick = rng.below(spec.n - s);
        std::size_t head = 0;
        for (std::size_t e = 0, outside = 0; e < spec.n; ++e) {
          if (std::binary_search(premise.begin(), premise.end(), e)) continue;
          if (outside++ == pick) {
            head = e;
            break;
          }
        }
        push_imp(imps, toks, premise, head);
      }
      break;
    }
    case GenMode::Acyclic: {
      if (spec.n < 2 && spec.m > 0)
        throw InfeasibleSpec("implications need a head outside the premise");
      std::vector<std::vector<std::size_t>> adj(spec.n);
      const std::size_t max_tries = 1000 * std::max<std::size_t>(spec.m, 1);
      std::size_t tries = 0;
      for (std::size_t j = 0; j < spec.m; ++j) {
        for (;;) {
          if (++tries > max_tries)
            throw InfeasibleSpec("could not place implications without a cycle");
          std::size_t s = 1 + rng.below(std::min(spec.max_premise, spec.n - 1));
          auto premise = sample_distinct(rng, 0, spec.n, s);
          std::size_t pick = rng.below(spec.n - s);
          std::size_t head = 0;
          for (std::size_t e = 0, outside = 0; e < spec.n; ++e) {
            if (std::binary_search(premise.begin(), premise.end(), e)) continue;
            if (outside++ == pick) {
              head = e;
              break;
            }
          }
          if (creates_cycle(adj, premise, head)) continue;
          for (std::size_t p : premise) adj[p].push_back(head);
          push_imp(imps, toks, premise, head);
          break;
        }
      }
      break;
    }
    case GenMode::Layered:
    case GenMode::Ranked: {
      if (spec.k < 2) throw InfeasibleSpec("layered and ranked modes need k >= 2");
      if (spec.k > spec.n) throw InfeasibleSpec("more blocks than elements");
      auto blocks = block_ranges(spec.n, spec.k);
      for (std::size_t j = 0; j < spec.m; ++j) {
        std::size_t i = rng.below(spec.k - 1);
        std::size_t target = spec.mode == GenMode::Ranked
                                 ? i + 1
                                 : i + 1 + rng.below(spec.k - 1 - i);
        auto [lo, len] = blocks[i];
        std::size_t s = 1 + rng.below(std::min(spec.max_premise, len));
        auto premise = sample_distinct(rng, lo, len, s);
        auto [hlo, hlen] = blocks[target];
        std::size_t head = hlo + rng.below(hlen);
        push_imp(imps, toks, premise, head);
      }
      break;
    }
    case GenMode::Chain: {
      for (std::size_t i = 0; i + 1 < spec.n; ++i)
        imps.emplace_back(std::vector<std::string>{toks[i]},
                          std::vector<std::string>{toks[i + 1]});
      break;
    }
  }
  return make_base(toks, imps);
}

}  // namespace impsplit
