#pragma once

#include <cstdint>
#include <string>

#include "impsplit/base.hpp"

namespace impsplit {

enum class GenMode { Random, Acyclic, Layered, Ranked, Chain };

GenMode parse_gen_mode(const std::string& name);
std::string gen_mode_name(GenMode mode);

/// Deterministic instance description: the same spec and seed always produce
/// a byte-identical base.
struct GeneratorSpec {
  std::size_t n = 1;            // ground size
  std::size_t m = 0;            // implication count (ignored by Chain)
  std::size_t max_premise = 2;  // premise sizes drawn from 1..max_premise
  std::size_t k = 2;            // block count for Layered / Ranked
  GenMode mode = GenMode::Random;
  std::uint64_t seed = 0;
};

ImplicationBase generate_base(const GeneratorSpec& spec);

}  // namespace impsplit
