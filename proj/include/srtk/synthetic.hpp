#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "srtk/corpus.hpp"

namespace srtk {

// Synthetic corpus generator. Entities carry class-correlated lexical
// signal: single-token entities come from a per-class vocabulary, and every
// entity of length >= 2 ends with a fixed per-class pseudo-word pair, the
// way real biomedical names share common endings. Interior tokens of long
// entities come from a class-neutral pool, so the class of a long entity is
// visible mostly near its rear.
struct GenConfig {
  int sentence_count = 100;
  int vocab_size = 500;
  std::vector<std::string> class_set = {"cell_type", "dna", "protein"};
  // P(entity length = i+1); must sum to 1 within 1e-9.
  std::array<double, 6> length_distribution = {0.40, 0.30, 0.15, 0.08, 0.05, 0.02};
  double entity_density = 0.15;  // per-position chance of opening an entity
  uint64_t seed = 1;
};

// Deterministic for a fixed config. Throws ConfigError on an invalid
// distribution or density.
Corpus generate_synthetic(const GenConfig& config);

}  // namespace srtk
