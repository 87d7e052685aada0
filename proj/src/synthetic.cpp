#include "srtk/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "srtk/error.hpp"

namespace srtk {

namespace {

// Keep randomness platform-stable: mt19937_64 is fully specified, and we
// derive values from raw draws only.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

uint64_t below(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

struct ClassLexicon {
  std::vector<std::string> solo;  // single-token entity names
  std::string stem, mark;         // fixed pair ending every entity of length >= 2
};

}  // namespace

Corpus generate_synthetic(const GenConfig& config) {
  double mass = 0.0;
  for (double p : config.length_distribution) {
    if (p < 0.0) throw ConfigError("length_distribution has a negative probability");
    mass += p;
  }
  if (std::abs(mass - 1.0) > 1e-9)
    throw ConfigError("length_distribution must sum to 1, got " + std::to_string(mass));
  if (config.entity_density < 0.0 || config.entity_density > 1.0)
    throw ConfigError("entity_density must lie in [0,1]");
  if (config.sentence_count < 0) throw ConfigError("sentence_count must be >= 0");
  if (config.vocab_size < 1) throw ConfigError("vocab_size must be >= 1");
  if (config.entity_density > 0.0 && config.class_set.empty())
    throw ConfigError("class_set must be non-empty when entity_density > 0");

  std::vector<std::string> classes(config.class_set);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  std::vector<ClassLexicon> lexicons;
  for (const std::string& cls : classes) {
    ClassLexicon lex;
    for (int j = 0; j < 16; ++j) lex.solo.push_back(cls + "_uni" + std::to_string(j));
    lex.stem = cls + "_stem";
    lex.mark = cls + "_mark";
    lexicons.push_back(std::move(lex));
  }
  // Interior tokens are shared across classes, so the class of a long
  // entity is carried by its ending pair.
  std::vector<std::string> interior;
  for (int j = 0; j < 32; ++j) interior.push_back("m" + std::to_string(j));

  std::mt19937_64 rng(config.seed);
  auto draw_length = [&] {
    const double u = uniform01(rng);
    double acc = 0.0;
    for (int i = 0; i < 6; ++i) {
      acc += config.length_distribution[i];
      if (u < acc) return i + 1;
    }
    return 6;
  };

  Corpus corpus;
  corpus.sentences.reserve(config.sentence_count);
  for (int si = 0; si < config.sentence_count; ++si) {
    Sentence sent;
    const int len = 8 + static_cast<int>(below(rng, 18));  // 8..25 tokens
    int p = 0;
    while (p < len) {
      if (!classes.empty() && uniform01(rng) < config.entity_density) {
        const int ci = static_cast<int>(below(rng, classes.size()));
        const ClassLexicon& lex = lexicons[ci];
        const int n = std::min(draw_length(), len - p);
        if (n == 1) {
          sent.tokens.push_back({lex.solo[below(rng, lex.solo.size())]});
        } else {
          for (int k = 0; k < n - 2; ++k)
            sent.tokens.push_back({interior[below(rng, interior.size())]});
          sent.tokens.push_back({lex.stem});
          sent.tokens.push_back({lex.mark});
        }
        sent.spans.push_back({p, p + n - 1, classes[ci]});
        p += n;
      } else {
        sent.tokens.push_back({"w" + std::to_string(below(rng, config.vocab_size))});
        ++p;
      }
    }
    corpus.sentences.push_back(std::move(sent));
  }
  return corpus;
}

}  // namespace srtk
