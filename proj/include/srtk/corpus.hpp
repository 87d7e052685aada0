#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "srtk/schemes.hpp"

namespace srtk {

struct Token {
  std::string surface;  // non-empty, no internal whitespace

  bool operator==(const Token&) const = default;
};

// Tokens plus flat (pairwise disjoint) entity spans, sorted by start.
struct Sentence {
  std::vector<Token> tokens;
  std::vector<EntitySpan> spans;

  int size() const { return static_cast<int>(tokens.size()); }
  bool operator==(const Sentence&) const = default;
};

struct Corpus {
  std::vector<Sentence> sentences;

  // Union of classes appearing in spans.
  std::set<std::string> class_inventory() const;
  size_t size() const { return sentences.size(); }
  bool operator==(const Corpus&) const = default;
};

// Entity length counts bucketed as {1, 2, 3, >3}. Fractions are of total.
struct LengthHistogram {
  struct Bucket {
    long count = 0;
    double fraction = 0.0;
  };
  Bucket n1, n2, n3, n_gt3;
  long total = 0;
};

struct ConllOptions {
  int tag_column = -1;  // -1 = last whitespace-separated column
  DecodeMode mode = DecodeMode::Strict;
};

// One sentence as read from a CoNLL-style file, before span decoding.
struct TaggedSentence {
  std::vector<Token> tokens;
  TagSequence tags;
};

// Reads token/tag columns without decoding spans. Throws ParseError on a
// line with too few columns and TagSetError on a tag whose position letter
// is outside the scheme's tag set.
std::vector<TaggedSentence> read_tagged(std::string_view text, Scheme scheme,
                                        int tag_column = -1);

// Token column only; any tag columns are ignored.
std::vector<std::vector<Token>> read_tokens(std::string_view text);

// Full parse: read_tagged + per-sentence decode. In strict mode a decode
// violation raises ValidationError naming sentence and token.
Corpus parse_conll(std::string_view text, Scheme scheme, const ConllOptions& opts = {});

// One "token tag" line per token, blank line after each sentence.
std::string write_conll(const Corpus& corpus, Scheme scheme);
std::string write_tagged(const std::vector<TaggedSentence>& sentences);

LengthHistogram corpus_stats(const Corpus& corpus);

// Table-shaped rendering: one "bucket<TAB>count<TAB>percent" line per
// bucket plus a total line; percentages printed with 2 decimals.
std::string render_histogram(const LengthHistogram& hist);

}  // namespace srtk
