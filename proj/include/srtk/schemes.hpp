#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srtk/error.hpp"

namespace srtk {

// The eight segment representation schemes. Each one defines a lossless
// (except IO, which merges adjacent same-class entities) mapping between
// entity spans and per-token tags.
enum class Scheme : uint8_t { IO, IOB1, IOB2, IOE1, IOE2, IOBE, IOBES, FROBES };

inline constexpr Scheme kAllSchemes[] = {
    Scheme::IO,   Scheme::IOB1, Scheme::IOB2,  Scheme::IOE1,
    Scheme::IOE2, Scheme::IOBE, Scheme::IOBES, Scheme::FROBES,
};

std::string_view to_string(Scheme s);
std::optional<Scheme> scheme_from_string(std::string_view name);

// Positional part of a tag. O stands alone; the rest pair with a class.
enum class Pos : char {
  O = 'O',
  I = 'I',
  B = 'B',
  E = 'E',
  S = 'S',
  F = 'F',
  R = 'R',
};

// Tag positions a scheme may emit, O included.
const std::vector<Pos>& tag_set(Scheme s);
bool in_tag_set(Scheme s, Pos p);

// A per-token label: O, or position + entity class.
struct TagLabel {
  Pos pos = Pos::O;
  std::string entity_class;  // empty iff pos == O

  static TagLabel outside() { return {}; }
  static TagLabel of(Pos p, std::string cls) { return {p, std::move(cls)}; }

  bool is_outside() const { return pos == Pos::O; }
  std::string str() const;

  // "O" or "<POS>-<class>", split at the first hyphen. The position letter
  // must belong to the scheme's tag set; returns nullopt otherwise.
  static std::optional<TagLabel> parse(std::string_view text, Scheme scheme);

  bool operator==(const TagLabel&) const = default;
  // Total order with O first, then byte order of "<POS>-<class>". This is
  // the tie-break order used by the decoder.
  std::strong_ordering operator<=>(const TagLabel& other) const;
};

// A contiguous token range [start, end] with an entity class.
struct EntitySpan {
  int start = 0;  // 0-based, inclusive
  int end = 0;    // 0-based, inclusive
  std::string entity_class;

  int length() const { return end - start + 1; }
  bool overlaps(const EntitySpan& o) const {
    return start <= o.end && o.start <= end;
  }

  bool operator==(const EntitySpan&) const = default;
  auto operator<=>(const EntitySpan&) const = default;
};

struct TagSequence {
  std::vector<TagLabel> labels;
  Scheme scheme = Scheme::IOB2;

  int size() const { return static_cast<int>(labels.size()); }
  bool operator==(const TagSequence&) const = default;
};

enum class ViolationKind : uint8_t {
  IllegalStart,
  IllegalTransition,
  IllegalEnd,
  CountImbalance,
};

std::string_view to_string(ViolationKind k);

// One strict-mode defect, anchored at a token index.
struct Violation {
  int token_index = 0;
  ViolationKind kind = ViolationKind::IllegalTransition;
  std::string description;

  bool operator==(const Violation&) const = default;
};

// Raised when strict decoding rejects a sequence.
class ValidationError : public Error {
public:
  ValidationError(std::string msg, std::vector<Violation> violations)
      : Error(std::move(msg)), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

private:
  std::vector<Violation> violations_;
};

enum class DecodeMode : uint8_t { Strict, Lenient };

// Number of F and R tags inside a FROBES entity of length n >= 3.
// Even n gives (n-2)/2 of each; odd n gives one extra F.
std::pair<int, int> frobes_counts(int n);

// Spans -> tags under the given scheme. Spans must be disjoint and inside
// [0, sentence_len); throws InputError otherwise.
TagSequence encode(std::vector<EntitySpan> spans, int sentence_len, Scheme scheme);

// Tags -> spans. Strict mode accepts exactly the sequences encode can
// produce and throws ValidationError otherwise. Lenient mode always
// succeeds via deterministic run-splitting repair; on valid input it
// agrees with strict mode.
std::vector<EntitySpan> decode(const TagSequence& tags, DecodeMode mode);

// All strict-mode defects, ordered by token index. Empty iff strict decode
// succeeds.
std::vector<Violation> validate(const TagSequence& tags);

// encode(decode(tags, mode), target) with the source sentence length.
TagSequence convert(const TagSequence& tags, Scheme target, DecodeMode mode);

}  // namespace srtk
