#pragma once

#include <set>
#include <string>
#include <vector>

#include "srtk/schemes.hpp"

namespace srtk {

// Boundary and bigram legality for one scheme over a fixed class set.
// (prev, next) is legal iff some valid span configuration encodes to a
// sequence containing prev immediately followed by next; start/end legality
// is defined the same way for sentence boundaries. Immutable once built.
class TransitionTable {
public:
  static TransitionTable build(Scheme scheme, const std::set<std::string>& classes);

  Scheme scheme() const { return scheme_; }
  // Label 0 is always O; the rest are sorted by TagLabel order.
  const std::vector<TagLabel>& labels() const { return labels_; }
  int label_count() const { return static_cast<int>(labels_.size()); }
  int index_of(const TagLabel& label) const;  // -1 when absent

  bool start_legal(int label) const { return start_[label] != 0; }
  bool end_legal(int label) const { return end_[label] != 0; }
  bool legal(int prev, int next) const {
    return bigram_[static_cast<size_t>(prev) * labels_.size() + next] != 0;
  }

  bool start_legal(const TagLabel& l) const;
  bool end_legal(const TagLabel& l) const;
  bool legal(const TagLabel& prev, const TagLabel& next) const;

private:
  Scheme scheme_ = Scheme::IOB2;
  std::vector<TagLabel> labels_;
  std::vector<uint8_t> start_, end_, bigram_;
};

// Position-level legality rules, independent of concrete classes. Exposed
// for validation and the table builder.
bool start_legal_pos(Scheme s, Pos p);
bool end_legal_pos(Scheme s, Pos p);
// prev/next are non-O positions; same_class tells whether the two labels
// carry the same entity class.
bool bigram_legal_pos(Scheme s, Pos prev, Pos next, bool same_class);
// Full label-level rule including O on either side.
bool bigram_legal(Scheme s, const TagLabel& prev, const TagLabel& next);

inline TransitionTable legal_transitions(Scheme scheme,
                                         const std::set<std::string>& classes) {
  return TransitionTable::build(scheme, classes);
}

}  // namespace srtk
