#include "srtk/transitions.hpp"

#include <algorithm>

namespace srtk {

namespace {

// Positions that may carry the first token of an entity when the previous
// context is O or the sentence start.
bool opener(Scheme s, Pos p) {
  switch (s) {
    case Scheme::IO: return p == Pos::I;
    case Scheme::IOB1: return p == Pos::I;
    case Scheme::IOB2: return p == Pos::B;
    case Scheme::IOE1:
    case Scheme::IOE2: return p == Pos::I || p == Pos::E;
    case Scheme::IOBE: return p == Pos::B;
    case Scheme::IOBES:
    case Scheme::FROBES: return p == Pos::B || p == Pos::S;
  }
  return false;
}

// Positions that may carry the last token of an entity when the following
// context is O or the sentence end.
bool closer(Scheme s, Pos p) {
  switch (s) {
    case Scheme::IO: return p == Pos::I;
    case Scheme::IOB1:
    case Scheme::IOB2: return p == Pos::I || p == Pos::B;
    case Scheme::IOE1: return p == Pos::I;
    case Scheme::IOE2: return p == Pos::E;
    case Scheme::IOBE: return p == Pos::B || p == Pos::E;
    case Scheme::IOBES:
    case Scheme::FROBES: return p == Pos::E || p == Pos::S;
  }
  return false;
}

}  // namespace

bool start_legal_pos(Scheme s, Pos p) { return p == Pos::O || opener(s, p); }

bool end_legal_pos(Scheme s, Pos p) { return p == Pos::O || closer(s, p); }

bool bigram_legal_pos(Scheme s, Pos prev, Pos next, bool same_class) {
  switch (s) {
    case Scheme::IO:
      return true;  // I-X I-Y is two adjacent entities, I-X I-X one entity
    case Scheme::IOB1:
      // B marks an entity opening right after a same-class entity.
      if (next == Pos::B) return same_class;
      return true;  // next == I
    case Scheme::IOB2:
      if (next == Pos::I) return same_class && (prev == Pos::B || prev == Pos::I);
      return true;  // next == B
    case Scheme::IOE1:
      // E promises that a same-class entity opens at the next token.
      if (prev == Pos::E) return same_class;
      return true;  // prev == I
    case Scheme::IOE2:
      if (prev == Pos::I) return same_class && (next == Pos::I || next == Pos::E);
      return true;  // prev == E
    case Scheme::IOBE:
      switch (prev) {
        case Pos::B: return next == Pos::B || (same_class && (next == Pos::I || next == Pos::E));
        case Pos::I: return same_class && (next == Pos::I || next == Pos::E);
        case Pos::E: return next == Pos::B;
        default: return false;
      }
    case Scheme::IOBES:
      switch (prev) {
        case Pos::B:
        case Pos::I: return same_class && (next == Pos::I || next == Pos::E);
        case Pos::E:
        case Pos::S: return next == Pos::B || next == Pos::S;
        default: return false;
      }
    case Scheme::FROBES:
      switch (prev) {
        case Pos::B: return same_class && (next == Pos::F || next == Pos::E);
        case Pos::F: return same_class && (next == Pos::F || next == Pos::R || next == Pos::E);
        case Pos::R: return same_class && (next == Pos::R || next == Pos::E);
        case Pos::E:
        case Pos::S: return next == Pos::B || next == Pos::S;
        default: return false;
      }
  }
  return false;
}

bool bigram_legal(Scheme s, const TagLabel& prev, const TagLabel& next) {
  if (prev.is_outside() && next.is_outside()) return true;
  if (prev.is_outside()) return opener(s, next.pos);
  if (next.is_outside()) return closer(s, prev.pos);
  return bigram_legal_pos(s, prev.pos, next.pos,
                          prev.entity_class == next.entity_class);
}

TransitionTable TransitionTable::build(Scheme scheme, const std::set<std::string>& classes) {
  TransitionTable t;
  t.scheme_ = scheme;
  t.labels_.push_back(TagLabel::outside());
  for (const std::string& cls : classes)
    for (Pos p : tag_set(scheme))
      if (p != Pos::O) t.labels_.push_back(TagLabel::of(p, cls));
  std::sort(t.labels_.begin(), t.labels_.end());

  const size_t n = t.labels_.size();
  t.start_.resize(n);
  t.end_.resize(n);
  t.bigram_.resize(n * n);
  for (size_t i = 0; i < n; ++i) {
    t.start_[i] = start_legal_pos(scheme, t.labels_[i].pos);
    t.end_[i] = end_legal_pos(scheme, t.labels_[i].pos);
    for (size_t j = 0; j < n; ++j)
      t.bigram_[i * n + j] = bigram_legal(scheme, t.labels_[i], t.labels_[j]);
  }
  return t;
}

int TransitionTable::index_of(const TagLabel& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

bool TransitionTable::start_legal(const TagLabel& l) const {
  const int i = index_of(l);
  return i >= 0 && start_legal(i);
}

bool TransitionTable::end_legal(const TagLabel& l) const {
  const int i = index_of(l);
  return i >= 0 && end_legal(i);
}

bool TransitionTable::legal(const TagLabel& prev, const TagLabel& next) const {
  const int i = index_of(prev), j = index_of(next);
  return i >= 0 && j >= 0 && legal(i, j);
}

}  // namespace srtk
