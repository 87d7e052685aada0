#include "srtk/schemes.hpp"

#include <algorithm>

#include "srtk/transitions.hpp"

namespace srtk {

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::IO: return "io";
    case Scheme::IOB1: return "iob1";
    case Scheme::IOB2: return "iob2";
    case Scheme::IOE1: return "ioe1";
    case Scheme::IOE2: return "ioe2";
    case Scheme::IOBE: return "iobe";
    case Scheme::IOBES: return "iobes";
    case Scheme::FROBES: return "frobes";
  }
  return "?";
}

std::optional<Scheme> scheme_from_string(std::string_view name) {
  for (Scheme s : kAllSchemes)
    if (name == to_string(s)) return s;
  return std::nullopt;
}

const std::vector<Pos>& tag_set(Scheme s) {
  static const std::vector<Pos> io = {Pos::I, Pos::O};
  static const std::vector<Pos> iob = {Pos::I, Pos::O, Pos::B};
  static const std::vector<Pos> ioe = {Pos::I, Pos::O, Pos::E};
  static const std::vector<Pos> iobe = {Pos::I, Pos::O, Pos::B, Pos::E};
  static const std::vector<Pos> iobes = {Pos::I, Pos::O, Pos::B, Pos::E, Pos::S};
  static const std::vector<Pos> frobes = {Pos::F, Pos::R, Pos::O, Pos::B, Pos::E, Pos::S};
  switch (s) {
    case Scheme::IO: return io;
    case Scheme::IOB1:
    case Scheme::IOB2: return iob;
    case Scheme::IOE1:
    case Scheme::IOE2: return ioe;
    case Scheme::IOBE: return iobe;
    case Scheme::IOBES: return iobes;
    case Scheme::FROBES: return frobes;
  }
  return iobes;
}

bool in_tag_set(Scheme s, Pos p) {
  const auto& set = tag_set(s);
  return std::find(set.begin(), set.end(), p) != set.end();
}

std::string TagLabel::str() const {
  if (pos == Pos::O) return "O";
  std::string out(1, static_cast<char>(pos));
  out += '-';
  out += entity_class;
  return out;
}

std::optional<TagLabel> TagLabel::parse(std::string_view text, Scheme scheme) {
  if (text == "O") return TagLabel::outside();
  if (text.size() < 3 || text[1] != '-') return std::nullopt;
  Pos p;
  switch (text[0]) {
    case 'I': p = Pos::I; break;
    case 'B': p = Pos::B; break;
    case 'E': p = Pos::E; break;
    case 'S': p = Pos::S; break;
    case 'F': p = Pos::F; break;
    case 'R': p = Pos::R; break;
    default: return std::nullopt;
  }
  if (!in_tag_set(scheme, p)) return std::nullopt;
  return TagLabel::of(p, std::string(text.substr(2)));
}

std::strong_ordering TagLabel::operator<=>(const TagLabel& other) const {
  const bool lo = pos == Pos::O, ro = other.pos == Pos::O;
  if (lo || ro) return (ro ? 1 : 0) <=> (lo ? 1 : 0);
  if (auto c = static_cast<char>(pos) <=> static_cast<char>(other.pos); c != 0) return c;
  return entity_class.compare(other.entity_class) <=> 0;
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::IllegalStart: return "illegal-start";
    case ViolationKind::IllegalTransition: return "illegal-transition";
    case ViolationKind::IllegalEnd: return "illegal-end";
    case ViolationKind::CountImbalance: return "count-imbalance";
  }
  return "?";
}

std::pair<int, int> frobes_counts(int n) {
  if (n < 3)
    throw InputError("frobes_counts requires entity length >= 3, got " + std::to_string(n));
  const int rear = (n - 2) / 2;
  const int front = (n - 2) - rear;
  return {front, rear};
}

namespace {

void check_spans(const std::vector<EntitySpan>& sorted, int sentence_len) {
  for (size_t i = 0; i < sorted.size(); ++i) {
    const auto& s = sorted[i];
    if (s.start < 0 || s.start > s.end || s.end >= sentence_len)
      throw InputError("span (" + std::to_string(s.start) + "," + std::to_string(s.end) +
                       ") out of bounds for sentence of length " + std::to_string(sentence_len));
    if (i > 0 && sorted[i - 1].end >= s.start)
      throw InputError("overlapping spans at token " + std::to_string(s.start));
  }
}

}  // namespace

TagSequence encode(std::vector<EntitySpan> spans, int sentence_len, Scheme scheme) {
  std::sort(spans.begin(), spans.end());
  check_spans(spans, sentence_len);

  TagSequence out;
  out.scheme = scheme;
  out.labels.assign(sentence_len, TagLabel::outside());

  for (size_t k = 0; k < spans.size(); ++k) {
    const auto& sp = spans[k];
    const int n = sp.length();
    const std::string& cls = sp.entity_class;
    auto set = [&](int i, Pos p) { out.labels[i] = TagLabel::of(p, cls); };

    switch (scheme) {
      case Scheme::IO:
        for (int i = sp.start; i <= sp.end; ++i) set(i, Pos::I);
        break;
      case Scheme::IOB1: {
        // B only when the previous token closes a same-class entity.
        const bool after_same = k > 0 && spans[k - 1].end == sp.start - 1 &&
                                spans[k - 1].entity_class == cls;
        for (int i = sp.start; i <= sp.end; ++i) set(i, Pos::I);
        if (after_same) set(sp.start, Pos::B);
        break;
      }
      case Scheme::IOB2:
        set(sp.start, Pos::B);
        for (int i = sp.start + 1; i <= sp.end; ++i) set(i, Pos::I);
        break;
      case Scheme::IOE1: {
        // E only when the next token opens a same-class entity.
        const bool before_same = k + 1 < spans.size() && spans[k + 1].start == sp.end + 1 &&
                                 spans[k + 1].entity_class == cls;
        for (int i = sp.start; i <= sp.end; ++i) set(i, Pos::I);
        if (before_same) set(sp.end, Pos::E);
        break;
      }
      case Scheme::IOE2:
        for (int i = sp.start; i < sp.end; ++i) set(i, Pos::I);
        set(sp.end, Pos::E);
        break;
      case Scheme::IOBE:
        // Single-word entities take B.
        set(sp.start, Pos::B);
        if (n > 1) {
          for (int i = sp.start + 1; i < sp.end; ++i) set(i, Pos::I);
          set(sp.end, Pos::E);
        }
        break;
      case Scheme::IOBES:
        if (n == 1) {
          set(sp.start, Pos::S);
        } else {
          set(sp.start, Pos::B);
          for (int i = sp.start + 1; i < sp.end; ++i) set(i, Pos::I);
          set(sp.end, Pos::E);
        }
        break;
      case Scheme::FROBES:
        if (n == 1) {
          set(sp.start, Pos::S);
        } else if (n == 2) {
          set(sp.start, Pos::B);
          set(sp.end, Pos::E);
        } else {
          const auto [front, rear] = frobes_counts(n);
          set(sp.start, Pos::B);
          for (int i = 0; i < front; ++i) set(sp.start + 1 + i, Pos::F);
          for (int i = 0; i < rear; ++i) set(sp.start + 1 + front + i, Pos::R);
          set(sp.end, Pos::E);
        }
        break;
    }
  }
  return out;
}

namespace {

std::vector<EntitySpan> decode_lenient(const TagSequence& tags) {
  std::vector<EntitySpan> spans;
  bool open = false;
  int start = 0;
  std::string cls;

  auto close_at = [&](int end) {
    spans.push_back({start, end, cls});
    open = false;
  };

  const int len = tags.size();
  for (int i = 0; i < len; ++i) {
    const TagLabel& lab = tags.labels[i];
    if (lab.is_outside()) {
      if (open) close_at(i - 1);
      continue;
    }
    const bool opens = !open || lab.entity_class != cls || lab.pos == Pos::B || lab.pos == Pos::S;
    if (opens) {
      if (open) close_at(i - 1);
      open = true;
      start = i;
      cls = lab.entity_class;
    }
    if (lab.pos == Pos::E || lab.pos == Pos::S) close_at(i);
  }
  if (open) close_at(len - 1);
  return spans;
}

// FROBES entities parse as B F* R* E once bigram checks pass; the F/R
// split additionally has to match frobes_counts for the entity length,
// which no bigram constraint can express. Reports the first token whose
// tag differs from the canonical pattern.
void check_frobes_balance(const TagSequence& tags, std::vector<Violation>& out) {
  const int len = tags.size();
  int i = 0;
  while (i < len) {
    if (tags.labels[i].pos != Pos::B) {
      ++i;
      continue;
    }
    const std::string& cls = tags.labels[i].entity_class;
    int j = i + 1;
    while (j < len && (tags.labels[j].pos == Pos::F || tags.labels[j].pos == Pos::R) &&
           tags.labels[j].entity_class == cls)
      ++j;
    if (j >= len || tags.labels[j].pos != Pos::E || tags.labels[j].entity_class != cls) {
      // Not a complete segment; bigram or boundary checks already fired.
      i = j;
      continue;
    }
    const int n = j - i + 1;
    if (n >= 3) {
      const auto [front, rear] = frobes_counts(n);
      int got_front = 0, got_rear = 0;
      int first_diff = -1;
      for (int k = i + 1; k < j; ++k) {
        const Pos expected = (k - i - 1) < front ? Pos::F : Pos::R;
        if (tags.labels[k].pos == Pos::F) ++got_front;
        else ++got_rear;
        if (tags.labels[k].pos != expected && first_diff < 0) first_diff = k;
      }
      if (got_front != front || got_rear != rear) {
        out.push_back({first_diff,
                       ViolationKind::CountImbalance,
                       "entity of length " + std::to_string(n) + " has " +
                           std::to_string(got_front) + " F / " + std::to_string(got_rear) +
                           " R, expected " + std::to_string(front) + " F / " +
                           std::to_string(rear) + " R"});
      }
    }
    i = j + 1;
  }
}

}  // namespace

std::vector<Violation> validate(const TagSequence& tags) {
  const Scheme s = tags.scheme;
  for (const TagLabel& l : tags.labels)
    if (!in_tag_set(s, l.pos))
      throw InputError(std::string("label position ") + static_cast<char>(l.pos) +
                       " outside tag set of scheme " + std::string(to_string(s)));

  std::vector<Violation> out;
  const int len = tags.size();
  if (len == 0) return out;

  if (!start_legal_pos(s, tags.labels[0].pos))
    out.push_back({0, ViolationKind::IllegalStart,
                   tags.labels[0].str() + " may not start a sentence"});

  for (int i = 1; i < len; ++i) {
    const TagLabel& prev = tags.labels[i - 1];
    const TagLabel& next = tags.labels[i];
    if (bigram_legal(s, prev, next)) continue;
    const bool from_outside = prev.is_outside();
    out.push_back({i,
                   from_outside ? ViolationKind::IllegalStart : ViolationKind::IllegalTransition,
                   next.str() + " may not follow " + prev.str()});
  }

  if (!end_legal_pos(s, tags.labels[len - 1].pos))
    out.push_back({len - 1, ViolationKind::IllegalEnd,
                   tags.labels[len - 1].str() + " may not end a sentence"});

  if (s == Scheme::FROBES) check_frobes_balance(tags, out);

  std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return a.token_index < b.token_index;
  });
  return out;
}

std::vector<EntitySpan> decode(const TagSequence& tags, DecodeMode mode) {
  if (mode == DecodeMode::Strict) {
    auto violations = validate(tags);
    if (!violations.empty()) {
      const auto& v = violations.front();
      throw ValidationError("invalid " + std::string(to_string(tags.scheme)) +
                                " sequence: " + std::string(to_string(v.kind)) + " at token " +
                                std::to_string(v.token_index) + ": " + v.description,
                            std::move(violations));
    }
  }
  return decode_lenient(tags);
}

TagSequence convert(const TagSequence& tags, Scheme target, DecodeMode mode) {
  return encode(decode(tags, mode), tags.size(), target);
}

}  // namespace srtk
