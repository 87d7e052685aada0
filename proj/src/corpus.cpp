#include "srtk/corpus.hpp"

#include <cstdio>

namespace srtk {

std::set<std::string> Corpus::class_inventory() const {
  std::set<std::string> out;
  for (const Sentence& s : sentences)
    for (const EntitySpan& sp : s.spans) out.insert(sp.entity_class);
  return out;
}

namespace {

std::vector<std::string_view> split_columns(std::string_view line) {
  std::vector<std::string_view> cols;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) cols.push_back(line.substr(i, j - i));
    i = j;
  }
  return cols;
}

// Calls fn(line, line_number) for each line; accepts \n with or without
// a trailing \r.
template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line, ++line_no);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

}  // namespace

std::vector<TaggedSentence> read_tagged(std::string_view text, Scheme scheme, int tag_column) {
  std::vector<TaggedSentence> out;
  TaggedSentence cur;
  cur.tags.scheme = scheme;

  auto flush = [&] {
    if (!cur.tokens.empty()) {
      out.push_back(std::move(cur));
      cur = TaggedSentence{};
      cur.tags.scheme = scheme;
    }
  };

  for_each_line(text, [&](std::string_view line, int line_no) {
    auto cols = split_columns(line);
    if (cols.empty()) {
      flush();
      return;
    }
    const int needed = tag_column < 0 ? 2 : tag_column + 1;
    if (static_cast<int>(cols.size()) < needed)
      throw ParseError("expected at least " + std::to_string(needed) + " columns, got " +
                           std::to_string(cols.size()),
                       line_no);
    std::string_view tag = tag_column < 0 ? cols.back() : cols[tag_column];
    auto label = TagLabel::parse(tag, scheme);
    if (!label)
      throw TagSetError("tag '" + std::string(tag) + "' not valid for scheme " +
                            std::string(to_string(scheme)),
                        line_no);
    cur.tokens.push_back({std::string(cols[0])});
    cur.tags.labels.push_back(std::move(*label));
  });
  flush();
  return out;
}

std::vector<std::vector<Token>> read_tokens(std::string_view text) {
  std::vector<std::vector<Token>> out;
  std::vector<Token> cur;
  for_each_line(text, [&](std::string_view line, int) {
    auto cols = split_columns(line);
    if (cols.empty()) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      return;
    }
    cur.push_back({std::string(cols[0])});
  });
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Corpus parse_conll(std::string_view text, Scheme scheme, const ConllOptions& opts) {
  auto tagged = read_tagged(text, scheme, opts.tag_column);
  Corpus corpus;
  corpus.sentences.reserve(tagged.size());
  for (size_t i = 0; i < tagged.size(); ++i) {
    Sentence s;
    s.tokens = std::move(tagged[i].tokens);
    try {
      s.spans = decode(tagged[i].tags, opts.mode);
    } catch (const ValidationError& e) {
      throw ValidationError("sentence " + std::to_string(i) + ": " + e.what(), e.violations());
    }
    corpus.sentences.push_back(std::move(s));
  }
  return corpus;
}

std::string write_tagged(const std::vector<TaggedSentence>& sentences) {
  std::string out;
  for (const TaggedSentence& s : sentences) {
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      out += s.tokens[i].surface;
      out += ' ';
      out += s.tags.labels[i].str();
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

std::string write_conll(const Corpus& corpus, Scheme scheme) {
  std::vector<TaggedSentence> tagged;
  tagged.reserve(corpus.sentences.size());
  for (const Sentence& s : corpus.sentences)
    tagged.push_back({s.tokens, encode(s.spans, s.size(), scheme)});
  return write_tagged(tagged);
}

LengthHistogram corpus_stats(const Corpus& corpus) {
  LengthHistogram h;
  for (const Sentence& s : corpus.sentences) {
    for (const EntitySpan& sp : s.spans) {
      switch (sp.length()) {
        case 1: ++h.n1.count; break;
        case 2: ++h.n2.count; break;
        case 3: ++h.n3.count; break;
        default: ++h.n_gt3.count; break;
      }
      ++h.total;
    }
  }
  if (h.total > 0) {
    const double t = static_cast<double>(h.total);
    h.n1.fraction = h.n1.count / t;
    h.n2.fraction = h.n2.count / t;
    h.n3.fraction = h.n3.count / t;
    h.n_gt3.fraction = h.n_gt3.count / t;
  }
  return h;
}

std::string render_histogram(const LengthHistogram& hist) {
  auto row = [](const char* name, const LengthHistogram::Bucket& b) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s\t%ld\t%.2f\n", name, b.count, b.fraction * 100.0);
    return std::string(buf);
  };
  std::string out = "bucket\tcount\tpercent\n";
  out += row("n=1", hist.n1);
  out += row("n=2", hist.n2);
  out += row("n=3", hist.n3);
  out += row("n>3", hist.n_gt3);
  out += "total\t" + std::to_string(hist.total) + "\t\n";
  return out;
}

}  // namespace srtk
