#include "srtk/tagger.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "srtk/error.hpp"

namespace srtk {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string lowered(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
  return out;
}

std::string shape_of(const std::string& s) {
  std::string out;
  char last = '\0';
  for (char c : s) {
    char m;
    if (c >= 'A' && c <= 'Z') m = 'X';
    else if (c >= 'a' && c <= 'z') m = 'x';
    else if (c >= '0' && c <= '9') m = '9';
    else m = c;
    if (m != last) out += m;
    last = m;
  }
  return out;
}

const std::string& context_word(const Sentence& s, int i) {
  static const std::string bos = "<S>";
  static const std::string eos = "</S>";
  if (i < 0) return bos;
  if (i >= s.size()) return eos;
  return s.tokens[i].surface;
}

// Shared constrained-Viterbi core over dense per-token emission scores.
// Backward pass stores the best tail score per (position, label); the
// forward pass re-derives each step with the identical arithmetic
// expression and takes the lowest label index achieving it, so ties break
// toward the lexicographically smallest sequence.
std::vector<int> viterbi_path(const TransitionTable& table,
                              const std::vector<std::vector<double>>& emit,
                              const std::vector<double>& trans) {
  const int n = static_cast<int>(emit.size());
  const int L = table.label_count();
  if (n == 0) return {};

  std::vector<std::vector<double>> tail(n, std::vector<double>(L, kNegInf));
  for (int l = 0; l < L; ++l)
    if (table.end_legal(l)) tail[n - 1][l] = 0.0;
  for (int i = n - 2; i >= 0; --i)
    for (int l = 0; l < L; ++l) {
      double best = kNegInf;
      for (int m = 0; m < L; ++m) {
        if (!table.legal(l, m) || tail[i + 1][m] == kNegInf) continue;
        const double cand = trans[static_cast<size_t>(l) * L + m] + emit[i + 1][m] +
                            tail[i + 1][m];
        if (cand > best) best = cand;
      }
      tail[i][l] = best;
    }

  std::vector<int> path(n);
  int prev = -1;
  double best = kNegInf;
  for (int l = 0; l < L; ++l) {
    if (!table.start_legal(l) || tail[0][l] == kNegInf) continue;
    const double cand = emit[0][l] + tail[0][l];
    if (cand > best) {
      best = cand;
      prev = l;
    }
  }
  if (prev < 0) throw InputError("no legal label sequence exists for this sentence");
  path[0] = prev;
  for (int i = 1; i < n; ++i) {
    int pick = -1;
    best = kNegInf;
    for (int m = 0; m < L; ++m) {
      if (!table.legal(prev, m) || tail[i][m] == kNegInf) continue;
      const double cand = trans[static_cast<size_t>(prev) * L + m] + emit[i][m] + tail[i][m];
      if (cand > best) {
        best = cand;
        pick = m;
      }
    }
    path[i] = prev = pick;
  }
  return path;
}

std::string format_weight(double w) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

}  // namespace

std::vector<std::string> extract_features(const Sentence& sentence, int position) {
  if (position < 0 || position >= sentence.size())
    throw InputError("feature position " + std::to_string(position) + " out of range");
  const std::string& w = sentence.tokens[position].surface;
  const int len = static_cast<int>(w.size());

  std::vector<std::string> feats;
  feats.reserve(16);
  feats.push_back("w0=" + w);
  feats.push_back("low0=" + lowered(w));
  for (int k = 2; k <= 4; ++k) {
    if (len < k) break;
    feats.push_back("pre" + std::to_string(k) + "=" + w.substr(0, k));
    feats.push_back("suf" + std::to_string(k) + "=" + w.substr(len - k));
  }
  feats.push_back("shape=" + shape_of(w));
  feats.push_back("w-1=" + context_word(sentence, position - 1));
  feats.push_back("w-2=" + context_word(sentence, position - 2));
  feats.push_back("w+1=" + context_word(sentence, position + 1));
  feats.push_back("w+2=" + context_word(sentence, position + 2));
  if (w.find_first_of("0123456789") != std::string::npos) feats.push_back("hasdigit");
  if (w.find('-') != std::string::npos) feats.push_back("hashyphen");

  std::sort(feats.begin(), feats.end());
  feats.erase(std::unique(feats.begin(), feats.end()), feats.end());
  return feats;
}

double TaggerModel::emission_weight(const std::string& feature, const TagLabel& label) const {
  const int idx = table_.index_of(label);
  if (idx < 0) return 0.0;
  auto it = emissions_.find(feature);
  return it == emissions_.end() ? 0.0 : it->second[idx];
}

double TaggerModel::transition_weight(const TagLabel& prev, const TagLabel& next) const {
  const int p = table_.index_of(prev);
  const int n = table_.index_of(next);
  if (p < 0 || n < 0) return 0.0;
  return trans_[static_cast<size_t>(p) * table_.label_count() + n];
}

void TaggerModel::score_vector(const std::vector<std::string>& feats,
                               std::vector<double>& out) const {
  std::fill(out.begin(), out.end(), 0.0);
  for (const std::string& f : feats) {
    auto it = emissions_.find(f);
    if (it == emissions_.end()) continue;
    for (size_t l = 0; l < out.size(); ++l) out[l] += it->second[l];
  }
}

TagSequence TaggerModel::viterbi_decode(const Sentence& sentence) const {
  const int n = sentence.size();
  const int L = table_.label_count();
  std::vector<std::vector<double>> emit(n, std::vector<double>(L));
  for (int i = 0; i < n; ++i) score_vector(extract_features(sentence, i), emit[i]);

  TagSequence out;
  out.scheme = scheme();
  out.labels.reserve(n);
  for (int idx : viterbi_path(table_, emit, trans_)) out.labels.push_back(labels()[idx]);
  return out;
}

std::vector<TagSequence> TaggerModel::tag_corpus(const Corpus& corpus, int threads) const {
  const size_t n = corpus.sentences.size();
  std::vector<TagSequence> out(n);
  if (threads <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) out[i] = viterbi_decode(corpus.sentences[i]);
    return out;
  }

  const size_t workers = std::min<size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      for (size_t i = t; i < n; i += workers) out[i] = viterbi_decode(corpus.sentences[i]);
    });
  for (std::thread& th : pool) th.join();
  return out;
}

std::string TaggerModel::serialize() const {
  std::string out = "srtk-model v1 ";
  out += to_string(scheme());
  out += '\n';
  for (const auto& [feature, weights] : emissions_)
    for (size_t l = 0; l < weights.size(); ++l) {
      if (weights[l] == 0.0) continue;
      out += "E\t" + feature + "\t" + labels()[l].str() + "\t" + format_weight(weights[l]) +
             "\n";
    }
  const int L = table_.label_count();
  for (int p = 0; p < L; ++p)
    for (int n = 0; n < L; ++n) {
      const double w = trans_[static_cast<size_t>(p) * L + n];
      if (w == 0.0) continue;
      out += "T\t" + labels()[p].str() + "\t" + labels()[n].str() + "\t" + format_weight(w) +
             "\n";
    }
  return out;
}

TaggerModel TaggerModel::deserialize(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty model file", 1);

  std::string_view header = lines[0];
  constexpr std::string_view magic = "srtk-model v1 ";
  if (header.substr(0, magic.size()) != magic)
    throw ParseError("bad model header '" + std::string(header) + "'", 1);
  auto scheme = scheme_from_string(header.substr(magic.size()));
  if (!scheme)
    throw ParseError("unknown scheme '" + std::string(header.substr(magic.size())) + "'", 1);

  struct Record {
    bool emission;
    std::string a, b;  // feature+label or label+label
    double weight;
  };
  std::vector<Record> records;
  std::set<std::string> classes;

  auto parse_label = [&](std::string_view s, int line) {
    auto label = TagLabel::parse(s, *scheme);
    if (!label) throw TagSetError("bad label '" + std::string(s) + "'", line);
    if (!label->is_outside()) classes.insert(label->entity_class);
    return *label;
  };

  for (size_t i = 1; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    if (line.empty()) continue;
    std::vector<std::string_view> cols;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      if (tab == std::string_view::npos) {
        cols.push_back(line.substr(start));
        break;
      }
      cols.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (cols.size() != 4 || (cols[0] != "E" && cols[0] != "T"))
      throw ParseError("bad model record", lineno);
    const std::string weight_text(cols[3]);
    char* endp = nullptr;
    const double weight = std::strtod(weight_text.c_str(), &endp);
    if (endp == weight_text.c_str() || *endp != '\0')
      throw ParseError("bad weight '" + weight_text + "'", lineno);

    Record rec;
    rec.emission = cols[0] == "E";
    rec.a = std::string(cols[1]);
    rec.b = std::string(cols[2]);
    rec.weight = weight;
    if (rec.emission) {
      parse_label(cols[2], lineno);
    } else {
      parse_label(cols[1], lineno);
      parse_label(cols[2], lineno);
    }
    records.push_back(std::move(rec));
  }

  TaggerModel model;
  model.table_ = TransitionTable::build(*scheme, classes);
  model.classes_ = classes;
  const int L = model.table_.label_count();
  model.trans_.assign(static_cast<size_t>(L) * L, 0.0);
  for (const Record& rec : records) {
    if (rec.emission) {
      auto it = model.emissions_.try_emplace(rec.a, std::vector<double>(L, 0.0)).first;
      it->second[model.table_.index_of(*TagLabel::parse(rec.b, *scheme))] += rec.weight;
    } else {
      const int p = model.table_.index_of(*TagLabel::parse(rec.a, *scheme));
      const int n = model.table_.index_of(*TagLabel::parse(rec.b, *scheme));
      model.trans_[static_cast<size_t>(p) * L + n] += rec.weight;
    }
  }
  return model;
}

void TaggerModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write model file '" + path + "'");
  const std::string text = serialize();
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw InputError("short write to '" + path + "'");
}

TaggerModel TaggerModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str());
}

TaggerModel train(const Corpus& corpus, Scheme scheme, const TrainConfig& config) {
  if (corpus.sentences.empty()) throw TrainingError("training corpus is empty");
  if (config.epochs < 1) throw ConfigError("epochs must be >= 1");

  const std::set<std::string> classes = corpus.class_inventory();
  TransitionTable table = TransitionTable::build(scheme, classes);
  const int L = table.label_count();

  // Intern features and cache per-token feature ids plus gold label paths.
  std::vector<std::string> feature_names;
  std::map<std::string, int> feature_ids;
  std::vector<std::vector<std::vector<int>>> feats(corpus.sentences.size());
  std::vector<std::vector<int>> gold(corpus.sentences.size());
  for (size_t s = 0; s < corpus.sentences.size(); ++s) {
    const Sentence& sent = corpus.sentences[s];
    feats[s].resize(sent.size());
    for (int i = 0; i < sent.size(); ++i)
      for (std::string& f : extract_features(sent, i)) {
        auto [it, fresh] = feature_ids.try_emplace(std::move(f),
                                                   static_cast<int>(feature_names.size()));
        if (fresh) feature_names.push_back(it->first);
        feats[s][i].push_back(it->second);
      }
    const TagSequence tags = encode(sent.spans, sent.size(), scheme);
    gold[s].reserve(tags.labels.size());
    for (const TagLabel& l : tags.labels) gold[s].push_back(table.index_of(l));
  }

  const size_t F = feature_names.size();
  std::vector<double> ew(F * L, 0.0), eu(F * L, 0.0);
  std::vector<double> tw(static_cast<size_t>(L) * L, 0.0), tu(tw.size(), 0.0);

  std::mt19937_64 rng(config.seed);
  std::vector<size_t> order(corpus.sentences.size());
  std::iota(order.begin(), order.end(), 0);

  double c = 1.0;
  std::vector<std::vector<double>> emit;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    if (config.shuffle)
      for (size_t i = order.size() - 1; i > 0; --i) {
        const size_t j = rng() % (i + 1);
        std::swap(order[i], order[j]);
      }
    for (size_t s : order) {
      const auto& sf = feats[s];
      const int n = static_cast<int>(sf.size());
      if (n == 0) {
        c += 1.0;
        continue;
      }
      emit.assign(n, std::vector<double>(L, 0.0));
      for (int i = 0; i < n; ++i)
        for (int f : sf[i])
          for (int l = 0; l < L; ++l) emit[i][l] += ew[static_cast<size_t>(f) * L + l];
      const std::vector<int> pred = viterbi_path(table, emit, tw);
      if (pred != gold[s]) {
        auto bump_e = [&](int f, int l, double d) {
          ew[static_cast<size_t>(f) * L + l] += d;
          eu[static_cast<size_t>(f) * L + l] += c * d;
        };
        auto bump_t = [&](int p, int nx, double d) {
          tw[static_cast<size_t>(p) * L + nx] += d;
          tu[static_cast<size_t>(p) * L + nx] += c * d;
        };
        for (int i = 0; i < n; ++i) {
          if (gold[s][i] == pred[i]) continue;
          for (int f : sf[i]) {
            bump_e(f, gold[s][i], 1.0);
            bump_e(f, pred[i], -1.0);
          }
        }
        for (int i = 1; i < n; ++i) {
          if (gold[s][i - 1] == pred[i - 1] && gold[s][i] == pred[i]) continue;
          bump_t(gold[s][i - 1], gold[s][i], 1.0);
          bump_t(pred[i - 1], pred[i], -1.0);
        }
      }
      c += 1.0;
    }
  }

  TaggerModel model;
  model.table_ = std::move(table);
  model.classes_ = classes;
  model.trans_.resize(tw.size());
  for (size_t i = 0; i < tw.size(); ++i) model.trans_[i] = tw[i] - tu[i] / c;
  for (size_t f = 0; f < F; ++f) {
    std::vector<double> avg(L);
    bool any = false;
    for (int l = 0; l < L; ++l) {
      avg[l] = ew[f * L + l] - eu[f * L + l] / c;
      any = any || avg[l] != 0.0;
    }
    if (any) model.emissions_.emplace(feature_names[f], std::move(avg));
  }
  return model;
}

}  // namespace srtk
