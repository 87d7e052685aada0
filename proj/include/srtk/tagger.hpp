#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "srtk/corpus.hpp"
#include "srtk/transitions.hpp"

namespace srtk {

// Sparse binary features for one token position. Namespaces: w0=, low0=,
// pre2..4=, suf2..4=, shape=, w-1=, w-2=, w+1=, w+2= (boundary positions
// use <S> / </S>), plus bare hasdigit / hashyphen flags. Keys are sorted
// and unique.
std::vector<std::string> extract_features(const Sentence& sentence, int position);

struct TrainConfig {
  int epochs = 5;  // >= 1
  uint64_t seed = 1;
  bool shuffle = true;
};

// Feature weights + scheme-constrained Viterbi decoder. Immutable once
// trained or loaded; safe to share across threads.
class TaggerModel {
public:
  Scheme scheme() const { return table_.scheme(); }
  const std::set<std::string>& class_inventory() const { return classes_; }
  const TransitionTable& transitions() const { return table_; }
  const std::vector<TagLabel>& labels() const { return table_.labels(); }

  double emission_weight(const std::string& feature, const TagLabel& label) const;
  double transition_weight(const TagLabel& prev, const TagLabel& next) const;

  // Maximum-scoring label sequence subject to the legality table; score is
  // emission dot products plus transition weights, boundaries as hard
  // constraints. Ties break toward the lexicographically smaller sequence
  // (O < B-c1 < ...), so zero weights yield all-O.
  TagSequence viterbi_decode(const Sentence& sentence) const;

  // viterbi_decode over every sentence, output order matching input order.
  // threads > 1 decodes concurrently; results are identical either way.
  std::vector<TagSequence> tag_corpus(const Corpus& corpus, int threads = 1) const;

  // Flat text format: header "srtk-model v1 <scheme>", then one record per
  // nonzero weight (E<TAB>feature<TAB>label<TAB>weight or
  // T<TAB>label<TAB>label<TAB>weight), weights with 17 significant digits.
  std::string serialize() const;
  static TaggerModel deserialize(std::string_view text);

  void save(const std::string& path) const;
  static TaggerModel load(const std::string& path);

private:
  friend TaggerModel train(const Corpus&, Scheme, const TrainConfig&);

  TransitionTable table_;
  std::set<std::string> classes_;
  // feature -> dense per-label weights (label order = table_.labels()).
  std::map<std::string, std::vector<double>> emissions_;
  std::vector<double> trans_;  // label_count^2, row = prev

  void score_vector(const std::vector<std::string>& feats,
                    std::vector<double>& out) const;
};

// Averaged structured perceptron over the gold spans encoded under the
// given scheme. Deterministic for a fixed config; shuffling draws from the
// seeded generator only. Throws TrainingError on an empty corpus.
TaggerModel train(const Corpus& corpus, Scheme scheme, const TrainConfig& config);

}  // namespace srtk
