#pragma once

#include <map>
#include <string>
#include <vector>

#include "srtk/corpus.hpp"
#include "srtk/schemes.hpp"

namespace srtk {

struct EvalCounts {
  long tp = 0;
  long fp = 0;
  long fn = 0;

  EvalCounts& operator+=(const EvalCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  bool operator==(const EvalCounts&) const = default;
};

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// P = TP/(TP+FP), R = TP/(TP+FN), f1 = 2PR/(P+R); 0/0 is defined as 0.
Metrics metrics_from(const EvalCounts& c);

enum class LengthBucket : uint8_t { N1, N2, N3Plus };
std::string_view to_string(LengthBucket b);
LengthBucket length_bucket(int n);

// Exact-match entity scores, overall plus per length bucket and per class.
// TPs bucket by their shared length, FNs by gold length, FPs by predicted
// length; same partition per class.
struct EvalReport {
  EvalCounts overall;
  std::map<LengthBucket, EvalCounts> per_length;
  std::map<std::string, EvalCounts> per_class;

  Metrics overall_metrics() const { return metrics_from(overall); }
};

// gold and pred are per-sentence span sets and must have equal sentence
// counts (InputError otherwise). A prediction is TP iff an identical
// (start, end, class) span exists in gold for the same sentence.
EvalReport evaluate(const std::vector<std::vector<EntitySpan>>& gold,
                    const std::vector<std::vector<EntitySpan>>& pred);

enum class TableStyle : uint8_t { Plain, Tsv };

// Percentages are printed with 2 decimals. The TSV style emits
// section<TAB>row<TAB>system<TAB>value lines. by_length toggles the
// per-length-bucket section.
std::string render_table(const EvalReport& report, TableStyle style,
                         const std::string& system = "all", bool by_length = true);

// One system's decoded predictions under one scheme.
struct SystemPrediction {
  std::string name;
  Scheme scheme = Scheme::IOB2;
  std::vector<TagSequence> tags;
};

// Decodes every system leniently, evaluates against gold spans, and renders
// an R/P/f1 x systems table plus a per-length f1 table.
std::string compare_schemes(const Corpus& gold,
                            const std::vector<SystemPrediction>& systems,
                            TableStyle style = TableStyle::Plain);
std::string compare_schemes(const Corpus& gold,
                            const std::map<Scheme, std::vector<TagSequence>>& predictions,
                            TableStyle style = TableStyle::Plain);

}  // namespace srtk
