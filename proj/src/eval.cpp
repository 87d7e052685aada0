#include "srtk/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace srtk {

Metrics metrics_from(const EvalCounts& c) {
  Metrics m;
  m.precision = (c.tp + c.fp) > 0 ? static_cast<double>(c.tp) / (c.tp + c.fp) : 0.0;
  m.recall = (c.tp + c.fn) > 0 ? static_cast<double>(c.tp) / (c.tp + c.fn) : 0.0;
  m.f1 = (m.precision + m.recall) > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

std::string_view to_string(LengthBucket b) {
  switch (b) {
    case LengthBucket::N1: return "n=1";
    case LengthBucket::N2: return "n=2";
    case LengthBucket::N3Plus: return "n>=3";
  }
  return "?";
}

LengthBucket length_bucket(int n) {
  if (n <= 1) return LengthBucket::N1;
  if (n == 2) return LengthBucket::N2;
  return LengthBucket::N3Plus;
}

EvalReport evaluate(const std::vector<std::vector<EntitySpan>>& gold,
                    const std::vector<std::vector<EntitySpan>>& pred) {
  if (gold.size() != pred.size())
    throw InputError("gold has " + std::to_string(gold.size()) + " sentences, pred has " +
                     std::to_string(pred.size()));

  EvalReport r;
  for (LengthBucket b : {LengthBucket::N1, LengthBucket::N2, LengthBucket::N3Plus})
    r.per_length[b] = {};

  auto hit = [&](const EvalCounts& delta, int length, const std::string& cls) {
    r.overall += delta;
    r.per_length[length_bucket(length)] += delta;
    r.per_class[cls] += delta;
  };

  for (size_t i = 0; i < gold.size(); ++i) {
    std::set<EntitySpan> g(gold[i].begin(), gold[i].end());
    std::set<EntitySpan> p(pred[i].begin(), pred[i].end());
    for (const EntitySpan& sp : p) {
      if (g.count(sp)) hit({1, 0, 0}, sp.length(), sp.entity_class);
      else hit({0, 1, 0}, sp.length(), sp.entity_class);
    }
    for (const EntitySpan& sp : g)
      if (!p.count(sp)) hit({0, 0, 1}, sp.length(), sp.entity_class);
  }
  return r;
}

namespace {

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v * 100.0);
  return buf;
}

void tsv_rows(std::string& out, const std::string& section, const EvalCounts& c,
              const std::string& system) {
  const Metrics m = metrics_from(c);
  auto row = [&](const char* name, const std::string& value) {
    out += section + "\t" + name + "\t" + system + "\t" + value + "\n";
  };
  row("tp", std::to_string(c.tp));
  row("fp", std::to_string(c.fp));
  row("fn", std::to_string(c.fn));
  row("R", pct(m.recall));
  row("P", pct(m.precision));
  row("f1", pct(m.f1));
}

void plain_row(std::string& out, const std::string& name, const EvalCounts& c) {
  const Metrics m = metrics_from(c);
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-12s %6ld %6ld %6ld %8s %8s %8s\n", name.c_str(), c.tp,
                c.fp, c.fn, pct(m.recall).c_str(), pct(m.precision).c_str(),
                pct(m.f1).c_str());
  out += buf;
}

}  // namespace

std::string render_table(const EvalReport& report, TableStyle style, const std::string& system,
                         bool by_length) {
  std::string out;
  if (style == TableStyle::Tsv) {
    tsv_rows(out, "overall", report.overall, system);
    if (by_length)
      for (const auto& [bucket, counts] : report.per_length)
        tsv_rows(out, std::string(to_string(bucket)), counts, system);
    for (const auto& [cls, counts] : report.per_class)
      tsv_rows(out, "class:" + cls, counts, system);
    return out;
  }

  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-12s %6s %6s %6s %8s %8s %8s\n", "", "TP", "FP", "FN", "R",
                "P", "f1");
  out += buf;
  plain_row(out, "overall", report.overall);
  if (by_length)
    for (const auto& [bucket, counts] : report.per_length)
      plain_row(out, std::string(to_string(bucket)), counts);
  for (const auto& [cls, counts] : report.per_class) plain_row(out, cls, counts);
  return out;
}

std::string compare_schemes(const Corpus& gold, const std::vector<SystemPrediction>& systems,
                            TableStyle style) {
  std::vector<std::vector<EntitySpan>> gold_spans;
  gold_spans.reserve(gold.sentences.size());
  for (const Sentence& s : gold.sentences) gold_spans.push_back(s.spans);

  std::vector<EvalReport> reports;
  for (const SystemPrediction& sys : systems) {
    if (sys.tags.size() != gold.sentences.size())
      throw InputError("system '" + sys.name + "' has " + std::to_string(sys.tags.size()) +
                       " sentences, gold has " + std::to_string(gold.sentences.size()));
    std::vector<std::vector<EntitySpan>> pred;
    pred.reserve(sys.tags.size());
    for (const TagSequence& t : sys.tags) pred.push_back(decode(t, DecodeMode::Lenient));
    reports.push_back(evaluate(gold_spans, pred));
  }

  std::string out;
  if (style == TableStyle::Tsv) {
    for (size_t k = 0; k < systems.size(); ++k) {
      const Metrics m = reports[k].overall_metrics();
      out += "overall\tR\t" + systems[k].name + "\t" + pct(m.recall) + "\n";
      out += "overall\tP\t" + systems[k].name + "\t" + pct(m.precision) + "\n";
      out += "overall\tf1\t" + systems[k].name + "\t" + pct(m.f1) + "\n";
    }
    for (LengthBucket b : {LengthBucket::N1, LengthBucket::N2, LengthBucket::N3Plus})
      for (size_t k = 0; k < systems.size(); ++k)
        out += std::string(to_string(b)) + "\tf1\t" + systems[k].name + "\t" +
               pct(metrics_from(reports[k].per_length.at(b)).f1) + "\n";
    return out;
  }

  auto header = [&](const char* first) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%-10s", first);
    out += buf;
    for (const SystemPrediction& sys : systems) {
      std::snprintf(buf, sizeof(buf), " %10s", sys.name.c_str());
      out += buf;
    }
    out += '\n';
  };
  auto line = [&](const std::string& name, auto value_of) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%-10s", name.c_str());
    out += buf;
    for (size_t k = 0; k < systems.size(); ++k) {
      std::snprintf(buf, sizeof(buf), " %10s", pct(value_of(reports[k])).c_str());
      out += buf;
    }
    out += '\n';
  };

  header("measure");
  line("R", [](const EvalReport& r) { return r.overall_metrics().recall; });
  line("P", [](const EvalReport& r) { return r.overall_metrics().precision; });
  line("f1", [](const EvalReport& r) { return r.overall_metrics().f1; });
  out += '\n';
  header("f1/length");
  for (LengthBucket b : {LengthBucket::N1, LengthBucket::N2, LengthBucket::N3Plus})
    line(std::string(to_string(b)),
         [b](const EvalReport& r) { return metrics_from(r.per_length.at(b)).f1; });
  return out;
}

std::string compare_schemes(const Corpus& gold,
                            const std::map<Scheme, std::vector<TagSequence>>& predictions,
                            TableStyle style) {
  std::vector<SystemPrediction> systems;
  for (const auto& [scheme, tags] : predictions)
    systems.push_back({std::string(to_string(scheme)), scheme, tags});
  return compare_schemes(gold, systems, style);
}

}  // namespace srtk
