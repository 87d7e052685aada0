#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srtk/corpus.hpp"
#include "srtk/ensemble.hpp"
#include "srtk/eval.hpp"
#include "srtk/schemes.hpp"
#include "srtk/synthetic.hpp"
#include "srtk/tagger.hpp"

namespace py = pybind11;
using namespace srtk;

namespace {

Scheme scheme_of(const std::string& name) {
  auto s = scheme_from_string(name);
  if (!s) throw InputError("unknown scheme '" + name + "'");
  return *s;
}

DecodeMode mode_of(const std::string& name) {
  if (name == "strict") return DecodeMode::Strict;
  if (name == "lenient") return DecodeMode::Lenient;
  throw InputError("mode must be 'strict' or 'lenient', got '" + name + "'");
}

using PySpan = std::tuple<int, int, std::string>;

std::vector<EntitySpan> spans_in(const std::vector<PySpan>& spans) {
  std::vector<EntitySpan> out;
  out.reserve(spans.size());
  for (const auto& [start, end, cls] : spans) out.push_back({start, end, cls});
  return out;
}

std::vector<PySpan> spans_out(const std::vector<EntitySpan>& spans) {
  std::vector<PySpan> out;
  out.reserve(spans.size());
  for (const EntitySpan& s : spans) out.emplace_back(s.start, s.end, s.entity_class);
  return out;
}

TagSequence tags_in(const std::vector<std::string>& tags, Scheme scheme) {
  TagSequence seq;
  seq.scheme = scheme;
  seq.labels.reserve(tags.size());
  for (const std::string& t : tags) {
    auto label = TagLabel::parse(t, scheme);
    if (!label)
      throw InputError("tag '" + t + "' not valid for scheme " +
                       std::string(to_string(scheme)));
    seq.labels.push_back(std::move(*label));
  }
  return seq;
}

std::vector<std::string> tags_out(const TagSequence& seq) {
  std::vector<std::string> out;
  out.reserve(seq.labels.size());
  for (const TagLabel& l : seq.labels) out.push_back(l.str());
  return out;
}

py::dict counts_dict(const EvalCounts& c) {
  const Metrics m = metrics_from(c);
  py::dict d;
  d["tp"] = c.tp;
  d["fp"] = c.fp;
  d["fn"] = c.fn;
  d["precision"] = m.precision;
  d["recall"] = m.recall;
  d["f1"] = m.f1;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "segment representation toolkit";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "InvalidSequence");

  m.def("schemes", [] {
    std::vector<std::string> out;
    for (Scheme s : kAllSchemes) out.emplace_back(to_string(s));
    return out;
  });

  m.def("frobes_counts", &frobes_counts, py::arg("n"),
        "(front, rear) tag counts for a FROBES entity of length n >= 3");

  m.def(
      "encode",
      [](const std::vector<PySpan>& spans, int sentence_len, const std::string& scheme) {
        return tags_out(encode(spans_in(spans), sentence_len, scheme_of(scheme)));
      },
      py::arg("spans"), py::arg("sentence_len"), py::arg("scheme"),
      "spans [(start, end, cls), ...] -> per-token tags");

  m.def(
      "decode",
      [](const std::vector<std::string>& tags, const std::string& scheme,
         const std::string& mode) {
        return spans_out(decode(tags_in(tags, scheme_of(scheme)), mode_of(mode)));
      },
      py::arg("tags"), py::arg("scheme"), py::arg("mode") = "strict");

  m.def(
      "convert",
      [](const std::vector<std::string>& tags, const std::string& source,
         const std::string& target, const std::string& mode) {
        return tags_out(convert(tags_in(tags, scheme_of(source)), scheme_of(target),
                                mode_of(mode)));
      },
      py::arg("tags"), py::arg("source"), py::arg("target"), py::arg("mode") = "strict");

  m.def(
      "validate",
      [](const std::vector<std::string>& tags, const std::string& scheme) {
        std::vector<std::tuple<int, std::string, std::string>> out;
        for (const Violation& v : validate(tags_in(tags, scheme_of(scheme))))
          out.emplace_back(v.token_index, std::string(to_string(v.kind)), v.description);
        return out;
      },
      py::arg("tags"), py::arg("scheme"),
      "list of (token_index, kind, description); empty when valid");

  m.def(
      "evaluate",
      [](const std::vector<std::vector<PySpan>>& gold,
         const std::vector<std::vector<PySpan>>& pred) {
        std::vector<std::vector<EntitySpan>> g, p;
        for (const auto& s : gold) g.push_back(spans_in(s));
        for (const auto& s : pred) p.push_back(spans_in(s));
        const EvalReport r = evaluate(g, p);
        py::dict d;
        d["overall"] = counts_dict(r.overall);
        py::dict by_len;
        for (const auto& [bucket, counts] : r.per_length)
          by_len[py::str(std::string(to_string(bucket)))] = counts_dict(counts);
        d["per_length"] = by_len;
        py::dict by_cls;
        for (const auto& [cls, counts] : r.per_class) by_cls[py::str(cls)] = counts_dict(counts);
        d["per_class"] = by_cls;
        return d;
      },
      py::arg("gold"), py::arg("pred"),
      "exact-match scores; gold/pred are per-sentence span lists");

  m.def(
      "majority_vote",
      [](const std::vector<std::vector<std::vector<PySpan>>>& systems,
         std::optional<int> threshold) {
        std::vector<std::vector<std::vector<EntitySpan>>> sys;
        for (const auto& system : systems) {
          std::vector<std::vector<EntitySpan>> sentences;
          for (const auto& s : system) sentences.push_back(spans_in(s));
          sys.push_back(std::move(sentences));
        }
        std::vector<std::vector<PySpan>> out;
        for (const auto& sentence : majority_vote(sys, threshold))
          out.push_back(spans_out(sentence));
        return out;
      },
      py::arg("systems"), py::arg("threshold") = py::none());

  m.def(
      "generate_conll",
      [](int sentences, uint64_t seed, double density, const std::string& scheme) {
        GenConfig cfg;
        cfg.sentence_count = sentences;
        cfg.seed = seed;
        cfg.entity_density = density;
        return write_conll(generate_synthetic(cfg), scheme_of(scheme));
      },
      py::arg("sentences") = 100, py::arg("seed") = 1, py::arg("density") = 0.15,
      py::arg("scheme") = "iob2");

  m.def(
      "corpus_stats",
      [](const std::string& conll_text, const std::string& scheme) {
        ConllOptions opts;
        opts.mode = DecodeMode::Lenient;
        const LengthHistogram h =
            corpus_stats(parse_conll(conll_text, scheme_of(scheme), opts));
        py::dict d;
        d["n=1"] = h.n1.count;
        d["n=2"] = h.n2.count;
        d["n=3"] = h.n3.count;
        d["n>3"] = h.n_gt3.count;
        d["total"] = h.total;
        return d;
      },
      py::arg("conll_text"), py::arg("scheme"));

  py::class_<TaggerModel>(m, "Tagger")
      .def_static(
          "train",
          [](const std::string& conll_text, const std::string& scheme, int epochs,
             uint64_t seed) {
            TrainConfig cfg;
            cfg.epochs = epochs;
            cfg.seed = seed;
            return train(parse_conll(conll_text, scheme_of(scheme)), scheme_of(scheme), cfg);
          },
          py::arg("conll_text"), py::arg("scheme"), py::arg("epochs") = 5, py::arg("seed") = 1)
      .def_static("deserialize",
                  [](const std::string& text) { return TaggerModel::deserialize(text); },
                  py::arg("text"))
      .def_static("load", &TaggerModel::load, py::arg("path"))
      .def_property_readonly("scheme",
                             [](const TaggerModel& t) { return std::string(to_string(t.scheme())); })
      .def_property_readonly("classes",
                             [](const TaggerModel& t) {
                               return std::vector<std::string>(t.class_inventory().begin(),
                                                               t.class_inventory().end());
                             })
      .def("serialize", &TaggerModel::serialize)
      .def("save", &TaggerModel::save, py::arg("path"))
      .def(
          "tag",
          [](const TaggerModel& t, const std::vector<std::vector<std::string>>& sentences,
             int threads) {
            Corpus corpus;
            for (const auto& tokens : sentences) {
              Sentence s;
              for (const std::string& w : tokens) s.tokens.push_back({w});
              corpus.sentences.push_back(std::move(s));
            }
            std::vector<std::vector<std::string>> out;
            for (const TagSequence& seq : t.tag_corpus(corpus, threads))
              out.push_back(tags_out(seq));
            return out;
          },
          py::arg("sentences"), py::arg("threads") = 1,
          "sentences are token lists; returns aligned tag lists");
}
