#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srtk/corpus.hpp"
#include "srtk/ensemble.hpp"
#include "srtk/eval.hpp"
#include "srtk/schemes.hpp"
#include "srtk/synthetic.hpp"
#include "srtk/tagger.hpp"

namespace {

using namespace srtk;

const std::vector<std::string> kSchemeNames = {"io",   "iob1", "iob2",  "ioe1",
                                               "ioe2", "iobe", "iobes", "frobes"};

Scheme scheme_arg(const std::string& name) {
  auto s = scheme_from_string(name);
  if (!s) throw CLI::ValidationError("--scheme", "unknown scheme '" + name + "'");
  return *s;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Empty path means standard output.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw InputError("short write to '" + path + "'");
}

int run_convert(const std::string& from, const std::string& to, const std::string& in_path,
                const std::string& out_path, const std::string& mode, int tag_column) {
  const Scheme src = scheme_arg(from);
  const Scheme dst = scheme_arg(to);
  const DecodeMode m = mode == "lenient" ? DecodeMode::Lenient : DecodeMode::Strict;
  auto sentences = read_tagged(slurp(in_path), src, tag_column);
  for (TaggedSentence& s : sentences) s.tags = convert(s.tags, dst, m);
  emit(out_path, write_tagged(sentences));
  return 0;
}

int run_validate(const std::string& scheme_name, const std::string& in_path, int tag_column) {
  const Scheme scheme = scheme_arg(scheme_name);
  auto sentences = read_tagged(slurp(in_path), scheme, tag_column);
  long total = 0;
  for (size_t i = 0; i < sentences.size(); ++i)
    for (const Violation& v : validate(sentences[i].tags)) {
      std::cout << "sentence " << i << " token " << v.token_index << ": " << to_string(v.kind)
                << ": " << v.description << "\n";
      ++total;
    }
  return total > 0 ? 1 : 0;
}

int run_stats(const std::string& scheme_name, const std::string& in_path, int tag_column) {
  const Scheme scheme = scheme_arg(scheme_name);
  ConllOptions opts;
  opts.tag_column = tag_column;
  opts.mode = DecodeMode::Lenient;
  const Corpus corpus = parse_conll(slurp(in_path), scheme, opts);
  std::cout << render_histogram(corpus_stats(corpus));
  return 0;
}

int run_gen(const std::string& out_path, int sentences, uint64_t seed, double density,
            const std::string& len_dist, const std::string& scheme_name) {
  GenConfig cfg;
  cfg.sentence_count = sentences;
  cfg.seed = seed;
  cfg.entity_density = density;
  if (!len_dist.empty()) {
    std::vector<double> probs;
    std::stringstream ss(len_dist);
    std::string item;
    while (std::getline(ss, item, ',')) {
      char* endp = nullptr;
      probs.push_back(std::strtod(item.c_str(), &endp));
      if (endp == item.c_str() || *endp != '\0')
        throw CLI::ValidationError("--len-dist", "bad probability '" + item + "'");
    }
    if (probs.size() != cfg.length_distribution.size())
      throw CLI::ValidationError("--len-dist",
                                 "expected " + std::to_string(cfg.length_distribution.size()) +
                                     " comma-separated probabilities");
    std::copy(probs.begin(), probs.end(), cfg.length_distribution.begin());
  }
  const Corpus corpus = generate_synthetic(cfg);
  emit(out_path, write_conll(corpus, scheme_arg(scheme_name)));
  return 0;
}

int run_train(const std::string& scheme_name, const std::string& train_path,
              const std::string& model_path, int epochs, uint64_t seed, int tag_column) {
  const Scheme scheme = scheme_arg(scheme_name);
  ConllOptions opts;
  opts.tag_column = tag_column;
  const Corpus corpus = parse_conll(slurp(train_path), scheme, opts);
  TrainConfig cfg;
  cfg.epochs = epochs;
  cfg.seed = seed;
  const TaggerModel model = train(corpus, scheme, cfg);
  model.save(model_path);
  return 0;
}

int run_tag(const std::string& model_path, const std::string& in_path,
            const std::string& out_path, int threads) {
  const TaggerModel model = TaggerModel::load(model_path);
  Corpus corpus;
  for (auto& tokens : read_tokens(slurp(in_path)))
    corpus.sentences.push_back({std::move(tokens), {}});
  const std::vector<TagSequence> tags = model.tag_corpus(corpus, threads);
  std::vector<TaggedSentence> out;
  out.reserve(tags.size());
  for (size_t i = 0; i < tags.size(); ++i)
    out.push_back({std::move(corpus.sentences[i].tokens), tags[i]});
  emit(out_path, write_tagged(out));
  return 0;
}

int run_eval(const std::string& gold_path, const std::string& pred_path,
             const std::string& scheme_name, bool by_length, bool tsv, int tag_column) {
  const Scheme scheme = scheme_arg(scheme_name);
  ConllOptions gold_opts;
  gold_opts.tag_column = tag_column;
  ConllOptions pred_opts;
  pred_opts.tag_column = tag_column;
  pred_opts.mode = DecodeMode::Lenient;
  const Corpus gold = parse_conll(slurp(gold_path), scheme, gold_opts);
  const Corpus pred = parse_conll(slurp(pred_path), scheme, pred_opts);

  std::vector<std::vector<EntitySpan>> gold_spans, pred_spans;
  for (const Sentence& s : gold.sentences) gold_spans.push_back(s.spans);
  for (const Sentence& s : pred.sentences) pred_spans.push_back(s.spans);
  const EvalReport report = evaluate(gold_spans, pred_spans);
  std::cout << render_table(report, tsv ? TableStyle::Tsv : TableStyle::Plain,
                            std::string(to_string(scheme)), by_length);
  return 0;
}

int run_ensemble(const std::vector<std::string>& pred_specs, const std::string& out_path,
                 int threshold) {
  std::vector<std::vector<std::vector<EntitySpan>>> systems;
  std::vector<TaggedSentence> first;
  for (const std::string& spec : pred_specs) {
    const size_t colon = spec.rfind(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--pred", "expected FILE:SCHEME, got '" + spec + "'");
    const std::string path = spec.substr(0, colon);
    auto scheme = scheme_from_string(spec.substr(colon + 1));
    if (!scheme)
      throw CLI::ValidationError("--pred", "unknown scheme in '" + spec + "'");
    auto sentences = read_tagged(slurp(path), *scheme);
    std::vector<std::vector<EntitySpan>> spans;
    spans.reserve(sentences.size());
    for (const TaggedSentence& s : sentences)
      spans.push_back(decode(s.tags, DecodeMode::Lenient));
    systems.push_back(std::move(spans));
    if (systems.size() == 1) first = std::move(sentences);
  }

  const auto voted = majority_vote(systems, threshold > 0 ? std::optional<int>(threshold)
                                                          : std::nullopt);
  std::vector<TaggedSentence> out;
  out.reserve(voted.size());
  for (size_t i = 0; i < voted.size(); ++i) {
    const int len = static_cast<int>(first[i].tokens.size());
    out.push_back({std::move(first[i].tokens), encode(voted[i], len, Scheme::IOB2)});
  }
  emit(out_path, write_tagged(out));
  return 0;
}

int run_demo_table1() {
  const std::vector<std::string> tokens = {"The",     "T",    "Cell",      "surface", "molecule",
                                           "CD28",    "binds", "To",       "ligands", "On",
                                           "accessory", "cells", "And",    "APCs",    ","};
  const std::vector<EntitySpan> spans = {
      {1, 4, "protein"}, {5, 5, "protein"}, {10, 11, "cell_type"}, {13, 13, "cell_type"}};
  const Scheme order[] = {Scheme::IO,   Scheme::IOE1, Scheme::IOE2,  Scheme::IOB1,
                          Scheme::IOB2, Scheme::IOBE, Scheme::IOBES, Scheme::FROBES};

  std::vector<TagSequence> columns;
  for (Scheme s : order) columns.push_back(encode(spans, static_cast<int>(tokens.size()), s));

  std::cout << "token";
  for (Scheme s : order) std::cout << '\t' << to_string(s);
  std::cout << '\n';
  for (size_t i = 0; i < tokens.size(); ++i) {
    std::cout << tokens[i];
    for (const TagSequence& col : columns) std::cout << '\t' << col.labels[i].str();
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"segment representation toolkit: encode, convert, validate, train, tag,"
               " evaluate, ensemble"};
  app.require_subcommand(1);
  int status = 0;

  auto scheme_opt = [](CLI::App* sub, std::string& target, const char* flag = "--scheme") {
    return sub->add_option(flag, target, "scheme name")
        ->check(CLI::IsMember(kSchemeNames));
  };

  // convert
  std::string cv_from, cv_to, cv_in, cv_out, cv_mode = "strict";
  int cv_col = -1;
  auto* cv = app.add_subcommand("convert", "re-encode a tagged file under another scheme");
  scheme_opt(cv, cv_from, "--from")->required();
  scheme_opt(cv, cv_to, "--to")->required();
  cv->add_option("--in", cv_in, "input file")->required();
  cv->add_option("--out", cv_out, "output file (default: stdout)");
  cv->add_option("--mode", cv_mode, "strict rejects invalid sequences")
      ->check(CLI::IsMember({"strict", "lenient"}));
  cv->add_option("--tag-column", cv_col, "0-based tag column (default: last)");
  cv->callback([&] { status = run_convert(cv_from, cv_to, cv_in, cv_out, cv_mode, cv_col); });

  // validate
  std::string va_scheme, va_in;
  int va_col = -1;
  auto* va = app.add_subcommand("validate", "list strict-mode violations");
  scheme_opt(va, va_scheme)->required();
  va->add_option("--in", va_in, "input file")->required();
  va->add_option("--tag-column", va_col, "0-based tag column (default: last)");
  va->callback([&] { status = run_validate(va_scheme, va_in, va_col); });

  // stats
  std::string st_scheme, st_in;
  int st_col = -1;
  auto* st = app.add_subcommand("stats", "entity length histogram");
  scheme_opt(st, st_scheme)->required();
  st->add_option("--in", st_in, "input file")->required();
  st->add_option("--tag-column", st_col, "0-based tag column (default: last)");
  st->callback([&] { status = run_stats(st_scheme, st_in, st_col); });

  // gen
  std::string ge_out, ge_dist, ge_scheme = "iob2";
  int ge_sentences = 100;
  uint64_t ge_seed = 1;
  double ge_density = 0.15;
  auto* ge = app.add_subcommand("gen", "generate a synthetic corpus");
  ge->add_option("--out", ge_out, "output file (default: stdout)");
  ge->add_option("--sentences", ge_sentences, "sentence count")->check(CLI::PositiveNumber);
  ge->add_option("--seed", ge_seed, "generator seed");
  ge->add_option("--density", ge_density, "per-position entity open probability");
  ge->add_option("--len-dist", ge_dist, "six comma-separated P(len=1..6), sum 1");
  scheme_opt(ge, ge_scheme);
  ge->callback(
      [&] { status = run_gen(ge_out, ge_sentences, ge_seed, ge_density, ge_dist, ge_scheme); });

  // train
  std::string tr_scheme, tr_train, tr_model;
  int tr_epochs = 5, tr_col = -1;
  uint64_t tr_seed = 1;
  auto* tr = app.add_subcommand("train", "train a perceptron tagger");
  scheme_opt(tr, tr_scheme)->required();
  tr->add_option("--train", tr_train, "training file")->required();
  tr->add_option("--model", tr_model, "model output path")->required();
  tr->add_option("--epochs", tr_epochs, "training epochs")->check(CLI::PositiveNumber);
  tr->add_option("--seed", tr_seed, "shuffle seed");
  tr->add_option("--tag-column", tr_col, "0-based tag column (default: last)");
  tr->callback(
      [&] { status = run_train(tr_scheme, tr_train, tr_model, tr_epochs, tr_seed, tr_col); });

  // tag
  std::string ta_model, ta_in, ta_out;
  int ta_threads = 1;
  auto* ta = app.add_subcommand("tag", "tag raw tokens with a trained model");
  ta->add_option("--model", ta_model, "model path")->required();
  ta->add_option("--in", ta_in, "input file, first column = token")->required();
  ta->add_option("--out", ta_out, "output file (default: stdout)");
  ta->add_option("--threads", ta_threads, "decoder threads")->check(CLI::PositiveNumber);
  ta->callback([&] { status = run_tag(ta_model, ta_in, ta_out, ta_threads); });

  // eval
  std::string ev_gold, ev_pred, ev_scheme;
  bool ev_by_length = false, ev_tsv = false;
  int ev_col = -1;
  auto* ev = app.add_subcommand("eval", "exact-match entity scores");
  ev->add_option("--gold", ev_gold, "gold file")->required();
  ev->add_option("--pred", ev_pred, "prediction file")->required();
  scheme_opt(ev, ev_scheme)->required();
  ev->add_flag("--by-length", ev_by_length, "include per-length buckets");
  ev->add_flag("--tsv", ev_tsv, "machine-readable output");
  ev->add_option("--tag-column", ev_col, "0-based tag column (default: last)");
  ev->callback(
      [&] { status = run_eval(ev_gold, ev_pred, ev_scheme, ev_by_length, ev_tsv, ev_col); });

  // ensemble
  std::vector<std::string> en_preds;
  std::string en_out;
  int en_threshold = 0;
  auto* en = app.add_subcommand("ensemble", "span-level majority vote, IOB2 output");
  en->add_option("--pred", en_preds, "prediction file as FILE:SCHEME (repeatable)")
      ->required();
  en->add_option("--out", en_out, "output file (default: stdout)");
  en->add_option("--threshold", en_threshold, "votes needed (default: majority)")
      ->check(CLI::PositiveNumber);
  en->callback([&] { status = run_ensemble(en_preds, en_out, en_threshold); });

  // demo-table1
  auto* de = app.add_subcommand("demo-table1",
                                "print the reference sentence under all eight schemes");
  de->callback([&] { status = run_demo_table1(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const srtk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
