#include <doctest.h>

#include "oracles.hpp"
#include "srtk/transitions.hpp"

using namespace srtk;

TEST_CASE("label zero is O and the rest are sorted") {
  const TransitionTable t = legal_transitions(Scheme::FROBES, {"protein", "dna"});
  REQUIRE(t.label_count() == 11);  // O + 5 positions x 2 classes
  CHECK(t.labels()[0] == TagLabel::outside());
  for (int i = 2; i < t.label_count(); ++i) CHECK(t.labels()[i - 1] < t.labels()[i]);
  CHECK(t.index_of(TagLabel::outside()) == 0);
  CHECK(t.index_of(TagLabel::of(Pos::B, "dna")) == 1);
  CHECK(t.index_of(TagLabel::of(Pos::I, "dna")) == -1);
}

TEST_CASE("spot checks against the scheme definitions") {
  const TransitionTable io = legal_transitions(Scheme::IO, {"a", "b"});
  CHECK(io.legal(TagLabel::of(Pos::I, "a"), TagLabel::of(Pos::I, "b")));
  CHECK(io.start_legal(TagLabel::of(Pos::I, "a")));

  const TransitionTable iob2 = legal_transitions(Scheme::IOB2, {"a", "b"});
  CHECK(!iob2.start_legal(TagLabel::of(Pos::I, "a")));
  CHECK(!iob2.legal(TagLabel::outside(), TagLabel::of(Pos::I, "a")));
  CHECK(!iob2.legal(TagLabel::of(Pos::B, "a"), TagLabel::of(Pos::I, "b")));
  CHECK(iob2.legal(TagLabel::of(Pos::B, "a"), TagLabel::of(Pos::B, "b")));

  const TransitionTable ioe2 = legal_transitions(Scheme::IOE2, {"a", "b"});
  CHECK(!ioe2.end_legal(TagLabel::of(Pos::I, "a")));
  CHECK(ioe2.end_legal(TagLabel::of(Pos::E, "a")));
  CHECK(!ioe2.legal(TagLabel::of(Pos::I, "a"), TagLabel::outside()));

  const TransitionTable fr = legal_transitions(Scheme::FROBES, {"a"});
  CHECK(fr.legal(TagLabel::of(Pos::B, "a"), TagLabel::of(Pos::F, "a")));
  CHECK(fr.legal(TagLabel::of(Pos::B, "a"), TagLabel::of(Pos::E, "a")));
  CHECK(!fr.legal(TagLabel::of(Pos::B, "a"), TagLabel::of(Pos::R, "a")));
  CHECK(!fr.legal(TagLabel::of(Pos::R, "a"), TagLabel::of(Pos::F, "a")));
  CHECK(!fr.legal(TagLabel::of(Pos::B, "a"), TagLabel::outside()));
  CHECK(!fr.legal(TagLabel::of(Pos::S, "a"), TagLabel::of(Pos::F, "a")));
  CHECK(fr.legal(TagLabel::of(Pos::E, "a"), TagLabel::of(Pos::S, "a")));
}

TEST_CASE("table equals exhaustive enumeration on short sentences") {
  // Length 6 is the shortest horizon that exercises every FROBES bigram:
  // a rear pair (R -> R) needs (n - 2) / 2 >= 2, so n >= 6.
  const std::vector<std::string> classes = {"a", "b"};
  for (Scheme s : kAllSchemes) {
    CAPTURE(to_string(s));
    const TransitionTable table = legal_transitions(s, {classes.begin(), classes.end()});
    const auto obs = oracles::observe_transitions(s, classes, 6, table);
    const int L = table.label_count();
    for (int l = 0; l < L; ++l) {
      CAPTURE(table.labels()[l].str());
      CHECK(table.start_legal(l) == (obs.start.count(l) > 0));
      CHECK(table.end_legal(l) == (obs.end.count(l) > 0));
      for (int m = 0; m < L; ++m) {
        CAPTURE(table.labels()[m].str());
        CHECK(table.legal(l, m) == (obs.bigram.count({l, m}) > 0));
      }
    }
  }
}

TEST_CASE("encode output always validates") {
  const std::vector<std::string> classes = {"a", "b"};
  for (Scheme s : kAllSchemes)
    for (int len = 1; len <= 5; ++len)
      for (const auto& config : oracles::span_configs(len, classes))
        CHECK(validate(encode(config, len, s)).empty());
}
