#include <doctest.h>

#include <string>
#include <vector>

#include "srtk/schemes.hpp"

using namespace srtk;

namespace {

TagSequence seq(Scheme s, const std::vector<std::string>& tags) {
  TagSequence out;
  out.scheme = s;
  for (const std::string& t : tags) {
    auto label = TagLabel::parse(t, s);
    REQUIRE(label);
    out.labels.push_back(*label);
  }
  return out;
}

std::vector<std::string> strs(const TagSequence& t) {
  std::vector<std::string> out;
  for (const TagLabel& l : t.labels) out.push_back(l.str());
  return out;
}

// 15-token reference sentence used across the scheme tests: two protein
// mentions back to back, then two separate cell_type mentions.
const std::vector<EntitySpan> kRefSpans = {
    {1, 4, "protein"}, {5, 5, "protein"}, {10, 11, "cell_type"}, {13, 13, "cell_type"}};
const int kRefLen = 15;

}  // namespace

TEST_CASE("scheme names round-trip") {
  for (Scheme s : kAllSchemes) {
    auto back = scheme_from_string(to_string(s));
    REQUIRE(back);
    CHECK(*back == s);
  }
  CHECK(!scheme_from_string("iob3"));
  CHECK(!scheme_from_string("IOB2"));
}

TEST_CASE("tag label parsing respects the scheme tag set") {
  CHECK(TagLabel::parse("O", Scheme::IO) == TagLabel::outside());
  CHECK(TagLabel::parse("I-protein", Scheme::IO) == TagLabel::of(Pos::I, "protein"));
  CHECK(!TagLabel::parse("B-protein", Scheme::IO));
  CHECK(!TagLabel::parse("F-protein", Scheme::IOBES));
  CHECK(TagLabel::parse("F-protein", Scheme::FROBES) == TagLabel::of(Pos::F, "protein"));
  // class keeps everything after the first hyphen
  auto nested = TagLabel::parse("B-cell-line", Scheme::IOB2);
  REQUIRE(nested);
  CHECK(nested->entity_class == "cell-line");
  CHECK(!TagLabel::parse("B-", Scheme::IOB2));
  CHECK(!TagLabel::parse("Bprotein", Scheme::IOB2));
  CHECK(!TagLabel::parse("", Scheme::IOB2));
}

TEST_CASE("tag label ordering puts O first then byte order") {
  const TagLabel o = TagLabel::outside();
  const TagLabel b = TagLabel::of(Pos::B, "protein");
  const TagLabel e = TagLabel::of(Pos::E, "dna");
  const TagLabel b2 = TagLabel::of(Pos::B, "dna");
  CHECK(o < b);
  CHECK(o < e);
  CHECK(b2 < b);  // B-dna < B-protein
  CHECK(b < e);   // 'B' < 'E'
}

TEST_CASE("reference sentence encodes as documented in every scheme") {
  // Expected columns follow the published reference table for this
  // sentence, with two cells corrected where that table contradicts the
  // schemes' own definitions:
  //   - IOB1 "APCs": the table prints B-cell_type, but IOB1 only uses B
  //     between back-to-back same-class mentions; the preceding token is
  //     outside, so the correct tag is I-cell_type.
  //   - IOE2 "APCs": the table prints I-cell_type, but IOE2 marks the last
  //     token of every mention, exactly as the table itself does for the
  //     single-token "CD28" (E-protein); the correct tag is E-cell_type.
  using Col = std::vector<std::string>;
  const Col io = {"O", "I-protein", "I-protein", "I-protein", "I-protein", "I-protein",
                  "O", "O", "O", "O", "I-cell_type", "I-cell_type", "O", "I-cell_type", "O"};
  const Col ioe1 = {"O", "I-protein", "I-protein", "I-protein", "E-protein", "I-protein",
                    "O", "O", "O", "O", "I-cell_type", "I-cell_type", "O", "I-cell_type", "O"};
  const Col ioe2 = {"O", "I-protein", "I-protein", "I-protein", "E-protein", "E-protein",
                    "O", "O", "O", "O", "I-cell_type", "E-cell_type", "O", "E-cell_type", "O"};
  const Col iob1 = {"O", "I-protein", "I-protein", "I-protein", "I-protein", "B-protein",
                    "O", "O", "O", "O", "I-cell_type", "I-cell_type", "O", "I-cell_type", "O"};
  const Col iob2 = {"O", "B-protein", "I-protein", "I-protein", "I-protein", "B-protein",
                    "O", "O", "O", "O", "B-cell_type", "I-cell_type", "O", "B-cell_type", "O"};
  const Col iobe = {"O", "B-protein", "I-protein", "I-protein", "E-protein", "B-protein",
                    "O", "O", "O", "O", "B-cell_type", "E-cell_type", "O", "B-cell_type", "O"};
  const Col iobes = {"O", "B-protein", "I-protein", "I-protein", "E-protein", "S-protein",
                     "O", "O", "O", "O", "B-cell_type", "E-cell_type", "O", "S-cell_type", "O"};
  const Col frobes = {"O", "B-protein", "F-protein", "R-protein", "E-protein", "S-protein",
                      "O", "O", "O", "O", "B-cell_type", "E-cell_type", "O", "S-cell_type", "O"};

  CHECK(strs(encode(kRefSpans, kRefLen, Scheme::IO)) == io);
  CHECK(strs(encode(kRefSpans, kRefLen, Scheme::IOE1)) == ioe1);
  CHECK(strs(encode(kRefSpans, kRefLen, Scheme::IOE2)) == ioe2);
  CHECK(strs(encode(kRefSpans, kRefLen, Scheme::IOB1)) == iob1);
  CHECK(strs(encode(kRefSpans, kRefLen, Scheme::IOB2)) == iob2);
  CHECK(strs(encode(kRefSpans, kRefLen, Scheme::IOBE)) == iobe);
  CHECK(strs(encode(kRefSpans, kRefLen, Scheme::IOBES)) == iobes);
  CHECK(strs(encode(kRefSpans, kRefLen, Scheme::FROBES)) == frobes);
}

TEST_CASE("six-token mention splits into B F F R R E") {
  const TagSequence tags = encode({{0, 5, "protein"}}, 6, Scheme::FROBES);
  CHECK(strs(tags) == std::vector<std::string>{"B-protein", "F-protein", "F-protein",
                                               "R-protein", "R-protein", "E-protein"});
}

TEST_CASE("front and rear counts partition the interior") {
  CHECK_THROWS_AS(frobes_counts(2), InputError);
  for (int n = 3; n <= 100; ++n) {
    const auto [f, r] = frobes_counts(n);
    CHECK(f + r == n - 2);
    CHECK(f - r == (n % 2 == 0 ? 0 : 1));
    if (n % 2 == 0) CHECK(f == (n - 2) / 2);
  }
  CHECK(frobes_counts(3) == std::pair<int, int>{1, 0});
  CHECK(frobes_counts(4) == std::pair<int, int>{1, 1});
  CHECK(frobes_counts(6) == std::pair<int, int>{2, 2});
  CHECK(frobes_counts(7) == std::pair<int, int>{3, 2});
}

TEST_CASE("encode rejects bad spans") {
  CHECK_THROWS_AS(encode({{0, 3, "x"}}, 3, Scheme::IOB2), InputError);
  CHECK_THROWS_AS(encode({{-1, 0, "x"}}, 3, Scheme::IOB2), InputError);
  CHECK_THROWS_AS(encode({{2, 1, "x"}}, 3, Scheme::IOB2), InputError);
  CHECK_THROWS_AS(encode({{0, 1, "x"}, {1, 2, "y"}}, 3, Scheme::IOB2), InputError);
  // unsorted but disjoint input is fine
  CHECK_NOTHROW(encode({{2, 2, "x"}, {0, 1, "y"}}, 3, Scheme::IOB2));
}

TEST_CASE("validate flags every bad boundary and bigram") {
  SUBCASE("F after O is an illegal start, F before O an illegal transition") {
    const auto v = validate(seq(Scheme::FROBES, {"O", "F-protein", "O"}));
    REQUIRE(v.size() == 2);
    CHECK(v[0].token_index == 1);
    CHECK(v[0].kind == ViolationKind::IllegalStart);
    CHECK(v[1].token_index == 2);
    CHECK(v[1].kind == ViolationKind::IllegalTransition);
  }
  SUBCASE("R before F breaks two bigrams") {
    const auto v = validate(seq(Scheme::FROBES, {"B-protein", "R-protein", "F-protein",
                                                 "E-protein"}));
    REQUIRE(v.size() == 2);
    CHECK(v[0].token_index == 1);
    CHECK(v[0].kind == ViolationKind::IllegalTransition);
    CHECK(v[1].token_index == 2);
    CHECK(v[1].kind == ViolationKind::IllegalTransition);
  }
  SUBCASE("count imbalance is the only defect bigrams cannot see") {
    const auto v = validate(seq(Scheme::FROBES, {"B-protein", "F-protein", "R-protein",
                                                 "R-protein", "E-protein"}));
    REQUIRE(v.size() == 1);
    CHECK(v[0].token_index == 2);
    CHECK(v[0].kind == ViolationKind::CountImbalance);
  }
  SUBCASE("dangling begin at sentence end") {
    const auto v = validate(seq(Scheme::IOBES, {"O", "B-protein"}));
    REQUIRE(v.size() == 1);
    CHECK(v[0].token_index == 1);
    CHECK(v[0].kind == ViolationKind::IllegalEnd);
  }
  SUBCASE("IOB2 interior may not open a sentence") {
    const auto v = validate(seq(Scheme::IOB2, {"I-protein", "O"}));
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::IllegalStart);
    CHECK(v[0].token_index == 0);
  }
  SUBCASE("class change without a boundary tag") {
    const auto v = validate(seq(Scheme::IOB2, {"B-protein", "I-dna"}));
    REQUIRE(v.size() == 1);
    CHECK(v[0].token_index == 1);
    CHECK(v[0].kind == ViolationKind::IllegalTransition);
  }
  SUBCASE("valid sequences produce no violations") {
    CHECK(validate(seq(Scheme::FROBES, {"B-protein", "F-protein", "R-protein", "E-protein"}))
              .empty());
    CHECK(validate(seq(Scheme::IOB1, {"I-protein", "B-protein", "O"})).empty());
    CHECK(validate(TagSequence{{}, Scheme::IOB2}).empty());
  }
  SUBCASE("labels outside the tag set are a precondition failure") {
    TagSequence bad;
    bad.scheme = Scheme::IO;
    bad.labels = {TagLabel::of(Pos::B, "protein")};
    CHECK_THROWS_AS(validate(bad), InputError);
  }
}

TEST_CASE("strict decode throws with the violation list attached") {
  const TagSequence bad = seq(Scheme::FROBES, {"O", "F-protein", "O"});
  CHECK_THROWS_AS(decode(bad, DecodeMode::Strict), ValidationError);
  try {
    decode(bad, DecodeMode::Strict);
  } catch (const ValidationError& e) {
    REQUIRE(e.violations().size() == 2);
    CHECK(e.violations()[0].token_index == 1);
    CHECK(std::string(e.what()).find("illegal-start") != std::string::npos);
  }
}

TEST_CASE("lenient decode repairs by run splitting") {
  using Spans = std::vector<EntitySpan>;
  // stray F becomes a one-token mention
  CHECK(decode(seq(Scheme::FROBES, {"O", "F-protein", "O"}), DecodeMode::Lenient) ==
        Spans{{1, 1, "protein"}});
  // class change splits the run
  CHECK(decode(seq(Scheme::IOB2, {"B-protein", "I-dna"}), DecodeMode::Lenient) ==
        Spans{{0, 0, "protein"}, {1, 1, "dna"}});
  // B always opens
  CHECK(decode(seq(Scheme::IOB2, {"B-protein", "B-protein"}), DecodeMode::Lenient) ==
        Spans{{0, 0, "protein"}, {1, 1, "protein"}});
  // E and S always close
  CHECK(decode(seq(Scheme::IOBES, {"E-protein", "S-protein", "I-protein"}),
               DecodeMode::Lenient) ==
        Spans{{0, 0, "protein"}, {1, 1, "protein"}, {2, 2, "protein"}});
  // imbalanced F/R still recovers the whole mention
  CHECK(decode(seq(Scheme::FROBES, {"B-protein", "R-protein", "R-protein", "E-protein"}),
               DecodeMode::Lenient) == Spans{{0, 3, "protein"}});
  // dangling begin closes at sentence end
  CHECK(decode(seq(Scheme::IOB2, {"O", "B-protein"}), DecodeMode::Lenient) ==
        Spans{{1, 1, "protein"}});
}

TEST_CASE("convert re-encodes across schemes") {
  const TagSequence src = encode(kRefSpans, kRefLen, Scheme::IOB2);
  const TagSequence want = encode(kRefSpans, kRefLen, Scheme::FROBES);
  CHECK(convert(src, Scheme::FROBES, DecodeMode::Strict) == want);
  CHECK(convert(want, Scheme::IOB2, DecodeMode::Strict) == src);
  // converting an invalid sequence strictly fails, leniently succeeds
  const TagSequence bad = seq(Scheme::IOB2, {"I-protein", "O"});
  CHECK_THROWS_AS(convert(bad, Scheme::IOBES, DecodeMode::Strict), ValidationError);
  CHECK(strs(convert(bad, Scheme::IOBES, DecodeMode::Lenient)) ==
        std::vector<std::string>{"S-protein", "O"});
}
