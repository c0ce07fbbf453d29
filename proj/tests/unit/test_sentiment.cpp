#include <doctest.h>

#include <sstream>

#include "sentifiers/errors.hpp"
#include "sentifiers/sentiment.hpp"
#include "support.hpp"

using namespace sentifiers;

namespace {

const SentimentClassifier& classifier() { return testing::shipped()->classifier; }

constexpr SentimentClass kAll[] = {SentimentClass::very_negative, SentimentClass::negative, SentimentClass::neutral,
                                   SentimentClass::positive, SentimentClass::very_positive};

SentimentVerdict verdict(SentimentClass c) { return {"x", c, normalized_score(c)}; }

}  // namespace

TEST_CASE("class scores and mirror") {
  CHECK(normalized_score(SentimentClass::very_negative) == -1.0);
  CHECK(normalized_score(SentimentClass::negative) == -0.5);
  CHECK(normalized_score(SentimentClass::neutral) == 0.0);
  CHECK(normalized_score(SentimentClass::positive) == 0.5);
  CHECK(normalized_score(SentimentClass::very_positive) == 1.0);
  for (auto c : kAll) {
    CHECK(mirror(mirror(c)) == c);
    CHECK(normalized_score(mirror(c)) == -normalized_score(c));
  }
  CHECK(mirror(SentimentClass::very_negative) == SentimentClass::very_positive);
  CHECK(mirror(SentimentClass::neutral) == SentimentClass::neutral);
  CHECK(polarity_sign(SentimentClass::neutral) == 1);
  CHECK(polarity_sign(SentimentClass::negative) == -1);
}

TEST_CASE("lexicon codes") {
  CHECK(parse_sentiment_class("vneg") == SentimentClass::very_negative);
  CHECK(parse_sentiment_class("neu") == SentimentClass::neutral);
  CHECK(parse_sentiment_class("vpos") == SentimentClass::very_positive);
  CHECK_FALSE(parse_sentiment_class("positive").has_value());
  std::istringstream bad("good\tgreat\n");
  CHECK_THROWS_AS(SentimentLexicon::load(bad), ConfigError);
  std::istringstream missing("good\n");
  CHECK_THROWS_AS(SentimentLexicon::load(missing), ConfigError);
  CHECK_THROWS_AS(SentimentLexicon::load_file("/nonexistent/sentiment.tsv"), ConfigError);
}

TEST_CASE("classify examples") {
  CHECK(classifier().classify("safe", false).klass == SentimentClass::positive);
  CHECK(classifier().classify("earthquake magnitude", false).klass == SentimentClass::negative);
  CHECK(classifier().classify("population", false).klass == SentimentClass::neutral);
  CHECK(classifier().classify("unsafe", true).klass == SentimentClass::positive);
  CHECK(classifier().classify("income per capita", false).klass == SentimentClass::positive);
  CHECK(classifier().classify("life expectancy", false).klass == SentimentClass::positive);
  const auto v = classifier().classify("Booming", false);
  CHECK(v.phrase == "Booming");
  CHECK(v.klass == SentimentClass::very_positive);
  CHECK(v.score == 1.0);
}

TEST_CASE("shipped lexicon covers the exemplars") {
  const auto& lex = classifier().lexicon();
  CHECK(lex.size() >= 150);
  for (const char* w : {"safe", "booming", "good", "prosperous", "flourishing", "income", "expectancy"}) {
    CAPTURE(w);
    REQUIRE(lex.lookup(w).has_value());
    CHECK(polarity_sign(*lex.lookup(w)) == 1);
    CHECK(*lex.lookup(w) != SentimentClass::neutral);
  }
  for (const char* w : {"unsafe", "struggling", "bad", "severe", "poor", "scary", "earthquake"}) {
    CAPTURE(w);
    REQUIRE(lex.lookup(w).has_value());
    CHECK(polarity_sign(*lex.lookup(w)) == -1);
  }
  for (const char* w : {"population", "magnitude", "capita"}) CHECK_FALSE(lex.lookup(w).has_value());
}

TEST_CASE("strongest word wins, earlier word on ties") {
  SentimentLexicon lex;
  lex.add("good", SentimentClass::positive);
  lex.add("bad", SentimentClass::negative);
  lex.add("awful", SentimentClass::very_negative);
  const SentimentClassifier c(lex);
  CHECK(c.classify("good bad", false).klass == SentimentClass::positive);
  CHECK(c.classify("bad good", false).klass == SentimentClass::negative);
  CHECK(c.classify("good awful", false).klass == SentimentClass::very_negative);
  CHECK(c.classify("good awful", true).klass == SentimentClass::very_positive);
  CHECK(c.classify("nothing known", true).klass == SentimentClass::neutral);
}

TEST_CASE("verdict invariants") {
  for (const char* word : {"safe", "terrible", "average", "booming", "population"}) {
    for (bool negated : {false, true}) {
      const auto v = classifier().classify(word, negated);
      CHECK(v.score == normalized_score(v.klass));
      CHECK(v.score >= -1.0);
      CHECK(v.score <= 1.0);
      CHECK(classifier().classify(word, !negated).klass == mirror(v.klass));
    }
  }
}

TEST_CASE("combine examples") {
  const auto booming = classifier().classify("booming", false);
  const auto income = classifier().classify("income per capita", false);
  CHECK(combine(booming, income).kind == DirectiveKind::top_n);
  const auto safe = classifier().classify("safe", false);
  const auto magnitude = classifier().classify("earthquake magnitude", false);
  CHECK(combine(safe, magnitude).kind == DirectiveKind::bottom_n);
  const auto unsafe = classifier().classify("unsafe", false);
  CHECK(combine(unsafe, magnitude).kind == DirectiveKind::top_n);
  CHECK(combine(verdict(SentimentClass::neutral), verdict(SentimentClass::neutral)).kind == DirectiveKind::top_n);
  const auto d = combine(booming, income);
  CHECK(d.modifier_verdict == booming);
  CHECK(d.attribute_verdict == income);
}

TEST_CASE("combine over all 25 class pairs") {
  for (auto m : kAll) {
    for (auto a : kAll) {
      const auto kind = combine(verdict(m), verdict(a)).kind;
      CHECK((kind == DirectiveKind::top_n) == (polarity_sign(m) == polarity_sign(a)));
      // Flipping both polarities keeps the directive, except where neutral has no mirror image sign.
      if (m != SentimentClass::neutral && a != SentimentClass::neutral) {
        CHECK(combine(verdict(mirror(m)), verdict(mirror(a))).kind == kind);
      }
    }
  }
}
