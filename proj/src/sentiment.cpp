#include "sentifiers/sentiment.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sentifiers/errors.hpp"

namespace sentifiers {

std::string_view to_string(SentimentClass c) {
  switch (c) {
    case SentimentClass::very_negative: return "very_negative";
    case SentimentClass::negative: return "negative";
    case SentimentClass::neutral: return "neutral";
    case SentimentClass::positive: return "positive";
    case SentimentClass::very_positive: return "very_positive";
  }
  return "neutral";
}

std::optional<SentimentClass> parse_sentiment_class(std::string_view code) {
  if (code == "vneg") return SentimentClass::very_negative;
  if (code == "neg") return SentimentClass::negative;
  if (code == "neu") return SentimentClass::neutral;
  if (code == "pos") return SentimentClass::positive;
  if (code == "vpos") return SentimentClass::very_positive;
  return std::nullopt;
}

double normalized_score(SentimentClass c) {
  switch (c) {
    case SentimentClass::very_negative: return -1.0;
    case SentimentClass::negative: return -0.5;
    case SentimentClass::neutral: return 0.0;
    case SentimentClass::positive: return 0.5;
    case SentimentClass::very_positive: return 1.0;
  }
  return 0.0;
}

SentimentClass mirror(SentimentClass c) {
  switch (c) {
    case SentimentClass::very_negative: return SentimentClass::very_positive;
    case SentimentClass::negative: return SentimentClass::positive;
    case SentimentClass::neutral: return SentimentClass::neutral;
    case SentimentClass::positive: return SentimentClass::negative;
    case SentimentClass::very_positive: return SentimentClass::very_negative;
  }
  return c;
}

int polarity_sign(SentimentClass c) {
  return c == SentimentClass::negative || c == SentimentClass::very_negative ? -1 : 1;
}

std::string_view to_string(DirectiveKind k) {
  return k == DirectiveKind::top_n ? "top_n" : "bottom_n";
}

SentimentLexicon SentimentLexicon::load(std::istream& in) {
  SentimentLexicon lex;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    const auto klass =
        tab == std::string::npos ? std::nullopt : parse_sentiment_class(std::string_view(line).substr(tab + 1));
    if (tab == 0 || !klass) {
      throw ConfigError("sentiment lexicon is malformed",
                        "line " + std::to_string(line_no) + ": expected word<TAB>{vneg,neg,neu,pos,vpos}");
    }
    lex.add(line.substr(0, tab), *klass);
  }
  return lex;
}

SentimentLexicon SentimentLexicon::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open sentiment lexicon", path.string());
  return load(in);
}

std::optional<SentimentClass> SentimentLexicon::lookup(std::string_view word) const {
  const auto it = entries_.find(word);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

SentimentVerdict SentimentClassifier::classify(std::string_view phrase, bool negated) const {
  SentimentClass best = SentimentClass::neutral;
  double best_strength = 0.0;
  std::istringstream words{std::string(phrase)};
  for (std::string w; words >> w;) {
    for (char& ch : w) {
      if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
    }
    const auto hit = lexicon_.lookup(w);
    if (!hit) continue;
    const double strength = std::abs(normalized_score(*hit));
    if (strength > best_strength) {
      best = *hit;
      best_strength = strength;
    }
  }
  if (negated) best = mirror(best);
  return SentimentVerdict{std::string(phrase), best, normalized_score(best)};
}

RangeDirective combine(const SentimentVerdict& modifier_verdict,
                       const SentimentVerdict& attribute_verdict) {
  const bool modifier_positive = polarity_sign(modifier_verdict.klass) > 0;
  const bool attribute_positive = polarity_sign(attribute_verdict.klass) > 0;
  DirectiveKind kind;
  if (modifier_positive && attribute_positive) {
    kind = DirectiveKind::top_n;
  } else if (modifier_positive && !attribute_positive) {
    kind = DirectiveKind::bottom_n;
  } else if (!modifier_positive && attribute_positive) {
    kind = DirectiveKind::bottom_n;
  } else {
    kind = DirectiveKind::top_n;
  }
  return RangeDirective{kind, modifier_verdict, attribute_verdict};
}

}  // namespace sentifiers
