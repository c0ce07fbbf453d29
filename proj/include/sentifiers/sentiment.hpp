#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace sentifiers {

enum class SentimentClass { very_negative, negative, neutral, positive, very_positive };

std::string_view to_string(SentimentClass c);
/// Lexicon spelling: vneg, neg, neu, pos, vpos.
std::optional<SentimentClass> parse_sentiment_class(std::string_view code);

/// -1, -0.5, 0, +0.5, +1.
double normalized_score(SentimentClass c);
/// Reflection around neutral.
SentimentClass mirror(SentimentClass c);
/// Polarity with neutral counted as positive: +1 or -1.
int polarity_sign(SentimentClass c);

struct SentimentVerdict {
  std::string phrase;
  SentimentClass klass = SentimentClass::neutral;
  double score = 0.0;
  bool operator==(const SentimentVerdict&) const = default;
};

enum class DirectiveKind { top_n, bottom_n };

std::string_view to_string(DirectiveKind k);

struct RangeDirective {
  DirectiveKind kind = DirectiveKind::top_n;
  SentimentVerdict modifier_verdict;
  SentimentVerdict attribute_verdict;
  bool operator==(const RangeDirective&) const = default;
};

/// Word-level five-class lexicon. Format: word<TAB>{vneg,neg,neu,pos,vpos}.
class SentimentLexicon {
 public:
  SentimentLexicon() = default;
  static SentimentLexicon load(std::istream& in);
  static SentimentLexicon load_file(const std::filesystem::path& path);

  void add(std::string word, SentimentClass c) { entries_[std::move(word)] = c; }
  std::optional<SentimentClass> lookup(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, SentimentClass, std::less<>> entries_;
};

// The classifier is the only place sentiment is computed; combine() consumes its verdicts.
class SentimentClassifier {
 public:
  explicit SentimentClassifier(SentimentLexicon lexicon) : lexicon_(std::move(lexicon)) {}

  /// Strongest word wins (earlier word on ties); neutral if no word is known.
  SentimentVerdict classify(std::string_view phrase, bool negated) const;

  const SentimentLexicon& lexicon() const { return lexicon_; }

 private:
  SentimentLexicon lexicon_;
};

/// Same polarity (neutral as positive) -> top_n, opposite -> bottom_n.
RangeDirective combine(const SentimentVerdict& modifier_verdict,
                       const SentimentVerdict& attribute_verdict);

}  // namespace sentifiers
