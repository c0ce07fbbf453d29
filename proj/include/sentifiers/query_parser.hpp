#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sentifiers/dataset.hpp"

namespace sentifiers {

enum class PennTag { NN, NNS, JJ, JJR, JJS, RB, VB, DT, IN, WP, WRB, CD, other };

std::string_view to_string(PennTag tag);
/// Maps a Penn Treebank tag name onto the reduced tag set (VBZ -> VB, WDT -> WP, ...).
PennTag parse_penn_tag(std::string_view name);

struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool operator==(const CharSpan&) const = default;
};

struct Token {
  std::string text;
  std::string lemma;
  PennTag pos = PennTag::other;
  CharSpan span;
  bool operator==(const Token&) const = default;
};

enum class ModifierClass { complex_gradable, numeric_gradable, superlative, comparative };

std::string_view to_string(ModifierClass c);

struct ModifierPhrase {
  Token token;
  ModifierClass classification = ModifierClass::complex_gradable;
  bool negated = false;
  bool operator==(const ModifierPhrase&) const = default;
};

struct ParsedQuery {
  std::string utterance;
  std::vector<Token> tokens;
  std::optional<ModifierPhrase> modifier;
  std::vector<std::string> explicit_attributes;  // raw attribute names, dataset order
  std::vector<std::string> ignored_adjectives;   // adjectives other than the chosen modifier
  bool operator==(const ParsedQuery&) const = default;
};

/// word<TAB>tag lexicon. Later duplicates override earlier ones.
class PosLexicon {
 public:
  PosLexicon() = default;
  static PosLexicon load(std::istream& in);
  static PosLexicon load_file(const std::filesystem::path& path);

  void add(std::string word, PennTag tag) { entries_[std::move(word)] = tag; }
  std::optional<PennTag> lookup(std::string_view word) const;
  bool is_adjective(std::string_view word) const { return lookup(word) == PennTag::JJ; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, PennTag, std::less<>> entries_;
};

/// One word per line; '#' comments and blank lines ignored.
class WordList {
 public:
  WordList() = default;
  explicit WordList(std::set<std::string, std::less<>> words) : words_(std::move(words)) {}
  static WordList load(std::istream& in);
  static WordList load_file(const std::filesystem::path& path);

  bool contains(std::string_view word) const { return words_.contains(word); }
  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
};

bool is_negation_particle(std::string_view lemma);

/// Splits on whitespace and punctuation. "n't" becomes its own token, possessive
/// "'s" is dropped. Lemma is the lowercased text; plural stripping happens in pos_tag.
/// Throws ParseError for an utterance that is empty after trimming.
std::vector<Token> tokenize(std::string_view utterance);

/// Singular form for a plural noun ("countries" -> "country").
std::string singularize(std::string_view plural);

class QueryParser {
 public:
  QueryParser(PosLexicon pos, WordList numeric_gradable)
      : pos_(std::move(pos)), numeric_gradable_(std::move(numeric_gradable)) {}

  /// Lexicon first, then suffix rules, default NN. NNS tokens get singular lemmas.
  std::vector<Token> pos_tag(std::vector<Token> tokens) const;

  /// Picks the vague modifier and the attributes named outright.
  /// Throws UnintelligibleQuery when there is neither.
  ParsedQuery extract_modifier(std::string_view utterance, std::vector<Token> tagged,
                               const Dataset& dataset) const;

  ParsedQuery parse(std::string_view utterance, const Dataset& dataset) const;

  const PosLexicon& pos_lexicon() const { return pos_; }
  const WordList& numeric_gradable() const { return numeric_gradable_; }

 private:
  PennTag tag_word(std::string_view lower) const;
  ModifierClass classify_adjective(const Token& token) const;

  PosLexicon pos_;
  WordList numeric_gradable_;
};

}  // namespace sentifiers
