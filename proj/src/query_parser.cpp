#include "sentifiers/query_parser.hpp"

#include <algorithm>
#include <fstream>

#include "sentifiers/errors.hpp"
#include "sentifiers/kernels.hpp"

namespace sentifiers {

namespace {

bool is_alnum_ascii(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}
bool is_word_byte(unsigned char c) { return is_alnum_ascii(c) || c >= 0x80; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.ends_with(suffix);
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// Candidate base forms for a comparative/superlative: safer -> safe, bigger -> big, happier -> happy.
std::vector<std::string> degree_stems(std::string_view word, std::string_view suffix) {
  std::vector<std::string> stems;
  const std::string base(word.substr(0, word.size() - suffix.size()));
  if (base.empty()) return stems;
  stems.push_back(base);
  stems.push_back(base + "e");
  if (base.size() >= 2 && base.back() == base[base.size() - 2] && !is_vowel(base.back())) {
    stems.push_back(base.substr(0, base.size() - 1));
  }
  if (base.back() == 'i') stems.push_back(base.substr(0, base.size() - 1) + "y");
  return stems;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits `s` at the first TAB; returns false when there is none.
bool split_tab(std::string_view s, std::string_view& left, std::string_view& right) {
  const auto tab = s.find('\t');
  if (tab == std::string_view::npos) return false;
  left = trim(s.substr(0, tab));
  right = trim(s.substr(tab + 1));
  return true;
}

// Offsets of 0x2019 (right single quotation mark) are treated as an apostrophe.
std::size_t apostrophe_len(std::string_view s, std::size_t i) {
  if (s[i] == '\'') return 1;
  if (s.substr(i, 3) == "\xE2\x80\x99") return 3;
  return 0;
}

}  // namespace

std::string_view to_string(PennTag tag) {
  switch (tag) {
    case PennTag::NN: return "NN";
    case PennTag::NNS: return "NNS";
    case PennTag::JJ: return "JJ";
    case PennTag::JJR: return "JJR";
    case PennTag::JJS: return "JJS";
    case PennTag::RB: return "RB";
    case PennTag::VB: return "VB";
    case PennTag::DT: return "DT";
    case PennTag::IN: return "IN";
    case PennTag::WP: return "WP";
    case PennTag::WRB: return "WRB";
    case PennTag::CD: return "CD";
    case PennTag::other: return "other";
  }
  return "other";
}

PennTag parse_penn_tag(std::string_view name) {
  static const std::map<std::string_view, PennTag> kTags = {
      {"NN", PennTag::NN},   {"NNP", PennTag::NN},   {"NNS", PennTag::NNS},
      {"NNPS", PennTag::NNS}, {"JJ", PennTag::JJ},    {"JJR", PennTag::JJR},
      {"JJS", PennTag::JJS}, {"RB", PennTag::RB},    {"RBR", PennTag::RB},
      {"RBS", PennTag::RB},  {"VB", PennTag::VB},    {"VBD", PennTag::VB},
      {"VBG", PennTag::VB},  {"VBN", PennTag::VB},   {"VBP", PennTag::VB},
      {"VBZ", PennTag::VB},  {"DT", PennTag::DT},    {"PDT", PennTag::DT},
      {"IN", PennTag::IN},   {"WP", PennTag::WP},    {"WDT", PennTag::WP},
      {"WP$", PennTag::WP},  {"WRB", PennTag::WRB},  {"CD", PennTag::CD},
  };
  const auto it = kTags.find(name);
  return it == kTags.end() ? PennTag::other : it->second;
}

std::string_view to_string(ModifierClass c) {
  switch (c) {
    case ModifierClass::complex_gradable: return "complex_gradable";
    case ModifierClass::numeric_gradable: return "numeric_gradable";
    case ModifierClass::superlative: return "superlative";
    case ModifierClass::comparative: return "comparative";
  }
  return "complex_gradable";
}

PosLexicon PosLexicon::load(std::istream& in) {
  PosLexicon lex;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::string_view word, tag;
    if (!split_tab(body, word, tag) || word.empty() || tag.empty()) {
      throw ConfigError("POS lexicon is malformed",
                        "line " + std::to_string(line_no) + ": expected word<TAB>tag");
    }
    lex.add(lower(word), parse_penn_tag(tag));
  }
  return lex;
}

PosLexicon PosLexicon::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open POS lexicon", path.string());
  return load(in);
}

std::optional<PennTag> PosLexicon::lookup(std::string_view word) const {
  const auto it = entries_.find(word);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

WordList WordList::load(std::istream& in) {
  std::set<std::string, std::less<>> words;
  for (std::string line; std::getline(in, line);) {
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    words.insert(lower(body));
  }
  return WordList(std::move(words));
}

WordList WordList::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open word list", path.string());
  return load(in);
}

bool is_negation_particle(std::string_view lemma) {
  return lemma == "not" || lemma == "n't" || lemma == "never" || lemma == "no";
}

std::vector<Token> tokenize(std::string_view utterance) {
  std::vector<Token> tokens;
  auto push = [&](std::size_t begin, std::size_t end) {
    Token t;
    t.text = std::string(utterance.substr(begin, end - begin));
    t.lemma = lower(t.text);
    t.span = {begin, end};
    tokens.push_back(std::move(t));
  };

  std::size_t i = 0;
  const std::size_t n = utterance.size();
  while (i < n) {
    const auto c = static_cast<unsigned char>(utterance[i]);
    if (const std::size_t stray = apostrophe_len(utterance, i); stray > 0) {
      i += stray;
      continue;
    }
    if (!is_word_byte(c)) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    std::size_t end = i;
    std::size_t split = std::string::npos;  // start of a clitic ("n't", "'s")
    std::size_t clitic_len = 0;
    bool negation_clitic = false;
    while (end < n) {
      const auto ch = static_cast<unsigned char>(utterance[end]);
      const std::size_t alen = apostrophe_len(utterance, end);
      if (alen == 0 && is_word_byte(ch)) {
        ++end;
        continue;
      }
      // 5.5 stays one token.
      if (ch == '.' && end > begin && is_digit(utterance[end - 1]) && end + 1 < n &&
          is_digit(utterance[end + 1])) {
        ++end;
        continue;
      }
      if (alen > 0 && end + alen < n && is_word_byte(static_cast<unsigned char>(utterance[end + alen])) &&
          apostrophe_len(utterance, end + alen) == 0) {
        std::size_t tail = end + alen;
        while (tail < n && is_word_byte(static_cast<unsigned char>(utterance[tail])) &&
               apostrophe_len(utterance, tail) == 0) {
          ++tail;
        }
        const std::string rest = lower(utterance.substr(end + alen, tail - end - alen));
        if (rest == "t" && end > begin && (utterance[end - 1] == 'n' || utterance[end - 1] == 'N')) {
          split = end - 1;
          clitic_len = tail - split;
          negation_clitic = true;
          end = tail;
          break;
        }
        if (rest == "s") {
          split = end;
          clitic_len = tail - split;
          end = tail;
          break;
        }
        end = tail;  // o'clock, rock'n'roll
        continue;
      }
      break;
    }
    if (split == std::string::npos) {
      push(begin, end);
    } else {
      if (split > begin) push(begin, split);
      if (negation_clitic) {  // possessive 's is dropped
        Token t;
        t.text = std::string(utterance.substr(split, clitic_len));
        t.lemma = "n't";
        t.span = {split, split + clitic_len};
        tokens.push_back(std::move(t));
      }
    }
    i = end;
  }
  if (tokens.empty()) throw ParseError("please type a question about the data", "empty utterance");
  return tokens;
}

std::string singularize(std::string_view plural) {
  std::string w(plural);
  if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  if (ends_with(w, "sses") || ends_with(w, "xes") || ends_with(w, "ches") || ends_with(w, "shes")) {
    return w.substr(0, w.size() - 2);
  }
  if (ends_with(w, "s") && !ends_with(w, "ss")) return w.substr(0, w.size() - 1);
  return w;
}

PennTag QueryParser::tag_word(std::string_view word) const {
  if (kernels::parse_real(word)) return PennTag::CD;
  if (auto hit = pos_.lookup(word)) return *hit;
  if (ends_with(word, "est") && word.size() >= 5) return PennTag::JJS;
  if (ends_with(word, "er") && word.size() >= 4) {
    for (const auto& stem : degree_stems(word, "er")) {
      if (pos_.is_adjective(stem) || numeric_gradable_.contains(stem)) return PennTag::JJR;
    }
  }
  // Participles that are adjectives ("booming") are caught by the lexicon above.
  if ((ends_with(word, "ing") && word.size() >= 5) || (ends_with(word, "ed") && word.size() >= 4)) {
    return PennTag::VB;
  }
  if (ends_with(word, "ly") && word.size() >= 5) return PennTag::RB;
  if (ends_with(word, "s") && word.size() >= 4 && !ends_with(word, "ss") && !ends_with(word, "us") &&
      !ends_with(word, "is")) {
    return PennTag::NNS;
  }
  return PennTag::NN;
}

std::vector<Token> QueryParser::pos_tag(std::vector<Token> tokens) const {
  for (auto& t : tokens) {
    if (t.lemma == "n't") {
      t.pos = PennTag::RB;
      continue;
    }
    const std::string word = lower(t.text);
    t.pos = tag_word(word);
    t.lemma = t.pos == PennTag::NNS ? singularize(word) : word;
  }
  return tokens;
}

ModifierClass QueryParser::classify_adjective(const Token& token) const {
  switch (token.pos) {
    case PennTag::JJS: return ModifierClass::superlative;
    case PennTag::JJR: return ModifierClass::comparative;
    default:
      return numeric_gradable_.contains(token.lemma) ? ModifierClass::numeric_gradable
                                                     : ModifierClass::complex_gradable;
  }
}

ParsedQuery QueryParser::extract_modifier(std::string_view utterance, std::vector<Token> tagged,
                                          const Dataset& dataset) const {
  ParsedQuery q;
  q.utterance = std::string(utterance);
  q.tokens = std::move(tagged);

  std::set<std::string, std::less<>> attribute_words;
  for (const auto& attr : dataset.attributes()) {
    for (const auto& gram : attr.ngrams) {
      if (gram.find(' ') == std::string::npos) attribute_words.insert(gram);
    }
  }
  auto names_attribute = [&](const Token& t) {
    return attribute_words.contains(t.lemma) || attribute_words.contains(lower(t.text));
  };

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < q.tokens.size(); ++i) {
    const auto pos = q.tokens[i].pos;
    if ((pos == PennTag::JJ || pos == PennTag::JJR || pos == PennTag::JJS) &&
        !names_attribute(q.tokens[i])) {
      candidates.push_back(i);
    }
  }

  std::optional<std::size_t> chosen;
  for (std::size_t i : candidates) {
    if (classify_adjective(q.tokens[i]) == ModifierClass::complex_gradable) {
      chosen = i;
      break;
    }
  }
  if (!chosen && !candidates.empty()) chosen = candidates.front();

  if (chosen) {
    ModifierPhrase m;
    m.token = q.tokens[*chosen];
    m.classification = classify_adjective(m.token);
    int particles = 0;
    for (std::size_t back = 1; back <= 2 && back <= *chosen; ++back) {
      if (is_negation_particle(q.tokens[*chosen - back].lemma)) ++particles;
    }
    m.negated = particles % 2 == 1;
    q.modifier = std::move(m);
    for (std::size_t i : candidates) {
      if (i != *chosen) q.ignored_adjectives.push_back(q.tokens[i].lemma);
    }
  }

  std::vector<std::string> words;
  for (const auto& t : q.tokens) words.push_back(lower(t.text));
  for (const auto& attr : dataset.attributes()) {
    std::vector<std::string> name_words;
    for (std::size_t pos = 0, next; pos <= attr.display_name.size(); pos = next + 1) {
      next = attr.display_name.find(' ', pos);
      if (next == std::string::npos) next = attr.display_name.size();
      name_words.push_back(attr.display_name.substr(pos, next - pos));
    }
    const std::string raw_lower = lower(attr.raw_name);
    bool found = std::find(words.begin(), words.end(), raw_lower) != words.end();
    if (!found) {
      found = std::search(words.begin(), words.end(), name_words.begin(), name_words.end()) !=
              words.end();
    }
    if (found) q.explicit_attributes.push_back(attr.raw_name);
  }

  if (!q.modifier && q.explicit_attributes.empty()) {
    throw UnintelligibleQuery(
        "I could not find a descriptive word or a data attribute in \"" + q.utterance + "\"",
        "no adjective and no explicit attribute");
  }
  return q;
}

ParsedQuery QueryParser::parse(std::string_view utterance, const Dataset& dataset) const {
  return extract_modifier(utterance, pos_tag(tokenize(utterance)), dataset);
}

}  // namespace sentifiers
