#include "sentifiers/cooccurrence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "sentifiers/errors.hpp"

namespace sentifiers {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

NgramCorpus::Count parse_count(std::string_view s, std::size_t line_no) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  NgramCorpus::Count value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw CorpusError(line_no, "count '" + std::string(s) + "' is not a non-negative integer");
  }
  if (value == 0) throw CorpusError(line_no, "counts must be at least 1");
  return value;
}

std::pair<std::string, std::string> ordered(std::string_view a, std::string_view b) {
  return a < b ? std::pair{std::string(a), std::string(b)} : std::pair{std::string(b), std::string(a)};
}

}  // namespace

NgramCorpus::NgramCorpus(std::map<std::string, Count, std::less<>> unigrams,
                         std::map<std::pair<std::string, std::string>, Count, std::less<>> pairs)
    : unigrams_(std::move(unigrams)), pairs_(std::move(pairs)) {
  if (unigrams_.empty()) throw CorpusError(0, "corpus has no entries");
  for (const auto& [term, count] : unigrams_) {
    if (term.empty()) throw CorpusError(0, "empty term");
    if (count == 0) throw CorpusError(0, "counts must be at least 1");
    total_terms_ += count;
  }
  for (const auto& [key, count] : pairs_) {
    if (!(key.first < key.second)) {
      throw CorpusError(0, "pair terms must be ordered: " + key.first + " | " + key.second);
    }
    if (!unigrams_.contains(key.first) || !unigrams_.contains(key.second)) {
      throw CorpusError(0, "pair " + key.first + " | " + key.second + " uses an unknown term");
    }
    if (count == 0) throw CorpusError(0, "counts must be at least 1");
    total_pairs_ += count;
  }
}

NgramCorpus NgramCorpus::load(std::istream& in) {
  std::map<std::string, Count, std::less<>> unigrams;
  std::map<std::pair<std::string, std::string>, Count, std::less<>> pairs;
  std::map<std::pair<std::string, std::string>, std::size_t> pair_lines;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::string_view body = line;
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
    if (body.empty() || body.front() == '#') continue;
    const auto f = split_tabs(body);
    if (f[0] == "U" && f.size() == 3) {
      if (f[1].empty()) throw CorpusError(line_no, "empty term");
      if (!unigrams.emplace(std::string(f[1]), parse_count(f[2], line_no)).second) {
        throw CorpusError(line_no, "duplicate unigram '" + std::string(f[1]) + "'");
      }
    } else if (f[0] == "P" && f.size() == 4) {
      if (f[1].empty() || f[2].empty()) throw CorpusError(line_no, "empty term");
      if (!(f[1] < f[2])) {
        throw CorpusError(line_no, "pair terms must be in lexicographic order");
      }
      auto key = std::pair{std::string(f[1]), std::string(f[2])};
      if (pairs.contains(key)) throw CorpusError(line_no, "duplicate pair");
      pair_lines[key] = line_no;
      pairs.emplace(std::move(key), parse_count(f[3], line_no));
    } else {
      throw CorpusError(line_no, "expected U<TAB>term<TAB>count or P<TAB>a<TAB>b<TAB>count");
    }
  }
  if (unigrams.empty()) throw CorpusError(line_no, "corpus has no entries");
  for (const auto& [key, at] : pair_lines) {
    if (!unigrams.contains(key.first) || !unigrams.contains(key.second)) {
      throw CorpusError(at, "pair uses a term with no unigram count");
    }
  }
  return NgramCorpus(std::move(unigrams), std::move(pairs));
}

NgramCorpus NgramCorpus::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError(0, "cannot open " + path.string());
  return load(in);
}

NgramCorpus::Count NgramCorpus::unigram_count(std::string_view term) const {
  const auto it = unigrams_.find(term);
  return it == unigrams_.end() ? 0 : it->second;
}

NgramCorpus::Count NgramCorpus::pair_count(std::string_view a, std::string_view b) const {
  const auto it = pairs_.find(ordered(a, b));
  return it == pairs_.end() ? 0 : it->second;
}

std::optional<double> pmi(std::string_view modifier_term, std::string_view attribute_term,
                          const NgramCorpus& corpus) {
  const auto joint = corpus.pair_count(modifier_term, attribute_term);
  const auto a = corpus.unigram_count(modifier_term);
  const auto b = corpus.unigram_count(attribute_term);
  if (joint == 0 || a == 0 || b == 0) return std::nullopt;
  const double terms = static_cast<double>(corpus.total_terms());
  const double p_joint = static_cast<double>(joint) / static_cast<double>(corpus.total_pairs());
  const double p_a = static_cast<double>(a) / terms;
  const double p_b = static_cast<double>(b) / terms;
  return std::log(p_joint / (p_a * p_b));
}

CooccurrenceScore score_attribute(const ModifierPhrase& modifier, const AttributeProfile& attribute,
                                  const NgramCorpus& corpus) {
  CooccurrenceScore score;
  score.attribute = attribute.raw_name;
  const std::string& term = modifier.token.lemma;
  for (const auto& gram : attribute.ngrams) {
    const auto value = pmi(term, gram, corpus);
    if (!value) continue;
    if (!score.pmi || *value > *score.pmi) {
      score.pmi = value;
      score.modifier_ngram = term;
      score.attribute_ngram = gram;
    }
  }
  score.cooccurring = score.pmi.has_value();
  return score;
}

std::vector<CooccurrenceScore> rank_attributes(const ModifierPhrase& modifier, const Dataset& dataset,
                                               const NgramCorpus& corpus) {
  struct Ranked {
    CooccurrenceScore score;
    const std::string* display;
  };
  std::vector<Ranked> ranked;
  for (std::size_t idx : dataset.numeric_attributes()) {
    const auto& attr = dataset.attribute(idx);
    auto s = score_attribute(modifier, attr, corpus);
    if (s.cooccurring) ranked.push_back({std::move(s), &attr.display_name});
  }
  if (ranked.empty()) {
    throw NoCooccurrence("I could not relate \"" + modifier.token.text +
                             "\" to any numeric attribute in " + dataset.name(),
                         "no numeric attribute co-occurs with " + modifier.token.lemma);
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& l, const Ranked& r) {
    if (*l.score.pmi != *r.score.pmi) return *l.score.pmi > *r.score.pmi;
    return *l.display < *r.display;
  });
  std::vector<CooccurrenceScore> out;
  out.reserve(ranked.size());
  for (auto& r : ranked) out.push_back(std::move(r.score));
  return out;
}

}  // namespace sentifiers
