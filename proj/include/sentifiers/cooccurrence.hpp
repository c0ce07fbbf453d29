#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentifiers/dataset.hpp"
#include "sentifiers/query_parser.hpp"

namespace sentifiers {

/// Unigram and unordered-pair counts with their own totals.
///
/// File format, one record per line, TAB separated:
///   U  term  count
///   P  termA termB count      (termA < termB)
/// Lines starting with '#' and blank lines are ignored. Terms may contain spaces.
class NgramCorpus {
 public:
  using Count = std::uint64_t;

  NgramCorpus() = default;
  /// Validates the invariants; throws CorpusError (line 0) on violation.
  NgramCorpus(std::map<std::string, Count, std::less<>> unigrams,
              std::map<std::pair<std::string, std::string>, Count, std::less<>> pairs);

  static NgramCorpus load(std::istream& in);
  static NgramCorpus load_file(const std::filesystem::path& path);

  Count unigram_count(std::string_view term) const;
  Count pair_count(std::string_view a, std::string_view b) const;
  Count total_terms() const { return total_terms_; }
  Count total_pairs() const { return total_pairs_; }
  std::size_t term_count() const { return unigrams_.size(); }
  std::size_t distinct_pairs() const { return pairs_.size(); }

  const std::map<std::string, Count, std::less<>>& unigrams() const { return unigrams_; }

 private:
  std::map<std::string, Count, std::less<>> unigrams_;
  std::map<std::pair<std::string, std::string>, Count, std::less<>> pairs_;
  Count total_terms_ = 0;
  Count total_pairs_ = 0;
};

/// Natural-log PMI; nullopt when the pair never co-occurs or a term is unknown.
std::optional<double> pmi(std::string_view modifier_term, std::string_view attribute_term,
                          const NgramCorpus& corpus);

struct CooccurrenceScore {
  std::string attribute;  // raw attribute name
  std::optional<double> pmi;
  std::string modifier_ngram;
  std::string attribute_ngram;
  bool cooccurring = false;
  bool operator==(const CooccurrenceScore&) const = default;
};

/// Max finite PMI over modifier lemma x attribute n-grams. Ties keep the
/// earlier (longer) attribute n-gram.
CooccurrenceScore score_attribute(const ModifierPhrase& modifier, const AttributeProfile& attribute,
                                  const NgramCorpus& corpus);

/// Co-occurring numeric attributes by PMI descending, ties by display name.
/// Throws NoCooccurrence when none co-occur.
std::vector<CooccurrenceScore> rank_attributes(const ModifierPhrase& modifier, const Dataset& dataset,
                                               const NgramCorpus& corpus);

}  // namespace sentifiers
