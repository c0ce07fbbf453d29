#include "sentifiers/dataset.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "sentifiers/csv.hpp"
#include "sentifiers/errors.hpp"
#include "sentifiers/kernels.hpp"

namespace sentifiers {

namespace {

constexpr std::array<std::string_view, 6> kGazetteer = {"latitude", "longitude", "country",
                                                        "state",    "city",      "zip"};

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word_char(char c) {
  return is_lower(c) || is_upper(c) || is_digit(c) || static_cast<unsigned char>(c) >= 0x80;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

// Median of an unsorted buffer; reorders it. Even counts average the two middles.
double median_in_place(std::vector<double>& v) {
  const std::size_t n = v.size();
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(v.begin(), mid, v.end());
  const double upper = *mid;
  if (n % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), mid);
  return (lower + upper) / 2.0;
}

}  // namespace

std::string_view to_string(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::numeric:
      return "numeric";
    case AttributeKind::categorical:
      return "categorical";
    case AttributeKind::geographic:
      return "geographic";
  }
  return "categorical";
}

std::string normalize_name(std::string_view raw) {
  std::string out;
  out.reserve(raw.size() + 8);
  bool pending_space = false;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char c = raw[i];
    if (!is_word_char(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (is_upper(c) && i > 0) {
      const char prev = raw[i - 1];
      const bool next_lower = i + 1 < raw.size() && is_lower(raw[i + 1]);
      // fooBar -> foo bar; GDPPerCapita -> gdp per capita
      if (is_lower(prev) || is_digit(prev) || (is_upper(prev) && next_lower)) {
        pending_space = !out.empty();
      }
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

std::vector<std::string> attribute_ngrams(std::string_view display_name) {
  const auto words = split_words(display_name);
  std::vector<std::string> grams;
  std::set<std::string> seen;
  for (std::size_t len = words.size(); len >= 1; --len) {
    for (std::size_t start = 0; start + len <= words.size(); ++start) {
      std::string gram = words[start];
      for (std::size_t k = start + 1; k < start + len; ++k) gram += ' ' + words[k];
      if (seen.insert(gram).second) grams.push_back(std::move(gram));
    }
  }
  return grams;
}

NumericStats compute_stats(std::span<const double> values) {
  std::vector<double> xs;
  xs.reserve(values.size());
  for (double v : values) {
    if (!std::isnan(v)) xs.push_back(v);
  }
  if (xs.empty()) throw StatsError("no numeric values to summarize", "all-null column");

  NumericStats s;
  s.count = xs.size();
  s.null_count = values.size() - xs.size();
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  s.min = *lo;
  s.max = *hi;
  s.median = median_in_place(xs);
  for (double& x : xs) x = std::abs(x - s.median);
  s.mad = median_in_place(xs);
  return s;
}

bool is_geographic_name(std::string_view display_name) {
  return std::find(kGazetteer.begin(), kGazetteer.end(), display_name) != kGazetteer.end();
}

Dataset::Dataset(std::string name, std::vector<AttributeProfile> attributes,
                 std::vector<Column> columns)
    : name_(std::move(name)), attributes_(std::move(attributes)), columns_(std::move(columns)) {
  row_count_ = columns_.empty() ? 0 : columns_.front().text.size();
}

std::optional<std::size_t> Dataset::index_of(std::string_view reference) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].raw_name == reference || attributes_[i].display_name == reference) return i;
  }
  const std::string normalized = normalize_name(reference);
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].display_name == normalized) return i;
  }
  return std::nullopt;
}

const AttributeProfile* Dataset::find(std::string_view reference) const {
  const auto idx = index_of(reference);
  return idx ? &attributes_[*idx] : nullptr;
}

std::optional<std::size_t> Dataset::geographic(std::string_view display_name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].kind == AttributeKind::geographic &&
        attributes_[i].display_name == display_name) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> Dataset::numeric_attributes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].is_numeric()) out.push_back(i);
  }
  return out;
}

Dataset load_dataset(std::string_view csv_text, std::string name) {
  const auto records = parse_csv(csv_text);
  if (records.empty()) throw IngestError(0, "the file is empty");
  const CsvRecord& header = records.front();

  std::vector<AttributeProfile> attributes;
  std::set<std::string> seen;
  for (const auto& raw : header) {
    AttributeProfile profile;
    profile.raw_name = raw;
    profile.display_name = normalize_name(raw);
    if (profile.display_name.empty()) {
      throw SchemaError("column name '" + raw + "' has no usable words", "empty normalized name");
    }
    if (!seen.insert(profile.display_name).second) {
      throw SchemaError("two columns share the name '" + profile.display_name + "'",
                        "duplicate normalized column name: " + profile.display_name);
    }
    profile.ngrams = attribute_ngrams(profile.display_name);
    attributes.push_back(std::move(profile));
  }

  const std::size_t rows = records.size() - 1;
  std::vector<Column> columns(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    columns[c].text.reserve(rows);
    for (std::size_t r = 1; r < records.size(); ++r) columns[c].text.push_back(records[r][c]);
  }

  std::vector<std::size_t> numeric;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto parsed = kernels::parse_column_parallel(columns[c].text);
    columns[c].numbers = std::move(parsed.values);
    AttributeProfile& profile = attributes[c];
    if (is_geographic_name(profile.display_name)) {
      profile.kind = AttributeKind::geographic;
    } else if (parsed.non_empty > 0 && parsed.parsed >= 1 &&
               parsed.parsed * 100 >= parsed.non_empty * 95) {
      profile.kind = AttributeKind::numeric;
      numeric.push_back(c);
    } else {
      profile.kind = AttributeKind::categorical;
    }
  }

  std::vector<std::span<const double>> spans;
  for (std::size_t c : numeric) spans.emplace_back(columns[c].numbers);
  const auto stats = kernels::column_stats_parallel(spans);
  for (std::size_t k = 0; k < numeric.size(); ++k) attributes[numeric[k]].stats = stats[k];

  return Dataset(std::move(name), std::move(attributes), std::move(columns));
}

Dataset load_dataset(std::istream& source, std::string name) {
  const std::string text{std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
  return load_dataset(std::string_view(text), std::move(name));
}

Dataset load_dataset_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError(0, "cannot open " + path.string());
  return load_dataset(in, path.stem().string());
}

}  // namespace sentifiers
