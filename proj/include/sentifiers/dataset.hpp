#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sentifiers {

enum class AttributeKind { numeric, categorical, geographic };

std::string_view to_string(AttributeKind kind);

struct NumericStats {
  double min = 0.0;
  double max = 0.0;
  double median = 0.0;
  double mad = 0.0;  // median absolute deviation from the median
  std::size_t count = 0;
  std::size_t null_count = 0;

  bool operator==(const NumericStats&) const = default;
};

struct AttributeProfile {
  std::string raw_name;
  std::string display_name;
  AttributeKind kind = AttributeKind::categorical;
  std::optional<NumericStats> stats;  // present iff kind == numeric
  std::vector<std::string> ngrams;

  bool is_numeric() const { return kind == AttributeKind::numeric; }
  bool operator==(const AttributeProfile&) const = default;
};

// A column keeps the raw cell text and, for every cell, its numeric value
// or NaN when the cell is empty or does not parse. NaN is the null marker
// throughout the numeric kernels.
struct Column {
  std::vector<std::string> text;
  std::vector<double> numbers;
};

/// An ingested table. Immutable after load_dataset returns.
class Dataset {
 public:
  Dataset(std::string name, std::vector<AttributeProfile> attributes,
          std::vector<Column> columns);

  const std::string& name() const { return name_; }
  const std::vector<AttributeProfile>& attributes() const { return attributes_; }
  std::size_t row_count() const { return row_count_; }

  /// Resolves an attribute by raw name or display name (normalization applied).
  std::optional<std::size_t> index_of(std::string_view reference) const;
  const AttributeProfile& attribute(std::size_t index) const { return attributes_.at(index); }
  const AttributeProfile* find(std::string_view reference) const;

  std::span<const double> numbers(std::size_t column) const { return columns_.at(column).numbers; }
  const std::string& text(std::size_t row, std::size_t column) const {
    return columns_.at(column).text.at(row);
  }

  /// Index of the first attribute whose display name is `display_name`, geographic kind only.
  std::optional<std::size_t> geographic(std::string_view display_name) const;

  std::vector<std::size_t> numeric_attributes() const;

 private:
  std::string name_;
  std::vector<AttributeProfile> attributes_;
  std::vector<Column> columns_;
  std::size_t row_count_ = 0;
};

/// Splits camelCase, underscores, hyphens, spaces (and any other non-alphanumeric
/// ASCII) into lowercase words joined by single spaces.
std::string normalize_name(std::string_view raw);

/// Every contiguous word subsequence, longest first, then left to right, deduplicated.
std::vector<std::string> attribute_ngrams(std::string_view display_name);

/// Robust summary of the non-NaN values. Throws StatsError when none remain.
NumericStats compute_stats(std::span<const double> values);

/// True when the normalized name is in the geographic gazetteer.
bool is_geographic_name(std::string_view display_name);

Dataset load_dataset(std::istream& source, std::string name);
Dataset load_dataset(std::string_view csv_text, std::string name);
Dataset load_dataset_file(const std::filesystem::path& path);

}  // namespace sentifiers
