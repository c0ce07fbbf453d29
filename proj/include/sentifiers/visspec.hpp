#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sentifiers/dataset.hpp"
#include "sentifiers/interpreter.hpp"

namespace sentifiers {

enum class ChartMark { point_map, scatter, histogram };

std::string_view to_string(ChartMark m);

using ChartCell = std::variant<std::monostate, double, std::string>;

inline constexpr std::size_t kMaxInlineRows = 10'000;

struct ChartSpec {
  ChartMark mark = ChartMark::histogram;
  std::map<std::string, std::string> encodings;  // channel (x, y, geo, tooltip) -> raw attribute
  std::vector<FilterRange> data_filter;
  std::string title;
  std::vector<std::string> columns;          // raw attribute names of the inline rows
  std::vector<std::vector<ChartCell>> rows;  // rows passing every filter (sampled above kMaxInlineRows)
  std::size_t matched_rows = 0;
  bool sampled = false;
  std::vector<std::string> warnings;
  bool operator==(const ChartSpec&) const = default;
};

/// Sentiment as rendered: strength collapsed, blue / red / yellow.
enum class SegmentSentiment { positive, negative, neutral };

std::string_view to_string(SegmentSentiment s);
std::string_view color_of(SegmentSentiment s);
SegmentSentiment segment_sentiment(SentimentClass c);

struct ProvenanceSegment {
  std::string text;
  std::optional<SegmentSentiment> sentiment;
  std::optional<WidgetSpec> widget;
  std::optional<std::string> link;
  bool operator==(const ProvenanceSegment&) const = default;
};

struct ProvenanceText {
  std::vector<ProvenanceSegment> segments;
  bool operator==(const ProvenanceText&) const = default;
};

/// Point map when the dataset has latitude and longitude, else scatter for two
/// or more active attributes, else histogram.
ChartSpec choose_chart(const Interpretation& interpretation, const Dataset& dataset);

ProvenanceText build_provenance(const Interpretation& interpretation);

/// Indices of rows passing every filter (inclusive bounds, nulls fail).
std::vector<std::size_t> matching_rows(const Dataset& dataset, const std::vector<FilterRange>& filters);

}  // namespace sentifiers
