#include "sentifiers/visspec.hpp"

#include <algorithm>
#include <cmath>

#include "sentifiers/kernels.hpp"
#include "sentifiers/text.hpp"

namespace sentifiers {

namespace {

void add_column(std::vector<std::string>& columns, const std::string& name) {
  if (std::find(columns.begin(), columns.end(), name) == columns.end()) columns.push_back(name);
}

ChartCell cell_at(const Dataset& dataset, std::size_t row, std::size_t column) {
  const auto& attr = dataset.attribute(column);
  const double v = dataset.numbers(column)[row];
  if (attr.kind != AttributeKind::categorical && !std::isnan(v)) return v;
  if (attr.kind == AttributeKind::numeric) return std::monostate{};
  const std::string& text = dataset.text(row, column);
  if (text.empty()) return std::monostate{};
  return text;
}

std::string directive_phrase(const AttributeVerdict& v) {
  if (!v.directive) return "";
  return v.directive->kind == DirectiveKind::top_n ? " (higher values)" : " (lower values)";
}

}  // namespace

std::string_view to_string(ChartMark m) {
  switch (m) {
    case ChartMark::point_map: return "point_map";
    case ChartMark::scatter: return "scatter";
    case ChartMark::histogram: return "histogram";
  }
  return "histogram";
}

std::string_view to_string(SegmentSentiment s) {
  switch (s) {
    case SegmentSentiment::positive: return "positive";
    case SegmentSentiment::negative: return "negative";
    case SegmentSentiment::neutral: return "neutral";
  }
  return "neutral";
}

std::string_view color_of(SegmentSentiment s) {
  switch (s) {
    case SegmentSentiment::positive: return "blue";
    case SegmentSentiment::negative: return "red";
    case SegmentSentiment::neutral: return "yellow";
  }
  return "yellow";
}

SegmentSentiment segment_sentiment(SentimentClass c) {
  switch (c) {
    case SentimentClass::very_positive:
    case SentimentClass::positive: return SegmentSentiment::positive;
    case SentimentClass::very_negative:
    case SentimentClass::negative: return SegmentSentiment::negative;
    case SentimentClass::neutral: return SegmentSentiment::neutral;
  }
  return SegmentSentiment::neutral;
}

std::vector<std::size_t> matching_rows(const Dataset& dataset, const std::vector<FilterRange>& filters) {
  std::vector<kernels::ColumnFilter> predicates;
  for (const auto& f : filters) {
    const auto idx = dataset.index_of(f.attribute);
    if (!idx) continue;
    predicates.push_back({dataset.numbers(*idx), f.lo, f.hi});
  }
  const auto mask = kernels::filter_rows_parallel(dataset.row_count(), predicates);
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < mask.size(); ++r) {
    if (mask[r]) rows.push_back(r);
  }
  return rows;
}

ChartSpec choose_chart(const Interpretation& interpretation, const Dataset& dataset) {
  ChartSpec spec;
  spec.data_filter = interpretation.filters;
  spec.title = interpretation.query.utterance;
  const auto active = interpretation.active();

  const auto lat = dataset.geographic("latitude");
  const auto lon = dataset.geographic("longitude");
  std::optional<std::size_t> place;
  for (std::size_t i = 0; i < dataset.attributes().size(); ++i) {
    const auto& a = dataset.attribute(i);
    if (a.kind == AttributeKind::geographic && a.display_name != "latitude" && a.display_name != "longitude") {
      place = i;
      break;
    }
  }

  if (lat && lon) {
    spec.mark = ChartMark::point_map;
    spec.encodings["x"] = dataset.attribute(*lon).raw_name;
    spec.encodings["y"] = dataset.attribute(*lat).raw_name;
    if (place) spec.encodings["geo"] = dataset.attribute(*place).raw_name;
    if (!active.empty()) spec.encodings["tooltip"] = active.front();
  } else if (active.size() >= 2) {
    spec.mark = ChartMark::scatter;
    spec.encodings["x"] = active[0];
    spec.encodings["y"] = active[1];
    if (place) spec.encodings["tooltip"] = dataset.attribute(*place).raw_name;
  } else {
    spec.mark = ChartMark::histogram;
    if (!active.empty()) {
      spec.encodings["x"] = active.front();
    } else {
      const auto numeric = dataset.numeric_attributes();
      if (!numeric.empty()) {
        const auto& first = dataset.attribute(numeric.front());
        spec.encodings["x"] = first.raw_name;
        spec.title = "No attribute selected: distribution of " + first.display_name;
      } else {
        spec.title = "No numeric attribute to show";
      }
      spec.warnings.push_back("no active attributes");
    }
    if (place) spec.encodings["tooltip"] = dataset.attribute(*place).raw_name;
  }

  for (const char* channel : {"x", "y", "geo", "tooltip"}) {
    if (const auto it = spec.encodings.find(channel); it != spec.encodings.end()) add_column(spec.columns, it->second);
  }
  for (const auto& f : spec.data_filter) add_column(spec.columns, f.attribute);

  auto rows = matching_rows(dataset, spec.data_filter);
  spec.matched_rows = rows.size();
  if (rows.size() > kMaxInlineRows) {
    std::vector<std::size_t> sample(kMaxInlineRows);
    for (std::size_t k = 0; k < kMaxInlineRows; ++k) sample[k] = rows[k * rows.size() / kMaxInlineRows];
    rows = std::move(sample);
    spec.sampled = true;
    spec.warnings.push_back("showing a uniform sample of " + std::to_string(kMaxInlineRows) + " of " +
                            std::to_string(spec.matched_rows) + " matching rows");
  }

  std::vector<std::size_t> column_idx;
  for (const auto& c : spec.columns) column_idx.push_back(*dataset.index_of(c));
  spec.rows.reserve(rows.size());
  for (std::size_t r : rows) {
    std::vector<ChartCell> cells;
    cells.reserve(column_idx.size());
    for (std::size_t c : column_idx) cells.push_back(cell_at(dataset, r, c));
    spec.rows.push_back(std::move(cells));
  }
  return spec;
}

ProvenanceText build_provenance(const Interpretation& interpretation) {
  ProvenanceText out;
  auto plain = [&](std::string text) {
    if (!text.empty()) out.segments.push_back({std::move(text), {}, {}, {}});
  };

  const auto& modifier = interpretation.query.modifier;
  if (modifier && interpretation.modifier_verdict) {
    plain("Interpreted ");
    out.segments.push_back({(modifier->negated ? "not " : "") + modifier->token.text,
                            segment_sentiment(interpretation.modifier_verdict->klass), {}, {}});
    plain(interpretation.verdicts.empty() ? "" : " as ");
  } else {
    plain(interpretation.verdicts.empty() ? "" : "Showing ");
  }

  std::size_t widget_count = 0;
  for (std::size_t i = 0; i < interpretation.verdicts.size(); ++i) {
    const auto& v = interpretation.verdicts[i];
    const auto& f = interpretation.filters[i];
    const auto widget = std::find_if(interpretation.widgets.begin(), interpretation.widgets.end(),
                                     [&](const WidgetSpec& w) { return w.attribute == v.attribute; });
    if (widget != interpretation.widgets.end() && widget_count < kMaxWidgets) {
      if (widget_count > 0) plain(" and ");
      std::optional<SegmentSentiment> sentiment;
      if (v.directive) sentiment = segment_sentiment(v.directive->attribute_verdict.klass);
      out.segments.push_back({v.display_name, sentiment, {}, {}});
      plain(" in ");
      out.segments.push_back({format_range(f.lo, f.hi), {}, *widget, {}});
      plain(f.provenance == RangeProvenance::user_override ? " (set by you)" : directive_phrase(v));
      if (f.provenance == RangeProvenance::domain_knowledge) {
        plain(" based on ");
        out.segments.push_back({f.source_label, {}, {}, f.source_url});
        plain(" (configured default thresholds)");
      }
      ++widget_count;
    } else {
      plain("; also filtering " + v.display_name + " to " + format_range(f.lo, f.hi) + directive_phrase(v));
    }
  }
  if (!interpretation.verdicts.empty()) plain(".");

  std::vector<std::string> others;
  const auto active = interpretation.active();
  for (const auto& s : interpretation.scored) {
    if (std::find(active.begin(), active.end(), s.attribute) == active.end()) others.push_back(s.attribute);
  }
  if (!others.empty()) {
    std::string text = " Other related attributes: ";
    for (std::size_t i = 0; i < others.size(); ++i) text += (i ? ", " : "") + others[i];
    plain(text + ".");
  }
  for (const auto& w : interpretation.warnings) plain(" Note: " + w + ".");
  return out;
}

}  // namespace sentifiers
