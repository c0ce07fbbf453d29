#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "sentifiers/dataset.hpp"
#include "sentifiers/sentiment.hpp"

namespace sentifiers {

enum class RangeProvenance { statistical, domain_knowledge, user_override };

std::string_view to_string(RangeProvenance p);

struct FilterRange {
  std::string attribute;  // raw attribute name
  double lo = 0.0;
  double hi = 0.0;
  RangeProvenance provenance = RangeProvenance::statistical;
  std::string source_label;
  std::string source_url;
  bool operator==(const FilterRange&) const = default;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Interval&) const = default;
};

struct DomainScale {
  std::string concept_name;  // normalized
  Interval top_range;
  Interval bottom_range;
  std::string source_url;
  std::string label;
  bool operator==(const DomainScale&) const = default;
};

/// Static table of externally sourced thresholds, one scale per concept.
/// File: concept<TAB>bottom_lo<TAB>bottom_hi<TAB>top_lo<TAB>top_hi<TAB>label<TAB>source_url
class DomainRegistry {
 public:
  DomainRegistry() = default;
  /// Throws ConfigError on duplicate concepts or ill-ordered ranges.
  explicit DomainRegistry(std::vector<DomainScale> scales);

  static DomainRegistry load(std::istream& in);
  static DomainRegistry load_file(const std::filesystem::path& path);

  const std::vector<DomainScale>& scales() const { return scales_; }

  /// Rejects datasets where some attribute is matched by two scales at the
  /// same specificity. Called when a dataset is registered with the engine.
  void validate(const Dataset& dataset) const;

 private:
  std::vector<DomainScale> scales_;
};

/// Exact display-name match first, else a concept that is a contiguous word
/// subsequence of the display name, else nullptr.
const DomainScale* lookup_scale(const AttributeProfile& attribute, const DomainRegistry& registry);

/// Top N: [med + MAD, max]; Bottom N: [min, |med - MAD|]; intersected with
/// [min, max]. A scale, when given, replaces the statistics entirely.
/// Throws DegenerateRange when the intersection is empty.
FilterRange resolve(const RangeDirective& directive, std::string_view attribute,
                    const NumericStats& stats, const DomainScale* scale);

struct ResolvedRange {
  FilterRange range;
  bool degenerate = false;
};

/// resolve(), falling back to [med, max] / [min, med] on a degenerate range.
ResolvedRange resolve_with_fallback(const RangeDirective& directive, std::string_view attribute,
                                    const NumericStats& stats, const DomainScale* scale);

}  // namespace sentifiers
