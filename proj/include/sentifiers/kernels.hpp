#pragma once

// Data-parallel inner loops of the engine. Each kernel has a serial reference
// (kept as the test oracle) and an OpenMP version used in production paths.
// Both produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentifiers/dataset.hpp"

namespace sentifiers::kernels {

/// Strict real-number parse: optional sign, whole cell consumed, finite only.
/// Surrounding ASCII whitespace is ignored.
std::optional<double> parse_real(std::string_view cell);

struct ParsedColumn {
  std::vector<double> values;  // NaN where empty or unparseable
  std::size_t non_empty = 0;
  std::size_t parsed = 0;
};

ParsedColumn parse_column_serial(std::span<const std::string> cells);
ParsedColumn parse_column_parallel(std::span<const std::string> cells);

/// Inclusive range predicate over one numeric column. NaN never passes.
struct ColumnFilter {
  std::span<const double> values;
  double lo = 0.0;
  double hi = 0.0;
};

/// Row mask (1 = row passes every filter). With no filters every row passes.
std::vector<std::uint8_t> filter_rows_serial(std::size_t row_count,
                                             std::span<const ColumnFilter> filters);
std::vector<std::uint8_t> filter_rows_parallel(std::size_t row_count,
                                               std::span<const ColumnFilter> filters);

/// Stats for many columns at once; nullopt for all-null columns.
std::vector<std::optional<NumericStats>> column_stats_serial(
    std::span<const std::span<const double>> columns);
std::vector<std::optional<NumericStats>> column_stats_parallel(
    std::span<const std::span<const double>> columns);

}  // namespace sentifiers::kernels
