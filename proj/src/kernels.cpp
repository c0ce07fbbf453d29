#include "sentifiers/kernels.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "sentifiers/errors.hpp"

namespace sentifiers::kernels {

namespace {

constexpr double kNull = std::numeric_limits<double>::quiet_NaN();

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool passes(std::span<const ColumnFilter> filters, std::size_t row) {
  for (const auto& f : filters) {
    const double v = f.values[row];
    // NaN compares false on both sides.
    if (!(v >= f.lo && v <= f.hi)) return false;
  }
  return true;
}

std::optional<NumericStats> stats_or_null(std::span<const double> column) {
  for (double v : column) {
    if (!std::isnan(v)) return compute_stats(column);
  }
  return std::nullopt;
}

}  // namespace

std::optional<double> parse_real(std::string_view cell) {
  while (!cell.empty() && is_space(cell.front())) cell.remove_prefix(1);
  while (!cell.empty() && is_space(cell.back())) cell.remove_suffix(1);
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') {
    cell.remove_prefix(1);
    if (cell.empty() || cell.front() == '-' || cell.front() == '+') return std::nullopt;
  }
  double value = 0.0;
  const auto* first = cell.data();
  const auto* last = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) return std::nullopt;
  return value;
}

ParsedColumn parse_column_serial(std::span<const std::string> cells) {
  ParsedColumn out;
  out.values.assign(cells.size(), kNull);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string_view cell = cells[i];
    if (cell.find_first_not_of(" \t\r\n") == std::string_view::npos) continue;
    ++out.non_empty;
    if (auto v = parse_real(cell)) {
      out.values[i] = *v;
      ++out.parsed;
    }
  }
  return out;
}

ParsedColumn parse_column_parallel(std::span<const std::string> cells) {
  ParsedColumn out;
  out.values.assign(cells.size(), kNull);
  std::size_t non_empty = 0;
  std::size_t parsed = 0;
  const auto n = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for reduction(+ : non_empty, parsed) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::string_view cell = cells[static_cast<std::size_t>(i)];
    if (cell.find_first_not_of(" \t\r\n") == std::string_view::npos) continue;
    ++non_empty;
    if (auto v = parse_real(cell)) {
      out.values[static_cast<std::size_t>(i)] = *v;
      ++parsed;
    }
  }
  out.non_empty = non_empty;
  out.parsed = parsed;
  return out;
}

std::vector<std::uint8_t> filter_rows_serial(std::size_t row_count,
                                             std::span<const ColumnFilter> filters) {
  std::vector<std::uint8_t> mask(row_count, 0);
  for (std::size_t row = 0; row < row_count; ++row) {
    mask[row] = passes(filters, row) ? 1 : 0;
  }
  return mask;
}

std::vector<std::uint8_t> filter_rows_parallel(std::size_t row_count,
                                               std::span<const ColumnFilter> filters) {
  std::vector<std::uint8_t> mask(row_count, 0);
  const auto n = static_cast<std::ptrdiff_t>(row_count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t row = 0; row < n; ++row) {
    mask[static_cast<std::size_t>(row)] = passes(filters, static_cast<std::size_t>(row)) ? 1 : 0;
  }
  return mask;
}

std::vector<std::optional<NumericStats>> column_stats_serial(
    std::span<const std::span<const double>> columns) {
  std::vector<std::optional<NumericStats>> out(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) out[c] = stats_or_null(columns[c]);
  return out;
}

std::vector<std::optional<NumericStats>> column_stats_parallel(
    std::span<const std::span<const double>> columns) {
  std::vector<std::optional<NumericStats>> out(columns.size());
  const auto n = static_cast<std::ptrdiff_t>(columns.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < n; ++c) {
    out[static_cast<std::size_t>(c)] = stats_or_null(columns[static_cast<std::size_t>(c)]);
  }
  return out;
}

}  // namespace sentifiers::kernels
