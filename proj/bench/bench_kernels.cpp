#include <benchmark/benchmark.h>

#include <random>

#include "sentifiers/kernels.hpp"

using namespace sentifiers;

namespace {

std::vector<std::string> make_cells(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  std::vector<std::string> cells(n);
  for (std::size_t i = 0; i < n; ++i) cells[i] = i % 97 == 0 ? "" : std::to_string(u(rng));
  return cells;
}

std::vector<double> make_values(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0, 1);
  std::vector<double> v(n);
  for (auto& x : v) x = g(rng);
  return v;
}

template <kernels::ParsedColumn (*Fn)(std::span<const std::string>)>
void BM_parse(benchmark::State& state) {
  const auto cells = make_cells(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(cells));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <std::vector<std::uint8_t> (*Fn)(std::size_t, std::span<const kernels::ColumnFilter>)>
void BM_filter(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = make_values(n, 1), b = make_values(n, 2), c = make_values(n, 3);
  const std::vector<kernels::ColumnFilter> filters{{a, -0.5, 2.0}, {b, -1.0, 1.0}, {c, 0.0, 3.0}};
  for (auto _ : state) benchmark::DoNotOptimize(Fn(n, filters));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <std::vector<std::optional<NumericStats>> (*Fn)(std::span<const std::span<const double>>)>
void BM_stats(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<double>> cols;
  for (std::uint64_t s = 0; s < 8; ++s) cols.push_back(make_values(n, s));
  std::vector<std::span<const double>> spans(cols.begin(), cols.end());
  for (auto _ : state) benchmark::DoNotOptimize(Fn(spans));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 8);
}

}  // namespace

BENCHMARK(BM_parse<kernels::parse_column_serial>)->Name("parse/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_parse<kernels::parse_column_parallel>)->Name("parse/parallel")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_filter<kernels::filter_rows_serial>)->Name("filter/serial")->Range(1 << 12, 1 << 22);
BENCHMARK(BM_filter<kernels::filter_rows_parallel>)->Name("filter/parallel")->Range(1 << 12, 1 << 22);
BENCHMARK(BM_stats<kernels::column_stats_serial>)->Name("stats/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_stats<kernels::column_stats_parallel>)->Name("stats/parallel")->Range(1 << 12, 1 << 20);

BENCHMARK_MAIN();
