#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sentifiers/dataset.hpp"
#include "sentifiers/interpreter.hpp"

namespace testing {

inline std::filesystem::path data_dir() { return SENTIFIERS_DATA_DIR; }
inline std::filesystem::path test_dir() { return SENTIFIERS_TEST_DIR; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::shared_ptr<const sentifiers::EngineResources> shipped() {
  static const auto res = sentifiers::load_resources(sentifiers::ResourcePaths::shipped(data_dir()));
  return res;
}

inline std::shared_ptr<const sentifiers::Dataset> fixture(const std::string& name) {
  return std::make_shared<const sentifiers::Dataset>(
      sentifiers::load_dataset_file(data_dir() / "datasets" / (name + ".csv")));
}

inline std::shared_ptr<const sentifiers::Dataset> nations() {
  static const auto d = fixture("nations");
  return d;
}

inline std::shared_ptr<const sentifiers::Dataset> earthquakes() {
  static const auto d = fixture("earthquakes");
  return d;
}

// Sort-based median: the textbook definition, no selection algorithms.
inline double oracle_median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

inline double oracle_mad(const std::vector<double>& v) {
  const double med = oracle_median(v);
  std::vector<double> dev;
  for (double x : v) dev.push_back(std::fabs(x - med));
  return oracle_median(dev);
}

// ln(p(a,b) / (p(a) p(b))) straight from the counts.
inline double oracle_pmi(double count_a, double count_b, double pair, double total_terms, double total_pairs) {
  const double pa = count_a / total_terms;
  const double pb = count_b / total_terms;
  const double pab = pair / total_pairs;
  return std::log(pab / (pa * pb));
}

inline bool rel_close(double a, double b, double rel) {
  if (a == b) return true;
  return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace testing
