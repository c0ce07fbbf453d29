#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "sentifiers/dataset.hpp"
#include "sentifiers/errors.hpp"
#include "support.hpp"

using namespace sentifiers;

namespace {
const double kNaN = std::numeric_limits<double>::quiet_NaN();
}

TEST_CASE("normalize_name") {
  CHECK(normalize_name("incomePerCapita") == "income per capita");
  CHECK(normalize_name("population") == "population");
  CHECK(normalize_name("earthquake_magnitude") == "earthquake magnitude");
  CHECK(normalize_name("life-expectancy") == "life expectancy");
  CHECK(normalize_name("  GDP  per   Capita ") == "gdp per capita");
  CHECK(normalize_name("GDPPerCapita") == "gdp per capita");
  CHECK(normalize_name("CO2Emissions") == "co2 emissions");
  CHECK(normalize_name("LifeExpectancy") == "life expectancy");
}

TEST_CASE("attribute_ngrams") {
  CHECK(attribute_ngrams("income per capita") ==
        std::vector<std::string>{"income per capita", "income per", "per capita", "income", "per", "capita"});
  CHECK(attribute_ngrams("population") == std::vector<std::string>{"population"});
  CHECK(attribute_ngrams("life expectancy") == std::vector<std::string>{"life expectancy", "life", "expectancy"});
  CHECK(attribute_ngrams("per capita per") ==
        std::vector<std::string>{"per capita per", "per capita", "capita per", "per", "capita"});
}

TEST_CASE("attribute_ngrams has w(w+1)/2 entries for distinct words") {
  const std::vector<std::string> words{"a", "b", "c", "d", "e", "f", "g"};
  std::string name;
  for (std::size_t w = 1; w <= words.size(); ++w) {
    name += (w > 1 ? " " : "") + words[w - 1];
    const auto grams = attribute_ngrams(name);
    CHECK(grams.size() == w * (w + 1) / 2);
    for (std::size_t i = 1; i < grams.size(); ++i) {
      const auto count = [](const std::string& s) { return std::count(s.begin(), s.end(), ' '); };
      CHECK(count(grams[i - 1]) >= count(grams[i]));
    }
  }
}

TEST_CASE("compute_stats examples") {
  const std::vector<double> a{1, 2, 3, 4, 5};
  const auto s = compute_stats(a);
  CHECK(s.min == 1);
  CHECK(s.max == 5);
  CHECK(s.median == 3);
  CHECK(s.mad == 1);
  CHECK(s.count == 5);
  CHECK(s.null_count == 0);

  const std::vector<double> b{7, 7, 7};
  CHECK(compute_stats(b).median == 7);
  CHECK(compute_stats(b).mad == 0);

  const std::vector<double> c{1, 1, 2, 2, 4, 6, 9};
  CHECK(compute_stats(c).median == 2);
  CHECK(compute_stats(c).mad == 1);

  const std::vector<double> even{4, 1, 3, 2};
  CHECK(compute_stats(even).median == 2.5);
  CHECK(compute_stats(even).mad == 1);
}

TEST_CASE("compute_stats skips nulls and rejects all-null input") {
  const std::vector<double> v{kNaN, 3, kNaN, 1, 2};
  const auto s = compute_stats(v);
  CHECK(s.count == 3);
  CHECK(s.null_count == 2);
  CHECK(s.median == 2);
  const std::vector<double> nulls{kNaN, kNaN};
  CHECK_THROWS_AS(compute_stats(nulls), StatsError);
  CHECK_THROWS_AS(compute_stats(std::vector<double>{}), StatsError);
}

TEST_CASE("compute_stats matches the sort oracle, is order independent and scales") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(1, 300);
  std::uniform_int_distribution<int> small(-20, 20);
  std::normal_distribution<double> wide(0.0, 1e4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> v(len(rng));
    for (auto& x : v) x = trial % 2 ? small(rng) : wide(rng);
    const auto s = compute_stats(v);
    CHECK(s.median == testing::oracle_median(v));
    CHECK(s.mad == testing::oracle_mad(v));
    CHECK(s.min == *std::min_element(v.begin(), v.end()));
    CHECK(s.max == *std::max_element(v.begin(), v.end()));
    CHECK(s.mad >= 0);
    CHECK(s.min <= s.median);
    CHECK(s.median <= s.max);

    auto shuffled = v;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(compute_stats(shuffled) == s);

    // Powers of two keep every product exact.
    for (double c : {0.25, 2.0, 1024.0}) {
      auto scaled = v;
      for (auto& x : scaled) x *= c;
      const auto t = compute_stats(scaled);
      CHECK(t.min == s.min * c);
      CHECK(t.max == s.max * c);
      CHECK(t.median == s.median * c);
      CHECK(t.mad == s.mad * c);
    }
    const double c = 3.7;
    auto scaled = v;
    for (auto& x : scaled) x *= c;
    const auto t = compute_stats(scaled);
    CHECK(testing::rel_close(t.median, s.median * c, 1e-14));
    CHECK(testing::rel_close(t.mad, s.mad * c, 1e-13));
  }
}

TEST_CASE("load_dataset infers kinds") {
  const auto d = load_dataset(std::string_view("country,incomePerCapita,lifeExpectancy\nNorway,64800,82.3\nChad,1900,54.2\n"),
                              "mini");
  REQUIRE(d.attributes().size() == 3);
  CHECK(d.attribute(0).kind == AttributeKind::geographic);
  CHECK(d.attribute(1).kind == AttributeKind::numeric);
  CHECK(d.attribute(2).kind == AttributeKind::numeric);
  CHECK(d.attribute(1).display_name == "income per capita");
  CHECK_FALSE(d.attribute(0).stats.has_value());
  REQUIRE(d.attribute(1).stats.has_value());
  CHECK(d.attribute(1).stats->median == (64800.0 + 1900.0) / 2);
  CHECK(d.row_count() == 2);
}

TEST_CASE("single numeric column") {
  const auto d = load_dataset(std::string_view("x\n1\n2\n3\n"), "x");
  REQUIRE(d.attributes().size() == 1);
  CHECK(d.attribute(0).kind == AttributeKind::numeric);
  CHECK(d.attribute(0).stats->count == 3);
}

TEST_CASE("95 percent numeric threshold") {
  std::string exact = "v\n";
  for (int i = 1; i <= 20; ++i) exact += (i == 3 ? std::string("abc") : std::to_string(i)) + "\n";
  const auto d = load_dataset(std::string_view(exact), "t");
  CHECK(d.attribute(0).kind == AttributeKind::numeric);
  CHECK(d.attribute(0).stats->count == 19);
  CHECK(d.attribute(0).stats->null_count == 1);
  CHECK(std::isnan(d.numbers(0)[2]));
  CHECK(d.text(2, 0) == "abc");

  std::string under = "v\n";
  for (int i = 1; i <= 20; ++i) under += (i <= 2 ? std::string("n/a") : std::to_string(i)) + "\n";
  CHECK(load_dataset(std::string_view(under), "t").attribute(0).kind == AttributeKind::categorical);
}

TEST_CASE("empty cells count as nulls, not as parse failures") {
  const auto d = load_dataset(std::string_view("a,v\nx,1\ny,\nz,3\n"), "t");
  CHECK(d.attribute(1).kind == AttributeKind::numeric);
  CHECK(d.attribute(1).stats->count == 2);
  CHECK(d.attribute(1).stats->null_count == 1);
}

TEST_CASE("geographic gazetteer") {
  for (const char* name : {"latitude", "longitude", "country", "state", "city", "zip"}) {
    CHECK(is_geographic_name(name));
  }
  CHECK_FALSE(is_geographic_name("population"));
  const auto d = load_dataset(std::string_view("Latitude,zip,place\n1.5,90210,x\n"), "g");
  CHECK(d.attribute(0).kind == AttributeKind::geographic);
  CHECK(d.attribute(1).kind == AttributeKind::geographic);
  CHECK(d.attribute(2).kind == AttributeKind::categorical);
  CHECK(d.geographic("latitude") == 0);
  CHECK_FALSE(d.geographic("longitude").has_value());
}

TEST_CASE("load errors") {
  CHECK_THROWS_AS(load_dataset(std::string_view(""), "e"), IngestError);
  CHECK_THROWS_AS(load_dataset(std::string_view("a,b\n1\n"), "e"), IngestError);
  CHECK_THROWS_AS(load_dataset(std::string_view("incomePerCapita,income_per_capita\n1,2\n"), "e"), SchemaError);
  CHECK_THROWS_AS(load_dataset(std::string_view("a,__\n1,2\n"), "e"), SchemaError);
  CHECK_THROWS_AS(load_dataset_file(testing::data_dir() / "missing.csv"), IngestError);
}

TEST_CASE("every row has a slot for every attribute") {
  const auto d = testing::nations();
  for (std::size_t c = 0; c < d->attributes().size(); ++c) CHECK(d->numbers(c).size() == d->row_count());
}

TEST_CASE("attribute lookup by raw, display and loose names") {
  const auto d = testing::nations();
  CHECK(d->name() == "nations");
  CHECK(d->index_of("incomePerCapita") == 1);
  CHECK(d->index_of("income per capita") == 1);
  CHECK(d->index_of("Income_Per_Capita") == 1);
  CHECK_FALSE(d->index_of("gdp").has_value());
  CHECK(d->numeric_attributes() == std::vector<std::size_t>{1, 2, 3});
}
