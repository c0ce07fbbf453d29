#pragma once

// Random request generator over the API surface: valid calls mixed with
// malformed bodies, unknown ids, wrong methods and bad field types.

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "api_schema.hpp"
#include "sentifiers/api_service.hpp"

namespace testing {

struct FuzzRequest {
  std::string method;
  std::string path;
  std::string body;
  std::string content_type = "application/json";
  std::map<std::string, std::string> query;
};

struct FuzzOutcome {
  std::size_t requests = 0;
  std::size_t successes = 0;
  std::size_t errors = 0;
  std::size_t server_errors = 0;
  std::vector<std::string> failures;
};

class ApiFuzzer {
 public:
  explicit ApiFuzzer(std::uint64_t seed) : rng_(seed) {}

  FuzzOutcome run(sentifiers::ApiService& svc, std::size_t n) {
    FuzzOutcome out;
    for (std::size_t i = 0; i < n; ++i) {
      const auto req = next();
      const auto r = svc.handle(req.method, req.path, req.body, req.content_type, req.query);
      ++out.requests;
      if (r.status >= 500) ++out.server_errors;
      (r.status < 400 ? out.successes : out.errors)++;
      if (const auto failure = validate_response(req.method, req.path, r)) {
        out.failures.push_back(req.method + " " + req.path + " " + req.body + ": " + *failure);
      }
      if (req.path == "/sessions" && r.status == 201) sessions_.push_back(r.body["session"].get<std::string>());
    }
    return out;
  }

 private:
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[rng_() % v.size()];
  }

  std::string session_id() {
    if (sessions_.empty() || rng_() % 8 == 0) return pick<std::string>({"nope", "00000000000000000000000000000000", ""});
    return pick(sessions_);
  }

  nlohmann::json number_or_junk() {
    switch (rng_() % 6) {
      case 0: return "12";
      case 1: return nullptr;
      default: return std::uniform_real_distribution<double>(-100, 1e5)(rng_);
    }
  }

  std::string junk_body() {
    return pick<std::string>({"", "{", "[]", "42", "\"str\"", "{\"utterance\": 5}", "null", "{}", "{\"a\":}"});
  }

  FuzzRequest next() {
    using nlohmann::json;
    static const std::vector<std::string> utterances{
        "which countries are struggling?", "which countries are booming?", "which country is unsafe",
        "earthquakes that are not unsafe", "show me safe places",         "asdf qwerty",
        "largest earthquakes",             "",                            "which states are struggling",
        "show income per capita",          "very very prosperous nations", "not not unsafe"};
    static const std::vector<std::string> attributes{
        "incomePerCapita", "lifeExpectancy", "population", "country", "earthquake_magnitude",
        "depth",           "latitude",       "state",      "gdp",     ""};
    static const std::vector<std::string> actions{"set_range", "add_attribute", "remove_attribute", "fly", ""};

    FuzzRequest r;
    switch (rng_() % 9) {
      case 0:
        r.method = "POST";
        r.path = "/sessions";
        r.body = json{{"dataset", pick<std::string>({"nations", "earthquakes", "mars", ""})}}.dump();
        break;
      case 1:
      case 2:
        r.method = "POST";
        r.path = "/sessions/" + session_id() + "/interpret";
        r.body = json{{"utterance", pick(utterances)}}.dump();
        break;
      case 3:
      case 4: {
        r.method = "POST";
        r.path = "/sessions/" + session_id() + "/refine";
        json b{{"action", pick(actions)}, {"attribute", pick(attributes)}};
        if (rng_() % 4) {
          const auto lo = number_or_junk();
          b["lo"] = lo;
          b["hi"] = lo.is_number() && rng_() % 3 ? json(lo.get<double>() + (rng_() % 1000)) : number_or_junk();
        }
        r.body = b.dump();
        break;
      }
      case 5:
        r.method = "GET";
        r.path = rng_() % 2 ? "/sessions/" + session_id() : "/datasets";
        break;
      case 6:
        r.method = "POST";
        r.path = "/datasets";
        if (rng_() % 2) {
          r.content_type = "text/csv";
          if (rng_() % 4) r.query["name"] = "up" + std::to_string(rng_() % 20);
          r.body = pick<std::string>({"a,b\n1,2\n", "a,b\n1\n", "", "x\n", "name,score\nParis,3\nRome,\n"});
        } else {
          r.body = json{{"name", "up" + std::to_string(rng_() % 20)},
                        {"csv", pick<std::string>({"a,b\n1,2\n", "a,a\n1,2\n", "", "\"unterminated\n"})}}
                       .dump();
        }
        break;
      case 7:
        r.method = pick<std::string>({"GET", "PUT", "DELETE", "POST"});
        r.path = pick<std::string>({"/", "/nothing", "/sessions", "/datasets/x", "/sessions/" + session_id() + "/x",
                                    "/sessions/" + session_id() + "/interpret"});
        r.body = rng_() % 2 ? junk_body() : "";
        break;
      default:
        r.method = "POST";
        r.path = pick<std::string>({"/sessions", "/datasets", "/sessions/" + session_id() + "/interpret",
                                    "/sessions/" + session_id() + "/refine"});
        r.body = junk_body();
        break;
    }
    return r;
  }

  std::mt19937_64 rng_;
  std::vector<std::string> sessions_;
};

}  // namespace testing
