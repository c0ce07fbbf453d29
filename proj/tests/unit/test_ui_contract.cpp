// The payload a thin client renders from: everything it shows must be present
// in the response, so a client can display it without local logic.

#include <doctest.h>

#include "api_schema.hpp"
#include "sentifiers/api_service.hpp"
#include "support.hpp"

using namespace sentifiers;
using nlohmann::json;

namespace {

struct Client {
  ApiService svc{testing::shipped()};
  std::string session;
  int refine_calls = 0;

  explicit Client(const std::string& dataset) {
    svc.register_dataset(*testing::nations());
    svc.register_dataset(*testing::earthquakes());
    session = svc.handle("POST", "/sessions", json{{"dataset", dataset}}.dump()).body["session"];
  }

  json ask(const std::string& utterance) {
    return svc.handle("POST", "/sessions/" + session + "/interpret", json{{"utterance", utterance}}.dump()).body;
  }

  // A slider drag ending at [lo, hi] produces one refine request.
  ApiResponse drag(const json& widget, double lo, double hi) {
    ++refine_calls;
    const double min = widget["bounds"][0], max = widget["bounds"][1];
    return svc.handle("POST", "/sessions/" + session + "/refine",
                      json{{"action", "set_range"},
                           {"attribute", widget["attribute"]},
                           {"lo", std::clamp(lo, min, max)},
                           {"hi", std::clamp(hi, min, max)}}
                          .dump());
  }
};

std::vector<json> widget_segments(const json& payload) {
  std::vector<json> out;
  for (const auto& s : payload["provenance_text"]["segments"]) {
    if (!s["widget"].is_null()) out.push_back(s["widget"]);
  }
  return out;
}

}  // namespace

TEST_CASE("two widgets and their colors for a struggling query") {
  Client c("nations");
  const auto p = c.ask("which countries are struggling?");
  testing::SchemaCheck check;
  check.payload(p);
  CHECK_MESSAGE(!check.failure, check.failure.value_or(""));

  const auto widgets = widget_segments(p);
  REQUIRE(widgets.size() == 2);
  CHECK(widgets == std::vector<json>(p["interpretation"]["widgets"].begin(), p["interpretation"]["widgets"].end()));
  std::set<std::string> colors;
  for (const auto& s : p["provenance_text"]["segments"]) {
    if (!s["color"].is_null()) colors.insert(s["color"].get<std::string>());
  }
  CHECK(colors.contains("red"));
  CHECK(colors.contains("blue"));
}

TEST_CASE("neutral attributes render yellow") {
  Client c("nations");
  c.ask("which countries are struggling?");
  const auto p = c.svc
                     .handle("POST", "/sessions/" + c.session + "/refine",
                             json{{"action", "remove_attribute"}, {"attribute", "lifeExpectancy"}}.dump())
                     .body;
  bool yellow = false;
  for (const auto& s : p["provenance_text"]["segments"]) {
    if (s["text"] == "population") yellow = yellow || s["color"] == "yellow";
  }
  CHECK(yellow);
}

TEST_CASE("the domain link is in the payload") {
  Client c("earthquakes");
  const auto p = c.ask("which country is unsafe");
  std::vector<std::string> links;
  for (const auto& s : p["provenance_text"]["segments"]) {
    if (!s["link"].is_null()) links.push_back(s["link"]);
  }
  REQUIRE(links.size() == 1);
  CHECK(links[0] == p["interpretation"]["filters"][0]["source_url"]);
  CHECK(links[0].rfind("https://", 0) == 0);
}

TEST_CASE("a slider drag is one refine call within the widget bounds") {
  Client c("nations");
  const auto p = c.ask("which countries are booming?");
  const auto widget = widget_segments(p).at(1);
  const double min = widget["bounds"][0], max = widget["bounds"][1];
  const auto r = c.drag(widget, min - 100, (min + max) / 2);
  CHECK(c.refine_calls == 1);
  REQUIRE(r.status == 200);
  const auto& f = r.body["interpretation"]["filters"][1];
  CHECK(f["attribute"] == widget["attribute"]);
  CHECK(f["lo"] == min);
  CHECK(f["hi"] == (min + max) / 2);
  const auto after = widget_segments(r.body).at(1);
  CHECK(after["current"]["provenance"] == "user_override");
  CHECK(after["bounds"] == widget["bounds"]);
}

TEST_CASE("non-numeric attributes expose no widget") {
  Client c("nations");
  const auto p = c.ask("which countries are struggling?");
  for (const auto& w : p["interpretation"]["widgets"]) {
    CHECK(w["attribute"] != "country");
    CHECK(w["kind"] == "range_slider");
  }
  const auto s = c.svc.handle("GET", "/sessions/" + c.session, "").body;
  CHECK(std::find(s["numeric_attributes"].begin(), s["numeric_attributes"].end(), "country") ==
        s["numeric_attributes"].end());
}
