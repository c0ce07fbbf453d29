#include "sentifiers/api_service.hpp"

#include <httplib.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "sentifiers/errors.hpp"
#include "sentifiers/wire.hpp"

namespace sentifiers {

using nlohmann::json;

namespace {

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    if (path.front() == '/') {
      path.remove_prefix(1);
      continue;
    }
    const auto slash = path.find('/');
    parts.push_back(path.substr(0, slash));
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash);
  }
  return parts;
}

ApiError make_error(ApiErrorCode code, int status, std::string message, std::string detail = {}) {
  return ApiError{code, std::move(message), std::move(detail), status};
}

ApiResponse error_response(const ApiError& e) { return {e.status, e.to_json()}; }

json parse_object(std::string_view body) {
  if (body.empty()) throw Error("the request body is empty", "empty body");
  json parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded()) throw Error("the request body is not valid JSON", "json parse error");
  if (!parsed.is_object()) throw Error("the request body must be a JSON object", "body not an object");
  return parsed;
}

std::string required_string(const json& body, const char* field) {
  const auto it = body.find(field);
  if (it == body.end() || !it->is_string() || it->get<std::string>().empty()) {
    throw Error(std::string("field '") + field + "' must be a non-empty string", "missing field");
  }
  return it->get<std::string>();
}

double required_number(const json& body, const char* field) {
  const auto it = body.find(field);
  if (it == body.end() || !it->is_number()) {
    throw Error(std::string("field '") + field + "' must be a number", "missing field");
  }
  return it->get<double>();
}

std::string iso8601(Session::Clock::time_point t) {
  const std::time_t tt = Session::Clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900, tm.tm_mon + 1,
                tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

// Validation failures raised while reading a request, before the engine runs.
bool is_plain_error(const std::exception& e) {
  return typeid(e) == typeid(Error);
}

}  // namespace

std::string_view to_string(ApiErrorCode code) {
  switch (code) {
    case ApiErrorCode::bad_request: return "bad_request";
    case ApiErrorCode::not_found: return "not_found";
    case ApiErrorCode::unintelligible: return "unintelligible";
    case ApiErrorCode::no_cooccurrence: return "no_cooccurrence";
    case ApiErrorCode::not_supported: return "not_supported";
    case ApiErrorCode::refine_error: return "refine_error";
    case ApiErrorCode::conflict: return "conflict";
  }
  return "bad_request";
}

json ApiError::to_json() const {
  return {{"error", {{"code", sentifiers::to_string(code)}, {"message", message}, {"detail", detail}}}};
}

ApiError to_api_error(const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  const std::string message = err && !err->message().empty() ? err->message() : "internal error";
  const std::string detail = err ? err->detail() : e.what();
  if (dynamic_cast<const NotFound*>(&e)) return make_error(ApiErrorCode::not_found, 404, message, detail);
  if (dynamic_cast<const Conflict*>(&e)) return make_error(ApiErrorCode::conflict, 409, message, detail);
  if (dynamic_cast<const UnintelligibleQuery*>(&e)) {
    return make_error(ApiErrorCode::unintelligible, 422, message, detail);
  }
  if (dynamic_cast<const NoCooccurrence*>(&e)) {
    return make_error(ApiErrorCode::no_cooccurrence, 422, message, detail);
  }
  if (dynamic_cast<const NotSupported*>(&e)) return make_error(ApiErrorCode::not_supported, 422, message, detail);
  if (dynamic_cast<const RefineError*>(&e)) return make_error(ApiErrorCode::refine_error, 400, message, detail);
  if (err) return make_error(ApiErrorCode::bad_request, 400, message, detail);
  return make_error(ApiErrorCode::bad_request, 500, "internal error", e.what());
}

ApiService::ApiService(std::shared_ptr<const EngineResources> resources, ApiConfig config)
    : interpreter_(std::move(resources)), config_(std::move(config)), id_rng_(std::random_device{}()) {}

ApiResponse ApiService::handle(std::string_view method, std::string_view path, std::string_view body,
                               std::string_view content_type,
                               const std::map<std::string, std::string>& query) {
  try {
    expire_idle(Session::Clock::now());
    const auto parts = split_path(path.substr(0, path.find('?')));
    const bool get = method == "GET";
    const bool post = method == "POST";
    auto wrong_method = [&] {
      return error_response(make_error(ApiErrorCode::bad_request, 405,
                                       "method " + std::string(method) + " is not allowed here", "bad method"));
    };

    if (parts.size() == 1 && parts[0] == "datasets") {
      if (post) return create_dataset(body, content_type, query);
      if (get) return list_datasets();
      return wrong_method();
    }
    if (parts.size() == 1 && parts[0] == "sessions") {
      if (post) return create_session(parse_object(body));
      return wrong_method();
    }
    if (parts.size() == 2 && parts[0] == "sessions") {
      if (get) return get_session(std::string(parts[1]));
      return wrong_method();
    }
    if (parts.size() == 3 && parts[0] == "sessions" && (parts[2] == "interpret" || parts[2] == "refine")) {
      if (!post) return wrong_method();
      const std::string id(parts[1]);
      // Unknown sessions report not_found before body problems.
      if (!find_session(id)) throw NotFound("session not found", "unknown session " + id);
      const json parsed = parse_object(body);
      return parts[2] == "interpret" ? interpret(id, parsed) : refine(id, parsed);
    }
    return error_response(make_error(ApiErrorCode::not_found, 404, "no such endpoint", std::string(path)));
  } catch (const std::exception& e) {
    if (is_plain_error(e)) {
      const auto& err = static_cast<const Error&>(e);
      return error_response(make_error(ApiErrorCode::bad_request, 400, err.message(), err.detail()));
    }
    return error_response(to_api_error(e));
  }
}

void ApiService::register_dataset(Dataset dataset) {
  interpreter_.resources().registry.validate(dataset);
  std::unique_lock lock(datasets_mutex_);
  const std::string name = dataset.name();
  if (datasets_.contains(name)) throw Conflict("a dataset named '" + name + "' already exists", "duplicate dataset");
  datasets_.emplace(name, std::make_shared<const Dataset>(std::move(dataset)));
}

std::size_t ApiService::expire_idle(Session::Clock::time_point now) {
  std::lock_guard lock(sessions_mutex_);
  return std::erase_if(sessions_, [&](const auto& entry) {
    std::lock_guard session_lock(entry.second->mutex());
    return now - entry.second->last_active() > config_.session_ttl;
  });
}

std::size_t ApiService::session_count() const {
  std::lock_guard lock(sessions_mutex_);
  return sessions_.size();
}

ApiResponse ApiService::create_dataset(std::string_view body, std::string_view content_type,
                                       const std::map<std::string, std::string>& query) {
  std::string name;
  std::string csv;
  if (content_type.starts_with("text/csv")) {
    const auto it = query.find("name");
    if (it == query.end() || it->second.empty()) throw Error("query parameter 'name' is required", "missing name");
    name = it->second;
    csv = std::string(body);
  } else {
    const json parsed = parse_object(body);
    name = required_string(parsed, "name");
    csv = required_string(parsed, "csv");
  }
  if (csv.empty()) throw Error("the CSV body is empty", "empty csv");
  register_dataset(load_dataset(std::string_view(csv), name));
  std::shared_lock lock(datasets_mutex_);
  return {201, wire::dataset_descriptor(*datasets_.at(name))};
}

ApiResponse ApiService::list_datasets() const {
  std::shared_lock lock(datasets_mutex_);
  json out = json::array();
  for (const auto& [name, d] : datasets_) out.push_back(wire::dataset_descriptor(*d));
  return {200, {{"datasets", out}}};
}

std::string ApiService::new_session_id() {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(id_rng_()),
                static_cast<unsigned long long>(id_rng_()));
  return buf;
}

ApiResponse ApiService::create_session(const json& body) {
  const std::string dataset_name = required_string(body, "dataset");
  std::shared_ptr<const Dataset> dataset;
  {
    std::shared_lock lock(datasets_mutex_);
    const auto it = datasets_.find(dataset_name);
    if (it == datasets_.end()) throw NotFound("dataset '" + dataset_name + "' is not loaded", "unknown dataset");
    dataset = it->second;
  }
  std::lock_guard lock(sessions_mutex_);
  std::string id = new_session_id();
  while (sessions_.contains(id)) id = new_session_id();
  sessions_.emplace(id, std::make_shared<Session>(id, std::move(dataset)));
  return {201, {{"session", id}, {"dataset", dataset_name}}};
}

std::shared_ptr<Session> ApiService::find_session(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

ApiResponse ApiService::get_session(const std::string& id) {
  const auto session = find_session(id);
  if (!session) throw NotFound("session not found", "unknown session " + id);
  std::lock_guard lock(session->mutex());
  session->touch();
  json events = json::array();
  for (const auto& e : session->events()) events.push_back(wire::to_json(e));
  json active = json::array();
  if (session->last()) {
    for (const auto& a : session->last()->active()) active.push_back(a);
  }
  json numeric = json::array();
  for (std::size_t idx : session->dataset().numeric_attributes()) {
    numeric.push_back(session->dataset().attribute(idx).raw_name);
  }
  return {200,
          {{"session", session->id()},
           {"dataset", session->dataset().name()},
           {"numeric_attributes", numeric},
           {"state", wire::to_json(session->state())},
           {"active", active},
           {"events", events},
           {"created_at", iso8601(session->created_at())},
           {"last_active", iso8601(session->last_active())},
           {"last", session->last() ? wire::response_payload(*session->last(), session->dataset())
                                    : json(nullptr)}}};
}

ApiResponse ApiService::interpret(const std::string& id, const json& body) {
  const std::string utterance = required_string(body, "utterance");
  const auto session = find_session(id);
  if (!session) throw NotFound("session not found", "unknown session " + id);
  std::lock_guard lock(session->mutex());
  session->touch();
  const auto result = interpreter_.interpret(utterance, *session);
  return {200, wire::response_payload(result, session->dataset())};
}

ApiResponse ApiService::refine(const std::string& id, const json& body) {
  const std::string action = required_string(body, "action");
  const std::string attribute = required_string(body, "attribute");
  const auto session = find_session(id);
  if (!session) throw NotFound("session not found", "unknown session " + id);
  std::lock_guard lock(session->mutex());
  session->touch();
  Interpretation result;
  if (action == "set_range") {
    const double lo = required_number(body, "lo");
    const double hi = required_number(body, "hi");
    result = interpreter_.refine_range(*session, attribute, lo, hi);
  } else if (action == "add_attribute") {
    result = interpreter_.add_attribute(*session, attribute);
  } else if (action == "remove_attribute") {
    result = interpreter_.remove_attribute(*session, attribute);
  } else {
    throw Error("unknown refine action '" + action + "'", "expected set_range, add_attribute or remove_attribute");
  }
  return {200, wire::response_payload(result, session->dataset())};
}

void ApiService::bind(httplib::Server& server) {
  const std::string origin = config_.cors_origin;
  auto forward = [this, origin](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const auto out = handle(req.method, req.path, req.body, req.get_header_value("Content-Type"), query);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
  };
  server.set_default_headers({{"Access-Control-Allow-Origin", origin},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Get(".*", forward);
  server.Post(".*", forward);
  server.Put(".*", forward);
  server.Delete(".*", forward);
  server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

}  // namespace sentifiers
