#pragma once

#include <chrono>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sentifiers/dataset.hpp"
#include "sentifiers/interpreter.hpp"

namespace httplib {
class Server;
}

namespace sentifiers {

enum class ApiErrorCode { bad_request, not_found, unintelligible, no_cooccurrence, not_supported, refine_error, conflict };

std::string_view to_string(ApiErrorCode code);

struct ApiError {
  ApiErrorCode code = ApiErrorCode::bad_request;
  std::string message;
  std::string detail;
  int status = 400;

  nlohmann::json to_json() const;
};

/// Maps any engine exception onto the wire error; unknown exceptions become a 500.
ApiError to_api_error(const std::exception& e);

struct ApiConfig {
  std::chrono::minutes session_ttl{60};
  std::string cors_origin = "*";
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

// Transport-independent request handling; bind() mounts it on an httplib server.
//
//   POST /datasets                 {"name", "csv"} or text/csv body with ?name=
//   GET  /datasets
//   POST /sessions                 {"dataset"}
//   GET  /sessions/{id}
//   POST /sessions/{id}/interpret  {"utterance"}
//   POST /sessions/{id}/refine     {"action": set_range|add_attribute|remove_attribute, ...}
class ApiService {
 public:
  explicit ApiService(std::shared_ptr<const EngineResources> resources, ApiConfig config = {});

  ApiResponse handle(std::string_view method, std::string_view path, std::string_view body,
                     std::string_view content_type = "application/json",
                     const std::map<std::string, std::string>& query = {});

  /// Throws Conflict for a taken name, ConfigError for an ambiguous domain mapping.
  void register_dataset(Dataset dataset);

  /// Drops sessions idle for longer than the TTL; returns how many were dropped.
  std::size_t expire_idle(Session::Clock::time_point now);

  std::size_t session_count() const;
  const ApiConfig& config() const { return config_; }

  void bind(httplib::Server& server);

 private:
  ApiResponse create_dataset(std::string_view body, std::string_view content_type,
                             const std::map<std::string, std::string>& query);
  ApiResponse list_datasets() const;
  ApiResponse create_session(const nlohmann::json& body);
  ApiResponse get_session(const std::string& id);
  ApiResponse interpret(const std::string& id, const nlohmann::json& body);
  ApiResponse refine(const std::string& id, const nlohmann::json& body);

  std::shared_ptr<Session> find_session(const std::string& id);
  std::string new_session_id();

  Interpreter interpreter_;
  ApiConfig config_;

  mutable std::shared_mutex datasets_mutex_;
  std::map<std::string, std::shared_ptr<const Dataset>> datasets_;

  mutable std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 id_rng_;
};

}  // namespace sentifiers
