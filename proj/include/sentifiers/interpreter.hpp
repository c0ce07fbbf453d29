#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sentifiers/cooccurrence.hpp"
#include "sentifiers/dataset.hpp"
#include "sentifiers/query_parser.hpp"
#include "sentifiers/range_resolver.hpp"
#include "sentifiers/sentiment.hpp"

namespace sentifiers {

/// Read-only linguistic and domain resources shared by every session.
struct EngineResources {
  QueryParser parser;
  NgramCorpus corpus;
  SentimentClassifier classifier;
  DomainRegistry registry;
};

struct ResourcePaths {
  std::filesystem::path corpus;
  std::filesystem::path sentiment_lexicon;
  std::filesystem::path pos_lexicon;
  std::filesystem::path numeric_gradable_lexicon;
  std::filesystem::path domain_registry;

  /// The files shipped under `data_dir` (lexicon/, corpus/, domain/).
  static ResourcePaths shipped(const std::filesystem::path& data_dir);
};

std::shared_ptr<const EngineResources> load_resources(const ResourcePaths& paths);

enum class WidgetKind { range_slider, attribute_picker };

std::string_view to_string(WidgetKind k);

struct WidgetSpec {
  std::string attribute;
  WidgetKind kind = WidgetKind::range_slider;
  FilterRange current;  // clamped into bounds
  Interval bounds;      // [stats.min, stats.max]
  bool operator==(const WidgetSpec&) const = default;
};

/// Everything decided for one active attribute.
struct AttributeVerdict {
  std::string attribute;
  std::string display_name;
  CooccurrenceScore score;
  std::optional<RangeDirective> directive;  // absent when the query has no modifier
  bool operator==(const AttributeVerdict&) const = default;
};

struct Interpretation {
  ParsedQuery query;
  std::optional<SentimentVerdict> modifier_verdict;
  std::vector<CooccurrenceScore> scored;  // every co-occurring attribute, ranked
  std::vector<AttributeVerdict> verdicts; // active attributes, in active order
  std::vector<FilterRange> filters;       // 1:1 with verdicts
  std::vector<WidgetSpec> widgets;        // first two active attributes
  std::vector<std::string> warnings;

  std::vector<std::string> active() const;
  bool operator==(const Interpretation&) const = default;
};

inline constexpr std::size_t kMaxWidgets = 2;
inline constexpr std::size_t kDefaultActive = 2;

// Session refinements are an append-only event log; SessionState is its fold.
struct InterpretEvent {
  std::string utterance;
  bool operator==(const InterpretEvent&) const = default;
};
struct SetRangeEvent {
  std::string attribute;
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const SetRangeEvent&) const = default;
};
struct AddAttributeEvent {
  std::string attribute;
  bool operator==(const AddAttributeEvent&) const = default;
};
struct RemoveAttributeEvent {
  std::string attribute;
  bool operator==(const RemoveAttributeEvent&) const = default;
};
using SessionEvent = std::variant<InterpretEvent, SetRangeEvent, AddAttributeEvent, RemoveAttributeEvent>;

struct SessionState {
  std::optional<std::string> utterance;
  std::map<std::string, FilterRange> overrides;  // keyed by raw attribute name
  std::vector<std::string> added;                // insertion order
  std::set<std::string> removed;
  bool operator==(const SessionState&) const = default;
};

/// Pure state transition; performs no validation.
SessionState apply_event(SessionState state, const SessionEvent& event);

class Session {
 public:
  using Clock = std::chrono::system_clock;

  Session(std::string id, std::shared_ptr<const Dataset> dataset);

  const std::string& id() const { return id_; }
  const Dataset& dataset() const { return *dataset_; }
  const std::shared_ptr<const Dataset>& dataset_ptr() const { return dataset_; }
  const SessionState& state() const { return state_; }
  const std::vector<SessionEvent>& events() const { return events_; }
  const std::optional<Interpretation>& last() const { return last_; }
  Clock::time_point created_at() const { return created_at_; }
  Clock::time_point last_active() const { return last_active_; }

  void touch() { last_active_ = Clock::now(); }

  /// Requests on one session are serialized through this lock.
  std::mutex& mutex() const { return mutex_; }

 private:
  friend class Interpreter;

  std::string id_;
  std::shared_ptr<const Dataset> dataset_;
  std::vector<SessionEvent> events_;
  SessionState state_;
  std::optional<Interpretation> last_;
  Clock::time_point created_at_;
  Clock::time_point last_active_;
  mutable std::mutex mutex_;
};

class Interpreter {
 public:
  explicit Interpreter(std::shared_ptr<const EngineResources> resources)
      : resources_(std::move(resources)) {}

  /// Full pipeline for a session state. Pure.
  Interpretation evaluate(const Dataset& dataset, const SessionState& state) const;

  // Session operations validate, append the event, and re-evaluate. On error
  // the session is left untouched. Callers hold session.mutex().
  Interpretation interpret(std::string_view utterance, Session& session) const;
  Interpretation refine_range(Session& session, std::string_view attribute, double lo, double hi) const;
  Interpretation add_attribute(Session& session, std::string_view attribute) const;
  Interpretation remove_attribute(Session& session, std::string_view attribute) const;

  /// Applies the events to a fresh session through the same validating path.
  std::unique_ptr<Session> replay(std::string id, std::shared_ptr<const Dataset> dataset,
                                  std::span<const SessionEvent> events) const;

  const EngineResources& resources() const { return *resources_; }

 private:
  Interpretation commit(Session& session, SessionEvent event) const;
  std::string require_active(const Session& session, std::string_view attribute) const;

  std::shared_ptr<const EngineResources> resources_;
};

}  // namespace sentifiers
