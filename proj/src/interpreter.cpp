#include "sentifiers/interpreter.hpp"

#include <algorithm>
#include <cmath>

#include "sentifiers/errors.hpp"
#include "sentifiers/text.hpp"

namespace sentifiers {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

FilterRange full_range(const AttributeProfile& attr) {
  return FilterRange{attr.raw_name, attr.stats->min, attr.stats->max, RangeProvenance::statistical,
                     "full range", ""};
}

WidgetSpec make_widget(const AttributeProfile& attr, const FilterRange& filter) {
  WidgetSpec w;
  w.attribute = attr.raw_name;
  w.kind = WidgetKind::range_slider;
  w.bounds = {attr.stats->min, attr.stats->max};
  w.current = filter;
  w.current.lo = std::clamp(filter.lo, w.bounds.lo, w.bounds.hi);
  w.current.hi = std::clamp(filter.hi, w.bounds.lo, w.bounds.hi);
  return w;
}

}  // namespace

ResourcePaths ResourcePaths::shipped(const std::filesystem::path& data_dir) {
  return ResourcePaths{data_dir / "corpus" / "fixture_corpus.tsv",
                       data_dir / "lexicon" / "sentiment.tsv",
                       data_dir / "lexicon" / "pos.tsv",
                       data_dir / "lexicon" / "numeric_gradable.txt",
                       data_dir / "domain" / "domain_scales.tsv"};
}

std::shared_ptr<const EngineResources> load_resources(const ResourcePaths& paths) {
  return std::make_shared<const EngineResources>(EngineResources{
      QueryParser(PosLexicon::load_file(paths.pos_lexicon),
                  WordList::load_file(paths.numeric_gradable_lexicon)),
      NgramCorpus::load_file(paths.corpus),
      SentimentClassifier(SentimentLexicon::load_file(paths.sentiment_lexicon)),
      DomainRegistry::load_file(paths.domain_registry),
  });
}

std::string_view to_string(WidgetKind k) {
  return k == WidgetKind::range_slider ? "range_slider" : "attribute_picker";
}

std::vector<std::string> Interpretation::active() const {
  std::vector<std::string> out;
  out.reserve(verdicts.size());
  for (const auto& v : verdicts) out.push_back(v.attribute);
  return out;
}

SessionState apply_event(SessionState state, const SessionEvent& event) {
  std::visit(overloaded{
                 [&](const InterpretEvent& e) { state.utterance = e.utterance; },
                 [&](const SetRangeEvent& e) {
                   state.overrides[e.attribute] = FilterRange{
                       e.attribute, e.lo, e.hi, RangeProvenance::user_override, "set by user", ""};
                 },
                 [&](const AddAttributeEvent& e) {
                   state.removed.erase(e.attribute);
                   if (!contains(state.added, e.attribute)) state.added.push_back(e.attribute);
                 },
                 [&](const RemoveAttributeEvent& e) {
                   std::erase(state.added, e.attribute);
                   state.removed.insert(e.attribute);
                 },
             },
             event);
  return state;
}

Session::Session(std::string id, std::shared_ptr<const Dataset> dataset)
    : id_(std::move(id)),
      dataset_(std::move(dataset)),
      created_at_(Clock::now()),
      last_active_(created_at_) {}

Interpretation Interpreter::evaluate(const Dataset& dataset, const SessionState& state) const {
  if (!state.utterance) {
    throw RefineError("ask a question before refining the answer", "session has no utterance");
  }
  const EngineResources& res = *resources_;
  Interpretation out;
  out.query = res.parser.parse(*state.utterance, dataset);
  const auto& modifier = out.query.modifier;

  if (modifier && modifier->classification != ModifierClass::complex_gradable) {
    throw NotSupported(
        "\"" + modifier->token.text + "\" is a " +
            (modifier->classification == ModifierClass::numeric_gradable ? "numeric"
                                                                         : std::string(to_string(modifier->classification))) +
            " modifier; it is handled by numeric-gradable interpretation, not by this engine",
        "modifier classification " + std::string(to_string(modifier->classification)));
  }

  auto eligible_added = [&] {
    for (const auto& a : state.added) {
      const auto* attr = dataset.find(a);
      if (attr && attr->is_numeric()) return true;
    }
    return false;
  };

  std::vector<std::string> active;
  if (modifier) {
    out.modifier_verdict = res.classifier.classify(modifier->token.lemma, modifier->negated);
    try {
      out.scored = rank_attributes(*modifier, dataset, res.corpus);
    } catch (const NoCooccurrence&) {
      if (!eligible_added()) throw;
    }
    for (const auto& s : out.scored) {
      if (active.size() == kDefaultActive) break;
      if (!state.removed.contains(s.attribute)) active.push_back(s.attribute);
    }
  } else {
    for (const auto& name : out.query.explicit_attributes) {
      const auto* attr = dataset.find(name);
      if (attr && attr->is_numeric() && !state.removed.contains(name)) active.push_back(name);
    }
    out.warnings.push_back("no descriptive modifier found; showing the attributes you named");
  }
  for (const auto& a : state.added) {
    const auto* attr = dataset.find(a);
    if (attr && attr->is_numeric() && !contains(active, attr->raw_name)) active.push_back(attr->raw_name);
  }

  for (const auto& name : active) {
    const AttributeProfile& attr = *dataset.find(name);
    AttributeVerdict verdict;
    verdict.attribute = attr.raw_name;
    verdict.display_name = attr.display_name;
    const auto ranked = std::find_if(out.scored.begin(), out.scored.end(),
                                     [&](const CooccurrenceScore& s) { return s.attribute == name; });
    if (ranked != out.scored.end()) {
      verdict.score = *ranked;
    } else if (modifier) {
      verdict.score = score_attribute(*modifier, attr, res.corpus);
    } else {
      verdict.score.attribute = attr.raw_name;
    }

    FilterRange filter;
    if (modifier) {
      const auto a = res.classifier.classify(attr.display_name, false);
      verdict.directive = combine(*out.modifier_verdict, a);
      if (!verdict.score.cooccurring) {
        out.warnings.push_back("\"" + attr.display_name + "\" does not co-occur with \"" +
                               modifier->token.lemma + "\"; included because you added it");
      }
      const auto resolved = resolve_with_fallback(*verdict.directive, attr.raw_name, *attr.stats,
                                                  lookup_scale(attr, res.registry));
      filter = resolved.range;
      if (resolved.degenerate) {
        out.warnings.push_back("the default range for \"" + attr.display_name +
                               "\" was empty; using " + filter.source_label + " instead");
      }
    } else {
      filter = full_range(attr);
    }
    if (const auto it = state.overrides.find(name); it != state.overrides.end()) filter = it->second;

    if (out.widgets.size() < kMaxWidgets) out.widgets.push_back(make_widget(attr, filter));
    out.filters.push_back(std::move(filter));
    out.verdicts.push_back(std::move(verdict));
  }

  if (active.empty()) out.warnings.push_back("no attributes are selected; add one to filter the data");
  for (const auto& adj : out.query.ignored_adjectives) {
    if (res.parser.numeric_gradable().contains(adj)) {
      out.warnings.push_back("\"" + adj + "\" is a numeric modifier and is not interpreted here");
    } else {
      out.warnings.push_back("only one descriptive modifier is interpreted per question; ignored \"" +
                             adj + "\"");
    }
  }
  return out;
}

Interpretation Interpreter::commit(Session& session, SessionEvent event) const {
  SessionState next = apply_event(session.state_, event);
  Interpretation result = evaluate(*session.dataset_, next);
  session.events_.push_back(std::move(event));
  session.state_ = std::move(next);
  session.last_ = result;
  session.last_active_ = Session::Clock::now();
  return result;
}

std::string Interpreter::require_active(const Session& session, std::string_view attribute) const {
  if (!session.last_) throw RefineError("ask a question before refining the answer", "no interpretation yet");
  const auto* attr = session.dataset().find(attribute);
  if (!attr) {
    throw RefineError("\"" + std::string(attribute) + "\" is not an attribute of " + session.dataset().name(),
                      "unknown attribute");
  }
  if (!contains(session.last_->active(), attr->raw_name)) {
    throw RefineError("\"" + attr->display_name + "\" is not part of the current answer", "attribute not active");
  }
  return attr->raw_name;
}

Interpretation Interpreter::interpret(std::string_view utterance, Session& session) const {
  return commit(session, InterpretEvent{std::string(utterance)});
}

Interpretation Interpreter::refine_range(Session& session, std::string_view attribute, double lo,
                                         double hi) const {
  const auto name = require_active(session, attribute);
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw RefineError("range bounds must be numbers", "non-finite bound");
  if (lo > hi) {
    throw RefineError("the lower bound " + format_number(lo) + " is above the upper bound " + format_number(hi),
                      "lo > hi");
  }
  return commit(session, SetRangeEvent{name, lo, hi});
}

Interpretation Interpreter::add_attribute(Session& session, std::string_view attribute) const {
  if (!session.last_) throw RefineError("ask a question before refining the answer", "no interpretation yet");
  const auto* attr = session.dataset().find(attribute);
  if (!attr) {
    throw RefineError("\"" + std::string(attribute) + "\" is not an attribute of " + session.dataset().name(),
                      "unknown attribute");
  }
  if (!attr->is_numeric()) {
    throw RefineError("\"" + attr->display_name + "\" is not numeric and cannot be filtered by range",
                      "non-numeric attribute");
  }
  if (contains(session.last_->active(), attr->raw_name)) {
    throw RefineError("\"" + attr->display_name + "\" is already part of the answer", "attribute already active");
  }
  return commit(session, AddAttributeEvent{attr->raw_name});
}

Interpretation Interpreter::remove_attribute(Session& session, std::string_view attribute) const {
  const auto name = require_active(session, attribute);
  return commit(session, RemoveAttributeEvent{name});
}

std::unique_ptr<Session> Interpreter::replay(std::string id, std::shared_ptr<const Dataset> dataset,
                                             std::span<const SessionEvent> events) const {
  auto session = std::make_unique<Session>(std::move(id), std::move(dataset));
  for (const auto& event : events) {
    std::visit(overloaded{
                   [&](const InterpretEvent& e) { interpret(e.utterance, *session); },
                   [&](const SetRangeEvent& e) { refine_range(*session, e.attribute, e.lo, e.hi); },
                   [&](const AddAttributeEvent& e) { add_attribute(*session, e.attribute); },
                   [&](const RemoveAttributeEvent& e) { remove_attribute(*session, e.attribute); },
               },
               event);
  }
  return session;
}

}  // namespace sentifiers
