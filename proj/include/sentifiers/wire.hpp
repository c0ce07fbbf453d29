#pragma once

// JSON wire format shared by the HTTP API, the CLI and the golden tests.
// Field names follow the domain types one to one.

#include <json.hpp>

#include "sentifiers/cooccurrence.hpp"
#include "sentifiers/dataset.hpp"
#include "sentifiers/interpreter.hpp"
#include "sentifiers/visspec.hpp"

namespace sentifiers::wire {

using nlohmann::json;

json to_json(const NumericStats& s);
json to_json(const AttributeProfile& a);
json dataset_descriptor(const Dataset& d);

json to_json(const Token& t);
json to_json(const ModifierPhrase& m);
json to_json(const ParsedQuery& q);
json to_json(const CooccurrenceScore& s);
json to_json(const SentimentVerdict& v);
json to_json(const RangeDirective& d);
json to_json(const FilterRange& f);
json to_json(const WidgetSpec& w);
json to_json(const AttributeVerdict& v);
json to_json(const Interpretation& i);
json to_json(const ChartSpec& c);
json to_json(const ProvenanceText& p);
json to_json(const SessionEvent& e);
json to_json(const SessionState& s);

/// {interpretation, chart_spec, provenance_text}
json response_payload(const Interpretation& interpretation, const Dataset& dataset);

}  // namespace sentifiers::wire
