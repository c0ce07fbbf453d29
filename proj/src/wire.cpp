#include "sentifiers/wire.hpp"

#include <variant>

namespace sentifiers::wire {

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

template <class T>
json array_of(const std::vector<T>& items) {
  json out = json::array();
  for (const auto& item : items) out.push_back(to_json(item));
  return out;
}

json strings(const std::vector<std::string>& items) {
  json out = json::array();
  for (const auto& s : items) out.push_back(s);
  return out;
}

}  // namespace

json to_json(const NumericStats& s) {
  return {{"min", s.min},       {"max", s.max},     {"median", s.median},
          {"mad", s.mad},       {"count", s.count}, {"null_count", s.null_count}};
}

json to_json(const AttributeProfile& a) {
  return {{"raw_name", a.raw_name},
          {"display_name", a.display_name},
          {"kind", to_string(a.kind)},
          {"stats", a.stats ? to_json(*a.stats) : json(nullptr)},
          {"ngrams", strings(a.ngrams)}};
}

json dataset_descriptor(const Dataset& d) {
  return {{"name", d.name()}, {"rows", d.row_count()}, {"attributes", array_of(d.attributes())}};
}

json to_json(const Token& t) {
  return {{"text", t.text},
          {"lemma", t.lemma},
          {"pos", to_string(t.pos)},
          {"span", {t.span.begin, t.span.end}}};
}

json to_json(const ModifierPhrase& m) {
  return {{"token", to_json(m.token)},
          {"classification", to_string(m.classification)},
          {"negated", m.negated}};
}

json to_json(const ParsedQuery& q) {
  return {{"utterance", q.utterance},
          {"tokens", array_of(q.tokens)},
          {"modifier", q.modifier ? to_json(*q.modifier) : json(nullptr)},
          {"explicit_attributes", strings(q.explicit_attributes)},
          {"ignored_adjectives", strings(q.ignored_adjectives)}};
}

json to_json(const CooccurrenceScore& s) {
  return {{"attribute", s.attribute},
          {"pmi", optional_number(s.pmi)},
          {"modifier_ngram", s.modifier_ngram},
          {"attribute_ngram", s.attribute_ngram},
          {"cooccurring", s.cooccurring}};
}

json to_json(const SentimentVerdict& v) {
  return {{"phrase", v.phrase}, {"klass", to_string(v.klass)}, {"score", v.score}};
}

json to_json(const RangeDirective& d) {
  return {{"kind", to_string(d.kind)},
          {"modifier_verdict", to_json(d.modifier_verdict)},
          {"attribute_verdict", to_json(d.attribute_verdict)}};
}

json to_json(const FilterRange& f) {
  return {{"attribute", f.attribute},
          {"lo", f.lo},
          {"hi", f.hi},
          {"provenance", to_string(f.provenance)},
          {"source_label", f.source_label},
          {"source_url", f.source_url}};
}

json to_json(const WidgetSpec& w) {
  return {{"attribute", w.attribute},
          {"kind", to_string(w.kind)},
          {"current", to_json(w.current)},
          {"bounds", {w.bounds.lo, w.bounds.hi}}};
}

json to_json(const AttributeVerdict& v) {
  return {{"attribute", v.attribute},
          {"display_name", v.display_name},
          {"score", to_json(v.score)},
          {"directive", v.directive ? to_json(*v.directive) : json(nullptr)}};
}

json to_json(const Interpretation& i) {
  return {{"query", to_json(i.query)},
          {"modifier_verdict", i.modifier_verdict ? to_json(*i.modifier_verdict) : json(nullptr)},
          {"scored", array_of(i.scored)},
          {"verdicts", array_of(i.verdicts)},
          {"active", strings(i.active())},
          {"filters", array_of(i.filters)},
          {"widgets", array_of(i.widgets)},
          {"warnings", strings(i.warnings)}};
}

json to_json(const ChartSpec& c) {
  json rows = json::array();
  for (const auto& row : c.rows) {
    json r = json::array();
    for (const auto& cell : row) {
      if (const auto* d = std::get_if<double>(&cell)) {
        r.push_back(*d);
      } else if (const auto* s = std::get_if<std::string>(&cell)) {
        r.push_back(*s);
      } else {
        r.push_back(nullptr);
      }
    }
    rows.push_back(std::move(r));
  }
  json encodings = json::object();
  for (const auto& [channel, attr] : c.encodings) encodings[channel] = attr;
  return {{"mark", to_string(c.mark)},
          {"encodings", encodings},
          {"data_filter", array_of(c.data_filter)},
          {"title", c.title},
          {"columns", strings(c.columns)},
          {"rows", rows},
          {"matched_rows", c.matched_rows},
          {"sampled", c.sampled},
          {"warnings", strings(c.warnings)}};
}

json to_json(const ProvenanceText& p) {
  json segments = json::array();
  for (const auto& s : p.segments) {
    segments.push_back({{"text", s.text},
                        {"sentiment", s.sentiment ? json(to_string(*s.sentiment)) : json(nullptr)},
                        {"color", s.sentiment ? json(color_of(*s.sentiment)) : json(nullptr)},
                        {"widget", s.widget ? to_json(*s.widget) : json(nullptr)},
                        {"link", s.link ? json(*s.link) : json(nullptr)}});
  }
  return {{"segments", segments}};
}

json to_json(const SessionEvent& e) {
  return std::visit(
      [](const auto& ev) -> json {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, InterpretEvent>) {
          return {{"type", "interpret"}, {"utterance", ev.utterance}};
        } else if constexpr (std::is_same_v<T, SetRangeEvent>) {
          return {{"type", "set_range"}, {"attribute", ev.attribute}, {"lo", ev.lo}, {"hi", ev.hi}};
        } else if constexpr (std::is_same_v<T, AddAttributeEvent>) {
          return {{"type", "add_attribute"}, {"attribute", ev.attribute}};
        } else {
          return {{"type", "remove_attribute"}, {"attribute", ev.attribute}};
        }
      },
      e);
}

json to_json(const SessionState& s) {
  json overrides = json::array();
  for (const auto& [attr, range] : s.overrides) overrides.push_back(to_json(range));
  json removed = json::array();
  for (const auto& r : s.removed) removed.push_back(r);
  return {{"utterance", s.utterance ? json(*s.utterance) : json(nullptr)},
          {"overrides", overrides},
          {"added", strings(s.added)},
          {"removed", removed}};
}

json response_payload(const Interpretation& interpretation, const Dataset& dataset) {
  return {{"interpretation", to_json(interpretation)},
          {"chart_spec", to_json(choose_chart(interpretation, dataset))},
          {"provenance_text", to_json(build_provenance(interpretation))}};
}

}  // namespace sentifiers::wire
