#include "sentifiers/range_resolver.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "sentifiers/errors.hpp"
#include "sentifiers/kernels.hpp"

namespace sentifiers {

namespace {

std::vector<std::string> words_of(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(std::move(w));
  return out;
}

bool is_word_subsequence(std::string_view needle, std::string_view haystack) {
  const auto n = words_of(needle);
  const auto h = words_of(haystack);
  if (n.empty()) return false;
  return std::search(h.begin(), h.end(), n.begin(), n.end()) != h.end();
}

std::vector<const DomainScale*> subsequence_matches(const AttributeProfile& attribute,
                                                    const DomainRegistry& registry) {
  std::vector<const DomainScale*> out;
  for (const auto& s : registry.scales()) {
    if (s.concept_name != attribute.display_name && is_word_subsequence(s.concept_name, attribute.display_name)) {
      out.push_back(&s);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(RangeProvenance p) {
  switch (p) {
    case RangeProvenance::statistical: return "statistical";
    case RangeProvenance::domain_knowledge: return "domain_knowledge";
    case RangeProvenance::user_override: return "user_override";
  }
  return "statistical";
}

DomainRegistry::DomainRegistry(std::vector<DomainScale> scales) : scales_(std::move(scales)) {
  std::set<std::string> seen;
  for (auto& s : scales_) {
    s.concept_name = normalize_name(s.concept_name);
    if (s.concept_name.empty()) throw ConfigError("domain scale has an empty concept");
    if (!seen.insert(s.concept_name).second) {
      throw ConfigError("two domain scales share the concept '" + s.concept_name + "'");
    }
    if (s.top_range.lo > s.top_range.hi || s.bottom_range.lo > s.bottom_range.hi) {
      throw ConfigError("domain scale '" + s.concept_name + "' has an inverted range");
    }
  }
}

DomainRegistry DomainRegistry::load(std::istream& in) {
  std::vector<DomainScale> scales;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1) {
      f.push_back(line.substr(start, tab - start));
    }
    f.push_back(line.substr(start));
    const auto where = "line " + std::to_string(line_no);
    if (f.size() != 7) throw ConfigError("domain registry is malformed", where + ": expected 7 fields");
    double v[4];
    for (int k = 0; k < 4; ++k) {
      const auto parsed = kernels::parse_real(f[1 + k]);
      if (!parsed) throw ConfigError("domain registry is malformed", where + ": bad number '" + f[1 + k] + "'");
      v[k] = *parsed;
    }
    scales.push_back(DomainScale{f[0], {v[2], v[3]}, {v[0], v[1]}, f[6], f[5]});
  }
  return DomainRegistry(std::move(scales));
}

DomainRegistry DomainRegistry::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open domain registry", path.string());
  return load(in);
}

void DomainRegistry::validate(const Dataset& dataset) const {
  for (const auto& attr : dataset.attributes()) {
    const bool exact = std::any_of(scales_.begin(), scales_.end(),
                                   [&](const DomainScale& s) { return s.concept_name == attr.display_name; });
    if (exact) continue;
    const auto matches = subsequence_matches(attr, *this);
    if (matches.size() > 1) {
      throw ConfigError("attribute '" + attr.display_name + "' matches several domain scales",
                        "ambiguous scales '" + matches[0]->concept_name + "' and '" + matches[1]->concept_name + "'");
    }
  }
}

const DomainScale* lookup_scale(const AttributeProfile& attribute, const DomainRegistry& registry) {
  for (const auto& s : registry.scales()) {
    if (s.concept_name == attribute.display_name) return &s;
  }
  const auto matches = subsequence_matches(attribute, registry);
  return matches.empty() ? nullptr : matches.front();
}

FilterRange resolve(const RangeDirective& directive, std::string_view attribute,
                    const NumericStats& stats, const DomainScale* scale) {
  FilterRange out;
  out.attribute = std::string(attribute);
  if (scale) {
    const Interval& r = directive.kind == DirectiveKind::top_n ? scale->top_range : scale->bottom_range;
    out.lo = r.lo;
    out.hi = r.hi;
    out.provenance = RangeProvenance::domain_knowledge;
    out.source_label = scale->label;
    out.source_url = scale->source_url;
    return out;
  }

  double lo, hi;
  if (directive.kind == DirectiveKind::top_n) {
    lo = stats.median + stats.mad;
    hi = stats.max;
  } else {
    lo = stats.min;
    hi = std::abs(stats.median - stats.mad);
  }
  lo = std::max(lo, stats.min);
  hi = std::min(hi, stats.max);
  if (lo > hi) throw DegenerateRange(std::string(attribute));
  out.lo = lo;
  out.hi = hi;
  out.provenance = RangeProvenance::statistical;
  out.source_label = directive.kind == DirectiveKind::top_n ? "median + MAD to max" : "min to |median - MAD|";
  return out;
}

ResolvedRange resolve_with_fallback(const RangeDirective& directive, std::string_view attribute,
                                    const NumericStats& stats, const DomainScale* scale) {
  try {
    return {resolve(directive, attribute, stats, scale), false};
  } catch (const DegenerateRange&) {
    FilterRange out;
    out.attribute = std::string(attribute);
    out.provenance = RangeProvenance::statistical;
    if (directive.kind == DirectiveKind::top_n) {
      out.lo = stats.median;
      out.hi = stats.max;
      out.source_label = "median to max";
    } else {
      out.lo = stats.min;
      out.hi = stats.median;
      out.source_label = "min to median";
    }
    return {out, true};
  }
}

}  // namespace sentifiers
