#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gr1core/punch.hpp"
#include "gr1core/reduction.hpp"

namespace gr1core {

/// One core member resolved to its source-level identity.
struct ReportElement {
  ElementId id = -1;
  std::string kind;    // ini | alw | alwEv | pattern
  int source_line = 0;
  std::string origin;  // declared | monitor-internal | pattern
  std::string text;
};

/// Machine-readable result of one invocation. The same structure backs the
/// text and JSON renderings, so the two always report identical core sets.
struct Report {
  bool realizable = false;
  std::string algorithm;
  std::vector<std::vector<ReportElement>> cores;
  std::vector<ReportElement> intersection;
  bool complete = true;
  AllCoresStats stats;
};

std::vector<ReportElement> resolve_elements(const Gr1Problem& problem,
                                            const ElementSet& ids);

Report make_report(const Gr1Problem& problem, std::string algorithm,
                   bool realizable, const std::vector<ElementSet>& cores,
                   const ElementSet& intersection, bool complete,
                   const AllCoresStats& stats);

nlohmann::json to_json(const Report& report);

void render_text(const Report& report, bool with_stats, std::ostream& os);

/// Structural validation against the shape documented in
/// docs/report.schema.json. Returns a list of violations, empty when valid.
std::vector<std::string> validate_report_json(const nlohmann::json& j);

}  // namespace gr1core
