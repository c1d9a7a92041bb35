#include "gr1core/report.hpp"

#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gr1core {

namespace {

const char* kind_name(ElementKind k) {
  switch (k) {
    case ElementKind::ini:
      return "ini";
    case ElementKind::alw:
      return "alw";
    case ElementKind::alw_ev:
      return "alwEv";
    default:
      return "pattern";
  }
}

const char* origin_name(ElementOrigin o) {
  switch (o) {
    case ElementOrigin::declared:
      return "declared";
    case ElementOrigin::monitor_internal:
      return "monitor-internal";
    default:
      return "pattern";
  }
}

std::string lines_token(const std::vector<ReportElement>& elements) {
  std::ostringstream os;
  os << "lines {";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) os << ", ";
    os << elements[i].source_line;
  }
  os << "}";
  return os.str();
}

nlohmann::json element_json(const ReportElement& e) {
  return nlohmann::json{{"id", e.id},
                        {"kind", e.kind},
                        {"source_line", e.source_line},
                        {"origin", e.origin},
                        {"text", e.text}};
}

}  // namespace

std::vector<ReportElement> resolve_elements(const Gr1Problem& problem,
                                            const ElementSet& ids) {
  std::vector<ReportElement> out;
  out.reserve(ids.size());
  for (ElementId id : ids) {
    const ElementInfo& info = problem.elements[id];
    ReportElement e;
    e.id = id;
    e.kind = kind_name(info.kind);
    e.source_line = info.source_line;
    e.origin = origin_name(info.origin);
    e.text = info.text;
    out.push_back(std::move(e));
  }
  return out;
}

Report make_report(const Gr1Problem& problem, std::string algorithm,
                   bool realizable, const std::vector<ElementSet>& cores,
                   const ElementSet& intersection, bool complete,
                   const AllCoresStats& stats) {
  Report r;
  r.realizable = realizable;
  r.algorithm = std::move(algorithm);
  for (const ElementSet& core : cores)
    r.cores.push_back(resolve_elements(problem, core));
  r.intersection = resolve_elements(problem, intersection);
  r.complete = complete;
  r.stats = stats;
  return r;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json cores = nlohmann::json::array();
  for (const auto& core : report.cores) {
    nlohmann::json members = nlohmann::json::array();
    for (const ReportElement& e : core) members.push_back(element_json(e));
    cores.push_back(std::move(members));
  }
  nlohmann::json intersection = nlohmann::json::array();
  for (const ReportElement& e : report.intersection)
    intersection.push_back(element_json(e));

  return nlohmann::json{
      {"realizable", report.realizable},
      {"algorithm", report.algorithm},
      {"cores", std::move(cores)},
      {"intersection", std::move(intersection)},
      {"complete", report.complete},
      {"stats",
       {{"actual_checks", report.stats.actual_checks},
        {"memo_hits", report.stats.memo_hits},
        {"core_computations", report.stats.core_computations},
        {"elapsed_ms", report.stats.elapsed_ms}}},
  };
}

void render_text(const Report& report, bool with_stats, std::ostream& os) {
  os << (report.realizable ? "REALIZABLE" : "UNREALIZABLE") << "\n";
  if (!report.algorithm.empty() && report.algorithm != "check") {
    os << "algorithm: " << report.algorithm << "\n";
    os << "cores: " << report.cores.size()
       << (report.complete ? " (complete)" : " (partial, timed out)") << "\n";
    for (std::size_t i = 0; i < report.cores.size(); ++i) {
      os << "core " << i + 1 << ": " << lines_token(report.cores[i]) << "\n";
      for (const ReportElement& e : report.cores[i]) {
        os << "  line " << e.source_line << "  " << e.kind << "  " << e.origin
           << "  " << e.text << "\n";
      }
    }
    os << "intersection: " << lines_token(report.intersection) << "\n";
  }
  if (with_stats) {
    os << "stats: " << report.stats.actual_checks << " actual checks, "
       << report.stats.memo_hits << " memo hits, "
       << report.stats.core_computations << " core computations, "
       << report.stats.elapsed_ms << " ms\n";
  }
}

namespace {

void check_element(const nlohmann::json& e, const std::string& where,
                   std::vector<std::string>& errors) {
  if (!e.is_object()) {
    errors.push_back(where + ": element is not an object");
    return;
  }
  auto need = [&](const char* key, bool ok) {
    if (!e.contains(key))
      errors.push_back(where + ": missing '" + key + "'");
    else if (!ok)
      errors.push_back(where + ": '" + key + "' has the wrong type");
  };
  need("id", e.contains("id") && e["id"].is_number_integer());
  need("kind", e.contains("kind") && e["kind"].is_string());
  need("source_line",
       e.contains("source_line") && e["source_line"].is_number_integer());
  need("origin", e.contains("origin") && e["origin"].is_string());
  need("text", e.contains("text") && e["text"].is_string());
}

}  // namespace

std::vector<std::string> validate_report_json(const nlohmann::json& j) {
  std::vector<std::string> errors;
  if (!j.is_object()) return {"report is not an object"};

  auto need = [&](const char* key, bool ok) {
    if (!j.contains(key))
      errors.push_back(std::string("missing '") + key + "'");
    else if (!ok)
      errors.push_back(std::string("'") + key + "' has the wrong type");
  };
  need("realizable", j.contains("realizable") && j["realizable"].is_boolean());
  need("algorithm", j.contains("algorithm") && j["algorithm"].is_string());
  need("cores", j.contains("cores") && j["cores"].is_array());
  need("intersection",
       j.contains("intersection") && j["intersection"].is_array());
  need("complete", j.contains("complete") && j["complete"].is_boolean());
  need("stats", j.contains("stats") && j["stats"].is_object());

  if (j.contains("cores") && j["cores"].is_array()) {
    for (std::size_t i = 0; i < j["cores"].size(); ++i) {
      const auto& core = j["cores"][i];
      if (!core.is_array()) {
        errors.push_back("cores[" + std::to_string(i) + "] is not an array");
        continue;
      }
      for (std::size_t k = 0; k < core.size(); ++k)
        check_element(core[k],
                      "cores[" + std::to_string(i) + "][" +
                          std::to_string(k) + "]",
                      errors);
    }
  }
  if (j.contains("intersection") && j["intersection"].is_array()) {
    for (std::size_t k = 0; k < j["intersection"].size(); ++k)
      check_element(j["intersection"][k],
                    "intersection[" + std::to_string(k) + "]", errors);
  }
  if (j.contains("stats") && j["stats"].is_object()) {
    const auto& s = j["stats"];
    for (const char* key :
         {"actual_checks", "memo_hits", "core_computations", "elapsed_ms"}) {
      if (!s.contains(key))
        errors.push_back(std::string("stats missing '") + key + "'");
      else if (!s[key].is_number())
        errors.push_back(std::string("stats '") + key + "' is not a number");
    }
  }
  return errors;
}

}  // namespace gr1core
