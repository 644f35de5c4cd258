#include "tqftdef/reports.hpp"

#include "json_format.hpp"

namespace tqftdef {

using nlohmann::json;

namespace {

json method_name(Method method) {
  switch (method) {
    case Method::Auto: return "auto";
    case Method::Brute: return "brute";
    case Method::Contract: return "contract";
  }
  return "?";
}

json result_json(const CheckResult& r) {
  json out;
  out["name"] = r.name;
  out["equation_id"] = r.equation_id;
  out["passed"] = r.passed;
  if (!r.detail.empty()) out["detail"] = r.detail;
  if (r.witness) {
    json w;
    w["variables"] = r.witness->variables;
    w["values"] = r.witness->values;
    w["lhs"] = format_scalar(r.witness->lhs);
    w["rhs"] = format_scalar(r.witness->rhs);
    out["witness"] = std::move(w);
  }
  return out;
}

json value_json(const InvariantValue& value) {
  json out;
  out["unnormalized"] = format_scalar(value.unnormalized);
  out["normalized"] = format_scalar(value.normalized);
  out["n_off_vertices"] = value.n_off_vertices;
  out["n_on_vertices"] = value.n_on_vertices;
  out["method"] = method_name(value.method);
  json counts;
  for (std::size_t i = 0; i < kAllCoefficients.size(); ++i) {
    counts[std::string(name(kAllCoefficients[i]))] = value.class_counts[i];
  }
  out["class_counts"] = std::move(counts);
  return out;
}

json record_json(const MoveRecord& r) {
  json out;
  out["kind"] = std::string(to_string(r.kind));
  out["target"] = r.target;
  out["removed"] = r.removed;
  out["added"] = r.added;
  if (r.created_vertex >= 0) out["created_vertex"] = r.created_vertex;
  if (r.deleted_vertex >= 0) out["deleted_vertex"] = r.deleted_vertex;
  out["inverse_target"] = r.inverse_target;
  return out;
}

}  // namespace

std::string check_report_json(const SystemData& system, const std::vector<CheckResult>& results) {
  json out;
  out["checks"] = json::array();
  int equations_passed = 0;
  int equations = 0;
  for (const auto& r : results) {
    out["checks"].push_back(result_json(r));
    if (r.equation_id != 0) {
      ++equations;
      equations_passed += r.passed;
    }
  }
  out["equations_total"] = equations;
  out["equations_passed"] = equations_passed;
  out["all_passed"] = all_passed(results);
  out["rho"] = system.algebra.loop_constant ? json(format_scalar(*system.algebra.loop_constant)) : json();
  std::optional<Scalar> lambda = system.defect.loop_constant;
  if (!lambda && system.defect.algebra) lambda = system.defect.algebra->loop_constant;
  out["lambda"] = lambda ? json(format_scalar(*lambda)) : json();
  out["dimensions"] = {{"A", system.algebra.dim()}, {"B", system.module.dim()}, {"C", system.defect.dim()}};
  return detail::pretty_json(out);
}

std::string invariant_json(const InvariantValue& value) { return detail::pretty_json(value_json(value)); }

std::string fuzz_report_json(const FuzzReport& report) {
  json out;
  out["generator"] = {{"kind", "lcg64"},
                      {"multiplier", std::to_string(Lcg64::kMultiplier)},
                      {"increment", std::to_string(Lcg64::kIncrement)},
                      {"output_shift", 33}};
  out["seed"] = report.seed;
  out["steps_requested"] = report.steps_requested;
  out["steps_taken"] = report.steps_taken;
  out["max_edges"] = report.max_edges;
  out["initial"] = value_json(report.initial);
  out["checkpoints"] = json::array();
  for (const auto& cp : report.checkpoints) {
    out["checkpoints"].push_back({{"step", cp.step},
                                  {"edges", cp.edges},
                                  {"normalized", format_scalar(cp.value.normalized)},
                                  {"unnormalized", format_scalar(cp.value.unnormalized)},
                                  {"matched", cp.matched}});
  }
  json histogram = json::object();
  for (auto kind : {MoveKind::Flip22, MoveKind::Subdivide13, MoveKind::Merge31, MoveKind::Split24,
                    MoveKind::Merge42}) {
    auto it = report.histogram.find(kind);
    histogram[std::string(to_string(kind))] = it == report.histogram.end() ? 0 : it->second;
  }
  out["histogram"] = std::move(histogram);
  out["passed"] = report.passed();
  if (report.first_mismatch_step) {
    out["first_mismatch_step"] = *report.first_mismatch_step;
    out["trace"] = json::array();
    for (const auto& r : report.trace) out["trace"].push_back(record_json(r));
  }
  return detail::pretty_json(out);
}

std::string violations_json(const std::vector<Violation>& violations) {
  json out = json::array();
  for (const auto& v : violations) {
    out.push_back({{"kind", v.kind}, {"simplex", v.simplex}, {"message", v.message}});
  }
  return detail::pretty_json(out);
}

}  // namespace tqftdef
