#include "tqftdef/tqftdef.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <new>
#include <optional>
#include <string>

#include "json.hpp"
#include "tqftdef/error.hpp"
#include "tqftdef/examples.hpp"
#include "tqftdef/fuzz.hpp"
#include "tqftdef/reports.hpp"
#include "tqftdef/serialization.hpp"
#include "tqftdef/statesum.hpp"

using namespace tqftdef;
using nlohmann::json;

struct tqd_system {
  SystemData data;
  mutable std::mutex mutex;
  mutable std::optional<ValidatedSystem> validated;

  explicit tqd_system(SystemData d) : data(std::move(d)) {}

  const ValidatedSystem& validate() const {
    std::lock_guard lock(mutex);
    if (!validated) validated = ValidatedSystem::validate(data);
    return *validated;
  }
};

struct tqd_complex {
  CurveSurfaceComplex complex;
};

namespace {

thread_local std::string last_error;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

tqd_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return TQD_ERR_PARSE;
    case ErrorCode::DimensionMismatch: return TQD_ERR_DIMENSION;
    case ErrorCode::InvalidSystem:
    case ErrorCode::NotProjectivelySpecial:
    case ErrorCode::ZeroLoopConstant: return TQD_ERR_INVALID_SYSTEM;
    case ErrorCode::InvalidSurface:
    case ErrorCode::OrientationContradiction: return TQD_ERR_INVALID_COMPLEX;
    case ErrorCode::NoSuchSimplex:
    case ErrorCode::NotFlippable:
    case ErrorCode::NotMergeable:
    case ErrorCode::NotSplittable: return TQD_ERR_MOVE;
    case ErrorCode::TooLarge: return TQD_ERR_TOO_LARGE;
    case ErrorCode::OutOfMemoryBudget: return TQD_ERR_MEMORY_BUDGET;
    default: return TQD_ERR_INVALID_ARGUMENT;
  }
}

template <typename F>
tqd_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return TQD_OK;
  } catch (const Error& error) {
    last_error = error.what();
    return status_of(error.code());
  } catch (const IoError& error) {
    last_error = error.what();
    return TQD_ERR_IO;
  } catch (const json::exception& error) {
    last_error = error.what();
    return TQD_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TQD_ERR_INTERNAL;
  } catch (const std::exception& error) {
    last_error = error.what();
    return TQD_ERR_INTERNAL;
  }
}

template <typename T>
void require(const T* pointer, const char* what) {
  if (pointer == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::string read_file(const char* path) {
  try {
    return read_text_file(path);
  } catch (const Error& error) {
    throw IoError(error.what());
  }
}

EvaluationOptions evaluation_options(const tqd_eval_options* options) {
  EvaluationOptions out;
  if (options == nullptr) return out;
  if (options->brute_force_cap) out.brute_force_cap = options->brute_force_cap;
  if (options->memory_budget) out.memory_budget = options->memory_budget;
  out.order = options->sequential_order ? ContractionOrder::Sequential : ContractionOrder::Greedy;
  out.barred_order =
      options->barred_order == TQD_BARRED_REVERSED ? BarredOrder::Reversed : BarredOrder::Path;
  return out;
}

Method method_of(tqd_method method) {
  switch (method) {
    case TQD_METHOD_AUTO: return Method::Auto;
    case TQD_METHOD_BRUTE: return Method::Brute;
    case TQD_METHOD_CONTRACT: return Method::Contract;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

GroupTable group_named(const std::string& spec) {
  if (spec == "trivial") return trivial_group();
  if (spec == "s3") return symmetric_group3();
  if (spec.size() >= 2 && spec[0] == 'z' && spec.find_first_not_of("0123456789", 1) == std::string::npos) {
    const unsigned long n = std::stoul(spec.substr(1));
    if (n < 1 || n > 12) throw Error(ErrorCode::SizeOutOfRange, "cyclic group order outside 1..12");
    return cyclic_group(n);
  }
  return parse_group_table(spec);
}

std::size_t size_param(const json& params, const char* key) {
  if (!params.contains(key)) throw Error(ErrorCode::InvalidArgument, std::string("missing parameter ") + key);
  const json& v = params[key];
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw Error(ErrorCode::SizeOutOfRange, std::string(key) + " must be a positive integer");
  }
  return v.get<std::size_t>();
}

std::string string_param(const json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_string()) {
    throw Error(ErrorCode::InvalidArgument, std::string("missing string parameter ") + key);
  }
  return params[key].get<std::string>();
}

SystemData generate(const std::string& name, const json& params) {
  if (name == "matrix") return matrix_system(size_param(params, "n"), size_param(params, "m"));
  if (name == "group-algebra") {
    const AlgebraData a = group_algebra(group_named(string_param(params, "table")));
    return trivial_defect_system(a, regular_module(a));
  }
  if (name == "example1") {
    const GroupTable g = group_named(string_param(params, "g"));
    const GroupTable h = params.contains("h") ? group_named(string_param(params, "h")) : g;
    std::vector<std::size_t> embedding;
    if (params.contains("embedding")) {
      embedding = params["embedding"].get<std::vector<std::size_t>>();
    } else if (h.order() == 1) {
      embedding = {g.identity};
    } else if (!params.contains("h")) {
      for (std::size_t i = 0; i < g.order(); ++i) embedding.push_back(i);
    } else {
      throw Error(ErrorCode::InvalidArgument, "example1 with a separate h needs an embedding");
    }
    return gset_system(g, h, regular_action(g, h, embedding));
  }
  if (name == "example4") {
    const AlgebraData a = params.contains("n") ? matrix_algebra(size_param(params, "n"))
                                               : group_algebra(group_named(string_param(params, "g")));
    return trivial_defect_system(a, regular_module(a));
  }
  if (name == "shipped") return shipped_system(string_param(params, "name"));
  throw Error(ErrorCode::InvalidArgument, "unknown generator " + name);
}

}  // namespace

extern "C" {

const char* tqd_version(void) { return "0.1.0"; }

const char* tqd_last_error(void) { return last_error.c_str(); }

void tqd_string_free(char* text) { std::free(text); }

void tqd_default_eval_options(tqd_eval_options* options) {
  if (options == nullptr) return;
  const EvaluationOptions defaults;
  options->brute_force_cap = defaults.brute_force_cap;
  options->memory_budget = defaults.memory_budget;
  options->sequential_order = 0;
  options->barred_order = TQD_BARRED_PATH;
}

void tqd_default_fuzz_options(tqd_fuzz_options* options) {
  if (options == nullptr) return;
  const FuzzOptions defaults;
  options->seed = defaults.seed;
  options->steps = defaults.steps;
  options->checkpoint_every = defaults.checkpoint_every;
  options->max_edges = 0;
  options->method = TQD_METHOD_AUTO;
  tqd_default_eval_options(&options->eval);
}

tqd_status tqd_system_from_json(const char* text, tqd_system** out) {
  return guarded([&] {
    require(text, "json");
    require(out, "out");
    *out = new tqd_system(system_from_json(text));
  });
}

tqd_status tqd_system_load(const char* path, tqd_system** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new tqd_system(system_from_json(read_file(path)));
  });
}

tqd_status tqd_system_to_json(const tqd_system* system, char** out_json) {
  return guarded([&] {
    require(system, "system");
    require(out_json, "out_json");
    *out_json = duplicate(system_to_json(system->data));
  });
}

void tqd_system_free(tqd_system* system) { delete system; }

tqd_status tqd_system_check(const tqd_system* system, char** out_report, int* all) {
  return guarded([&] {
    require(system, "system");
    const auto results = check_system(system->data);
    if (all) *all = all_passed(results) ? 1 : 0;
    if (out_report) *out_report = duplicate(check_report_json(system->data, results));
  });
}

tqd_status tqd_system_generate(const char* name, const char* params_json, tqd_system** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    json params = json::object();
    if (params_json != nullptr && *params_json != '\0') {
      try {
        params = json::parse(params_json);
      } catch (const json::parse_error& error) {
        throw Error(ErrorCode::Parse, error.what());
      }
    }
    *out = new tqd_system(generate(name, params));
  });
}

tqd_status tqd_complex_from_json(const char* text, tqd_complex** out) {
  return guarded([&] {
    require(text, "json");
    require(out, "out");
    *out = new tqd_complex{complex_from_json(text)};
  });
}

tqd_status tqd_complex_load(const char* path, tqd_complex** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new tqd_complex{complex_from_json(read_file(path))};
  });
}

tqd_status tqd_complex_seed(const char* name, tqd_complex** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new tqd_complex{seed_complex(name)};
  });
}

tqd_status tqd_complex_to_json(const tqd_complex* complex, char** out_json) {
  return guarded([&] {
    require(complex, "complex");
    require(out_json, "out_json");
    *out_json = duplicate(complex_to_json(complex->complex));
  });
}

tqd_status tqd_complex_subdivide(const tqd_complex* complex, tqd_complex** out) {
  return guarded([&] {
    require(complex, "complex");
    require(out, "out");
    *out = new tqd_complex{barycentric_subdivide(complex->complex)};
  });
}

tqd_status tqd_complex_validate(const tqd_complex* complex, char** out_report, int* valid) {
  return guarded([&] {
    require(complex, "complex");
    const auto& c = complex->complex;
    const auto violations = validate(c);
    if (valid) *valid = violations.empty() ? 1 : 0;
    if (!out_report) return;
    json report;
    report["valid"] = violations.empty();
    report["violations"] = json::parse(violations_json(violations));
    report["vertices"] = c.vertices.size();
    report["triangles"] = c.triangles.size();
    report["curve_components"] = curve_components(c);
    if (violations.empty()) {
      report["edges"] = count_edges(c);
      report["euler_characteristic"] = euler_characteristic(c);
      const auto counts = class_counts(Topology(c));
      json classes;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        classes[std::string(name(kAllCoefficients[i]))] = counts[i];
      }
      report["class_counts"] = std::move(classes);
    }
    *out_report = duplicate(report.dump(2) + "\n");
  });
}

void tqd_complex_free(tqd_complex* complex) { delete complex; }

tqd_status tqd_state_sum(const tqd_system* system, const tqd_complex* complex, tqd_method method,
                         const tqd_eval_options* options, char** out_value) {
  return guarded([&] {
    require(system, "system");
    require(complex, "complex");
    require(out_value, "out_value");
    const auto eval = evaluation_options(options);
    json out;
    const Method m = method_of(method);
    if (m == Method::Brute) {
      out["unnormalized"] = format_scalar(evaluate_bruteforce(system->data, complex->complex, eval));
      out["method"] = "brute";
    } else {
      try {
        out["unnormalized"] = format_scalar(evaluate_contraction(system->data, complex->complex, eval));
        out["method"] = "contract";
      } catch (const Error& error) {
        if (m != Method::Auto || error.code() != ErrorCode::OutOfMemoryBudget) throw;
        out["unnormalized"] = format_scalar(evaluate_bruteforce(system->data, complex->complex, eval));
        out["method"] = "brute";
      }
    }
    *out_value = duplicate(out.dump(2) + "\n");
  });
}

tqd_status tqd_invariant(const tqd_system* system, const tqd_complex* complex, tqd_method method,
                         const tqd_eval_options* options, char** out_result) {
  return guarded([&] {
    require(system, "system");
    require(complex, "complex");
    require(out_result, "out_result");
    const auto value = normalized_invariant(system->validate(), complex->complex,
                                            method_of(method), evaluation_options(options));
    *out_result = duplicate(invariant_json(value));
  });
}

tqd_status tqd_fuzz(const tqd_system* system, const tqd_complex* complex,
                    const tqd_fuzz_options* options, char** out_report, int* passed) {
  return guarded([&] {
    require(system, "system");
    require(complex, "complex");
    require(options, "options");
    FuzzOptions fo;
    fo.seed = options->seed;
    fo.steps = options->steps;
    fo.checkpoint_every = options->checkpoint_every;
    fo.max_edges = options->max_edges;
    fo.method = method_of(options->method);
    fo.evaluation = evaluation_options(&options->eval);
    const auto report = run_fuzz(system->validate(), complex->complex, fo);
    if (passed) *passed = report.passed() ? 1 : 0;
    if (out_report) *out_report = duplicate(fuzz_report_json(report));
  });
}

}  // extern "C"
