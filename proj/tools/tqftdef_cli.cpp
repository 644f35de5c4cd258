// Command line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tqftdef/tqftdef.h"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2, kTooLarge = 3 };

struct SystemDeleter {
  void operator()(tqd_system* s) const { tqd_system_free(s); }
};
struct ComplexDeleter {
  void operator()(tqd_complex* c) const { tqd_complex_free(c); }
};
using SystemPtr = std::unique_ptr<tqd_system, SystemDeleter>;
using ComplexPtr = std::unique_ptr<tqd_complex, ComplexDeleter>;

// Takes ownership of a library string.
std::string take(char* text) {
  std::string out = text ? text : "";
  tqd_string_free(text);
  return out;
}

int exit_code(tqd_status status) {
  switch (status) {
    case TQD_OK: return kOk;
    case TQD_ERR_INVALID_SYSTEM: return kFailed;
    case TQD_ERR_TOO_LARGE:
    case TQD_ERR_MEMORY_BUDGET: return kTooLarge;
    default: return kBadInput;
  }
}

int report_error(tqd_status status) {
  std::cerr << "error: " << tqd_last_error() << "\n";
  if (status == TQD_ERR_TOO_LARGE) {
    std::cerr << "hint: brute force is capped; use --method contract or raise --brute-cap\n";
  } else if (status == TQD_ERR_MEMORY_BUDGET) {
    std::cerr << "hint: an intermediate tensor exceeds the budget; raise --memory-budget\n";
  }
  return exit_code(status);
}

struct Failure {
  tqd_status status;
};

void ok(tqd_status status) {
  if (status != TQD_OK) throw Failure{status};
}

SystemPtr load_system(const std::string& path) {
  tqd_system* raw = nullptr;
  ok(tqd_system_load(path.c_str(), &raw));
  return SystemPtr(raw);
}

ComplexPtr load_complex(const std::string& path) {
  tqd_complex* raw = nullptr;
  if (path.find('/') == std::string::npos && path.find('.') == std::string::npos) {
    ok(tqd_complex_seed(path.c_str(), &raw));
  } else {
    ok(tqd_complex_load(path.c_str(), &raw));
  }
  return ComplexPtr(raw);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{TQD_ERR_IO};
  }
}

std::string file_or_literal(const std::string& value) {
  std::ifstream in(value, std::ios::binary);
  if (!in) return value;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct EvalFlags {
  std::string method = "auto";
  std::uint64_t brute_cap = 0;
  std::uint64_t memory_budget = 0;
  bool sequential = false;
  std::string barred_order = "path";

  void attach(CLI::App* cmd) {
    cmd->add_option("--method", method, "auto, brute or contract")
        ->check(CLI::IsMember({"auto", "brute", "contract"}));
    cmd->add_option("--brute-cap", brute_cap, "maximum number of colorings for brute force");
    cmd->add_option("--memory-budget", memory_budget, "maximum entries per intermediate tensor");
    cmd->add_flag("--sequential", sequential, "contract left to right instead of greedily");
    // Test-only: feeds barred coefficients a wrong argument order.
    cmd->add_option("--barred-order", barred_order)
        ->check(CLI::IsMember({"path", "reversed"}))
        ->group("");
  }

  tqd_method tqd() const {
    if (method == "brute") return TQD_METHOD_BRUTE;
    if (method == "contract") return TQD_METHOD_CONTRACT;
    return TQD_METHOD_AUTO;
  }

  tqd_eval_options options() const {
    tqd_eval_options o;
    tqd_default_eval_options(&o);
    if (brute_cap) o.brute_force_cap = brute_cap;
    if (memory_budget) o.memory_budget = memory_budget;
    o.sequential_order = sequential ? 1 : 0;
    o.barred_order = barred_order == "reversed" ? TQD_BARRED_REVERSED : TQD_BARRED_PATH;
    return o;
  }
};

std::string scalar_or_dash(const json& value) { return value.is_string() ? value.get<std::string>() : "-"; }

int cmd_check(const std::string& path, bool as_json) {
  auto system = load_system(path);
  char* raw = nullptr;
  int all = 0;
  ok(tqd_system_check(system.get(), &raw, &all));
  const std::string text = take(raw);
  if (as_json) {
    std::cout << text;
    return all ? kOk : kFailed;
  }
  const json report = json::parse(text);
  for (const auto& check : report["checks"]) {
    std::cout << std::left << std::setw(32) << check["name"].get<std::string>()
              << (check["passed"].get<bool>() ? "pass" : "FAIL");
    if (check.contains("detail")) std::cout << "  (" << check["detail"].get<std::string>() << ")";
    std::cout << "\n";
    if (check.contains("witness")) {
      const auto& w = check["witness"];
      std::cout << "    witness:";
      for (std::size_t i = 0; i < w["variables"].size(); ++i) {
        std::cout << " " << w["variables"][i].get<std::string>() << "=" << w["values"][i];
      }
      std::cout << "  lhs=" << w["lhs"].get<std::string>() << " rhs=" << w["rhs"].get<std::string>()
                << "\n";
    }
  }
  std::cout << report["equations_passed"] << "/" << report["equations_total"] << " equations hold\n";
  std::cout << "rho = " << scalar_or_dash(report["rho"]) << "\n";
  std::cout << "lambda = " << scalar_or_dash(report["lambda"]) << "\n";
  std::cout << (all ? "all checks passed" : "some checks failed") << "\n";
  return all ? kOk : kFailed;
}

void print_value(const json& value) {
  std::cout << "unnormalized: " << value["unnormalized"].get<std::string>() << "\n";
  std::cout << "normalized: " << value["normalized"].get<std::string>() << "\n";
  std::cout << "off-curve vertices: " << value["n_off_vertices"] << "\n";
  std::cout << "curve vertices: " << value["n_on_vertices"] << "\n";
  std::cout << "triangle classes:";
  for (const char* tag : {"a", "abar", "b", "bbar", "c", "cbar"}) {
    std::cout << " " << tag << "=" << value["class_counts"][tag];
  }
  std::cout << "\n";
}

int cmd_invariant(const std::string& system_path, const std::string& complex_path,
                  const EvalFlags& flags, bool as_json) {
  auto system = load_system(system_path);
  auto complex = load_complex(complex_path);
  const tqd_eval_options options = flags.options();
  char* raw = nullptr;
  ok(tqd_invariant(system.get(), complex.get(), flags.tqd(), &options, &raw));
  const std::string text = take(raw);
  if (as_json) {
    std::cout << text;
    return kOk;
  }
  const json value = json::parse(text);
  print_value(value);
  std::cout << "method: " << value["method"].get<std::string>() << "\n";
  return kOk;
}

struct FuzzFlags {
  std::uint64_t seed = 1;
  std::string seeds;
  std::uint64_t steps = 100;
  std::uint64_t checkpoint_every = 10;
  std::uint64_t max_edges = 0;
  unsigned jobs = 1;
};

std::vector<std::uint64_t> seed_list(const FuzzFlags& f) {
  if (f.seeds.empty()) return {f.seed};
  const auto dash = f.seeds.find('-');
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  try {
    first = std::stoull(f.seeds.substr(0, dash));
    last = dash == std::string::npos ? first : std::stoull(f.seeds.substr(dash + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--seeds", "expected A-B");
  }
  if (last < first || last - first > 100000) throw CLI::ValidationError("--seeds", "bad range");
  std::vector<std::uint64_t> out;
  for (auto s = first; s <= last; ++s) out.push_back(s);
  return out;
}

void print_fuzz(const json& report) {
  const auto& gen = report["generator"];
  std::cout << "seed " << report["seed"] << "  generator lcg64 multiplier="
            << gen["multiplier"].get<std::string>() << " increment=" << gen["increment"].get<std::string>()
            << " output=state>>" << gen["output_shift"] << "\n";
  std::cout << "  steps " << report["steps_taken"] << "/" << report["steps_requested"]
            << "  max_edges " << report["max_edges"] << "\n";
  std::cout << "  initial normalized " << report["initial"]["normalized"].get<std::string>() << "\n";
  std::cout << "  moves:";
  for (const auto& [kind, count] : report["histogram"].items()) std::cout << " " << kind << "=" << count;
  std::cout << "\n";
  for (const auto& cp : report["checkpoints"]) {
    std::cout << "  step " << cp["step"] << " edges " << cp["edges"] << " normalized "
              << cp["normalized"].get<std::string>() << (cp["matched"].get<bool>() ? "" : "  MISMATCH")
              << "\n";
  }
  if (!report["passed"].get<bool>()) {
    std::cout << "  first mismatch at step " << report["first_mismatch_step"] << "; move trace:\n";
    std::size_t step = 1;
    for (const auto& record : report["trace"]) {
      std::cout << "    " << step++ << " " << record["kind"].get<std::string>() << " "
                << record["target"].dump() << "\n";
    }
  }
  std::cout << "  " << (report["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

int cmd_fuzz(const std::string& system_path, const std::string& complex_path,
             const EvalFlags& eval, const FuzzFlags& flags, bool as_json) {
  auto system = load_system(system_path);
  auto complex = load_complex(complex_path);
  const auto seeds = seed_list(flags);

  struct Run {
    tqd_status status = TQD_OK;
    std::string error;
    std::string report;
    int passed = 0;
  };
  std::vector<Run> runs(seeds.size());
  auto work = [&](std::size_t i) {
    tqd_fuzz_options options;
    tqd_default_fuzz_options(&options);
    options.seed = seeds[i];
    options.steps = flags.steps;
    options.checkpoint_every = flags.checkpoint_every;
    options.max_edges = flags.max_edges;
    options.method = eval.tqd();
    options.eval = eval.options();
    char* raw = nullptr;
    runs[i].status = tqd_fuzz(system.get(), complex.get(), &options, &raw, &runs[i].passed);
    if (runs[i].status == TQD_OK) runs[i].report = take(raw);
    else runs[i].error = tqd_last_error();
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(flags.jobs, static_cast<unsigned>(seeds.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      for (std::size_t i = j; i < seeds.size(); i += jobs) work(i);
    });
  }
  for (auto& t : pool) t.join();

  int code = kOk;
  json all = json::array();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].status != TQD_OK) {
      std::cerr << "seed " << seeds[i] << ": error: " << runs[i].error << "\n";
      code = std::max(code, exit_code(runs[i].status));
      continue;
    }
    const json report = json::parse(runs[i].report);
    if (as_json) all.push_back(report);
    else print_fuzz(report);
    if (!runs[i].passed && code == kOk) code = kFailed;
  }
  if (as_json) std::cout << all.dump(2) << "\n";
  else if (seeds.size() > 1) {
    std::size_t passed = 0;
    for (const auto& r : runs) passed += r.status == TQD_OK && r.passed;
    std::cout << passed << "/" << seeds.size() << " seeds passed\n";
  }
  return code;
}

struct GenFlags {
  std::string name;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::string table;
  std::string g;
  std::string h;
  std::vector<std::size_t> embedding;
  std::string system_name;
  std::string output;
};

int cmd_gen(const GenFlags& flags) {
  json params = json::object();
  if (flags.n) params["n"] = flags.n;
  if (flags.m) params["m"] = flags.m;
  if (!flags.table.empty()) params["table"] = file_or_literal(flags.table);
  if (!flags.g.empty()) params["g"] = file_or_literal(flags.g);
  if (!flags.h.empty()) params["h"] = file_or_literal(flags.h);
  if (!flags.embedding.empty()) params["embedding"] = flags.embedding;
  if (!flags.system_name.empty()) params["name"] = flags.system_name;
  tqd_system* raw = nullptr;
  ok(tqd_system_generate(flags.name.c_str(), params.dump().c_str(), &raw));
  SystemPtr system(raw);
  char* text = nullptr;
  ok(tqd_system_to_json(system.get(), &text));
  emit(take(text), flags.output);
  return kOk;
}

int cmd_subdivide(const std::string& path, const std::string& output) {
  auto complex = load_complex(path);
  tqd_complex* raw = nullptr;
  ok(tqd_complex_subdivide(complex.get(), &raw));
  ComplexPtr result(raw);
  char* text = nullptr;
  ok(tqd_complex_to_json(result.get(), &text));
  emit(take(text), output);
  return kOk;
}

int cmd_seed(const std::string& name, const std::string& output) {
  tqd_complex* raw = nullptr;
  ok(tqd_complex_seed(name.c_str(), &raw));
  ComplexPtr complex(raw);
  char* text = nullptr;
  ok(tqd_complex_to_json(complex.get(), &text));
  emit(take(text), output);
  return kOk;
}

int cmd_validate(const std::string& path) {
  auto complex = load_complex(path);
  char* raw = nullptr;
  int valid = 0;
  ok(tqd_complex_validate(complex.get(), &raw, &valid));
  std::cout << take(raw);
  return valid ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State-sum invariants of surfaces with a defect curve"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(tqd_version()));
  bool as_json = false;
  app.add_flag("--json", as_json, "print machine-readable JSON");

  std::string system_path;
  std::string complex_path;
  std::string output;

  auto* check = app.add_subcommand("check", "run the 35 equations and the auxiliary laws");
  check->add_option("system", system_path, "system file")->required();

  EvalFlags eval;
  auto* invariant = app.add_subcommand("invariant", "normalized state sum of a complex");
  invariant->add_option("system", system_path, "system file")->required();
  invariant->add_option("complex", complex_path, "complex file or seed name")->required();
  eval.attach(invariant);

  FuzzFlags fuzz_flags;
  auto* fuzz = app.add_subcommand("fuzz", "random move walk with exact invariant comparison");
  fuzz->add_option("system", system_path, "system file")->required();
  fuzz->add_option("complex", complex_path, "complex file or seed name")->required();
  fuzz->add_option("--seed", fuzz_flags.seed, "generator seed");
  fuzz->add_option("--seeds", fuzz_flags.seeds, "inclusive seed range A-B");
  fuzz->add_option("--steps", fuzz_flags.steps, "number of moves");
  fuzz->add_option("--checkpoint-every", fuzz_flags.checkpoint_every,
                   "recompute the invariant every K moves (0: only at the end)");
  fuzz->add_option("--max-edges", fuzz_flags.max_edges, "edge bound for growth moves (0: initial + 60)");
  fuzz->add_option("--jobs", fuzz_flags.jobs, "seeds run in parallel")->check(CLI::Range(1u, 256u));
  eval.attach(fuzz);

  GenFlags gen_flags;
  auto* gen = app.add_subcommand("gen", "write an example system");
  gen->add_option("example", gen_flags.name, "matrix, group-algebra, example1, example4 or shipped")
      ->required()
      ->check(CLI::IsMember({"matrix", "group-algebra", "example1", "example4", "shipped"}));
  gen->add_option("--n", gen_flags.n, "matrix size of A");
  gen->add_option("--m", gen_flags.m, "matrix size of C");
  gen->add_option("--table", gen_flags.table, "group table file");
  gen->add_option("--group", gen_flags.g, "group: z<n>, s3, trivial or a table file");
  gen->add_option("--defect-group", gen_flags.h, "defect group for example1 (default: same as --group)");
  gen->add_option("--embedding", gen_flags.embedding,
                  "example1: index in G of the image of each defect-group element")
      ->delimiter(',');
  gen->add_option("--name", gen_flags.system_name, "shipped system name");
  gen->add_option("-o,--output", gen_flags.output, "output file (default stdout)");

  auto* subdivide = app.add_subcommand("subdivide", "barycentric subdivision of a complex");
  subdivide->add_option("complex", complex_path, "complex file or seed name")->required();
  subdivide->add_option("-o,--output", output, "output file (default stdout)");

  std::string seed_name;
  auto* seed = app.add_subcommand("seed", "write a built-in complex");
  seed->add_option("name", seed_name, "plain_sphere, plain_torus, sphere_equator, torus_meridian")
      ->required();
  seed->add_option("-o,--output", output, "output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "check a complex for flag-likeness");
  validate->add_option("complex", complex_path, "complex file or seed name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*check) return cmd_check(system_path, as_json);
    if (*invariant) return cmd_invariant(system_path, complex_path, eval, as_json);
    if (*fuzz) return cmd_fuzz(system_path, complex_path, eval, fuzz_flags, as_json);
    if (*gen) return cmd_gen(gen_flags);
    if (*subdivide) return cmd_subdivide(complex_path, output);
    if (*seed) return cmd_seed(seed_name, output);
    if (*validate) return cmd_validate(complex_path);
  } catch (const Failure& failure) {
    return report_error(failure.status);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
