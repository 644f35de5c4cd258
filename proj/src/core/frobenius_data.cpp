#include "tqftdef/frobenius_data.hpp"

#include <array>
#include <functional>

#include "tqftdef/error.hpp"

namespace tqftdef {
namespace {

void expect_dims(const Tensor3& tensor, std::array<std::size_t, 3> dims, const std::string& what) {
  if (tensor.dims() != dims) {
    throw Error(ErrorCode::DimensionMismatch,
                what + " has shape " + std::to_string(tensor.dims()[0]) + "x" +
                    std::to_string(tensor.dims()[1]) + "x" + std::to_string(tensor.dims()[2]) +
                    ", expected " + std::to_string(dims[0]) + "x" + std::to_string(dims[1]) + "x" +
                    std::to_string(dims[2]));
  }
}

void expect_size(const Vector& vector, std::size_t size, const std::string& what) {
  if (vector.size() != size) {
    throw Error(ErrorCode::DimensionMismatch, what + " has length " +
                                                  std::to_string(vector.size()) + ", expected " +
                                                  std::to_string(size));
  }
}

void check_algebra_dimensions(const AlgebraData& algebra, const std::string& prefix) {
  const std::size_t n = algebra.dim();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, prefix + "basis is empty");
  expect_dims(algebra.mult, {n, n, n}, prefix + "mult");
  expect_dims(algebra.comult, {n, n, n}, prefix + "comult");
  expect_size(algebra.unit, n, prefix + "unit");
  expect_size(algebra.counit, n, prefix + "counit");
}

std::optional<Scalar> resolved_lambda(const SystemData& system) {
  if (system.defect.loop_constant) return system.defect.loop_constant;
  if (system.defect.algebra && system.defect.algebra->loop_constant) {
    return system.defect.algebra->loop_constant;
  }
  return std::nullopt;
}

// Scans a dim x dim table of (left, right) pairs; records the first mismatch.
CheckResult compare_matrix(std::string name, std::size_t rows, std::size_t cols,
                           const std::function<std::pair<Scalar, Scalar>(std::size_t, std::size_t)>& sides) {
  CheckResult result;
  result.name = std::move(name);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      auto [lhs, rhs] = sides(i, j);
      if (lhs != rhs) {
        result.passed = false;
        result.witness = Witness{{"x", "y"}, {i, j}, lhs, rhs};
        return result;
      }
    }
  }
  return result;
}

Scalar delta(std::size_t i, std::size_t j) { return i == j ? Scalar(1) : Scalar(0); }

// (mult o comult)(t) coefficient on u.
Scalar loop_entry(const Tensor3& comult, const Tensor3& mult, std::size_t t, std::size_t u) {
  Scalar sum = 0;
  const auto& d = comult.dims();
  for (std::size_t r = 0; r < d[1]; ++r) {
    for (std::size_t s = 0; s < d[2]; ++s) {
      const Scalar& x = comult(t, r, s);
      if (!is_zero(x)) sum += x * mult(r, s, u);
    }
  }
  return sum;
}

CheckResult renamed(CheckResult result, const std::string& name) {
  result.name = name;
  return result;
}

}  // namespace

const Tensor3& SystemData::coefficient(Coefficient tag) const {
  switch (tag) {
    case Coefficient::a: return algebra.mult;
    case Coefficient::abar: return algebra.comult;
    case Coefficient::b: return module.act;
    case Coefficient::bbar: return module.coact;
    case Coefficient::c: return defect.act;
    case Coefficient::cbar: return defect.coact;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown coefficient");
}

Tensor3& SystemData::coefficient(Coefficient tag) {
  return const_cast<Tensor3&>(std::as_const(*this).coefficient(tag));
}

std::size_t SystemData::dim(EdgeKind kind) const {
  switch (kind) {
    case EdgeKind::A: return algebra.dim();
    case EdgeKind::B: return module.dim();
    case EdgeKind::C: return defect.dim();
  }
  return 0;
}

void check_dimensions(const AlgebraData& algebra) { check_algebra_dimensions(algebra, ""); }

void check_dimensions(const SystemData& system) {
  check_algebra_dimensions(system.algebra, "algebra.");
  const std::size_t m = system.module.dim();
  const std::size_t k = system.defect.dim();
  if (m == 0) throw Error(ErrorCode::DimensionMismatch, "module basis is empty");
  if (k == 0) throw Error(ErrorCode::DimensionMismatch, "defect basis is empty");
  for (auto tag : kAllCoefficients) {
    const auto kinds = argument_kinds(tag);
    expect_dims(system.coefficient(tag),
                {system.dim(kinds[0]), system.dim(kinds[1]), system.dim(kinds[2])},
                std::string(name(tag)));
  }
  if (system.defect.algebra) {
    check_algebra_dimensions(*system.defect.algebra, "defect.algebra.");
    if (system.defect.algebra->dim() != k) {
      throw Error(ErrorCode::DimensionMismatch, "defect algebra basis differs from defect basis");
    }
  }
}

Scalar compute_loop_constant(const AlgebraData& algebra) {
  check_dimensions(algebra);
  const std::size_t n = algebra.dim();
  const Scalar rho = loop_entry(algebra.comult, algebra.mult, 0, 0);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t u = 0; u < n; ++u) {
      if (loop_entry(algebra.comult, algebra.mult, t, u) != (t == u ? rho : Scalar(0))) {
        throw Error(ErrorCode::NotProjectivelySpecial,
                    "mult o comult is not a multiple of the identity (entry " +
                        std::to_string(t) + "," + std::to_string(u) + ")");
      }
    }
  }
  if (is_zero(rho)) throw Error(ErrorCode::ZeroLoopConstant, "mult o comult is zero");
  return rho;
}

CheckResult check_unit_law(const AlgebraData& algebra) {
  const std::size_t n = algebra.dim();
  // Rows 0..n-1: 1*y; rows n..2n-1: y*1.
  return compare_matrix("unit_law", 2 * n, n, [&](std::size_t i, std::size_t u) {
    const std::size_t y = i % n;
    Scalar sum = 0;
    for (std::size_t s = 0; s < n; ++s) {
      sum += algebra.unit[s] * (i < n ? algebra.mult(s, y, u) : algebra.mult(y, s, u));
    }
    return std::pair{sum, delta(y, u)};
  });
}

CheckResult check_counit_law(const AlgebraData& algebra) {
  const std::size_t n = algebra.dim();
  return compare_matrix("counit_law", 2 * n, n, [&](std::size_t i, std::size_t u) {
    const std::size_t t = i % n;
    Scalar sum = 0;
    for (std::size_t s = 0; s < n; ++s) {
      sum += algebra.counit[s] * (i < n ? algebra.comult(t, s, u) : algebra.comult(t, u, s));
    }
    return std::pair{sum, delta(t, u)};
  });
}

CheckResult check_symmetric(const AlgebraData& algebra) {
  const std::size_t n = algebra.dim();
  return compare_matrix("symmetry", n, n, [&](std::size_t x, std::size_t y) {
    Scalar xy = 0;
    Scalar yx = 0;
    for (std::size_t u = 0; u < n; ++u) {
      xy += algebra.mult(x, y, u) * algebra.counit[u];
      yx += algebra.mult(y, x, u) * algebra.counit[u];
    }
    return std::pair{xy, yx};
  });
}

CheckResult check_projective_specialness(const AlgebraData& algebra,
                                         const std::optional<Scalar>& loop_constant) {
  if (!loop_constant) {
    CheckResult result;
    result.name = "projective_specialness";
    result.passed = false;
    result.detail = "loop constant undefined";
    return result;
  }
  if (is_zero(*loop_constant)) {
    CheckResult result;
    result.name = "projective_specialness";
    result.passed = false;
    result.detail = "loop constant is zero";
    return result;
  }
  const std::size_t n = algebra.dim();
  auto result = compare_matrix("projective_specialness", n, n, [&](std::size_t t, std::size_t u) {
    return std::pair{loop_entry(algebra.comult, algebra.mult, t, u), Scalar(*loop_constant * delta(t, u))};
  });
  result.detail = "rho = " + format_scalar(*loop_constant);
  return result;
}

CheckResult verify_module_loop(const SystemData& system) {
  CheckResult result;
  result.name = "module_loop";
  const auto& rho = system.algebra.loop_constant;
  if (!rho) {
    result.passed = false;
    result.detail = "loop constant undefined";
    return result;
  }
  const std::size_t m = system.module.dim();
  result = compare_matrix("module_loop", m, m, [&](std::size_t t, std::size_t u) {
    return std::pair{loop_entry(system.module.coact, system.module.act, t, u), Scalar(*rho * delta(t, u))};
  });
  result.detail = "rho = " + format_scalar(*rho);
  return result;
}

std::vector<CheckResult> check_system(const SystemData& system) {
  std::vector<CheckResult> results;
  try {
    check_dimensions(system);
  } catch (const Error& error) {
    CheckResult failed;
    failed.name = "dimensions";
    failed.passed = false;
    failed.detail = error.what();
    results.push_back(std::move(failed));
    return results;
  }
  for (int id = kFirstEquation; id <= kLastEquation; ++id) {
    results.push_back(check_equation(system, id));
  }
  results.push_back(check_unit_law(system.algebra));
  results.push_back(check_counit_law(system.algebra));
  results.push_back(check_symmetric(system.algebra));
  results.push_back(check_projective_specialness(system.algebra, system.algebra.loop_constant));
  results.push_back(verify_module_loop(system));
  if (system.defect.algebra) {
    const auto& c = *system.defect.algebra;
    results.push_back(renamed(check_unit_law(c), "defect_unit_law"));
    results.push_back(renamed(check_counit_law(c), "defect_counit_law"));
    auto special = check_projective_specialness(c, resolved_lambda(system));
    special.name = "defect_projective_specialness";
    if (!special.detail.empty() && special.detail.starts_with("rho")) {
      special.detail = "lambda" + special.detail.substr(3);
    }
    results.push_back(std::move(special));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

ValidatedSystem ValidatedSystem::validate(SystemData system) {
  const auto results = check_system(system);
  std::string failed;
  for (const auto& r : results) {
    if (r.passed) continue;
    if (!failed.empty()) failed += ", ";
    failed += r.name;
  }
  if (!failed.empty()) throw Error(ErrorCode::InvalidSystem, "failed checks: " + failed);
  Scalar rho = *system.algebra.loop_constant;
  Scalar lambda = *resolved_lambda(system);
  return ValidatedSystem(std::move(system), std::move(rho), std::move(lambda));
}

}  // namespace tqftdef
