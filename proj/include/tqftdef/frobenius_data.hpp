#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqftdef/coefficient.hpp"
#include "tqftdef/scalar.hpp"
#include "tqftdef/tensor.hpp"

namespace tqftdef {

/// Finite-dimensional algebra with comultiplication, unit and counit, given
/// by structure constants in the basis `basis`.
struct AlgebraData {
  std::vector<std::string> basis;
  Tensor3 mult;    ///< mult(s,t,u):   s*t  = sum_u mult(s,t,u) u
  Tensor3 comult;  ///< comult(t,r,s): d(t) = sum_{r,s} comult(t,r,s) r(x)s
  Vector unit;
  Vector counit;
  /// Cached loop constant rho with mult o comult = rho Id. Builders and the
  /// loader fill it in; the checks verify it rather than trusting it.
  std::optional<Scalar> loop_constant;

  std::size_t dim() const noexcept { return basis.size(); }
};

/// Right module/comodule B over A.
struct ModuleData {
  std::vector<std::string> basis;
  Tensor3 act;    ///< act(q,s,r):   q.s = sum_r act(q,s,r) r          (q,r in B, s in A)
  Tensor3 coact;  ///< coact(t,r,s): dB(t) = sum coact(t,r,s) r(x)s    (t,r in B, s in A)

  std::size_t dim() const noexcept { return basis.size(); }
};

/// Defect data C with its left "action" and "coaction" on B.
struct DefectData {
  std::vector<std::string> basis;
  Tensor3 act;    ///< act(r,q,u):   r.q = sum_u act(r,q,u) u          (r in C, q,u in B)
  Tensor3 coact;  ///< coact(t,r,s): d(t) = sum coact(t,r,s) r(x)s     (t,s in B, r in C)
  /// Optional algebra structure on C; its basis must equal `basis`.
  std::optional<AlgebraData> algebra;
  /// lambda. Required when `algebra` is absent.
  std::optional<Scalar> loop_constant;

  std::size_t dim() const noexcept { return basis.size(); }
};

struct SystemData {
  AlgebraData algebra;
  ModuleData module;
  DefectData defect;

  /// Coefficient tensor for a triangle class, storage order as in
  /// argument_kinds().
  const Tensor3& coefficient(Coefficient tag) const;
  Tensor3& coefficient(Coefficient tag);
  std::size_t dim(EdgeKind kind) const;
};

/// Throws DimensionMismatch if any table disagrees with the basis sizes.
void check_dimensions(const SystemData& system);
void check_dimensions(const AlgebraData& algebra);

struct Witness {
  std::vector<std::string> variables;
  std::vector<std::size_t> values;
  Scalar lhs;
  Scalar rhs;
};

struct CheckResult {
  std::string name;      ///< "eq2".."eq36" or the name of a law
  int equation_id = 0;   ///< 2..36, 0 for named laws
  bool passed = true;
  std::optional<Witness> witness;  ///< first violation in lexicographic order
  std::string detail;
};

inline constexpr int kFirstEquation = 2;
inline constexpr int kLastEquation = 36;

enum class EquationScale { None, Rho, Lambda };

/// Static description of one invariance equation.
struct EquationInfo {
  int id;
  const char* lhs;  ///< e.g. "a(q,u,r) a(t,s,u)"; arguments in storage order
  const char* rhs;
  EquationScale scale;  ///< factor applied to the left-hand side
  const char* move;     ///< "2-2", "1-3" or "2-4"
};

const EquationInfo& equation_info(int equation_id);

/// Evaluates both sides of one of the 35 invariance equations for every
/// assignment of its free indices. Equations from 1-3 moves are checked as
/// rho*lhs == rhs, the 2-4 equation as lambda*lhs == rhs.
CheckResult check_equation(const SystemData& system, int equation_id);

/// Equations 2..36 followed by the named laws. Never throws on a failing
/// check; failures are reported in the result list.
std::vector<CheckResult> check_system(const SystemData& system);

bool all_passed(const std::vector<CheckResult>& results);

/// rho such that mult o comult = rho Id.
/// Throws NotProjectivelySpecial or ZeroLoopConstant.
Scalar compute_loop_constant(const AlgebraData& algebra);

CheckResult check_symmetric(const AlgebraData& algebra);
CheckResult check_unit_law(const AlgebraData& algebra);
CheckResult check_counit_law(const AlgebraData& algebra);
CheckResult check_projective_specialness(const AlgebraData& algebra,
                                         const std::optional<Scalar>& loop_constant);
CheckResult verify_module_loop(const SystemData& system);

/// A system that passed check_system, with its loop constants resolved.
class ValidatedSystem {
 public:
  /// Throws InvalidSystem listing the failed checks.
  static ValidatedSystem validate(SystemData system);

  const SystemData& data() const noexcept { return data_; }
  const Scalar& rho() const noexcept { return rho_; }
  const Scalar& lambda() const noexcept { return lambda_; }

 private:
  ValidatedSystem(SystemData data, Scalar rho, Scalar lambda)
      : data_(std::move(data)), rho_(std::move(rho)), lambda_(std::move(lambda)) {}

  SystemData data_;
  Scalar rho_;
  Scalar lambda_;
};

}  // namespace tqftdef
