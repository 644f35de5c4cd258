#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "tqftdef/error.hpp"
#include "tqftdef/frobenius_data.hpp"

namespace tqftdef {
namespace {

using enum EquationScale;

// Arguments in storage order; A, B, C denote abar, bbar, cbar.
constexpr std::array<EquationInfo, 35> kEquations = {{
    {2, "a(q,u,r) a(t,s,u)", "a(v,s,r) a(q,t,v)", None, "2-2"},
    {3, "A(q,r,u) A(u,s,t)", "A(v,r,s) A(q,v,t)", None, "2-2"},
    {4, "a(q,u,r) A(t,u,s)", "A(v,r,s) a(q,t,v)", None, "2-2"},
    {5, "A(q,r,u) a(u,t,s)", "A(v,r,s) a(q,t,v)", None, "2-2"},
    {6, "A(q,r,u) a(s,u,t)", "a(v,s,r) A(q,v,t)", None, "2-2"},
    {7, "a(q,u,r) A(s,t,u)", "a(v,s,r) A(q,v,t)", None, "2-2"},
    {8, "b(q,u,r) a(t,s,u)", "b(v,s,r) b(q,t,v)", None, "2-2"},
    {9, "B(q,r,u) A(u,s,t)", "B(v,r,s) B(q,v,t)", None, "2-2"},
    {10, "b(q,u,r) A(t,u,s)", "B(v,r,s) b(q,t,v)", None, "2-2"},
    {11, "B(q,r,u) a(u,t,s)", "B(v,r,s) b(q,t,v)", None, "2-2"},
    {12, "B(q,r,u) a(s,u,t)", "b(v,s,r) B(q,v,t)", None, "2-2"},
    {13, "b(q,u,r) A(s,t,u)", "b(v,s,r) B(q,v,t)", None, "2-2"},
    {14, "c(r,q,u) b(u,t,s)", "c(r,v,s) b(q,t,v)", None, "2-2"},
    {15, "C(q,r,u) B(u,s,t)", "C(v,r,s) B(q,v,t)", None, "2-2"},
    {16, "C(q,r,v) b(v,t,s)", "C(u,r,s) b(q,t,u)", None, "2-2"},
    {17, "c(r,q,u) B(u,s,t)", "c(r,v,s) B(q,v,t)", None, "2-2"},
    {18, "a(t,s,r)", "A(sigma,r,tau) a(s,tau,rho) a(t,rho,sigma)", Rho, "1-3"},
    {19, "a(t,s,r)", "a(sigma,tau,r) a(rho,s,tau) A(t,sigma,rho)", Rho, "1-3"},
    {20, "a(t,s,r)", "a(t,rho,sigma) A(s,rho,tau) a(sigma,tau,r)", Rho, "1-3"},
    {21, "a(t,s,r)", "a(sigma,t,rho) a(rho,s,tau) A(tau,sigma,r)", Rho, "1-3"},
    {22, "A(t,r,s)", "A(sigma,r,tau) A(tau,s,rho) a(t,rho,sigma)", Rho, "1-3"},
    {23, "A(t,r,s)", "A(tau,sigma,r) A(rho,tau,s) a(sigma,t,rho)", Rho, "1-3"},
    {24, "A(t,r,s)", "a(sigma,tau,r) A(rho,tau,s) A(t,sigma,rho)", Rho, "1-3"},
    {25, "A(t,r,s)", "A(sigma,r,tau) a(tau,rho,s) A(t,sigma,rho)", Rho, "1-3"},
    {26, "B(t,r,s)", "B(sigma,r,tau) A(tau,s,rho) b(t,rho,sigma)", Rho, "1-3"},
    {27, "B(t,r,s)", "b(sigma,tau,r) A(rho,tau,s) B(t,sigma,rho)", Rho, "1-3"},
    {28, "B(t,r,s)", "B(sigma,r,tau) a(tau,rho,s) B(t,sigma,rho)", Rho, "1-3"},
    {29, "b(t,s,r)", "B(sigma,r,tau) a(s,tau,rho) b(t,rho,sigma)", Rho, "1-3"},
    {30, "b(t,s,r)", "b(sigma,tau,r) a(rho,s,tau) B(t,sigma,rho)", Rho, "1-3"},
    {31, "b(t,s,r)", "b(t,rho,sigma) A(s,rho,tau) b(sigma,tau,r)", Rho, "1-3"},
    {32, "C(t,r,s)", "C(sigma,r,tau) B(tau,s,rho) b(t,rho,sigma)", Rho, "1-3"},
    {33, "c(r,t,s)", "c(r,sigma,tau) B(tau,s,rho) b(t,rho,sigma)", Rho, "1-3"},
    {34, "C(t,r,s)", "C(sigma,r,tau) b(tau,rho,s) B(t,sigma,rho)", Rho, "1-3"},
    {35, "c(r,t,s)", "c(r,sigma,tau) b(tau,rho,s) B(t,sigma,rho)", Rho, "1-3"},
    {36, "c(f,r,q) C(t,f,s)", "c(k,r,g) C(j,k,s) C(t,h,j) c(h,g,q)", Lambda, "2-4"},
}};

struct Term {
  Coefficient tag;
  std::array<std::size_t, 3> vars;
};

struct Side {
  std::vector<Term> terms;
  std::vector<std::size_t> bound;  // in order of first appearance
};

struct Equation {
  std::vector<std::string> names;
  std::vector<EdgeKind> kinds;
  std::vector<std::size_t> free;
  Side lhs;
  Side rhs;
};

Coefficient tag_from_letter(char letter) {
  switch (letter) {
    case 'a': return Coefficient::a;
    case 'A': return Coefficient::abar;
    case 'b': return Coefficient::b;
    case 'B': return Coefficient::bbar;
    case 'c': return Coefficient::c;
    case 'C': return Coefficient::cbar;
    default: throw Error(ErrorCode::InvalidArgument, std::string("bad tensor letter ") + letter);
  }
}

std::vector<std::pair<Coefficient, std::array<std::string, 3>>> parse_side(const std::string& text) {
  std::vector<std::pair<Coefficient, std::array<std::string, 3>>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    const Coefficient tag = tag_from_letter(text[pos]);
    const std::size_t close = text.find(')', pos);
    const std::string inside = text.substr(pos + 2, close - pos - 2);
    std::array<std::string, 3> args;
    std::size_t start = 0;
    for (std::size_t slot = 0; slot < 3; ++slot) {
      const std::size_t comma = slot < 2 ? inside.find(',', start) : inside.size();
      args[slot] = inside.substr(start, comma - start);
      start = comma + 1;
    }
    out.emplace_back(tag, args);
    pos = close + 1;
  }
  return out;
}

Equation build(const EquationInfo& info) {
  Equation eq;
  const auto lhs = parse_side(info.lhs);
  const auto rhs = parse_side(info.rhs);
  std::map<std::string, std::size_t> index;
  auto intern = [&](const std::string& name, EdgeKind kind) {
    auto [it, inserted] = index.emplace(name, eq.names.size());
    if (inserted) {
      eq.names.push_back(name);
      eq.kinds.push_back(kind);
    } else if (eq.kinds[it->second] != kind) {
      throw Error(ErrorCode::InvalidArgument, "equation " + std::to_string(info.id) +
                                                  ": variable " + name + " used with two kinds");
    }
    return it->second;
  };
  auto convert = [&](const auto& parsed, Side& side) {
    for (const auto& [tag, args] : parsed) {
      Term term{tag, {}};
      const auto kinds = argument_kinds(tag);
      for (std::size_t slot = 0; slot < 3; ++slot) term.vars[slot] = intern(args[slot], kinds[slot]);
      side.terms.push_back(term);
    }
  };
  convert(lhs, eq.lhs);
  const std::size_t lhs_count = eq.names.size();
  convert(rhs, eq.rhs);

  auto used = [](const Side& side, std::size_t var) {
    return std::any_of(side.terms.begin(), side.terms.end(), [&](const Term& t) {
      return std::find(t.vars.begin(), t.vars.end(), var) != t.vars.end();
    });
  };
  for (std::size_t v = 0; v < eq.names.size(); ++v) {
    const bool in_lhs = v < lhs_count;
    const bool in_rhs = used(eq.rhs, v);
    if (in_lhs && in_rhs) eq.free.push_back(v);
    else if (in_lhs) eq.lhs.bound.push_back(v);
  }
  // Bound variables of the right side, in order of first appearance there.
  for (const auto& term : eq.rhs.terms) {
    for (auto v : term.vars) {
      if (v >= lhs_count && std::find(eq.rhs.bound.begin(), eq.rhs.bound.end(), v) == eq.rhs.bound.end()) {
        eq.rhs.bound.push_back(v);
      }
    }
  }
  return eq;
}

const std::vector<Equation>& equations() {
  static const std::vector<Equation> table = [] {
    std::vector<Equation> out;
    for (const auto& info : kEquations) out.push_back(build(info));
    return out;
  }();
  return table;
}

// Sum over the bound variables of one side with the free ones fixed in
// `values`. Terms are multiplied in as soon as their variables are assigned.
class SideEvaluator {
 public:
  SideEvaluator(const SystemData& system, const Equation& eq, const Side& side)
      : system_(system), side_(side) {
    for (auto v : side.bound) dims_.push_back(system.dim(eq.kinds[v]));
    ready_at_.assign(side.bound.size() + 1, {});
    for (std::size_t t = 0; t < side.terms.size(); ++t) {
      std::size_t depth = 0;
      for (auto v : side.terms[t].vars) {
        auto it = std::find(side.bound.begin(), side.bound.end(), v);
        if (it != side.bound.end()) {
          depth = std::max(depth, static_cast<std::size_t>(it - side.bound.begin()) + 1);
        }
      }
      ready_at_[depth].push_back(t);
    }
  }

  Scalar evaluate(std::vector<std::size_t>& values) const {
    Scalar total = 0;
    recurse(values, 0, Scalar(1), total);
    return total;
  }

 private:
  void recurse(std::vector<std::size_t>& values, std::size_t depth, Scalar partial,
               Scalar& total) const {
    for (auto t : ready_at_[depth]) {
      const Term& term = side_.terms[t];
      partial *= system_.coefficient(term.tag)(values[term.vars[0]], values[term.vars[1]],
                                               values[term.vars[2]]);
      if (is_zero(partial)) return;
    }
    if (depth == side_.bound.size()) {
      total += partial;
      return;
    }
    const auto var = side_.bound[depth];
    for (std::size_t i = 0; i < dims_[depth]; ++i) {
      values[var] = i;
      recurse(values, depth + 1, partial, total);
    }
  }

  const SystemData& system_;
  const Side& side_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<std::size_t>> ready_at_;
};

std::optional<Scalar> resolved_lambda(const SystemData& system) {
  if (system.defect.loop_constant) return system.defect.loop_constant;
  if (system.defect.algebra && system.defect.algebra->loop_constant) {
    return system.defect.algebra->loop_constant;
  }
  return std::nullopt;
}

}  // namespace

const EquationInfo& equation_info(int equation_id) {
  if (equation_id < kFirstEquation || equation_id > kLastEquation) {
    throw Error(ErrorCode::UnknownEquationId, std::to_string(equation_id));
  }
  return kEquations[static_cast<std::size_t>(equation_id - kFirstEquation)];
}

CheckResult check_equation(const SystemData& system, int equation_id) {
  const EquationInfo& info = equation_info(equation_id);
  check_dimensions(system);
  const Equation& eq = equations()[static_cast<std::size_t>(equation_id - kFirstEquation)];

  CheckResult result;
  result.name = "eq" + std::to_string(equation_id);
  result.equation_id = equation_id;

  Scalar scale = 1;
  if (info.scale != None) {
    const auto constant =
        info.scale == Rho ? system.algebra.loop_constant : resolved_lambda(system);
    if (!constant) {
      result.passed = false;
      result.detail = "loop constant undefined";
      return result;
    }
    scale = *constant;
  }

  const SideEvaluator lhs(system, eq, eq.lhs);
  const SideEvaluator rhs(system, eq, eq.rhs);
  std::vector<std::size_t> values(eq.names.size(), 0);
  std::vector<std::size_t> free_dims;
  for (auto v : eq.free) free_dims.push_back(system.dim(eq.kinds[v]));
  if (std::find(free_dims.begin(), free_dims.end(), 0u) != free_dims.end()) return result;

  std::vector<std::size_t> tuple(eq.free.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < eq.free.size(); ++i) values[eq.free[i]] = tuple[i];
    const Scalar left = scale * lhs.evaluate(values);
    const Scalar right = rhs.evaluate(values);
    if (left != right) {
      Witness witness;
      for (std::size_t i = 0; i < eq.free.size(); ++i) {
        witness.variables.push_back(eq.names[eq.free[i]]);
        witness.values.push_back(tuple[i]);
      }
      witness.lhs = left;
      witness.rhs = right;
      result.passed = false;
      result.witness = std::move(witness);
      if (info.scale != None) {
        result.detail = info.scale == Rho ? "left side scaled by rho" : "left side scaled by lambda";
      }
      return result;
    }
    std::size_t axis = tuple.size();
    while (axis > 0) {
      --axis;
      if (++tuple[axis] < free_dims[axis]) break;
      tuple[axis] = 0;
      if (axis == 0) return result;
    }
    if (tuple.empty()) return result;
  }
}

}  // namespace tqftdef
