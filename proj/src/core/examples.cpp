#include "tqftdef/examples.hpp"

#include <algorithm>
#include <sstream>

#include "tqftdef/error.hpp"

namespace tqftdef {
namespace {

AlgebraData empty_algebra(std::vector<std::string> basis) {
  AlgebraData a;
  const std::size_t n = basis.size();
  a.basis = std::move(basis);
  a.mult = Tensor3(n, n, n);
  a.comult = Tensor3(n, n, n);
  a.unit.assign(n, Scalar(0));
  a.counit.assign(n, Scalar(0));
  return a;
}

std::vector<std::string> matrix_labels(std::size_t rows, std::size_t cols) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  }
  return labels;
}

void check_size(std::size_t value, const char* what) {
  if (value < 1 || value > 6) {
    throw Error(ErrorCode::SizeOutOfRange, std::string(what) + " = " + std::to_string(value) +
                                               " outside 1..6");
  }
}

void require_nonzero(const std::vector<std::vector<Scalar>>& table, std::size_t rows,
                     std::size_t cols, const char* what) {
  if (table.size() != rows) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has wrong number of rows");
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (table[i].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has a row of wrong length");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (is_zero(table[i][j])) {
        throw Error(ErrorCode::ZeroCocycleValue, std::string(what) + "(" + std::to_string(i) +
                                                     "," + std::to_string(j) + ") = 0");
      }
    }
  }
}

}  // namespace

std::size_t GroupTable::inverse(std::size_t g) const {
  for (std::size_t h = 0; h < order(); ++h) {
    if (table[g][h] == identity) return h;
  }
  throw Error(ErrorCode::InvalidGroupTable, "element " + labels[g] + " has no inverse");
}

void validate_group(const GroupTable& group) {
  const std::size_t n = group.order();
  if (n == 0) throw Error(ErrorCode::InvalidGroupTable, "empty group");
  if (group.table.size() != n) throw Error(ErrorCode::InvalidGroupTable, "table is not square");
  for (const auto& row : group.table) {
    if (row.size() != n) throw Error(ErrorCode::InvalidGroupTable, "table is not square");
    for (auto v : row) {
      if (v >= n) throw Error(ErrorCode::InvalidGroupTable, "entry out of range");
    }
  }
  if (group.identity >= n) throw Error(ErrorCode::InvalidGroupTable, "identity out of range");
  for (std::size_t g = 0; g < n; ++g) {
    if (group.table[group.identity][g] != g || group.table[g][group.identity] != g) {
      throw Error(ErrorCode::InvalidGroupTable, "identity law fails at " + group.labels[g]);
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t inv = group.inverse(g);
    if (group.table[inv][g] != group.identity) {
      throw Error(ErrorCode::InvalidGroupTable, "element " + group.labels[g] + " has no two-sided inverse");
    }
    for (std::size_t h = 0; h < n; ++h) {
      for (std::size_t k = 0; k < n; ++k) {
        if (group.table[group.table[g][h]][k] != group.table[g][group.table[h][k]]) {
          throw Error(ErrorCode::InvalidGroupTable, "associativity fails at (" + group.labels[g] +
                                                        "," + group.labels[h] + "," +
                                                        group.labels[k] + ")");
        }
      }
    }
  }
}

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidGroupTable, "cyclic group of order 0");
  GroupTable g;
  for (std::size_t i = 0; i < n; ++i) {
    g.labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
  }
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  }
  return g;
}

GroupTable trivial_group() { return cyclic_group(1); }

GroupTable symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  GroupTable g;
  for (const auto& q : perms) {
    g.labels.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  }
  g.table.assign(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> composed{};
      for (int k = 0; k < 3; ++k) composed[k] = perms[i][perms[j][k]];
      g.table[i][j] = static_cast<std::size_t>(
          std::find(perms.begin(), perms.end(), composed) - perms.begin());
    }
  }
  return g;
}

GroupTable parse_group_table(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> row;
    for (std::string w; words >> w;) row.push_back(w);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::Parse, "group table is empty");
  GroupTable g;
  g.labels = rows.front();
  const std::size_t n = g.labels.size();
  if (rows.size() != n + 1) {
    throw Error(ErrorCode::Parse, "expected " + std::to_string(n) + " table rows, found " +
                                      std::to_string(rows.size() - 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::count(g.labels.begin(), g.labels.end(), g.labels[i]) != 1) {
      throw Error(ErrorCode::Parse, "label " + g.labels[i] + " repeated");
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorCode::Parse, "row " + std::to_string(i) + " has wrong length");
    std::vector<std::size_t> row;
    for (const auto& w : rows[i]) {
      auto it = std::find(g.labels.begin(), g.labels.end(), w);
      if (it == g.labels.end()) throw Error(ErrorCode::Parse, "unknown label " + w);
      row.push_back(static_cast<std::size_t>(it - g.labels.begin()));
    }
    g.table.push_back(std::move(row));
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool is_identity = true;
    for (std::size_t x = 0; x < n; ++x) is_identity = is_identity && g.table[e][x] == x;
    if (is_identity) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::InvalidGroupTable, "no identity element");
  validate_group(g);
  return g;
}

void validate_action(const GroupTable& g, const GroupTable& h, const ActionTable& x) {
  const std::size_t n = x.size();
  if (n == 0) throw Error(ErrorCode::InvalidActionTable, "empty set");
  if (x.right.size() != n || x.left.size() != h.order()) {
    throw Error(ErrorCode::InvalidActionTable, "table shape does not match the groups");
  }
  for (const auto& row : x.right) {
    if (row.size() != g.order()) throw Error(ErrorCode::InvalidActionTable, "right table shape");
    for (auto v : row) {
      if (v >= n) throw Error(ErrorCode::InvalidActionTable, "right action entry out of range");
    }
  }
  for (const auto& row : x.left) {
    if (row.size() != n) throw Error(ErrorCode::InvalidActionTable, "left table shape");
    for (auto v : row) {
      if (v >= n) throw Error(ErrorCode::InvalidActionTable, "left action entry out of range");
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (x.right[p][g.identity] != p) throw Error(ErrorCode::InvalidActionTable, "right identity fails");
    if (x.left[h.identity][p] != p) throw Error(ErrorCode::InvalidActionTable, "left identity fails");
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = 0; b < g.order(); ++b) {
        if (x.right[x.right[p][a]][b] != x.right[p][g.table[a][b]]) {
          throw Error(ErrorCode::InvalidActionTable, "right action not compatible with the product");
        }
      }
    }
    for (std::size_t a = 0; a < h.order(); ++a) {
      for (std::size_t b = 0; b < h.order(); ++b) {
        if (x.left[a][x.left[b][p]] != x.left[h.table[a][b]][p]) {
          throw Error(ErrorCode::InvalidActionTable, "left action not compatible with the product");
        }
      }
      for (std::size_t b = 0; b < g.order(); ++b) {
        if (x.left[a][x.right[p][b]] != x.right[x.left[a][p]][b]) {
          throw Error(ErrorCode::InvalidActionTable, "left and right actions do not commute");
        }
      }
    }
  }
}

ActionTable regular_action(const GroupTable& g, const GroupTable& h,
                           const std::vector<std::size_t>& embedding) {
  if (embedding.size() != h.order()) {
    throw Error(ErrorCode::InvalidActionTable, "embedding has wrong length");
  }
  ActionTable x;
  x.labels = g.labels;
  x.right = g.table;
  for (std::size_t a = 0; a < h.order(); ++a) {
    if (embedding[a] >= g.order()) throw Error(ErrorCode::InvalidActionTable, "embedding out of range");
    x.left.push_back(g.table[embedding[a]]);
  }
  validate_action(g, h, x);
  return x;
}

AlgebraData group_algebra(const GroupTable& group) {
  validate_group(group);
  const std::size_t n = group.order();
  AlgebraData a = empty_algebra(group.labels);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      a.mult(s, t, group.table[s][t]) = 1;
      a.comult(group.table[s][t], s, t) = 1;
    }
  }
  a.unit[group.identity] = 1;
  a.counit[group.identity] = 1;
  a.loop_constant = Scalar(static_cast<long>(n));
  return a;
}

ModuleData regular_module(const AlgebraData& algebra) {
  return ModuleData{algebra.basis, algebra.mult, algebra.comult};
}

SystemData twisted_system(const GroupTable& g, const GroupTable& h, const ActionTable& x,
                          const CocycleTables& cocycles) {
  validate_group(g);
  validate_group(h);
  validate_action(g, h, x);
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  const std::size_t nx = x.size();
  require_nonzero(cocycles.alpha, ng, ng, "alpha");
  require_nonzero(cocycles.beta, nx, ng, "beta");
  require_nonzero(cocycles.gamma, nh, nx, "gamma");

  SystemData sys;
  sys.algebra = empty_algebra(g.labels);
  auto& a = sys.algebra;
  for (std::size_t s = 0; s < ng; ++s) {
    for (std::size_t t = 0; t < ng; ++t) {
      const std::size_t u = g.table[s][t];
      a.mult(s, t, u) = cocycles.alpha[s][t];
      a.comult(u, s, t) = 1 / cocycles.alpha[s][t];
    }
  }
  const Scalar& ee = cocycles.alpha[g.identity][g.identity];
  a.unit[g.identity] = 1 / ee;
  a.counit[g.identity] = ee;
  a.loop_constant = Scalar(static_cast<long>(ng));

  sys.module.basis = x.labels;
  sys.module.act = Tensor3(nx, ng, nx);
  sys.module.coact = Tensor3(nx, nx, ng);
  for (std::size_t p = 0; p < nx; ++p) {
    for (std::size_t s = 0; s < ng; ++s) {
      const std::size_t r = x.right[p][s];
      sys.module.act(p, s, r) = cocycles.beta[p][s];
      sys.module.coact(r, p, s) = 1 / cocycles.beta[p][s];
    }
  }

  sys.defect.basis = h.labels;
  sys.defect.act = Tensor3(nh, nx, nx);
  sys.defect.coact = Tensor3(nx, nh, nx);
  for (std::size_t k = 0; k < nh; ++k) {
    for (std::size_t p = 0; p < nx; ++p) {
      const std::size_t u = x.left[k][p];
      sys.defect.act(k, p, u) = cocycles.gamma[k][p];
      sys.defect.coact(u, k, p) = 1 / cocycles.gamma[k][p];
    }
  }
  sys.defect.algebra = group_algebra(h);
  sys.defect.loop_constant = Scalar(static_cast<long>(nh));
  return sys;
}

CocycleTables CocycleTables::ones(std::size_t g, std::size_t h, std::size_t x) {
  return {std::vector(g, std::vector<Scalar>(g, Scalar(1))),
          std::vector(x, std::vector<Scalar>(g, Scalar(1))),
          std::vector(h, std::vector<Scalar>(x, Scalar(1)))};
}

SystemData gset_system(const GroupTable& g, const GroupTable& h, const ActionTable& x) {
  return twisted_system(g, h, x, CocycleTables::ones(g.order(), h.order(), x.size()));
}

AlgebraData matrix_algebra(std::size_t n) {
  check_size(n, "n");
  AlgebraData a = empty_algebra(matrix_labels(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        a.mult(i * n + j, j * n + k, i * n + k) = 1;
        a.comult(i * n + j, i * n + k, k * n + j) = 1;
      }
    }
    a.unit[i * n + i] = 1;
    a.counit[i * n + i] = 1;
  }
  a.loop_constant = Scalar(static_cast<long>(n));
  return a;
}

SystemData matrix_system(std::size_t n, std::size_t m) {
  check_size(n, "n");
  check_size(m, "m");
  SystemData sys;
  sys.algebra = matrix_algebra(n);
  const std::size_t nb = m * n;
  sys.module.basis = matrix_labels(m, n);
  sys.module.act = Tensor3(nb, n * n, nb);
  sys.module.coact = Tensor3(nb, nb, n * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        sys.module.act(i * n + j, j * n + k, i * n + k) = 1;
        sys.module.coact(i * n + j, i * n + k, k * n + j) = 1;
      }
    }
  }
  sys.defect.basis = matrix_labels(m, m);
  sys.defect.act = Tensor3(m * m, nb, nb);
  sys.defect.coact = Tensor3(nb, m * m, nb);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        // E_ij (in C) times E_jk (in B) = E_ik.
        sys.defect.act(i * m + j, j * n + k, i * n + k) = 1;
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        // E_ij (in B) -> E_ik (in C) (x) E_kj (in B).
        sys.defect.coact(i * n + j, i * m + k, k * n + j) = 1;
      }
    }
  }
  sys.defect.algebra = matrix_algebra(m);
  sys.defect.loop_constant = Scalar(static_cast<long>(m));
  return sys;
}

SystemData trivial_defect_system(const AlgebraData& algebra, const ModuleData& module) {
  SystemData sys;
  sys.algebra = algebra;
  sys.module = module;
  const std::size_t nb = module.dim();
  sys.defect.basis = {"1"};
  sys.defect.act = Tensor3(1, nb, nb);
  sys.defect.coact = Tensor3(nb, 1, nb);
  for (std::size_t q = 0; q < nb; ++q) {
    sys.defect.act(0, q, q) = 1;
    sys.defect.coact(q, 0, q) = 1;
  }
  AlgebraData k = empty_algebra({"1"});
  k.mult(0, 0, 0) = 1;
  k.comult(0, 0, 0) = 1;
  k.unit[0] = 1;
  k.counit[0] = 1;
  k.loop_constant = Scalar(1);
  sys.defect.algebra = std::move(k);
  sys.defect.loop_constant = Scalar(1);

  try {
    check_dimensions(sys);
    if (!sys.algebra.loop_constant) sys.algebra.loop_constant = compute_loop_constant(sys.algebra);
  } catch (const Error& error) {
    throw Error(ErrorCode::InvalidModule, error.what());
  }
  std::vector<CheckResult> results;
  for (int id = 2; id <= 13; ++id) results.push_back(check_equation(sys, id));
  results.push_back(check_unit_law(sys.algebra));
  results.push_back(check_counit_law(sys.algebra));
  results.push_back(check_symmetric(sys.algebra));
  results.push_back(check_projective_specialness(sys.algebra, sys.algebra.loop_constant));
  results.push_back(verify_module_loop(sys));
  for (const auto& r : results) {
    if (!r.passed) throw Error(ErrorCode::InvalidModule, "check " + r.name + " fails");
  }
  return sys;
}

const std::vector<std::string>& shipped_system_names() {
  static const std::vector<std::string> names = {"example1_z2",  "example1_s3",  "example3_1x1",
                                                 "example3_2x2", "example3_2x3", "example4_z2"};
  return names;
}

SystemData shipped_system(std::string_view name) {
  auto regular = [](const GroupTable& g) {
    std::vector<std::size_t> identity(g.order());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
    return gset_system(g, g, regular_action(g, g, identity));
  };
  if (name == "example1_z2") return regular(cyclic_group(2));
  if (name == "example1_s3") return regular(symmetric_group3());
  if (name == "example3_1x1") return matrix_system(1, 1);
  if (name == "example3_2x2") return matrix_system(2, 2);
  if (name == "example3_2x3") return matrix_system(2, 3);
  if (name == "example4_z2") {
    const AlgebraData a = group_algebra(cyclic_group(2));
    return trivial_defect_system(a, regular_module(a));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown system " + std::string(name));
}

}  // namespace tqftdef
