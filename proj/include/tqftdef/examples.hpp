#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqftdef/frobenius_data.hpp"

namespace tqftdef {

/// Finite group given by its multiplication table: table[g][h] = index of gh.
struct GroupTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;

  std::size_t order() const noexcept { return labels.size(); }
  std::size_t inverse(std::size_t g) const;
};

/// Throws InvalidGroupTable unless the table is a group.
void validate_group(const GroupTable& group);

GroupTable trivial_group();
GroupTable cyclic_group(std::size_t n);
/// Permutations of {0,1,2} in lexicographic order; composition (pq)(i) = p(q(i)).
GroupTable symmetric_group3();

/// Text format: first line lists the element labels, then one row per left
/// factor giving the labels of the products. The first label is not assumed
/// to be the identity. Lines starting with '#' are ignored.
GroupTable parse_group_table(std::string_view text);

/// Set X with a right action of G and a left action of H.
struct ActionTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> right;  ///< right[x][g] = x.g
  std::vector<std::vector<std::size_t>> left;   ///< left[h][x]  = h.x

  std::size_t size() const noexcept { return labels.size(); }
};

/// Throws InvalidActionTable unless both tables are actions and commute.
void validate_action(const GroupTable& g, const GroupTable& h, const ActionTable& x);

/// X = G, right action by multiplication, H acting on the left through the
/// homomorphism `embedding` (embedding[h] = element of G).
ActionTable regular_action(const GroupTable& g, const GroupTable& h,
                           const std::vector<std::size_t>& embedding);

/// K[G]: basis = group elements, comultiplication by factorisations, counit =
/// coefficient of the identity, loop constant |G|.
AlgebraData group_algebra(const GroupTable& group);

/// A acting and coacting on itself by (co)multiplication.
ModuleData regular_module(const AlgebraData& algebra);

/// A = K[G], C = K[H], B = Span(X).
SystemData gset_system(const GroupTable& g, const GroupTable& h, const ActionTable& x);

/// Tables of nonzero rationals: alpha[g][f], beta[x][g], gamma[h][x].
struct CocycleTables {
  std::vector<std::vector<Scalar>> alpha;
  std::vector<std::vector<Scalar>> beta;
  std::vector<std::vector<Scalar>> gamma;

  static CocycleTables ones(std::size_t g, std::size_t h, std::size_t x);
};

/// gset_system twisted by (alpha, beta, gamma). The cocycle conditions are not
/// checked here; run check_system on the result. Throws ZeroCocycleValue.
SystemData twisted_system(const GroupTable& g, const GroupTable& h, const ActionTable& x,
                          const CocycleTables& cocycles);

/// A = Mat(n,n), B = Mat(m,n), C = Mat(m,m) with matrix products and the
/// elementary-matrix comultiplications. 1 <= n,m <= 6, else SizeOutOfRange.
SystemData matrix_system(std::size_t n, std::size_t m);

/// Mat(n,n) alone.
AlgebraData matrix_algebra(std::size_t n);

/// C = K acting by scalars, lambda = 1. Throws InvalidModule unless (A,B)
/// pass the algebra and module checks.
SystemData trivial_defect_system(const AlgebraData& algebra, const ModuleData& module);

/// The systems shipped under data/systems, by name:
/// example1_z2, example1_s3, example3_1x1, example3_2x2, example3_2x3, example4_z2.
SystemData shipped_system(std::string_view name);
const std::vector<std::string>& shipped_system_names();

}  // namespace tqftdef
