#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tqftdef/scalar.hpp"

namespace tqftdef {

/// Dense tensor whose axes are named by integer labels (edge ids).
/// Row-major: the last label varies fastest.
struct LabeledTensor {
  std::vector<int> labels;
  std::vector<std::size_t> dims;
  std::vector<Scalar> data;
  int id = 0;  ///< smallest id of the leaves merged into this tensor

  std::size_t size() const noexcept { return data.size(); }
};

enum class ContractionOrder : unsigned char {
  /// Repeatedly contract the connected pair with the smallest result,
  /// ties broken by the lowest ids.
  Greedy,
  /// Left to right: ((t0 t1) t2) ...
  Sequential,
};

struct ContractionStats {
  std::uint64_t peak_entries = 0;
  std::size_t steps = 0;
};

/// Contracts two tensors, summing every shared label that is not in `keep`.
/// Throws OutOfMemoryBudget if the result would exceed `budget` entries.
LabeledTensor contract_pair(const LabeledTensor& lhs, const LabeledTensor& rhs,
                            const std::vector<int>& keep, std::uint64_t budget);

/// Contracts a whole network. Every label must occur at most twice; labels in
/// `open_labels` survive and come out in that order.
LabeledTensor contract_network(std::vector<LabeledTensor> tensors,
                               const std::vector<int>& open_labels, ContractionOrder order,
                               std::uint64_t budget, ContractionStats* stats = nullptr);

}  // namespace tqftdef
