#include "tqftdef/tensor_network.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

#include "tqftdef/error.hpp"

namespace tqftdef {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_product(const std::vector<std::size_t>& dims) {
  std::uint64_t total = 1;
  for (auto d : dims) {
    if (d != 0 && total > kSaturated / d) return kSaturated;
    total *= d;
  }
  return total;
}

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];
  return strides;
}

bool contains(const std::vector<int>& labels, int label) {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

// Nonzero entry of one operand, split into the part of the result offset it
// determines and the key of its summed indices.
struct Entry {
  std::size_t key;
  std::size_t offset;
  const Scalar* value;
};

std::vector<Entry> collect_entries(const LabeledTensor& tensor, const std::vector<int>& summed,
                                   const std::vector<std::size_t>& summed_dims,
                                   const std::vector<int>& result_labels,
                                   const std::vector<std::size_t>& result_strides) {
  const std::size_t rank = tensor.labels.size();
  std::vector<std::size_t> key_weight(rank, 0);
  std::vector<std::size_t> result_weight(rank, 0);
  const auto key_strides = strides_of(summed_dims);
  for (std::size_t axis = 0; axis < rank; ++axis) {
    const int label = tensor.labels[axis];
    if (auto it = std::find(summed.begin(), summed.end(), label); it != summed.end()) {
      key_weight[axis] = key_strides[static_cast<std::size_t>(it - summed.begin())];
    } else {
      auto rit = std::find(result_labels.begin(), result_labels.end(), label);
      result_weight[axis] = result_strides[static_cast<std::size_t>(rit - result_labels.begin())];
    }
  }

  std::vector<Entry> entries;
  std::vector<std::size_t> index(rank, 0);
  for (std::size_t flat = 0; flat < tensor.data.size(); ++flat) {
    if (!is_zero(tensor.data[flat])) {
      std::size_t key = 0;
      std::size_t offset = 0;
      for (std::size_t axis = 0; axis < rank; ++axis) {
        key += index[axis] * key_weight[axis];
        offset += index[axis] * result_weight[axis];
      }
      entries.push_back({key, offset, &tensor.data[flat]});
    }
    for (std::size_t axis = rank; axis-- > 0;) {
      if (++index[axis] < tensor.dims[axis]) break;
      index[axis] = 0;
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& x, const Entry& y) { return x.key < y.key; });
  return entries;
}

LabeledTensor permute(const LabeledTensor& tensor, const std::vector<int>& labels) {
  if (tensor.labels == labels) return tensor;
  LabeledTensor out;
  out.labels = labels;
  out.id = tensor.id;
  out.dims.reserve(labels.size());
  std::vector<std::size_t> source_axis;
  for (int label : labels) {
    auto it = std::find(tensor.labels.begin(), tensor.labels.end(), label);
    if (it == tensor.labels.end()) {
      throw Error(ErrorCode::InvalidArgument, "open label " + std::to_string(label) + " not present");
    }
    const auto axis = static_cast<std::size_t>(it - tensor.labels.begin());
    source_axis.push_back(axis);
    out.dims.push_back(tensor.dims[axis]);
  }
  out.data.resize(tensor.data.size());
  const auto src_strides = strides_of(tensor.dims);
  std::vector<std::size_t> index(labels.size(), 0);
  for (std::size_t flat = 0; flat < out.data.size(); ++flat) {
    std::size_t src = 0;
    for (std::size_t axis = 0; axis < labels.size(); ++axis) {
      src += index[axis] * src_strides[source_axis[axis]];
    }
    out.data[flat] = tensor.data[src];
    for (std::size_t axis = labels.size(); axis-- > 0;) {
      if (++index[axis] < out.dims[axis]) break;
      index[axis] = 0;
    }
  }
  return out;
}

// Labels and dims of the contraction of two tensors.
std::pair<std::vector<int>, std::vector<std::size_t>> result_shape(const LabeledTensor& lhs,
                                                                   const LabeledTensor& rhs,
                                                                   const std::vector<int>& keep) {
  std::vector<int> labels;
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < lhs.labels.size(); ++i) {
    const int label = lhs.labels[i];
    if (contains(rhs.labels, label) && !contains(keep, label)) continue;
    labels.push_back(label);
    dims.push_back(lhs.dims[i]);
  }
  for (std::size_t i = 0; i < rhs.labels.size(); ++i) {
    const int label = rhs.labels[i];
    if (contains(lhs.labels, label)) continue;
    labels.push_back(label);
    dims.push_back(rhs.dims[i]);
  }
  return {std::move(labels), std::move(dims)};
}

}  // namespace

LabeledTensor contract_pair(const LabeledTensor& lhs, const LabeledTensor& rhs,
                            const std::vector<int>& keep, std::uint64_t budget) {
  std::vector<int> summed;
  std::vector<std::size_t> summed_dims;
  for (std::size_t i = 0; i < lhs.labels.size(); ++i) {
    const int label = lhs.labels[i];
    auto it = std::find(rhs.labels.begin(), rhs.labels.end(), label);
    if (it == rhs.labels.end()) continue;
    if (contains(keep, label)) {
      throw Error(ErrorCode::InvalidArgument,
                  "label " + std::to_string(label) + " is shared and open");
    }
    const auto j = static_cast<std::size_t>(it - rhs.labels.begin());
    if (lhs.dims[i] != rhs.dims[j]) {
      throw Error(ErrorCode::DimensionMismatch,
                  "label " + std::to_string(label) + " has inconsistent dimensions");
    }
    summed.push_back(label);
    summed_dims.push_back(lhs.dims[i]);
  }

  auto [labels, dims] = result_shape(lhs, rhs, keep);
  const std::uint64_t entries = saturating_product(dims);
  if (entries > budget) {
    throw Error(ErrorCode::OutOfMemoryBudget, "intermediate tensor of " + std::to_string(entries) +
                                                  " entries exceeds budget " +
                                                  std::to_string(budget));
  }

  LabeledTensor out;
  out.labels = std::move(labels);
  out.dims = std::move(dims);
  out.id = std::min(lhs.id, rhs.id);
  out.data.assign(static_cast<std::size_t>(entries), Scalar(0));
  const auto result_strides = strides_of(out.dims);

  const auto left = collect_entries(lhs, summed, summed_dims, out.labels, result_strides);
  const auto right = collect_entries(rhs, summed, summed_dims, out.labels, result_strides);

  Scalar product;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < left.size() && j < right.size()) {
    if (left[i].key < right[j].key) {
      ++i;
    } else if (right[j].key < left[i].key) {
      ++j;
    } else {
      const std::size_t key = left[i].key;
      std::size_t i_end = i;
      while (i_end < left.size() && left[i_end].key == key) ++i_end;
      std::size_t j_end = j;
      while (j_end < right.size() && right[j_end].key == key) ++j_end;
      for (std::size_t a = i; a < i_end; ++a) {
        for (std::size_t b = j; b < j_end; ++b) {
          mpq_mul(product.get_mpq_t(), left[a].value->get_mpq_t(), right[b].value->get_mpq_t());
          Scalar& target = out.data[left[a].offset + right[b].offset];
          mpq_add(target.get_mpq_t(), target.get_mpq_t(), product.get_mpq_t());
        }
      }
      i = i_end;
      j = j_end;
    }
  }
  return out;
}

LabeledTensor contract_network(std::vector<LabeledTensor> tensors,
                               const std::vector<int>& open_labels, ContractionOrder order,
                               std::uint64_t budget, ContractionStats* stats) {
  std::map<int, int> occurrences;
  for (const auto& t : tensors) {
    for (int label : t.labels) ++occurrences[label];
  }
  for (const auto& [label, count] : occurrences) {
    const bool open = contains(open_labels, label);
    if (count > 2 || (open && count != 1)) {
      throw Error(ErrorCode::InvalidArgument,
                  "label " + std::to_string(label) + " occurs " + std::to_string(count) +
                      " times in the network");
    }
  }

  ContractionStats local;
  auto record = [&](const LabeledTensor& t) {
    local.peak_entries = std::max<std::uint64_t>(local.peak_entries, t.size());
    ++local.steps;
  };

  if (tensors.empty()) {
    LabeledTensor scalar;
    scalar.data = {Scalar(1)};
    if (!open_labels.empty()) throw Error(ErrorCode::InvalidArgument, "open label without tensor");
    return scalar;
  }

  if (order == ContractionOrder::Sequential) {
    LabeledTensor acc = std::move(tensors.front());
    for (std::size_t i = 1; i < tensors.size(); ++i) {
      acc = contract_pair(acc, tensors[i], open_labels, budget);
      record(acc);
    }
    if (stats) *stats = local;
    return permute(acc, open_labels);
  }

  while (tensors.size() > 1) {
    // Pairs sharing a label; fall back to all pairs for disconnected pieces.
    std::map<int, std::vector<std::size_t>> holders;
    for (std::size_t i = 0; i < tensors.size(); ++i) {
      for (int label : tensors[i].labels) holders[label].push_back(i);
    }
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (const auto& [label, owners] : holders) {
      if (owners.size() == 2) candidates.emplace_back(owners[0], owners[1]);
    }
    if (candidates.empty()) {
      for (std::size_t i = 0; i < tensors.size(); ++i) {
        for (std::size_t j = i + 1; j < tensors.size(); ++j) candidates.emplace_back(i, j);
      }
    }

    using Key = std::tuple<std::uint64_t, int, int>;
    Key best{kSaturated, std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    std::pair<std::size_t, std::size_t> chosen = candidates.front();
    bool found = false;
    for (auto [i, j] : candidates) {
      const auto dims = result_shape(tensors[i], tensors[j], open_labels).second;
      const int lo = std::min(tensors[i].id, tensors[j].id);
      const int hi = std::max(tensors[i].id, tensors[j].id);
      Key key{saturating_product(dims), lo, hi};
      if (!found || key < best) {
        best = key;
        chosen = {i, j};
        found = true;
      }
    }

    auto [i, j] = chosen;
    if (i > j) std::swap(i, j);
    LabeledTensor merged = contract_pair(tensors[i], tensors[j], open_labels, budget);
    record(merged);
    tensors.erase(tensors.begin() + static_cast<std::ptrdiff_t>(j));
    tensors[i] = std::move(merged);
  }
  if (stats) *stats = local;
  return permute(tensors.front(), open_labels);
}

}  // namespace tqftdef
