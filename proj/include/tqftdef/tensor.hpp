#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "tqftdef/scalar.hpp"

namespace tqftdef {

/// Dense rank-3 table of structure constants, row-major.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
      : dims_{d0, d1, d2}, data_(d0 * d1 * d2) {}

  const std::array<std::size_t, 3>& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return data_.size(); }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * dims_[1] + j) * dims_[2] + k];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dims_[1] + j) * dims_[2] + k];
  }

  const std::vector<Scalar>& data() const noexcept { return data_; }
  std::vector<Scalar>& data() noexcept { return data_; }

  friend bool operator==(const Tensor3& lhs, const Tensor3& rhs) {
    return lhs.dims_ == rhs.dims_ && lhs.data_ == rhs.data_;
  }

 private:
  std::array<std::size_t, 3> dims_{0, 0, 0};
  std::vector<Scalar> data_;
};

using Vector = std::vector<Scalar>;

}  // namespace tqftdef
