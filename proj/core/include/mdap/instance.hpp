#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mdap {

using Weight = std::uint32_t;
using Objective = std::uint64_t;

// A vector of X = X_1 x ... x X_s. Coordinates are 1-based.
struct Point {
  std::vector<int> coords;

  friend bool operator==(const Point&, const Point&) = default;
};

// Dense s-dimensional weight tensor with n values per dimension, stored in
// row-major order (last coordinate varies fastest). Immutable after
// construction.
class Instance {
 public:
  Instance(int num_dims, int dim_size, std::vector<Weight> weights);

  static Instance filled(int num_dims, int dim_size, Weight value);

  int num_dims() const noexcept { return num_dims_; }
  int dim_size() const noexcept { return dim_size_; }
  std::size_t num_vectors() const noexcept { return weights_.size(); }

  std::span<const Weight> weights() const noexcept { return weights_; }
  Weight at(std::size_t index) const noexcept { return weights_[index]; }

  // Distance in the flat array between vectors differing by one in
  // coordinate `dim` (0-based dimension).
  std::size_t stride(int dim) const noexcept { return strides_[dim]; }
  std::span<const std::size_t> strides() const noexcept { return strides_; }

  Objective total_weight() const noexcept;
  Weight min_weight() const noexcept;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.num_dims_ == b.num_dims_ && a.dim_size_ == b.dim_size_ &&
           a.weights_ == b.weights_;
  }

 private:
  int num_dims_;
  int dim_size_;
  std::vector<std::size_t> strides_;
  std::vector<Weight> weights_;
};

// n^s, or SizeError if it does not fit in size_t.
std::size_t tensor_volume(int num_dims, int dim_size);

// Row-major flat index of a 1-based point.
std::size_t index_of(const Point& p, const Instance& inst);
Point coords_of(std::size_t index, const Instance& inst);
Weight weight(const Point& p, const Instance& inst);

// 0-based helpers used on hot paths; no validation.
void decode_index(std::size_t index, const Instance& inst, std::span<int> coords0);
std::size_t encode_index(std::span<const int> coords0, const Instance& inst);

// Tensor whose k-th coordinate is coordinate order[k] of `inst`
// (order is a permutation of 0..s-1).
Instance permute_dimensions(const Instance& inst, std::span<const int> order);

}  // namespace mdap
