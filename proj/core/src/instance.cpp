#include "mdap/instance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "mdap/error.hpp"

namespace mdap {

std::size_t tensor_volume(int num_dims, int dim_size) {
  if (num_dims < 1 || dim_size < 1) {
    throw SizeError("tensor dimensions must be positive");
  }
  std::size_t volume = 1;
  for (int d = 0; d < num_dims; ++d) {
    if (volume > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(dim_size)) {
      throw SizeError("n^s overflows the address space");
    }
    volume *= static_cast<std::size_t>(dim_size);
  }
  return volume;
}

Instance::Instance(int num_dims, int dim_size, std::vector<Weight> weights)
    : num_dims_(num_dims), dim_size_(dim_size), weights_(std::move(weights)) {
  if (num_dims < 2) {
    throw FormatError("instance needs at least 2 dimensions, got " + std::to_string(num_dims));
  }
  if (dim_size < 1) {
    throw FormatError("instance needs n >= 1, got " + std::to_string(dim_size));
  }
  const std::size_t volume = tensor_volume(num_dims, dim_size);
  if (weights_.size() != volume) {
    throw FormatError("expected " + std::to_string(volume) + " weights, got " +
                      std::to_string(weights_.size()));
  }
  strides_.assign(static_cast<std::size_t>(num_dims), 1);
  for (int d = num_dims - 2; d >= 0; --d) {
    strides_[d] = strides_[d + 1] * static_cast<std::size_t>(dim_size);
  }
}

Instance Instance::filled(int num_dims, int dim_size, Weight value) {
  return Instance(num_dims, dim_size,
                  std::vector<Weight>(tensor_volume(num_dims, dim_size), value));
}

Objective Instance::total_weight() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), Objective{0});
}

Weight Instance::min_weight() const noexcept {
  return *std::min_element(weights_.begin(), weights_.end());
}

std::size_t index_of(const Point& p, const Instance& inst) {
  if (p.coords.size() != static_cast<std::size_t>(inst.num_dims())) {
    throw InvalidPointError("point has " + std::to_string(p.coords.size()) +
                            " coordinates, instance has " + std::to_string(inst.num_dims()));
  }
  std::size_t index = 0;
  for (int d = 0; d < inst.num_dims(); ++d) {
    const int c = p.coords[d];
    if (c < 1 || c > inst.dim_size()) {
      throw InvalidPointError("coordinate " + std::to_string(d + 1) + " = " + std::to_string(c) +
                              " outside [1, " + std::to_string(inst.dim_size()) + "]");
    }
    index += static_cast<std::size_t>(c - 1) * inst.stride(d);
  }
  return index;
}

Point coords_of(std::size_t index, const Instance& inst) {
  if (index >= inst.num_vectors()) {
    throw InvalidIndexError("flat index " + std::to_string(index) + " outside [0, " +
                            std::to_string(inst.num_vectors()) + ")");
  }
  Point p;
  p.coords.resize(static_cast<std::size_t>(inst.num_dims()));
  decode_index(index, inst, p.coords);
  for (int& c : p.coords) ++c;
  return p;
}

Weight weight(const Point& p, const Instance& inst) { return inst.at(index_of(p, inst)); }

void decode_index(std::size_t index, const Instance& inst, std::span<int> coords0) {
  const auto n = static_cast<std::size_t>(inst.dim_size());
  for (int d = inst.num_dims() - 1; d >= 0; --d) {
    coords0[d] = static_cast<int>(index % n);
    index /= n;
  }
}

std::size_t encode_index(std::span<const int> coords0, const Instance& inst) {
  std::size_t index = 0;
  for (int d = 0; d < inst.num_dims(); ++d) {
    index += static_cast<std::size_t>(coords0[d]) * inst.stride(d);
  }
  return index;
}

Instance permute_dimensions(const Instance& inst, std::span<const int> order) {
  const int s = inst.num_dims();
  if (order.size() != static_cast<std::size_t>(s)) {
    throw FormatError("dimension order has wrong length");
  }
  std::vector<int> seen(static_cast<std::size_t>(s), 0);
  for (int d : order) {
    if (d < 0 || d >= s || seen[d]++) throw FormatError("dimension order is not a permutation");
  }
  // Stride in the source tensor of each target coordinate.
  std::vector<std::size_t> source_stride(static_cast<std::size_t>(s));
  for (int k = 0; k < s; ++k) source_stride[k] = inst.stride(order[k]);

  std::vector<Weight> out(inst.num_vectors());
  std::vector<int> coords(static_cast<std::size_t>(s), 0);
  std::size_t source = 0;
  const int n = inst.dim_size();
  for (std::size_t target = 0; target < out.size(); ++target) {
    out[target] = inst.at(source);
    for (int k = s - 1; k >= 0; --k) {
      if (++coords[k] < n) {
        source += source_stride[k];
        break;
      }
      coords[k] = 0;
      source -= static_cast<std::size_t>(n - 1) * source_stride[k];
    }
  }
  return Instance(s, n, std::move(out));
}

}  // namespace mdap
