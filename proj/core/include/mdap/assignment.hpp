#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mdap/instance.hpp"

namespace mdap {

// A feasible partial assignment: rows pairwise differ in every coordinate.
// Feasibility is maintained by construction; there is no way to add a
// conflicting row.
class PartialAssignment {
 public:
  PartialAssignment(int num_dims, int dim_size);

  // Validates coordinates and pairwise distinctness.
  static PartialAssignment from_rows(int num_dims, int dim_size, std::span<const Point> rows);

  int num_dims() const noexcept { return num_dims_; }
  int dim_size() const noexcept { return dim_size_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  bool is_full() const noexcept { return rows_.size() == static_cast<std::size_t>(dim_size_); }
  std::span<const Point> rows() const noexcept { return rows_; }

  // 1-based dimension and value.
  bool is_used(int dim, int value) const;

  bool can_add(const Point& p) const;
  // Appends p if none of its coordinate values is used yet.
  bool try_add(const Point& p);

  // 0-based fast paths for heuristics.
  bool is_used0(int dim, int value) const noexcept {
    return used_[static_cast<std::size_t>(dim) * dim_size_ + value] != 0;
  }
  bool can_add0(std::span<const int> coords0) const noexcept;
  bool try_add0(std::span<const int> coords0);

 private:
  int num_dims_;
  int dim_size_;
  std::vector<Point> rows_;
  std::vector<std::uint8_t> used_;  // num_dims x dim_size
};

// A partial assignment with exactly n rows.
class Assignment {
 public:
  explicit Assignment(PartialAssignment full);

  const PartialAssignment& partial() const noexcept { return rows_; }
  std::span<const Point> rows() const noexcept { return rows_.rows(); }
  int num_dims() const noexcept { return rows_.num_dims(); }
  int dim_size() const noexcept { return rows_.dim_size(); }

 private:
  PartialAssignment rows_;
};

std::optional<PartialAssignment> extend_feasible(const PartialAssignment& a, const Point& p);

Objective evaluate(const PartialAssignment& a, const Instance& inst);
Objective evaluate(const Assignment& a, const Instance& inst);

// Direct checks on raw rows, independent of PartialAssignment bookkeeping.
bool is_feasible(std::span<const Point> rows, int num_dims, int dim_size);
bool is_full_assignment(std::span<const Point> rows, int num_dims, int dim_size);

}  // namespace mdap
