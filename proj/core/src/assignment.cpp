#include "mdap/assignment.hpp"

#include <string>

#include "mdap/error.hpp"

namespace mdap {

namespace {

void check_point(const Point& p, int num_dims, int dim_size) {
  if (p.coords.size() != static_cast<std::size_t>(num_dims)) {
    throw InvalidPointError("point has " + std::to_string(p.coords.size()) +
                            " coordinates, expected " + std::to_string(num_dims));
  }
  for (int c : p.coords) {
    if (c < 1 || c > dim_size) {
      throw InvalidPointError("coordinate " + std::to_string(c) + " outside [1, " +
                              std::to_string(dim_size) + "]");
    }
  }
}

}  // namespace

PartialAssignment::PartialAssignment(int num_dims, int dim_size)
    : num_dims_(num_dims),
      dim_size_(dim_size),
      used_(static_cast<std::size_t>(num_dims) * static_cast<std::size_t>(dim_size), 0) {
  if (num_dims < 1 || dim_size < 1) throw FormatError("assignment dimensions must be positive");
  rows_.reserve(static_cast<std::size_t>(dim_size));
}

PartialAssignment PartialAssignment::from_rows(int num_dims, int dim_size,
                                               std::span<const Point> rows) {
  PartialAssignment a(num_dims, dim_size);
  for (const Point& p : rows) {
    check_point(p, num_dims, dim_size);
    if (!a.try_add(p)) {
      throw FeasibilityError("rows share a coordinate value in some dimension");
    }
  }
  return a;
}

bool PartialAssignment::is_used(int dim, int value) const {
  if (dim < 1 || dim > num_dims_ || value < 1 || value > dim_size_) {
    throw InvalidPointError("dimension/value out of range");
  }
  return is_used0(dim - 1, value - 1);
}

bool PartialAssignment::can_add(const Point& p) const {
  check_point(p, num_dims_, dim_size_);
  for (int d = 0; d < num_dims_; ++d) {
    if (is_used0(d, p.coords[d] - 1)) return false;
  }
  return true;
}

bool PartialAssignment::try_add(const Point& p) {
  if (!can_add(p)) return false;
  for (int d = 0; d < num_dims_; ++d) {
    used_[static_cast<std::size_t>(d) * dim_size_ + (p.coords[d] - 1)] = 1;
  }
  rows_.push_back(p);
  return true;
}

bool PartialAssignment::can_add0(std::span<const int> coords0) const noexcept {
  for (int d = 0; d < num_dims_; ++d) {
    if (is_used0(d, coords0[d])) return false;
  }
  return true;
}

bool PartialAssignment::try_add0(std::span<const int> coords0) {
  if (!can_add0(coords0)) return false;
  Point p;
  p.coords.resize(static_cast<std::size_t>(num_dims_));
  for (int d = 0; d < num_dims_; ++d) {
    used_[static_cast<std::size_t>(d) * dim_size_ + coords0[d]] = 1;
    p.coords[d] = coords0[d] + 1;
  }
  rows_.push_back(std::move(p));
  return true;
}

Assignment::Assignment(PartialAssignment full) : rows_(std::move(full)) {
  if (!rows_.is_full()) {
    throw FeasibilityError("assignment has " + std::to_string(rows_.row_count()) +
                           " rows, expected " + std::to_string(rows_.dim_size()));
  }
}

std::optional<PartialAssignment> extend_feasible(const PartialAssignment& a, const Point& p) {
  if (!a.can_add(p)) return std::nullopt;
  PartialAssignment extended = a;
  extended.try_add(p);
  return extended;
}

Objective evaluate(const PartialAssignment& a, const Instance& inst) {
  if (a.num_dims() != inst.num_dims() || a.dim_size() != inst.dim_size()) {
    throw FeasibilityError("assignment shape does not match instance");
  }
  Objective total = 0;
  for (const Point& p : a.rows()) total += weight(p, inst);
  return total;
}

Objective evaluate(const Assignment& a, const Instance& inst) { return evaluate(a.partial(), inst); }

bool is_feasible(std::span<const Point> rows, int num_dims, int dim_size) {
  if (rows.size() > static_cast<std::size_t>(dim_size)) return false;
  for (const Point& p : rows) {
    if (p.coords.size() != static_cast<std::size_t>(num_dims)) return false;
    for (int c : p.coords) {
      if (c < 1 || c > dim_size) return false;
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = i + 1; k < rows.size(); ++k) {
      for (int d = 0; d < num_dims; ++d) {
        if (rows[i].coords[d] == rows[k].coords[d]) return false;
      }
    }
  }
  return true;
}

bool is_full_assignment(std::span<const Point> rows, int num_dims, int dim_size) {
  return rows.size() == static_cast<std::size_t>(dim_size) && is_feasible(rows, num_dims, dim_size);
}

}  // namespace mdap
