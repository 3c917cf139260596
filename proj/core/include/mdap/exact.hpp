#pragma once

#include <cstdint>

#include "mdap/assignment.hpp"
#include "mdap/instance.hpp"

namespace mdap {

struct SearchBudget {
  static constexpr double kDefaultMaxLeaves = 1e8;
  // Cap on (n!)^(s-1), the number of complete assignments with the first
  // coordinate fixed to the identity.
  double max_leaves = kDefaultMaxLeaves;
};

// (n!)^(s-1) as a double (saturates to +inf).
double assignment_count(int num_dims, int dim_size);

struct ExactResult {
  Assignment assignment;
  Objective value;
};

// Depth-first enumeration of dimensions 2..s, row by row, with the first
// coordinate of row i fixed to i. Branches are cut when the partial weight
// plus (rows left) * (minimum weight) cannot beat the incumbent.
ExactResult brute_force(const Instance& inst, const SearchBudget& budget = {});

// (value - opt) / opt * 100.
double error_percent(double value, double opt);

}  // namespace mdap
