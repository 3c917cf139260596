#include "mdap/exact.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mdap/error.hpp"

namespace mdap {

double assignment_count(int num_dims, int dim_size) {
  double log_fact = std::lgamma(static_cast<double>(dim_size) + 1.0);
  const double log_total = log_fact * (num_dims - 1);
  if (log_total > 700.0) return std::numeric_limits<double>::infinity();
  // Exact for the small sizes that matter when comparing against the cap.
  double fact = 1;
  for (int k = 2; k <= dim_size; ++k) fact *= k;
  return std::pow(fact, num_dims - 1);
}

namespace {

class Search {
 public:
  Search(const Instance& inst)
      : inst_(inst),
        s_(inst.num_dims()),
        n_(inst.dim_size()),
        min_weight_(inst.min_weight()),
        used_(static_cast<std::size_t>(s_) * static_cast<std::size_t>(n_), 0),
        current_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(s_), 0),
        best_(current_) {}

  void run() { place(0, 1, 0, 0); }

  Objective best_value() const { return best_value_; }

  Assignment best_assignment() const {
    PartialAssignment a(s_, n_);
    for (int r = 0; r < n_; ++r) {
      a.try_add0(std::span<const int>(best_.data() + static_cast<std::size_t>(r) * s_, static_cast<std::size_t>(s_)));
    }
    return Assignment(std::move(a));
  }

 private:
  // Chooses coordinate `dim` of row `row`; `offset` accumulates the flat
  // index of the row's vector, `partial` the weight of completed rows.
  void place(int row, int dim, std::size_t offset, Objective partial) {
    if (dim == 1) {
      current_[static_cast<std::size_t>(row) * s_] = row;
      offset = static_cast<std::size_t>(row) * inst_.stride(0);
    }
    if (dim == s_) {
      const Objective total = partial + inst_.at(offset);
      const int rows_left = n_ - row - 1;
      if (rows_left == 0) {
        if (total < best_value_) {
          best_value_ = total;
          best_ = current_;
        }
        return;
      }
      if (total + static_cast<Objective>(rows_left) * min_weight_ >= best_value_) return;
      place(row + 1, 1, 0, total);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      auto& used = used_[static_cast<std::size_t>(dim) * n_ + v];
      if (used) continue;
      used = 1;
      current_[static_cast<std::size_t>(row) * s_ + dim] = v;
      place(row, dim + 1, offset + static_cast<std::size_t>(v) * inst_.stride(dim), partial);
      used = 0;
    }
  }

  const Instance& inst_;
  int s_;
  int n_;
  Objective min_weight_;
  std::vector<char> used_;
  std::vector<int> current_;
  std::vector<int> best_;
  Objective best_value_ = std::numeric_limits<Objective>::max();
};

}  // namespace

ExactResult brute_force(const Instance& inst, const SearchBudget& budget) {
  const double leaves = assignment_count(inst.num_dims(), inst.dim_size());
  if (leaves > budget.max_leaves) {
    throw SizeError("exact search over (n!)^(s-1) = " + std::to_string(leaves) +
                    " assignments exceeds budget " + std::to_string(budget.max_leaves));
  }
  Search search(inst);
  search.run();
  return ExactResult{search.best_assignment(), search.best_value()};
}

double error_percent(double value, double opt) {
  if (!(opt > 0)) throw UndefinedMetricError("error metric needs a positive reference value");
  return (value - opt) / opt * 100.0;
}

}  // namespace mdap
