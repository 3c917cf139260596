#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mdap {

using Cost = std::int64_t;

// Square matrix of non-negative costs, row-major.
class CostMatrix {
 public:
  explicit CostMatrix(int size);
  CostMatrix(int size, std::vector<Cost> costs);

  int size() const noexcept { return size_; }
  Cost operator()(int row, int col) const noexcept { return costs_[index(row, col)]; }
  Cost& operator()(int row, int col) noexcept { return costs_[index(row, col)]; }
  std::span<Cost> row(int r) noexcept { return {costs_.data() + index(r, 0), static_cast<std::size_t>(size_)}; }
  std::span<const Cost> values() const noexcept { return costs_; }

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(col);
  }

  int size_;
  std::vector<Cost> costs_;
};

// Row i is matched to column map[i]; 0-based.
struct Permutation {
  std::vector<int> map;

  bool is_bijection() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

struct ApSolution {
  Permutation permutation;
  Cost cost = 0;
};

// Minimum-cost perfect matching, O(n^3) shortest augmenting path Hungarian
// method. Deterministic for a given matrix.
ApSolution solve_ap(const CostMatrix& m);

// Exhaustive oracle for n <= 9: lexicographically smallest optimal
// permutation.
ApSolution solve_ap_bruteforce(const CostMatrix& m);

Cost permutation_cost(const CostMatrix& m, const Permutation& p);

}  // namespace mdap
