#include <algorithm>
#include <limits>

#include "mdap/heuristics.hpp"

namespace mdap {

namespace {

int normalize_shift(int shift, int num_dims) { return ((shift % num_dims) + num_dims) % num_dims; }

// Adds every weight of the sub-tensor at `base` spanned by `free_dims`
// (ascending 0-based dimensions) to out[c], c being the coordinate of the
// vector along `target_dim`. Traversal follows memory order. Returns the
// number of weights read.
std::uint64_t accumulate_block(const Instance& inst, std::size_t base, std::span<const int> free_dims,
                               int target_dim, std::span<Cost> out) {
  const int s = inst.num_dims();
  const int n = inst.dim_size();
  const Weight* weights = inst.weights().data();
  const int m = static_cast<int>(free_dims.size());

  // Contiguous suffix led by the target: n solid slices.
  if (free_dims.front() == target_dim && free_dims.back() == s - 1 && m == s - target_dim) {
    const std::size_t slice = inst.stride(target_dim);
    const Weight* p = weights + base;
    for (int c = 0; c < n; ++c) {
      Cost sum = 0;
      for (std::size_t t = 0; t < slice; ++t) sum += p[t];
      out[c] += sum;
      p += slice;
    }
    return static_cast<std::uint64_t>(n) * slice;
  }

  const int inner = free_dims.back();
  const std::size_t inner_stride = inst.stride(inner);
  const int outer = m - 1;
  int target_slot = -1;
  for (int k = 0; k < outer; ++k) {
    if (free_dims[k] == target_dim) target_slot = k;
  }
  std::vector<int> pos(static_cast<std::size_t>(outer), 0);
  std::size_t offset = base;
  std::uint64_t reads = 0;
  while (true) {
    const Weight* p = weights + offset;
    if (inner == target_dim) {
      for (int c = 0; c < n; ++c) out[c] += p[static_cast<std::size_t>(c) * inner_stride];
    } else {
      Cost sum = 0;
      for (int c = 0; c < n; ++c) sum += p[static_cast<std::size_t>(c) * inner_stride];
      out[pos[target_slot]] += sum;
    }
    reads += static_cast<std::uint64_t>(n);
    int k = outer - 1;
    for (; k >= 0; --k) {
      const std::size_t st = inst.stride(free_dims[k]);
      if (++pos[k] < n) {
        offset += st;
        break;
      }
      pos[k] = 0;
      offset -= static_cast<std::size_t>(n - 1) * st;
    }
    if (k < 0) return reads;
  }
}

Assignment rom_run(const Instance& inst, const std::vector<int>& order, const PairSumMatrices* pairs,
                   ScanStats* stats) {
  const int s = inst.num_dims();
  const int n = inst.dim_size();
  // coords[i * s + d]: 0-based coordinate d of row i, starting at (i, ..., i).
  std::vector<int> coords(static_cast<std::size_t>(n) * static_cast<std::size_t>(s));
  for (int i = 0; i < n; ++i) {
    std::fill_n(coords.begin() + static_cast<std::ptrdiff_t>(i) * s, s, i);
  }
  auto row = [&](int i) { return std::span<int>(coords.data() + static_cast<std::size_t>(i) * s, static_cast<std::size_t>(s)); };

  std::vector<int> free_dims;
  for (int j = 1; j < s; ++j) {
    const int target = order[j];
    std::uint64_t reads = 0;
    CostMatrix m(n);
    if (j == 1 && pairs != nullptr) {
      // First iteration fixes the consecutive pair (order[0], order[1]).
      m = pairs->matrix(order[0]);
    } else {
      free_dims.assign(order.begin() + j, order.end());
      std::sort(free_dims.begin(), free_dims.end());
      for (int i = 0; i < n; ++i) {
        const auto r = row(i);
        std::size_t base = 0;
        for (int k = 0; k < j; ++k) base += static_cast<std::size_t>(r[order[k]]) * inst.stride(order[k]);
        reads += accumulate_block(inst, base, free_dims, target, m.row(i));
      }
      if (stats) stats->record(reads);
    }
    const ApSolution sol = solve_ap(m);
    for (int i = 0; i < n; ++i) row(i)[target] = sol.permutation.map[i];
  }

  PartialAssignment a(s, n);
  for (int i = 0; i < n; ++i) a.try_add0(row(i));
  return Assignment(std::move(a));
}

}  // namespace

std::vector<int> DimensionRotation::order(int num_dims) const {
  const int shift = normalize_shift(shift_, num_dims);
  std::vector<int> out(static_cast<std::size_t>(num_dims));
  for (int k = 0; k < num_dims; ++k) out[k] = (k - shift + num_dims) % num_dims;
  return out;
}

DimensionRotation DimensionRotation::inverse(int num_dims) const {
  return DimensionRotation(normalize_shift(-shift_, num_dims));
}

DimensionRotation DimensionRotation::then(const DimensionRotation& next, int num_dims) const {
  return DimensionRotation(normalize_shift(shift_ + next.shift_, num_dims));
}

PairSumMatrices::PairSumMatrices(int num_dims, int dim_size)
    : matrices_(static_cast<std::size_t>(num_dims), CostMatrix(dim_size)) {}

PairSumMatrices precompute_pair_sums(const Instance& inst, ScanStats* stats) {
  const int s = inst.num_dims();
  const int n = inst.dim_size();
  PairSumMatrices pairs(s, n);
  const Weight* weights = inst.weights().data();
  const PartialAssignment empty(s, n);
  CostMatrix& closing = pairs.matrix(s - 1);  // (e_s, e_1)
  CostMatrix& last_pair = pairs.matrix(s - 2);  // (e_{s-1}, e_s)

  for_each_available_run(empty, inst, [&](std::size_t base, std::span<const int> prefix, std::span<const int>) {
    const Weight* p = weights + base;
    Cost total = 0;
    const int first = prefix[0];
    const int before_last = prefix[s - 2];
    for (int v = 0; v < n; ++v) {
      const Cost w = p[v];
      total += w;
      last_pair(before_last, v) += w;
      closing(v, first) += w;
    }
    // Pairs inside the prefix are constant along the run.
    for (int d = 0; d + 2 < s; ++d) pairs.matrix(d)(prefix[d], prefix[d + 1]) += total;
    return true;
  });
  if (stats) stats->record(inst.num_vectors());
  return pairs;
}

Assignment rom(const Instance& inst, DimensionRotation rotation, ScanStats* stats) {
  return rom_run(inst, rotation.order(inst.num_dims()), nullptr, stats);
}

Assignment shift_rom(const Instance& inst, ScanStats* stats) {
  const int s = inst.num_dims();
  const PairSumMatrices pairs = precompute_pair_sums(inst, stats);
  std::optional<Assignment> best;
  Objective best_value = std::numeric_limits<Objective>::max();
  for (int shift = 0; shift < s; ++shift) {
    Assignment candidate = rom_run(inst, DimensionRotation(shift).order(s), &pairs, stats);
    const Objective value = evaluate(candidate, inst);
    if (value < best_value) {
      best_value = value;
      best = std::move(candidate);
    }
  }
  return std::move(*best);
}

}  // namespace mdap
