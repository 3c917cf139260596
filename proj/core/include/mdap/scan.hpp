#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "mdap/assignment.hpp"
#include "mdap/instance.hpp"

namespace mdap {

// Optional instrumentation. Heuristics that receive a non-null ScanStats
// record every weight-array read; the counting is done per contiguous run,
// so a null pointer costs nothing on the hot path.
struct ScanStats {
  std::uint64_t weight_reads = 0;
  // Weight reads performed by each scan (or ROM iteration / pair-sum pass),
  // in execution order.
  std::vector<std::uint64_t> reads_per_scan;

  void record(std::uint64_t reads) {
    weight_reads += reads;
    reads_per_scan.push_back(reads);
  }
};

// Unused values per dimension, ascending, 0-based.
inline std::vector<std::vector<int>> free_values(const PartialAssignment& a) {
  std::vector<std::vector<int>> free(static_cast<std::size_t>(a.num_dims()));
  for (int d = 0; d < a.num_dims(); ++d) {
    free[d].reserve(static_cast<std::size_t>(a.dim_size()));
    for (int v = 0; v < a.dim_size(); ++v) {
      if (!a.is_used0(d, v)) free[d].push_back(v);
    }
  }
  return free;
}

// Number of vectors e with a ∪ {e} feasible: (n - |a|)^s, saturated.
inline std::uint64_t available_count(const PartialAssignment& a) {
  const auto free = static_cast<std::uint64_t>(a.dim_size()) - a.row_count();
  std::uint64_t count = 1;
  for (int d = 0; d < a.num_dims(); ++d) {
    if (free != 0 && count > UINT64_MAX / free) return UINT64_MAX;
    count *= free;
  }
  return count;
}

// Enumerates the available set in row-major order, one run per fixed
// prefix (coordinates 0..s-2). The visitor receives the flat index of the
// prefix with last coordinate 0, the 0-based prefix, and the unused values
// of the last dimension:
//
//   bool visit(std::size_t base, std::span<const int> prefix, std::span<const int> last)
//
// Returning false stops the enumeration. Prefixes with a used value are
// never produced, so blocked sub-blocks are skipped whole.
template <typename RunVisitor>
bool for_each_available_run(const PartialAssignment& a, const Instance& inst, RunVisitor&& visit) {
  const int s = inst.num_dims();
  const auto free = free_values(a);
  for (const auto& values : free) {
    if (values.empty()) return true;
  }
  const int prefix_dims = s - 1;
  std::vector<int> pos(static_cast<std::size_t>(prefix_dims), 0);
  std::vector<int> prefix(static_cast<std::size_t>(prefix_dims));
  std::size_t base = 0;
  for (int d = 0; d < prefix_dims; ++d) {
    prefix[d] = free[d][0];
    base += static_cast<std::size_t>(prefix[d]) * inst.stride(d);
  }
  const std::span<const int> last(free[s - 1]);
  while (true) {
    if (!visit(base, std::span<const int>(prefix), last)) return false;
    int d = prefix_dims - 1;
    for (; d >= 0; --d) {
      base -= static_cast<std::size_t>(prefix[d]) * inst.stride(d);
      if (++pos[d] < static_cast<int>(free[d].size())) {
        prefix[d] = free[d][pos[d]];
        base += static_cast<std::size_t>(prefix[d]) * inst.stride(d);
        break;
      }
      pos[d] = 0;
      prefix[d] = free[d][0];
      base += static_cast<std::size_t>(prefix[d]) * inst.stride(d);
    }
    if (d < 0) return true;
  }
}

// Calls visitor(index, weight) once for every available vector, in strictly
// increasing flat-index order. The visitor may return bool (false stops the
// scan) or void.
template <typename Visitor>
void scan_available(const PartialAssignment& a, const Instance& inst, Visitor&& visitor,
                    ScanStats* stats = nullptr) {
  const std::span<const Weight> weights = inst.weights();
  std::uint64_t reads = 0;
  for_each_available_run(a, inst, [&](std::size_t base, std::span<const int>, std::span<const int> last) {
    for (int v : last) {
      const std::size_t index = base + static_cast<std::size_t>(v);
      ++reads;
      if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, std::size_t, Weight>, bool>) {
        if (!visitor(index, weights[index])) return false;
      } else {
        visitor(index, weights[index]);
      }
    }
    return true;
  });
  if (stats) stats->record(reads);
}

}  // namespace mdap
