#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdap/ap.hpp"
#include "mdap/assignment.hpp"
#include "mdap/instance.hpp"
#include "mdap/scan.hpp"

namespace mdap {

// ---------------------------------------------------------------------------
// Greedy

inline constexpr std::size_t kDefaultGreedyBuffer = 64;

struct GreedyOptions {
  // Upper limit on the candidate buffer; the effective size of each scan is
  // min(buffer_capacity, |available set|).
  std::size_t buffer_capacity = kDefaultGreedyBuffer;
  // Known lower bound on every weight (1 for the Random family). Without it
  // the first scan cannot stop early.
  std::optional<Weight> min_weight_hint;
};

// The lightest `capacity` vectors offered so far, sorted by weight. An
// offer is accepted only when strictly lighter than the current maximum of a
// full buffer, so equal weights stay in offer (scan) order.
class CandidateBuffer {
 public:
  struct Entry {
    std::size_t index;
    Weight weight;
  };

  explicit CandidateBuffer(std::size_t capacity = kDefaultGreedyBuffer) { reset(capacity); }

  void reset(std::size_t capacity);
  void offer(std::size_t index, Weight weight);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool full() const noexcept { return entries_.size() >= capacity_; }
  bool empty() const noexcept { return entries_.empty(); }
  Weight max_weight() const noexcept { return entries_.back().weight; }
  // Whether offer(_, weight) would change the buffer.
  bool would_accept(Weight weight) const noexcept { return !full() || weight < max_weight(); }
  std::span<const Entry> entries() const noexcept { return entries_; }

 private:
  std::size_t capacity_ = 0;
  std::vector<Entry> entries_;
};

// n full scans of the available set, each picking the lightest vector
// (smallest flat index among equals).
Assignment greedy_naive(const Instance& inst, ScanStats* stats = nullptr);

// Buffered Greedy: one scan fills a candidate buffer, the buffer is drained
// in weight order, and scans stop early once the buffer holds only vectors
// at the known minimum weight. Produces the same assignment as greedy_naive.
Assignment greedy(const Instance& inst, const GreedyOptions& options = {}, ScanStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Max-Regret

struct RegretSlot {
  static constexpr std::uint64_t kEmpty = std::numeric_limits<std::uint64_t>::max();
  static constexpr std::uint64_t kInfiniteRegret = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t best_weight = kEmpty;
  std::uint64_t second_weight = kEmpty;
  std::size_t best_index = 0;
  std::size_t second_index = 0;

  bool has_best() const noexcept { return best_weight != kEmpty; }
  bool has_second() const noexcept { return second_weight != kEmpty; }
  // A slot with a single candidate is forced and ranks above any finite
  // regret.
  std::uint64_t regret() const noexcept {
    return has_second() ? second_weight - best_weight : kInfiniteRegret;
  }

  void offer(std::size_t index, std::uint64_t weight) noexcept {
    if (weight < best_weight) {
      second_weight = best_weight;
      second_index = best_index;
      best_weight = weight;
      best_index = index;
    } else if (weight < second_weight) {
      second_weight = weight;
      second_index = index;
    }
  }
};

// The two lightest available vectors for every (dimension, value) slot.
class RegretTable {
 public:
  RegretTable(int num_dims, int dim_size)
      : dim_size_(dim_size), slots_(static_cast<std::size_t>(num_dims) * static_cast<std::size_t>(dim_size)) {}

  void clear() { std::fill(slots_.begin(), slots_.end(), RegretSlot{}); }
  // 0-based dimension and value.
  RegretSlot& slot(int dim, int value) noexcept {
    return slots_[static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim_size_) + value];
  }
  const RegretSlot& slot(int dim, int value) const noexcept {
    return slots_[static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim_size_) + value];
  }

 private:
  int dim_size_;
  std::vector<RegretSlot> slots_;
};

// Per iteration, a separate partial scan for every (dimension, unused value)
// slot.
Assignment max_regret_naive(const Instance& inst, ScanStats* stats = nullptr);

// Per iteration, a single scan of the available set fills a RegretTable.
// Same tie rules, and so the same assignment, as max_regret_naive.
Assignment max_regret(const Instance& inst, ScanStats* stats = nullptr);

// ---------------------------------------------------------------------------
// ROM and Shift-ROM

// Cyclic dimension order (X_{s-shift+1}, ..., X_s, X_1, ..., X_{s-shift}).
class DimensionRotation {
 public:
  constexpr DimensionRotation() = default;
  explicit DimensionRotation(int shift) : shift_(shift) {}

  int shift() const noexcept { return shift_; }
  // order[k] = original (0-based) dimension placed at position k.
  std::vector<int> order(int num_dims) const;
  DimensionRotation inverse(int num_dims) const;
  DimensionRotation then(const DimensionRotation& next, int num_dims) const;

 private:
  int shift_ = 0;
};

// M^d[i][v] = sum of w(e) over e with e_d = i and e_{d+1} = v, the last
// dimension pairing with the first.
class PairSumMatrices {
 public:
  PairSumMatrices(int num_dims, int dim_size);

  int num_dims() const noexcept { return static_cast<int>(matrices_.size()); }
  // 0-based dimension d pairs coordinates (d, (d+1) mod s).
  const CostMatrix& matrix(int dim) const noexcept { return matrices_[dim]; }
  CostMatrix& matrix(int dim) noexcept { return matrices_[dim]; }

 private:
  std::vector<CostMatrix> matrices_;
};

PairSumMatrices precompute_pair_sums(const Instance& inst, ScanStats* stats = nullptr);

Assignment rom(const Instance& inst, DimensionRotation rotation = {}, ScanStats* stats = nullptr);

// ROM under each of the s cyclic rotations, the first iteration of every run
// taken from a single pair-sum pass. Earliest rotation wins ties.
Assignment shift_rom(const Instance& inst, ScanStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Dispatch

enum class HeuristicKind { greedy, max_regret, rom, shift_rom };

inline constexpr HeuristicKind kAllHeuristics[] = {HeuristicKind::greedy, HeuristicKind::max_regret,
                                                   HeuristicKind::rom, HeuristicKind::shift_rom};

// CLI names: greedy, maxregret, rom, shiftrom.
HeuristicKind parse_heuristic(std::string_view name);
std::vector<HeuristicKind> parse_heuristic_list(std::string_view comma_separated);
std::string_view heuristic_name(HeuristicKind kind);
// Table column tags: Gr, M-R, R, S-R.
std::string_view heuristic_tag(HeuristicKind kind);

struct HeuristicConfig {
  GreedyOptions greedy;
};

Assignment run_heuristic(HeuristicKind kind, const Instance& inst, const HeuristicConfig& config = {},
                         ScanStats* stats = nullptr);

}  // namespace mdap
