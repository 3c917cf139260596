#include <algorithm>
#include <limits>

#include "mdap/heuristics.hpp"

namespace mdap {

void CandidateBuffer::reset(std::size_t capacity) {
  capacity_ = std::max<std::size_t>(capacity, 1);
  entries_.clear();
  entries_.reserve(capacity_ + 1);
}

void CandidateBuffer::offer(std::size_t index, Weight weight) {
  if (!would_accept(weight)) return;
  const auto pos = std::upper_bound(entries_.begin(), entries_.end(), weight,
                                    [](Weight w, const Entry& e) { return w < e.weight; });
  entries_.insert(pos, Entry{index, weight});
  if (entries_.size() > capacity_) entries_.pop_back();
}

Assignment greedy_naive(const Instance& inst, ScanStats* stats) {
  PartialAssignment a(inst.num_dims(), inst.dim_size());
  std::vector<int> coords(static_cast<std::size_t>(inst.num_dims()));
  while (!a.is_full()) {
    std::size_t best_index = 0;
    std::uint64_t best_weight = std::numeric_limits<std::uint64_t>::max();
    scan_available(
        a, inst,
        [&](std::size_t index, Weight w) {
          if (w < best_weight) {
            best_weight = w;
            best_index = index;
          }
        },
        stats);
    decode_index(best_index, inst, coords);
    a.try_add0(coords);
  }
  return Assignment(std::move(a));
}

Assignment greedy(const Instance& inst, const GreedyOptions& options, ScanStats* stats) {
  PartialAssignment a(inst.num_dims(), inst.dim_size());
  std::optional<Weight> bound = options.min_weight_hint;
  CandidateBuffer buffer(options.buffer_capacity);
  std::vector<int> coords(static_cast<std::size_t>(inst.num_dims()));
  const Weight* weights = inst.weights().data();

  while (!a.is_full()) {
    const std::uint64_t available = available_count(a);
    buffer.reset(static_cast<std::size_t>(std::min<std::uint64_t>(options.buffer_capacity, available)));
    std::uint64_t reads = 0;

    for_each_available_run(a, inst, [&](std::size_t base, std::span<const int>, std::span<const int> last) {
      const Weight* row = weights + base;
      for (std::size_t t = 0; t < last.size(); ++t) {
        const Weight w = row[last[t]];
        if (!buffer.would_accept(w)) continue;
        buffer.offer(base + static_cast<std::size_t>(last[t]), w);
        // Nothing left in the scan can be lighter than a buffer filled at
        // the bound.
        if (bound && buffer.full() && buffer.max_weight() <= *bound) {
          reads += t + 1;
          return false;
        }
      }
      reads += last.size();
      return true;
    });
    if (stats) stats->record(reads);

    for (const auto& entry : buffer.entries()) {
      decode_index(entry.index, inst, coords);
      a.try_add0(coords);
      if (a.is_full()) break;
    }
    // Every vector still available weighs at least the heaviest buffered one.
    bound = buffer.max_weight();
  }
  return Assignment(std::move(a));
}

}  // namespace mdap
