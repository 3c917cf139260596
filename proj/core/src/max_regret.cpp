#include <cassert>

#include "mdap/heuristics.hpp"

namespace mdap {

namespace {

// Visits, in flat-index order, every available vector whose coordinate
// `fixed_dim` equals `fixed_value` (0-based).
template <typename Visitor>
std::uint64_t scan_slot(const Instance& inst, const std::vector<std::vector<int>>& free, int fixed_dim,
                        int fixed_value, Visitor&& visit) {
  const int s = inst.num_dims();
  std::vector<std::vector<int>> values = free;
  values[fixed_dim] = {fixed_value};
  std::vector<int> pos(static_cast<std::size_t>(s), 0);
  std::uint64_t reads = 0;
  while (true) {
    std::size_t index = 0;
    for (int d = 0; d < s; ++d) index += static_cast<std::size_t>(values[d][pos[d]]) * inst.stride(d);
    visit(index, inst.at(index));
    ++reads;
    int d = s - 1;
    for (; d >= 0; --d) {
      if (++pos[d] < static_cast<int>(values[d].size())) break;
      pos[d] = 0;
    }
    if (d < 0) return reads;
  }
}

}  // namespace

Assignment max_regret_naive(const Instance& inst, ScanStats* stats) {
  const int s = inst.num_dims();
  const int n = inst.dim_size();
  PartialAssignment a(s, n);
  std::vector<int> coords(static_cast<std::size_t>(s));

  while (!a.is_full()) {
    const auto free = free_values(a);
    bool chosen = false;
    std::uint64_t chosen_regret = 0;
    std::size_t chosen_index = 0;
    std::uint64_t reads = 0;

    for (int d = 0; d < s; ++d) {
      for (int v : free[d]) {
        bool has_min = false, has_second = false;
        std::uint64_t min_w = 0, second_w = 0;
        std::size_t min_index = 0;
        reads += scan_slot(inst, free, d, v, [&](std::size_t index, Weight w) {
          if (!has_min || w < min_w) {
            if (has_min) {
              second_w = min_w;
              has_second = true;
            }
            min_w = w;
            min_index = index;
            has_min = true;
          } else if (!has_second || w < second_w) {
            second_w = w;
            has_second = true;
          }
        });
        const std::uint64_t regret = has_second ? second_w - min_w : RegretSlot::kInfiniteRegret;
        if (!chosen || regret > chosen_regret) {
          chosen = true;
          chosen_regret = regret;
          chosen_index = min_index;
        }
      }
    }
    if (stats) stats->record(reads);
    decode_index(chosen_index, inst, coords);
    a.try_add0(coords);
  }
  return Assignment(std::move(a));
}

Assignment max_regret(const Instance& inst, ScanStats* stats) {
  const int s = inst.num_dims();
  const int n = inst.dim_size();
  PartialAssignment a(s, n);
  RegretTable table(s, n);
  std::vector<int> coords(static_cast<std::size_t>(s));
  const Weight* weights = inst.weights().data();

  while (!a.is_full()) {
    table.clear();
    std::uint64_t reads = 0;
    for_each_available_run(a, inst, [&](std::size_t base, std::span<const int> prefix, std::span<const int> last) {
      const Weight* row = weights + base;
      // Along a run only the last coordinate changes, so the prefix slots
      // receive the run's two lightest vectors in one merge.
      RegretSlot run;
      for (int v : last) {
        const std::size_t index = base + static_cast<std::size_t>(v);
        const Weight w = row[v];
        run.offer(index, w);
        table.slot(s - 1, v).offer(index, w);
      }
      for (int d = 0; d < s - 1; ++d) {
        RegretSlot& slot = table.slot(d, prefix[d]);
        slot.offer(run.best_index, run.best_weight);
        if (run.has_second()) slot.offer(run.second_index, run.second_weight);
      }
      reads += last.size();
      return true;
    });
    if (stats) stats->record(reads);

    const RegretSlot* chosen = nullptr;
    std::uint64_t chosen_regret = 0;
    for (int d = 0; d < s; ++d) {
      for (int v = 0; v < n; ++v) {
        if (a.is_used0(d, v)) continue;
        const RegretSlot& slot = table.slot(d, v);
        assert(slot.has_best());
        const std::uint64_t regret = slot.regret();
        if (!chosen || regret > chosen_regret) {
          chosen = &slot;
          chosen_regret = regret;
        }
      }
    }
    decode_index(chosen->best_index, inst, coords);
    a.try_add0(coords);
  }
  return Assignment(std::move(a));
}

}  // namespace mdap
