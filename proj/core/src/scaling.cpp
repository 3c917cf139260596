#include "mdap/scaling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "mdap/error.hpp"
#include "mdap/generators.hpp"

namespace mdap::bench {

double fit_loglog_slope(std::span<const ScalingPoint> points) {
  if (points.size() < 2) throw FormatError("slope fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    if (p.dim_size <= 0 || !(p.seconds > 0)) throw FormatError("slope fit needs positive sizes and times");
    const double x = std::log(static_cast<double>(p.dim_size));
    const double y = std::log(p.seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0) throw FormatError("slope fit needs distinct sizes");
  return (m * sxy - sx * sy) / denom;
}

ScalingResult scaling_probe(const std::function<void(const Instance&)>& run, int num_dims,
                            std::span<const int> sizes, const ScalingOptions& options) {
  if (sizes.size() < 3) throw FormatError("scaling probe needs at least three sizes");
  if (!std::is_sorted(sizes.begin(), sizes.end()) ||
      std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end()) {
    throw FormatError("scaling probe sizes must be strictly increasing");
  }
  using clock = std::chrono::steady_clock;
  ScalingResult result;
  for (int n : sizes) {
    check_memory_budget(num_dims, n, options.memory_budget_bytes);
    const Instance inst = [&] {
      switch (options.family) {
        case Family::random: return gen_random(num_dims, n, options.instance_index);
        case Family::composite: return gen_composite(num_dims, n, options.instance_index).instance;
        case Family::planted: return gen_planted(num_dims, n, options.instance_index).instance;
        case Family::cs: break;
      }
      throw UnsupportedFamilyError("scaling probe generates random, composite or planted instances");
    }();
    run(inst);  // warm-up
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(options.repetitions, 1); ++r) {
      const auto start = clock::now();
      run(inst);
      best = std::min(best, std::chrono::duration<double>(clock::now() - start).count());
    }
    result.points.push_back({n, std::max(best, 1e-9)});
  }
  result.exponent = fit_loglog_slope(result.points);
  return result;
}

ScalingResult scaling_probe(HeuristicKind kind, int num_dims, std::span<const int> sizes,
                            const ScalingOptions& options) {
  return scaling_probe([&](const Instance& inst) { (void)run_heuristic(kind, inst, options.config); },
                       num_dims, sizes, options);
}

}  // namespace mdap::bench
