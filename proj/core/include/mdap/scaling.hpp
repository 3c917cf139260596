#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mdap/experiment.hpp"
#include "mdap/heuristics.hpp"

namespace mdap::bench {

struct ScalingPoint {
  int dim_size;
  double seconds;
};

struct ScalingResult {
  std::vector<ScalingPoint> points;
  // Least-squares slope of log(time) against log(n).
  double exponent = 0;
};

struct ScalingOptions {
  Family family = Family::random;
  int instance_index = 1;
  // Timed runs per size after one warm-up; the fastest is kept.
  int repetitions = 3;
  HeuristicConfig config;
  std::size_t memory_budget_bytes = kDefaultMemoryBudget;
};

double fit_loglog_slope(std::span<const ScalingPoint> points);

ScalingResult scaling_probe(HeuristicKind kind, int num_dims, std::span<const int> sizes,
                            const ScalingOptions& options = {});

// Same measurement around an arbitrary callable.
ScalingResult scaling_probe(const std::function<void(const Instance&)>& run, int num_dims,
                            std::span<const int> sizes, const ScalingOptions& options = {});

}  // namespace mdap::bench
