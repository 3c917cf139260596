#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mdap/exact.hpp"
#include "mdap/heuristics.hpp"
#include "mdap/instance.hpp"

namespace mdap::bench {

enum class Family { random, composite, planted, cs };

Family parse_family(std::string_view name);
std::string_view family_name(Family family);
// Letters used in row labels: r, c, p, cs.
std::string_view family_letter(Family family);

// Row labels read "<s><letter><n>", e.g. 3r100.
struct Label {
  int num_dims;
  Family family;
  int dim_size;

  friend bool operator==(const Label&, const Label&) = default;
};
std::string make_label(const Label& label);
Label parse_label(std::string_view text);

enum class ReferenceKind {
  optimum,      // proven optimal (planted, CS with known optimum, exact search)
  lower_bound,  // n * minimum weight (Random family)
  best_found,   // best objective among the heuristics of this run
};
std::string_view reference_kind_name(ReferenceKind kind);

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{2} << 30;

struct ExperimentSpec {
  Family family = Family::random;
  int num_dims = 3;
  int dim_size = 10;
  int count = 10;
  std::vector<HeuristicKind> heuristics{std::begin(kAllHeuristics), std::end(kAllHeuristics)};
  // Solve every instance exactly and use the optimum as the reference.
  bool exact = false;
  SearchBudget budget;
  // Family::cs: one instance per file; num_dims/dim_size/count are taken
  // from the files.
  std::vector<std::filesystem::path> cs_files;
  HeuristicConfig config;
  // Timed runs per (heuristic, instance) after one discarded warm-up run.
  int repetitions = 1;
  bool warm_up = true;
  // Instances processed concurrently; timed runs are still serialized.
  int threads = 1;
  std::size_t memory_budget_bytes = kDefaultMemoryBudget;
};

struct HeuristicOutcome {
  HeuristicKind kind;
  Objective objective = 0;
  double error_percent = 0;
  double time_ms = 0;
};

struct InstanceRow {
  std::string label;
  int index = 0;  // 1-based instance index driving the seed
  double reference = 0;
  ReferenceKind reference_kind = ReferenceKind::best_found;
  std::vector<HeuristicOutcome> outcomes;
};

// Averages over the instances of one experiment.
struct ReportRow {
  std::string label;
  int num_dims = 0;
  double reference = 0;
  ReferenceKind reference_kind = ReferenceKind::best_found;
  std::vector<HeuristicKind> heuristics;
  std::vector<double> error_percent;  // parallel to heuristics
  std::vector<double> time_ms;        // parallel to heuristics
  int instances = 0;
};

struct ExperimentResult {
  std::vector<InstanceRow> instances;
  ReportRow summary;
};

// Throws SizeError when n^s 4-byte weights exceed the byte budget.
void check_memory_budget(int num_dims, int dim_size, std::size_t budget_bytes);

ExperimentResult run_experiment(const ExperimentSpec& spec);

ReportRow summarize(std::string label, int num_dims, const std::vector<InstanceRow>& rows);

}  // namespace mdap::bench
