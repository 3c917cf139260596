#include "mdap/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

#include "mdap/error.hpp"
#include "mdap/generators.hpp"

namespace mdap::bench {

Family parse_family(std::string_view name) {
  if (name == "random" || name == "r") return Family::random;
  if (name == "composite" || name == "c") return Family::composite;
  if (name == "planted" || name == "p") return Family::planted;
  if (name == "cs") return Family::cs;
  throw FormatError("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::random: return "random";
    case Family::composite: return "composite";
    case Family::planted: return "planted";
    case Family::cs: return "cs";
  }
  return "?";
}

std::string_view family_letter(Family family) {
  switch (family) {
    case Family::random: return "r";
    case Family::composite: return "c";
    case Family::planted: return "p";
    case Family::cs: return "cs";
  }
  return "?";
}

std::string make_label(const Label& label) {
  return std::to_string(label.num_dims) + std::string(family_letter(label.family)) +
         std::to_string(label.dim_size);
}

Label parse_label(std::string_view text) {
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  std::size_t i = 0;
  while (i < text.size() && is_digit(text[i])) ++i;
  std::size_t j = i;
  while (j < text.size() && !is_digit(text[j])) ++j;
  if (i == 0 || j == i || j == text.size()) throw FormatError("malformed label '" + std::string(text) + "'");
  Label label{};
  auto parse_int = [&](std::string_view part) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw FormatError("malformed label '" + std::string(text) + "'");
    }
    return v;
  };
  label.num_dims = parse_int(text.substr(0, i));
  label.family = parse_family(text.substr(i, j - i));
  label.dim_size = parse_int(text.substr(j));
  return label;
}

std::string_view reference_kind_name(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::optimum: return "opt";
    case ReferenceKind::lower_bound: return "lb";
    case ReferenceKind::best_found: return "best";
  }
  return "?";
}

void check_memory_budget(int num_dims, int dim_size, std::size_t budget_bytes) {
  const std::size_t volume = tensor_volume(num_dims, dim_size);
  if (volume > budget_bytes / sizeof(Weight)) {
    throw SizeError("instance " + std::to_string(num_dims) + "-AP with n = " + std::to_string(dim_size) +
                    " needs " + std::to_string(volume) + " weights, over the memory budget of " +
                    std::to_string(budget_bytes) + " bytes");
  }
}

namespace {

struct GeneratedInstance {
  Instance instance;
  std::optional<Objective> optimum;
  std::string label;
};

GeneratedInstance make_instance(const ExperimentSpec& spec, int index) {
  switch (spec.family) {
    case Family::random:
      return {gen_random(spec.num_dims, spec.dim_size, index), std::nullopt, {}};
    case Family::composite:
      return {gen_composite(spec.num_dims, spec.dim_size, index).instance, std::nullopt, {}};
    case Family::planted: {
      PlantedInstance p = gen_planted(spec.num_dims, spec.dim_size, index);
      return {std::move(p.instance), p.optimum, {}};
    }
    case Family::cs: {
      const auto& path = spec.cs_files.at(static_cast<std::size_t>(index - 1));
      CsData data = load_cs_file(path);
      return {load_cs(data.edges), data.optimum, path.stem().string()};
    }
  }
  throw FormatError("unknown family");
}

double timed_run(HeuristicKind kind, const Instance& inst, const ExperimentSpec& spec, Objective& objective) {
  using clock = std::chrono::steady_clock;
  if (spec.warm_up) (void)run_heuristic(kind, inst, spec.config);
  const int reps = std::max(spec.repetitions, 1);
  double total_ms = 0;
  for (int r = 0; r < reps; ++r) {
    const auto start = clock::now();
    const Assignment a = run_heuristic(kind, inst, spec.config);
    const auto stop = clock::now();
    total_ms += std::chrono::duration<double, std::milli>(stop - start).count();
    objective = evaluate(a, inst);
  }
  return total_ms / reps;
}

InstanceRow process_instance(const ExperimentSpec& spec, int index, std::mutex& timing_mutex) {
  GeneratedInstance gen = make_instance(spec, index);
  const Instance& inst = gen.instance;
  check_memory_budget(inst.num_dims(), inst.dim_size(), spec.memory_budget_bytes);

  InstanceRow row;
  row.index = index;
  row.label = gen.label.empty()
                  ? make_label({inst.num_dims(), spec.family, inst.dim_size()}) + "#" + std::to_string(index)
                  : gen.label;

  {
    std::lock_guard lock(timing_mutex);
    for (HeuristicKind kind : spec.heuristics) {
      HeuristicOutcome outcome{kind};
      outcome.time_ms = timed_run(kind, inst, spec, outcome.objective);
      row.outcomes.push_back(outcome);
    }
  }

  if (spec.exact) {
    const ExactResult exact = brute_force(inst, spec.budget);
    row.reference = static_cast<double>(exact.value);
    row.reference_kind = ReferenceKind::optimum;
  } else if (gen.optimum) {
    row.reference = static_cast<double>(*gen.optimum);
    row.reference_kind = ReferenceKind::optimum;
  } else if (spec.family == Family::random) {
    row.reference = static_cast<double>(inst.dim_size()) * kRandomMinWeight;
    row.reference_kind = ReferenceKind::lower_bound;
  } else {
    Objective best = std::numeric_limits<Objective>::max();
    for (const auto& o : row.outcomes) best = std::min(best, o.objective);
    row.reference = static_cast<double>(best);
    row.reference_kind = ReferenceKind::best_found;
  }
  for (auto& o : row.outcomes) o.error_percent = error_percent(static_cast<double>(o.objective), row.reference);
  return row;
}

}  // namespace

ReportRow summarize(std::string label, int num_dims, const std::vector<InstanceRow>& rows) {
  ReportRow out;
  out.label = std::move(label);
  out.num_dims = num_dims;
  out.instances = static_cast<int>(rows.size());
  if (rows.empty()) return out;
  for (const auto& o : rows.front().outcomes) out.heuristics.push_back(o.kind);
  out.error_percent.assign(out.heuristics.size(), 0);
  out.time_ms.assign(out.heuristics.size(), 0);
  out.reference_kind = rows.front().reference_kind;
  for (const auto& row : rows) {
    out.reference += row.reference;
    // A row mixing kinds reports the weakest one.
    if (row.reference_kind != ReferenceKind::optimum) out.reference_kind = row.reference_kind;
    for (std::size_t h = 0; h < row.outcomes.size(); ++h) {
      out.error_percent[h] += row.outcomes[h].error_percent;
      out.time_ms[h] += row.outcomes[h].time_ms;
    }
  }
  const double count = static_cast<double>(rows.size());
  out.reference /= count;
  for (auto& e : out.error_percent) e /= count;
  for (auto& t : out.time_ms) t /= count;
  return out;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  if (spec.heuristics.empty()) throw FormatError("no heuristic selected");
  int count = spec.count;
  int num_dims = spec.num_dims;
  int dim_size = spec.dim_size;
  if (spec.family == Family::cs) {
    if (spec.cs_files.empty()) throw FormatError("cs family needs at least one --cs-file");
    count = static_cast<int>(spec.cs_files.size());
    num_dims = 3;
    dim_size = load_cs_file(spec.cs_files.front()).edges.dim_size();
  } else {
    if (count < 1) throw FormatError("instance count must be positive");
    if (spec.family == Family::composite && num_dims < 3) {
      throw UnsupportedFamilyError("composite family needs s >= 3");
    }
    check_memory_budget(num_dims, dim_size, spec.memory_budget_bytes);
    if (spec.exact && assignment_count(num_dims, dim_size) > spec.budget.max_leaves) {
      throw SizeError("exact search requested but (n!)^(s-1) exceeds the search budget");
    }
  }

  std::vector<InstanceRow> rows(static_cast<std::size_t>(count));
  std::mutex timing_mutex;
  const int threads = std::clamp(spec.threads, 1, count);
  if (threads == 1) {
    for (int i = 1; i <= count; ++i) rows[i - 1] = process_instance(spec, i, timing_mutex);
  } else {
    std::atomic<int> next{1};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> workers;
      for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
          for (int i = next++; i <= count; i = next++) {
            try {
              rows[i - 1] = process_instance(spec, i, timing_mutex);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  ExperimentResult result;
  result.summary = summarize(make_label({num_dims, spec.family, dim_size}), num_dims, rows);
  result.instances = std::move(rows);
  return result;
}

}  // namespace mdap::bench
