#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mdap/error.hpp"
#include "mdap/exact.hpp"
#include "mdap/generators.hpp"
#include "mdap/instance_io.hpp"
#include "mdap/report.hpp"
#include "mdap/scaling.hpp"

namespace {

using namespace mdap;
namespace fs = std::filesystem;

// Exit codes, one per error class.
enum ExitCode : int {
  kOk = 0,
  kFormat = 2,
  kIo = 3,
  kSize = 4,
  kUnsupportedFamily = 5,
  kUndefinedMetric = 6,
  kInvalidInput = 7,
  kInternal = 10,
};

struct GenArgs {
  std::string family = "random";
  int s = 3;
  int n = 10;
  int count = 10;
  fs::path out = ".";
  std::string format = "text";
};

struct RunArgs {
  std::string family = "random";
  int s = 3;
  int n = 10;
  int count = 10;
  std::string heuristics = "greedy,maxregret,rom,shiftrom";
  bool exact = false;
  std::string format = "md";
  std::size_t buffer_size = kDefaultGreedyBuffer;
  int threads = 1;
  int repetitions = 1;
  bool no_warm_up = false;
  bool detail = false;
  std::vector<fs::path> cs_files;
  double memory_budget_gib = 2.0;
};

struct ScaleArgs {
  std::string heuristic = "rom";
  std::string family = "random";
  int s = 3;
  std::vector<int> sizes;
  int repetitions = 3;
  std::size_t buffer_size = kDefaultGreedyBuffer;
  double memory_budget_gib = 2.0;
};

struct SolveArgs {
  fs::path in;
  std::string heuristic = "shiftrom";
  std::size_t buffer_size = kDefaultGreedyBuffer;
  bool print_rows = false;
};

std::size_t gib_to_bytes(double gib) { return static_cast<std::size_t>(gib * static_cast<double>(std::size_t{1} << 30)); }

HeuristicConfig config_for(std::size_t buffer_size, std::optional<Weight> hint) {
  if (buffer_size == 0) throw FormatError("--buffer-size must be positive");
  HeuristicConfig config;
  config.greedy.buffer_capacity = buffer_size;
  config.greedy.min_weight_hint = hint;
  return config;
}

int cmd_gen(const GenArgs& args) {
  const bench::Family family = bench::parse_family(args.family);
  if (family == bench::Family::cs) throw UnsupportedFamilyError("cs instances are loaded, not generated");
  const InstanceFormat format = args.format == "binary" ? InstanceFormat::binary : InstanceFormat::text;
  if (args.format != "binary" && args.format != "text") throw FormatError("--format must be text or binary");
  bench::check_memory_budget(args.s, args.n, bench::kDefaultMemoryBudget);
  std::error_code ec;
  fs::create_directories(args.out, ec);
  if (ec) throw IoError("cannot create " + args.out.string() + ": " + ec.message());

  const std::string label = bench::make_label({args.s, family, args.n});
  const char* ext = format == InstanceFormat::binary ? ".mapb" : ".map";
  for (int i = 1; i <= args.count; ++i) {
    const fs::path path = args.out / (label + "_" + std::to_string(i) + ext);
    switch (family) {
      case bench::Family::random: save_instance(path, gen_random(args.s, args.n, i), format); break;
      case bench::Family::composite: save_instance(path, gen_composite(args.s, args.n, i).instance, format); break;
      case bench::Family::planted: save_instance(path, gen_planted(args.s, args.n, i).instance, format); break;
      case bench::Family::cs: break;
    }
    std::cout << path.string() << '\n';
  }
  return kOk;
}

int cmd_run(const RunArgs& args) {
  bench::ExperimentSpec spec;
  spec.family = bench::parse_family(args.family);
  spec.num_dims = args.s;
  spec.dim_size = args.n;
  spec.count = args.count;
  spec.heuristics = parse_heuristic_list(args.heuristics);
  spec.exact = args.exact;
  spec.cs_files = args.cs_files;
  spec.repetitions = args.repetitions;
  spec.warm_up = !args.no_warm_up;
  spec.threads = args.threads;
  spec.memory_budget_bytes = gib_to_bytes(args.memory_budget_gib);
  const std::optional<Weight> hint =
      spec.family == bench::Family::random ? std::optional<Weight>(kRandomMinWeight) : std::nullopt;
  spec.config = config_for(args.buffer_size, hint);
  if (spec.family == bench::Family::cs && spec.cs_files.empty()) throw FormatError("--family cs needs --cs-file");
  if (spec.count < 1) throw FormatError("--count must be positive");

  const bench::ReportFormat format = bench::parse_report_format(args.format);
  const bench::ExperimentResult result = bench::run_experiment(spec);
  if (args.detail) {
    std::cout << bench::emit_instance_rows(result.instances, format) << '\n';
  }
  const std::vector<bench::ReportRow> rows{result.summary};
  std::cout << bench::emit_report(rows, format);
  return kOk;
}

int cmd_scale(const ScaleArgs& args) {
  bench::ScalingOptions options;
  options.family = bench::parse_family(args.family);
  options.repetitions = args.repetitions;
  options.memory_budget_bytes = gib_to_bytes(args.memory_budget_gib);
  options.config = config_for(args.buffer_size, std::nullopt);
  const HeuristicKind kind = parse_heuristic(args.heuristic);
  const bench::ScalingResult r = bench::scaling_probe(kind, args.s, args.sizes, options);
  std::printf("n,ms\n");
  for (const auto& p : r.points) std::printf("%d,%.3f\n", p.dim_size, p.seconds * 1e3);
  std::printf("exponent,%.2f\n", r.exponent);
  return kOk;
}

int cmd_solve(const SolveArgs& args) {
  const Instance inst = load_instance(args.in);
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  std::optional<Assignment> result;
  std::string name;
  if (args.heuristic == "exact") {
    result = brute_force(inst).assignment;
    name = "exact";
  } else {
    const HeuristicKind kind = parse_heuristic(args.heuristic);
    result = run_heuristic(kind, inst, config_for(args.buffer_size, std::nullopt));
    name = heuristic_name(kind);
  }
  const double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  std::printf("instance,s,n,method,objective,ms\n");
  std::printf("%s,%d,%d,%s,%llu,%.0f\n", args.in.filename().string().c_str(), inst.num_dims(), inst.dim_size(),
              name.c_str(), static_cast<unsigned long long>(evaluate(*result, inst)), ms);
  if (args.print_rows) {
    for (const Point& p : result->rows()) {
      for (std::size_t k = 0; k < p.coords.size(); ++k) std::printf("%s%d", k ? " " : "", p.coords[k]);
      std::printf("\n");
    }
  }
  return kOk;
}

int report_error(const char* kind, const std::exception& e, int code) {
  std::fprintf(stderr, "mdap: %s: %s\n", kind, e.what());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construction heuristics for the multidimensional assignment problem"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write seeded instances to a directory");
  gen_cmd->add_option("--family", gen.family, "random, composite or planted")->capture_default_str();
  gen_cmd->add_option("--s", gen.s, "Number of dimensions")->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Values per dimension")->capture_default_str();
  gen_cmd->add_option("--count", gen.count, "Instances, indices 1..count")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output directory")->capture_default_str();
  gen_cmd->add_option("--format", gen.format, "text or binary")->capture_default_str();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment and print the error/time table");
  run_cmd->add_option("--family", run.family, "random, composite, planted or cs")->capture_default_str();
  run_cmd->add_option("--s", run.s, "Number of dimensions")->capture_default_str();
  run_cmd->add_option("--n", run.n, "Values per dimension")->capture_default_str();
  run_cmd->add_option("--count", run.count, "Instances, indices 1..count")->capture_default_str();
  run_cmd->add_option("--heuristics", run.heuristics, "Comma-separated heuristic list")->capture_default_str();
  run_cmd->add_flag("--exact", run.exact, "Use the brute-force optimum as reference");
  run_cmd->add_option("--format", run.format, "csv or md")->capture_default_str();
  run_cmd->add_option("--buffer-size", run.buffer_size, "Greedy candidate buffer")->capture_default_str();
  run_cmd->add_option("--threads", run.threads, "Instances prepared concurrently")->capture_default_str();
  run_cmd->add_option("--repetitions", run.repetitions, "Timed runs per heuristic and instance")->capture_default_str();
  run_cmd->add_flag("--no-warm-up", run.no_warm_up, "Skip the discarded warm-up run");
  run_cmd->add_flag("--detail", run.detail, "Also print one row per instance");
  run_cmd->add_option("--cs-file", run.cs_files, "CS instance file (repeatable; implies --family cs)");
  run_cmd->add_option("--memory-budget", run.memory_budget_gib, "Weight tensor limit, GiB")->capture_default_str();

  ScaleArgs scale;
  auto* scale_cmd = app.add_subcommand("scale", "Fit the log-log running time slope of one heuristic");
  scale_cmd->add_option("--heuristic", scale.heuristic, "Heuristic name")->capture_default_str();
  scale_cmd->add_option("--family", scale.family, "random, composite or planted")->capture_default_str();
  scale_cmd->add_option("--s", scale.s, "Number of dimensions")->capture_default_str();
  scale_cmd->add_option("--n", scale.sizes, "Increasing sizes, e.g. 100,150,200")->delimiter(',')->required();
  scale_cmd->add_option("--repetitions", scale.repetitions, "Timed runs per size")->capture_default_str();
  scale_cmd->add_option("--buffer-size", scale.buffer_size, "Greedy candidate buffer")->capture_default_str();
  scale_cmd->add_option("--memory-budget", scale.memory_budget_gib, "Weight tensor limit, GiB")->capture_default_str();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
  solve_cmd->add_option("--in", solve.in, "Instance file (text or binary)")->required();
  solve_cmd->add_option("--heuristic", solve.heuristic, "Heuristic name or 'exact'")->capture_default_str();
  solve_cmd->add_option("--buffer-size", solve.buffer_size, "Greedy candidate buffer")->capture_default_str();
  solve_cmd->add_flag("--print-assignment", solve.print_rows, "Print the chosen vectors");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*run_cmd) {
      if (!run.cs_files.empty()) run.family = "cs";
      return cmd_run(run);
    }
    if (*scale_cmd) return cmd_scale(scale);
    if (*solve_cmd) return cmd_solve(solve);
  } catch (const FormatError& e) {
    return report_error("format error", e, kFormat);
  } catch (const IoError& e) {
    return report_error("i/o error", e, kIo);
  } catch (const SizeError& e) {
    return report_error("size error", e, kSize);
  } catch (const UnsupportedFamilyError& e) {
    return report_error("unsupported family", e, kUnsupportedFamily);
  } catch (const UndefinedMetricError& e) {
    return report_error("undefined metric", e, kUndefinedMetric);
  } catch (const Error& e) {
    return report_error("invalid input", e, kInvalidInput);
  } catch (const std::exception& e) {
    return report_error("internal error", e, kInternal);
  }
  return kOk;
}
