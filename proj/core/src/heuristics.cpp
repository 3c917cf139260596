#include "mdap/heuristics.hpp"

#include <string>

#include "mdap/error.hpp"

namespace mdap {

HeuristicKind parse_heuristic(std::string_view name) {
  if (name == "greedy" || name == "gr") return HeuristicKind::greedy;
  if (name == "maxregret" || name == "max-regret" || name == "mr") return HeuristicKind::max_regret;
  if (name == "rom" || name == "r") return HeuristicKind::rom;
  if (name == "shiftrom" || name == "shift-rom" || name == "sr") return HeuristicKind::shift_rom;
  throw FormatError("unknown heuristic '" + std::string(name) + "'");
}

std::vector<HeuristicKind> parse_heuristic_list(std::string_view comma_separated) {
  std::vector<HeuristicKind> out;
  std::size_t start = 0;
  while (start <= comma_separated.size()) {
    const std::size_t end = std::min(comma_separated.find(',', start), comma_separated.size());
    const auto token = comma_separated.substr(start, end - start);
    if (!token.empty()) out.push_back(parse_heuristic(token));
    start = end + 1;
  }
  if (out.empty()) throw FormatError("empty heuristic list");
  return out;
}

std::string_view heuristic_name(HeuristicKind kind) {
  switch (kind) {
    case HeuristicKind::greedy: return "greedy";
    case HeuristicKind::max_regret: return "maxregret";
    case HeuristicKind::rom: return "rom";
    case HeuristicKind::shift_rom: return "shiftrom";
  }
  return "?";
}

std::string_view heuristic_tag(HeuristicKind kind) {
  switch (kind) {
    case HeuristicKind::greedy: return "Gr";
    case HeuristicKind::max_regret: return "M-R";
    case HeuristicKind::rom: return "R";
    case HeuristicKind::shift_rom: return "S-R";
  }
  return "?";
}

Assignment run_heuristic(HeuristicKind kind, const Instance& inst, const HeuristicConfig& config,
                         ScanStats* stats) {
  switch (kind) {
    case HeuristicKind::greedy: return greedy(inst, config.greedy, stats);
    case HeuristicKind::max_regret: return max_regret(inst, stats);
    case HeuristicKind::rom: return rom(inst, DimensionRotation{}, stats);
    case HeuristicKind::shift_rom: return shift_rom(inst, stats);
  }
  throw FormatError("unknown heuristic");
}

}  // namespace mdap
