#pragma once

#include <span>
#include <string>
#include <string_view>

#include "mdap/experiment.hpp"

namespace mdap::bench {

enum class ReportFormat { csv, markdown };

ReportFormat parse_report_format(std::string_view name);

// One line per experiment row, then one "<s>-AP avg." line per dimension
// count (only when rows span several) and a final "All avg." line. Errors
// carry one decimal, times are whole milliseconds. All rows must use the same
// heuristic list.
std::string emit_report(std::span<const ReportRow> rows, ReportFormat format);

// Per-instance detail: objective, error and time for every heuristic.
std::string emit_instance_rows(std::span<const InstanceRow> rows, ReportFormat format);

}  // namespace mdap::bench
