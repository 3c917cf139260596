#include "mdap/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

#include "mdap/error.hpp"

namespace mdap::bench {

namespace {

using Table = std::vector<std::vector<std::string>>;

std::string fixed1(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string whole_ms(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.0f", std::round(v));
  return buf;
}

std::string render(const Table& table, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::csv) {
    for (const auto& row : table) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        out += row[c];
      }
      out += '\n';
    }
    return out;
  }
  std::vector<std::size_t> width(table.front().size(), 0);
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& row) {
    out += '|';
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - row[c].size(), ' ');
      // Label column left-aligned, numbers right-aligned.
      out += ' ';
      out += c == 0 ? row[c] + pad : pad + row[c];
      out += " |";
    }
    out += '\n';
  };
  line(table.front());
  out += '|';
  for (std::size_t c = 0; c < width.size(); ++c) {
    out += c == 0 ? ' ' + std::string(width[c], '-') + " |" : ' ' + std::string(width[c] - 1, '-') + ": |";
  }
  out += '\n';
  for (std::size_t r = 1; r < table.size(); ++r) line(table[r]);
  return out;
}

std::vector<std::string> average_line(std::string label, std::span<const ReportRow* const> rows) {
  const std::size_t h = rows.front()->heuristics.size();
  std::vector<double> err(h, 0), ms(h, 0);
  for (const ReportRow* row : rows) {
    for (std::size_t k = 0; k < h; ++k) {
      err[k] += row->error_percent[k];
      ms[k] += row->time_ms[k];
    }
  }
  std::vector<std::string> line{std::move(label), "", ""};
  for (double e : err) line.push_back(fixed1(e / static_cast<double>(rows.size())));
  for (double t : ms) line.push_back(whole_ms(t / static_cast<double>(rows.size())));
  return line;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "md" || name == "markdown") return ReportFormat::markdown;
  throw FormatError("unknown report format '" + std::string(name) + "'");
}

std::string emit_report(std::span<const ReportRow> rows, ReportFormat format) {
  if (rows.empty()) throw FormatError("report needs at least one row");
  const auto& heuristics = rows.front().heuristics;
  for (const auto& row : rows) {
    if (row.heuristics != heuristics) throw FormatError("report rows use different heuristic sets");
  }

  Table table;
  std::vector<std::string> header{"Inst.", "Ref", "Kind"};
  for (HeuristicKind k : heuristics) header.push_back("err% " + std::string(heuristic_tag(k)));
  for (HeuristicKind k : heuristics) header.push_back("ms " + std::string(heuristic_tag(k)));
  table.push_back(std::move(header));

  std::map<int, std::vector<const ReportRow*>> by_dims;
  std::vector<const ReportRow*> all;
  for (const auto& row : rows) {
    std::vector<std::string> line{row.label, fixed1(row.reference), std::string(reference_kind_name(row.reference_kind))};
    for (double e : row.error_percent) line.push_back(fixed1(e));
    for (double t : row.time_ms) line.push_back(whole_ms(t));
    table.push_back(std::move(line));
    by_dims[row.num_dims].push_back(&row);
    all.push_back(&row);
  }
  if (by_dims.size() > 1) {
    for (const auto& [dims, group] : by_dims) {
      table.push_back(average_line(std::to_string(dims) + "-AP avg.", group));
    }
  }
  table.push_back(average_line("All avg.", all));
  return render(table, format);
}

std::string emit_instance_rows(std::span<const InstanceRow> rows, ReportFormat format) {
  if (rows.empty()) throw FormatError("report needs at least one row");
  Table table;
  std::vector<std::string> header{"Inst.", "Ref", "Kind"};
  for (const auto& o : rows.front().outcomes) header.push_back("obj " + std::string(heuristic_tag(o.kind)));
  for (const auto& o : rows.front().outcomes) header.push_back("err% " + std::string(heuristic_tag(o.kind)));
  for (const auto& o : rows.front().outcomes) header.push_back("ms " + std::string(heuristic_tag(o.kind)));
  table.push_back(std::move(header));
  for (const auto& row : rows) {
    std::vector<std::string> line{row.label, fixed1(row.reference), std::string(reference_kind_name(row.reference_kind))};
    for (const auto& o : row.outcomes) line.push_back(std::to_string(o.objective));
    for (const auto& o : row.outcomes) line.push_back(fixed1(o.error_percent));
    for (const auto& o : row.outcomes) line.push_back(whole_ms(o.time_ms));
    table.push_back(std::move(line));
  }
  return render(table, format);
}

}  // namespace mdap::bench
