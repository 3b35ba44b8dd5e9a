#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "phavail/config.hpp"
#include "phavail/system.hpp"

namespace phavail {

/// A titled text table; every cell comes from one operation call.
struct ReportTable {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  std::string note;  // provenance: formula vs numeric vs simulation
};

/// Renders with space-aligned columns and a trailing newline.
std::string render_table(const ReportTable& table);

// Locale-independent float formatting (decimal point '.', no grouping).

/// 17 significant digits; round-trips exactly through strtod.
std::string format_g17(double value);

/// Shortest %g-style representation at the given significant digits.
std::string format_sig(double value, int digits);

/// Fixed decimals, ties rounded half away from zero.
std::string format_fixed(double value, int decimals);

/// Round half away from zero at `decimals` decimal places.
double round_half_away(double value, int decimals);

/// Evenly spaced grid, inclusive of both endpoints.
std::vector<double> linear_grid(double t_start, double t_stop, int points);

/// Log-spaced grid, inclusive; requires t_start > 0.
std::vector<double> log_grid(double t_start, double t_stop, int points);

std::vector<double> make_grid(const AnalysisOptions& options);

/// Per-component Lindley and exponential availability columns plus a system
/// column for series/parallel models. Header:
/// t,<label>_lindley,<label>_exponential[,system]
std::string availability_csv(const SystemModel& model,
                             std::span<const double> grid);

/// Per-component with-repair (availability under the configured law) and
/// no-repair (survival) columns. Header: t,<label>_with_repair,<label>_no_repair
std::string reliability_csv(const SystemModel& model,
                            std::span<const double> grid);

/// Steady-state availability under both laws per component, plus the system
/// row for series/parallel models, with the absolute gap (percentage
/// points) and relative increase (%).
ReportTable steady_state_report(const SystemModel& model);

enum class SensitivityParam { Lambda, Mu };

/// Rows of (value, steady-state availability, partial derivative) for one
/// component, the other rate held at its model value. An empty `values`
/// list defaults to nominal x {0.5, 1, 1.5, 2}.
ReportTable sensitivity_report(const SystemComponent& component,
                               SensitivityParam param,
                               std::span<const double> values);

/// Writes via a temp file and rename, so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace phavail
