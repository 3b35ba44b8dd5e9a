#include "phavail/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace phavail {

std::string render_table(const ReportTable& table) {
  std::vector<std::size_t> widths(table.headers.size(), 0);
  for (std::size_t c = 0; c < table.headers.size(); ++c)
    widths[c] = table.headers[c].size();
  for (const auto& row : table.rows)
    for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());

  std::ostringstream out;
  out << table.title << "\n";
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << "  ";
      out << cells[c];
      if (c + 1 < cells.size())
        out << std::string(widths[c] - cells[c].size(), ' ');
    }
    out << "\n";
  };
  emit_row(table.headers);
  std::size_t total = 0;
  for (std::size_t c = 0; c < widths.size(); ++c)
    total += widths[c] + (c ? 2 : 0);
  out << std::string(total, '-') << "\n";
  for (const auto& row : table.rows) emit_row(row);
  if (!table.note.empty()) out << "note: " << table.note << "\n";
  return out.str();
}

namespace {
std::string to_chars_str(double value, std::chars_format fmt, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value, fmt, precision);
  return std::string(buf, res.ptr);
}
}  // namespace

std::string format_g17(double value) {
  return to_chars_str(value, std::chars_format::general, 17);
}

std::string format_sig(double value, int digits) {
  return to_chars_str(value, std::chars_format::general, digits);
}

double round_half_away(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

std::string format_fixed(double value, int decimals) {
  return to_chars_str(round_half_away(value, decimals),
                      std::chars_format::fixed, decimals);
}

std::vector<double> linear_grid(double t_start, double t_stop, int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = t_start + (t_stop - t_start) * i / (points - 1);
  g.back() = t_stop;
  return g;
}

std::vector<double> log_grid(double t_start, double t_stop, int points) {
  if (!(t_start > 0.0)) throw Error("log grid requires t_start > 0");
  std::vector<double> g(points);
  const double l0 = std::log(t_start), l1 = std::log(t_stop);
  for (int i = 0; i < points; ++i)
    g[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
  g.front() = t_start;
  g.back() = t_stop;
  return g;
}

std::vector<double> make_grid(const AnalysisOptions& options) {
  return options.log_spacing
             ? log_grid(options.t_start, options.t_stop, options.points)
             : linear_grid(options.t_start, options.t_stop, options.points);
}

std::string availability_csv(const SystemModel& model,
                             std::span<const double> grid) {
  model.check();
  const bool with_system = model.structure != SystemStructure::Single;
  std::string out = "t";
  for (const auto& c : model.components)
    out += "," + c.label + "_lindley," + c.label + "_exponential";
  if (with_system) out += ",system";
  out += "\n";

  for (double t : grid) {
    out += format_g17(t);
    for (const auto& c : model.components) {
      out += "," + format_g17(availability_closed(c.params.lambda, c.params.mu, t));
      out += "," + format_g17(availability_exponential_closed(c.params.lambda,
                                                              c.params.mu, t));
    }
    if (with_system) {
      const AvailabilityCurve sys = system_availability_curve(model, {&t, 1});
      out += "," + format_g17(sys.values[0]);
    }
    out += "\n";
  }
  return out;
}

std::string reliability_csv(const SystemModel& model,
                            std::span<const double> grid) {
  model.check();
  std::string out = "t";
  for (const auto& c : model.components)
    out += "," + c.label + "_with_repair," + c.label + "_no_repair";
  out += "\n";

  for (double t : grid) {
    out += format_g17(t);
    for (const auto& c : model.components) {
      const auto& p = c.params;
      const double with_repair =
          p.law == DistributionLaw::Lindley
              ? availability_closed(p.lambda, p.mu, t)
              : availability_exponential_closed(p.lambda, p.mu, t);
      const double no_repair = p.law == DistributionLaw::Lindley
                                   ? reliability_lindley(p.lambda, t)
                                   : std::exp(-p.lambda * t);
      out += "," + format_g17(with_repair) + "," + format_g17(no_repair);
    }
    out += "\n";
  }
  return out;
}

ReportTable steady_state_report(const SystemModel& model) {
  model.check();
  for (const auto& c : model.components)
    if (c.params.mu <= 0.0) throw NonPositiveRate("mu", c.params.mu);

  ReportTable table;
  table.title = "Steady-state availability: " + model.name;
  table.headers = {"component", "A_inf_exponential", "A_inf_lindley",
                   "abs_gap_pp", "rel_increase_pct"};
  auto add_row = [&table](const std::string& label, double a_exp, double a_lin) {
    table.rows.push_back({label, format_fixed(a_exp, 4), format_fixed(a_lin, 4),
                          format_fixed((a_lin - a_exp) * 100.0, 2),
                          format_fixed((a_lin / a_exp - 1.0) * 100.0, 2)});
  };

  std::vector<ComponentParams> as_exp, as_lin;
  for (const auto& c : model.components) {
    ComponentParams e = c.params, l = c.params;
    e.law = DistributionLaw::Exponential;
    l.law = DistributionLaw::Lindley;
    as_exp.push_back(e);
    as_lin.push_back(l);
    add_row(c.label, steady_state_availability(e), steady_state_availability(l));
  }
  if (model.structure == SystemStructure::Series) {
    add_row("system(series)", steady_state_series(as_exp), steady_state_series(as_lin));
  } else if (model.structure == SystemStructure::Parallel) {
    add_row("system(parallel)", steady_state_parallel(as_exp),
            steady_state_parallel(as_lin));
  }
  table.note = "closed-form steady-state values under both failure laws";
  return table;
}

ReportTable sensitivity_report(const SystemComponent& component,
                               SensitivityParam param,
                               std::span<const double> values) {
  component.params.check();
  const bool vary_lambda = param == SensitivityParam::Lambda;

  std::vector<double> vals(values.begin(), values.end());
  if (vals.empty()) {
    const double nominal =
        vary_lambda ? component.params.lambda : component.params.mu;
    vals = {0.5 * nominal, nominal, 1.5 * nominal, 2.0 * nominal};
  }

  ReportTable table;
  const std::string pname = vary_lambda ? "lambda" : "mu";
  table.title = "Sensitivity of A_inf_lindley to " + pname + ": " + component.label;
  table.headers = {pname + "_per_day", "A_inf_lindley", "dA_inf/d" + pname};
  for (double v : vals) {
    if (!(v > 0.0)) throw NonPositiveRate(pname, v);
    const double lambda = vary_lambda ? v : component.params.lambda;
    const double mu = vary_lambda ? component.params.mu : v;
    const ComponentParams p{lambda, mu, DistributionLaw::Lindley};
    const double deriv = vary_lambda ? dA_dlambda(lambda, mu) : dA_dmu(lambda, mu);
    table.rows.push_back({format_g17(v),
                          format_fixed(steady_state_availability(p), 4),
                          format_sig(deriv, 3)});
  }
  table.note = "other rate held at its model value (" +
               (vary_lambda ? "mu=" + format_g17(component.params.mu)
                            : "lambda=" + format_g17(component.params.lambda)) +
               ")";
  return table;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace phavail
