#include "charherm/cli.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charherm/asymptotics.hpp"
#include "charherm/charlier.hpp"
#include "charherm/errors.hpp"
#include "charherm/hermite.hpp"
#include "charherm/output_table.hpp"
#include "charherm/polygon.hpp"
#include "charherm/rate_fitting.hpp"
#include "charherm/zeros.hpp"

namespace charherm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double parse_real(const std::string& text, const char* flag) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError(std::string(flag) + ": not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(value)) {
    throw DomainError(std::string(flag) + ": not a finite decimal: '" + text + "'");
  }
  return value;
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    values.push_back(parse_real(text.substr(start, comma - start), flag));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

/// In rational mode a decimal flag is read exactly and rounded once.
double parse_for_mode(const std::string& text, const char* flag, SummationMode mode) {
  if (mode == SummationMode::kExactRational) return to_double(parse_rational(text));
  return parse_real(text, flag);
}

template <typename T, typename F>
auto parallel_map(const std::vector<T>& inputs, F fn) {
  using R = std::invoke_result_t<F, const T&>;
  std::vector<std::future<R>> pending;
  pending.reserve(inputs.size());
  for (const T& v : inputs) {
    pending.push_back(std::async(std::launch::async, [&fn, &v] { return fn(v); }));
  }
  std::vector<R> out;
  out.reserve(inputs.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

struct Common {
  std::string out = "csv";
  std::string mode = "float";

  OutputFormat format() const { return out == "json" ? OutputFormat::kJson : OutputFormat::kCsv; }
  SummationMode summation() const {
    return mode == "rational" ? SummationMode::kExactRational : SummationMode::kCompensatedFloat;
  }
};

void add_out_flag(CLI::App* cmd, Common& common) {
  cmd->add_option("--out", common.out, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_mode_flag(CLI::App* cmd, Common& common) {
  cmd->add_option("--mode", common.mode, "summation mode")
      ->check(CLI::IsMember({"float", "rational"}));
}

std::optional<RateFit> try_fit(const std::vector<RatePoint>& points) {
  try {
    return fit_positive_rate(points);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

void report_fit(const std::optional<RateFit>& fit, std::ostream& err) {
  if (fit) {
    err << "fit: slope=" << format_number(fit->slope) << " r2=" << format_number(fit->r_squared)
        << " points=" << fit->points.size() << " excluded=" << fit->excluded << '\n';
  } else {
    err << "fit: not enough positive errors for a rate fit\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Charlier polynomials, Hermite functions and their convergence"};
  app.require_subcommand(1);
  Common common;
  std::function<int()> action;

  // eval ------------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "evaluate a single value");
  eval->require_subcommand(1);
  std::string n_text, a_text, nu_text, x_text;

  auto* eval_charlier = eval->add_subcommand("charlier", "c_n^a(nu)");
  eval_charlier->add_option("--n", n_text)->required();
  eval_charlier->add_option("--a", a_text)->required();
  eval_charlier->add_option("--nu", nu_text)->required();
  add_out_flag(eval_charlier, common);
  add_mode_flag(eval_charlier, common);
  eval_charlier->callback([&] {
    action = [&] {
      const auto mode = common.summation();
      const double n_real = parse_real(n_text, "--n");
      if (n_real < 0 || std::floor(n_real) != n_real) {
        throw DomainError("--n: degree must be a non-negative integer");
      }
      const auto n = static_cast<std::int64_t>(n_real);
      double value = 0.0;
      double a = 0.0;
      double nu = 0.0;
      if (mode == SummationMode::kExactRational) {
        const Rational ra = parse_rational(a_text);
        const Rational rnu = parse_rational(nu_text);
        a = to_double(ra);
        nu = to_double(rnu);
        value = to_double(charlier_sum<Rational>(n, ra, rnu));
      } else {
        a = parse_real(a_text, "--a");
        nu = parse_real(nu_text, "--nu");
        value = charlier_direct({n, a, nu, mode});
      }
      OutputTable table{{"n", "a", "nu", "value"}, {}};
      table.add_row({n, a, nu, value});
      write_table(table, common.format(), out);
      return int{kExitOk};
    };
  });

  auto* eval_hermite = eval->add_subcommand("hermite", "H_nu(x)");
  eval_hermite->add_option("--nu", nu_text)->required();
  eval_hermite->add_option("--x", x_text)->required();
  add_out_flag(eval_hermite, common);
  eval_hermite->callback([&] {
    action = [&] {
      const double nu = parse_real(nu_text, "--nu");
      const double x = parse_real(x_text, "--x");
      OutputTable table{{"nu", "x", "value"}, {}};
      table.add_row({nu, x, hermite_fn(nu, x)});
      write_table(table, common.format(), out);
      return int{kExitOk};
    };
  });

  auto* eval_scaled = eval->add_subcommand("scaled", "y_nu^a(x) = (2a)^{nu/2} c_n^a(nu)");
  eval_scaled->add_option("--x", x_text)->required();
  eval_scaled->add_option("--a", a_text)->required();
  eval_scaled->add_option("--nu", nu_text)->required();
  add_out_flag(eval_scaled, common);
  add_mode_flag(eval_scaled, common);
  eval_scaled->callback([&] {
    action = [&] {
      const auto mode = common.summation();
      const double x = parse_for_mode(x_text, "--x", mode);
      const double a = parse_for_mode(a_text, "--a", mode);
      const double nu = parse_for_mode(nu_text, "--nu", mode);
      const ScaledPoint p = ScaledPoint::make(x, a);
      OutputTable table{{"x", "a", "nu", "n", "theta", "value"}, {}};
      table.add_row({x, a, nu, p.n, p.theta, scaled_y(p, nu, mode)});
      write_table(table, common.format(), out);
      return int{kExitOk};
    };
  });

  // sweep -----------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "parameter sweeps");
  sweep->require_subcommand(1);
  std::string a_list_text;
  auto* sweep_conv = sweep->add_subcommand("convergence", "|y_nu^a(x) - H_nu(x)| over a");
  sweep_conv->add_option("--nu", nu_text)->required();
  sweep_conv->add_option("--x", x_text)->required();
  sweep_conv->add_option("--a-list", a_list_text)->required();
  add_out_flag(sweep_conv, common);
  add_mode_flag(sweep_conv, common);
  sweep_conv->callback([&] {
    action = [&] {
      const auto mode = common.summation();
      const double nu = parse_for_mode(nu_text, "--nu", mode);
      const double x = parse_for_mode(x_text, "--x", mode);
      const std::vector<double> a_values = parse_list(a_list_text, "--a-list");
      const double h = hermite_fn(nu, x);

      struct Row {
        double a = 0.0;
        std::int64_t n = -1;
        double theta = kNaN, y = kNaN, err = kNaN;
        std::string error;
      };
      const auto rows = parallel_map(a_values, [&](double a) {
        Row row;
        row.a = a;
        try {
          const ScaledPoint p = ScaledPoint::make(x, a);
          row.n = p.n;
          row.theta = p.theta;
          row.y = scaled_y(p, nu, mode);
          row.err = std::abs(row.y - h);
        } catch (const DomainError&) {
          row.error = "domain_error";
        }
        return row;
      });

      std::vector<RatePoint> points;
      for (const Row& r : rows) {
        if (r.error.empty()) points.push_back({r.a, r.err});
      }
      const auto fit = try_fit(points);
      const double slope = fit ? fit->slope : kNaN;
      const double r2 = fit ? fit->r_squared : kNaN;
      OutputTable table{{"a", "n", "theta", "y", "h", "abs_err", "error", "fit_slope", "fit_r2"},
                        {}};
      for (const Row& r : rows) {
        table.add_row({r.a, r.n, r.theta, r.y, h, r.err, r.error, slope, r2});
      }
      write_table(table, common.format(), out);
      report_fit(fit, err);
      return points.size() >= 3 ? int{kExitOk} : int{kExitDomainError};
    };
  });

  // plot ------------------------------------------------------------------
  auto* plot = app.add_subcommand("plot", "plot data");
  plot->require_subcommand(1);
  std::string t_max_text, dt_text;
  auto* plot_fnu = plot->add_subcommand("fnu", "f_nu(t) = t^{-nu-1} exp(-t^2/2)");
  plot_fnu->add_option("--nu", nu_text)->required();
  plot_fnu->add_option("--t-max", t_max_text)->required();
  plot_fnu->add_option("--dt", dt_text)->required();
  add_out_flag(plot_fnu, common);
  plot_fnu->callback([&] {
    action = [&] {
      const double nu = parse_real(nu_text, "--nu");
      const double t_max = parse_real(t_max_text, "--t-max");
      const double dt = parse_real(dt_text, "--dt");
      if (!(dt > 0.0) || !(t_max > 0.0)) throw DomainError("plot fnu: requires dt > 0, t_max > 0");
      const auto count = static_cast<std::int64_t>(std::floor(t_max / dt * (1.0 + 1e-12)));
      OutputTable table{{"t", "f"}, {}};
      for (std::int64_t i = 0; i <= count; ++i) {
        const double t = static_cast<double>(i) * dt;
        table.add_row({t, f_nu(t, nu)});
      }
      write_table(table, common.format(), out);
      return int{kExitOk};
    };
  });

  // zeros -----------------------------------------------------------------
  auto* zeros = app.add_subcommand("zeros", "zero locations");
  zeros->require_subcommand(1);
  std::string target_text;
  auto* zeros_conv = zeros->add_subcommand("convergence", "Charlier zeros near a Hermite zero");
  zeros_conv->add_option("--x", x_text)->required();
  zeros_conv->add_option("--target-nu", target_text)->required();
  zeros_conv->add_option("--a-list", a_list_text)->required();
  add_out_flag(zeros_conv, common);
  zeros_conv->callback([&] {
    action = [&] {
      const double x = parse_real(x_text, "--x");
      const double target = parse_real(target_text, "--target-nu");
      const auto rows = zero_convergence_table(x, target, parse_list(a_list_text, "--a-list"));
      std::vector<RatePoint> points;
      for (const auto& r : rows) {
        if (r.error.empty()) points.push_back({r.a, r.abs_err});
      }
      const auto fit = try_fit(points);
      const double slope = fit ? fit->slope : kNaN;
      const double r2 = fit ? fit->r_squared : kNaN;
      OutputTable table{{"a", "n", "nu_n", "abs_err", "error", "fit_slope", "fit_r2"}, {}};
      for (const auto& r : rows) {
        const bool ok = r.error.empty();
        table.add_row({r.a, r.n, ok ? r.nu_n : kNaN, ok ? r.abs_err : kNaN, r.error, slope, r2});
      }
      write_table(table, common.format(), out);
      report_fit(fit, err);
      return int{kExitOk};
    };
  });

  // polygon ---------------------------------------------------------------
  auto* polygon = app.add_subcommand("polygon", "Euler polygon vs Charlier trace");
  polygon->require_subcommand(1);
  std::string x_max_text;
  std::string direction = "ascending";
  auto* polygon_cmp = polygon->add_subcommand("compare", "node-by-node comparison");
  polygon_cmp->add_option("--nu", nu_text)->required();
  polygon_cmp->add_option("--x-max", x_max_text)->required();
  polygon_cmp->add_option("--a", a_text)->required();
  polygon_cmp->add_option("--direction", direction)
      ->check(CLI::IsMember({"ascending", "descending"}));
  add_out_flag(polygon_cmp, common);
  polygon_cmp->callback([&] {
    action = [&] {
      const double nu = parse_real(nu_text, "--nu");
      const double x_max = parse_real(x_max_text, "--x-max");
      const double a = parse_real(a_text, "--a");
      const Direction dir =
          direction == "descending" ? Direction::kDescending : Direction::kAscending;
      const auto z = charlier_state_trace(nu, a, x_max, dir);
      const auto u = euler_polygon<double>(nu, z.states.front(), x_max, z.step, dir);
      const auto h = hermite_state_trace(nu, u);
      const double dev_zu = trace_deviation(z, u);
      const double dev_uh = trace_deviation(u, h);
      OutputTable table{{"k", "x", "z_y", "z_yp", "u_y", "u_yp", "h_y", "h_yp", "dev_zu", "dev_uh"},
                        {}};
      for (std::size_t k = 0; k < z.size(); ++k) {
        table.add_row({static_cast<std::int64_t>(k), z.nodes[k], z.states[k](0), z.states[k](1),
                       u.states[k](0), u.states[k](1), h.states[k](0), h.states[k](1), dev_zu,
                       dev_uh});
      }
      write_table(table, common.format(), out);
      return int{kExitOk};
    };
  });

  // asymptotics -----------------------------------------------------------
  auto* asym = app.add_subcommand("asymptotics", "x = 0 term decomposition");
  asym->require_subcommand(1);
  auto* head_tail = asym->add_subcommand("head-tail", "head/tail split of the term sum");
  head_tail->add_option("--a", a_text)->required();
  head_tail->add_option("--nu", nu_text)->required();
  add_out_flag(head_tail, common);
  head_tail->callback([&] {
    action = [&] {
      const auto cfg =
          SplitConfig::make(parse_real(a_text, "--a"), parse_real(nu_text, "--nu"));
      const SplitReport r = head_tail_split(cfg);
      OutputTable table{{"a", "nu", "A", "M", "r_head", "r_tail", "y0_reconstructed",
                         "y0_direct", "h_nu_0", "rel_diff", "degrees_agree"},
                        {}};
      const double rel = std::abs(r.y0_reconstructed - r.y0_direct) / std::abs(r.y0_direct);
      table.add_row({cfg.a, cfg.nu, cfg.A, cfg.M, r.r_head, r.r_tail, r.y0_reconstructed,
                     r.y0_direct, r.h_nu_0, rel, std::int64_t{r.degrees_agree ? 1 : 0}});
      write_table(table, common.format(), out);
      return int{kExitOk};
    };
  });

  std::string m_text, big_n_text;
  auto* trapezoid = asym->add_subcommand("trapezoid", "Riemann sum of f_nu vs incomplete gamma");
  trapezoid->add_option("--nu", nu_text)->required();
  trapezoid->add_option("--m", m_text)->required();
  trapezoid->add_option("--n", big_n_text)->required();
  trapezoid->add_option("--dt", dt_text)->required();
  add_out_flag(trapezoid, common);
  trapezoid->callback([&] {
    action = [&] {
      const double nu = parse_real(nu_text, "--nu");
      const auto m = static_cast<std::int64_t>(parse_real(m_text, "--m"));
      const auto n = static_cast<std::int64_t>(parse_real(big_n_text, "--n"));
      const double dt = parse_real(dt_text, "--dt");
      const TrapezoidCheck c = trapezoid_gamma_check(nu, m, n, dt);
      OutputTable table{{"nu", "m", "n", "dt", "riemann_sum", "closed_form", "abs_err"}, {}};
      table.add_row({nu, m, n, dt, c.riemann_sum, c.closed_form, c.abs_err});
      write_table(table, common.format(), out);
      return int{kExitOk};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitDomainError;
  }

  if (!action) {
    err << "no command given\n";
    return kExitDomainError;
  }
  try {
    return action();
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace charherm
