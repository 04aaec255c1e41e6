#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "fracorder/residue.hpp"
#include "fracorder/specfun.hpp"

namespace fracorder::cli {
namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

std::uint64_t elapsed_ms(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

json config_json(const QuadratureConfig& cfg) {
  return {{"panel_order", cfg.panel_order},
          {"max_periods", cfg.max_periods},
          {"accel_terms", cfg.accel_terms},
          {"abs_tol", cfg.abs_tol},
          {"pv_symmetric", cfg.pv_symmetric}};
}

void attach(VerificationCase& c, const orderquad::OrderIntegralResult& r) {
  c.computed = r.value;
  c.periods_used = r.periods_used;
  c.params["err_estimate"] = r.err_estimate;
  c.params["converged"] = r.converged;
  c.params["accelerated"] = r.used_acceleration;
}

// C(n, j) / n! built from Pascal's rule, independent of the residue module.
residue::Rational binomial_over_factorial(unsigned n, unsigned j) {
  std::vector<residue::BigInt> row = {1};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<residue::BigInt> next(m + 1, 1);
    for (unsigned i = 1; i < m; ++i) next[i] = row[i - 1] + row[i];
    row = std::move(next);
  }
  residue::BigInt fact = 1;
  for (unsigned m = 2; m <= n; ++m) fact *= m;
  return {row[j], fact};
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  return out;
}

void close_csv(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw io_error("failed writing '" + path + "'");
}

}  // namespace

const char* policy_name(TolPolicy policy) {
  switch (policy) {
    case TolPolicy::relative: return "relative";
    case TolPolicy::absolute: return "absolute";
    case TolPolicy::either: return "absolute_or_relative";
    case TolPolicy::relative_plus_remainder: return "relative_plus_remainder";
    case TolPolicy::exact: return "exact";
  }
  return "unknown";
}

void grade(VerificationCase& c, TolPolicy policy, double slack) {
  c.abs_err = std::abs(c.computed - c.expected);
  c.rel_err = c.expected != 0.0 ? c.abs_err / std::abs(c.expected) : c.abs_err;
  c.params["policy"] = policy_name(policy);
  if (!std::isfinite(c.computed)) {
    c.passed = false;
    return;
  }
  switch (policy) {
    case TolPolicy::relative: c.passed = c.rel_err <= c.tol; break;
    case TolPolicy::absolute: c.passed = c.abs_err <= c.tol; break;
    case TolPolicy::either: c.passed = c.abs_err <= c.tol || c.rel_err <= c.tol; break;
    case TolPolicy::relative_plus_remainder:
      c.params["remainder_bound"] = slack;
      c.passed = c.abs_err <= c.tol * std::abs(c.expected) + slack;
      break;
    case TolPolicy::exact: c.passed = c.abs_err == 0.0; break;
  }
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const VerificationCase& c) { return c.passed; }));
}

void VerificationReport::sort_cases() {
  std::stable_sort(cases.begin(), cases.end(), [](const VerificationCase& a, const VerificationCase& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.sort_key < b.sort_key;
  });
}

json VerificationReport::to_json() const {
  json out;
  out["command"] = command;
  out["config"] = config_json(config);
  json list = json::array();
  for (const VerificationCase& c : cases) {
    list.push_back({{"name", c.name},
                    {"params", c.params},
                    {"expected", c.expected},
                    {"computed", c.computed},
                    {"abs_err", c.abs_err},
                    {"rel_err", c.rel_err},
                    {"tol", c.tol},
                    {"passed", c.passed},
                    {"periods_used", c.periods_used},
                    {"runtime_ms", c.runtime_ms}});
  }
  out["cases"] = std::move(list);
  out["summary"] = {{"total", cases.size()}, {"passed", passed()}, {"failed", failed()}};
  if (!details.empty()) out["details"] = details;
  return out;
}

VerificationReport cmd_verify_lemma(const LemmaOptions& opts, const QuadratureConfig& cfg) {
  cfg.validate();
  if (opts.n_max < 1) throw std::invalid_argument("verify-lemma: --n-max must be >= 1");
  if (opts.t_list.empty()) throw std::invalid_argument("verify-lemma: --t needs at least one value");
  for (double t : opts.t_list) {
    if (!(t > 0.0)) throw std::invalid_argument("verify-lemma: every t must be > 0");
  }
  VerificationReport report{"verify-lemma", cfg, {}, {}};
  for (unsigned n = 1; n <= opts.n_max; ++n) {
    for (double t : opts.t_list) {
      VerificationCase c;
      c.name = "lemma";
      c.params = {{"n", n}, {"t", t}};
      c.sort_key = {static_cast<double>(n), t};
      c.expected = std::pow(2.0 * t, static_cast<double>(n - 1));
      const auto start = Clock::now();
      attach(c, orderquad::lemma_integral(n, t, cfg));
      c.runtime_ms = elapsed_ms(start);
      if (c.expected == 1.0) {
        c.tol = opts.unit_tol;
        grade(c, TolPolicy::absolute);
      } else {
        c.tol = opts.tol;
        grade(c, TolPolicy::relative);
      }
      report.cases.push_back(std::move(c));
    }
  }
  report.sort_cases();
  return report;
}

VerificationReport cmd_verify_binom(unsigned n_max, double tol, const QuadratureConfig& cfg) {
  cfg.validate();
  if (n_max < 1) throw std::invalid_argument("verify-binom: --n-max must be >= 1");
  VerificationReport report{"verify-binom", cfg, {}, {}};
  for (unsigned n = 1; n <= n_max; ++n) {
    VerificationCase c;
    c.name = "binom";
    c.params = {{"n", n}};
    c.sort_key = {static_cast<double>(n)};
    c.expected = std::ldexp(1.0, static_cast<int>(n));
    c.tol = tol;
    const auto start = Clock::now();
    attach(c, orderquad::binom_integral(n, cfg));
    c.runtime_ms = elapsed_ms(start);
    grade(c, TolPolicy::relative);
    report.cases.push_back(std::move(c));
  }
  report.sort_cases();
  return report;
}

CatalogFunction catalog_function(const std::string& id, unsigned series_k) {
  CatalogFunction f;
  f.id = id;
  const double inf = std::numeric_limits<double>::infinity();
  if (id == "exp" || id == "sin") {
    const bool is_sin = id == "sin";
    f.series.radius = inf;
    f.series.coeffs.resize(series_k + 1, 0.0);
    double inv_fact = 1.0;
    for (unsigned k = 0; k <= series_k; ++k) {
      if (k > 0) inv_fact /= k;
      if (!is_sin) {
        f.series.coeffs[k] = inv_fact;
      } else if (k % 2 == 1) {
        f.series.coeffs[k] = (k % 4 == 1) ? inv_fact : -inv_fact;
      }
    }
    // |c_k| <= 1/k!, so the tail is below t^(K+1)/(K+1)! e^t
    const double next_inv_fact = inv_fact / (series_k + 1);
    f.series.remainder_bound = [series_k, next_inv_fact](double t) {
      return std::pow(t, series_k + 1.0) * next_inv_fact * std::exp(t);
    };
    f.direct = is_sin ? [](double t) { return std::sin(t); } : [](double t) { return std::exp(t); };
    return f;
  }
  if (id == "geom") {
    f.series.radius = 1.0;
    f.series.coeffs.assign(series_k + 1, 1.0);
    f.series.remainder_bound = [series_k](double t) { return std::pow(t, series_k + 1.0) / (1.0 - t); };
    f.direct = [](double t) { return 1.0 / (1.0 - t); };
    return f;
  }
  if (id.rfind("poly:", 0) == 0) {
    std::stringstream list(id.substr(5));
    std::string item;
    while (std::getline(list, item, ',')) {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size() || !std::isfinite(value)) {
        throw std::invalid_argument("poly: bad coefficient '" + item + "'");
      }
      f.series.coeffs.push_back(value);
    }
    if (f.series.coeffs.empty()) throw std::invalid_argument("poly: no coefficients given");
    f.series.radius = inf;
    const std::vector<double> coeffs = f.series.coeffs;
    f.direct = [coeffs](double t) {
      double acc = 0.0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
      return acc;
    };
    return f;
  }
  throw std::invalid_argument("unknown function '" + id + "' (expected exp, sin, geom or poly:c0,c1,...)");
}

std::vector<double> default_main_points(const CatalogFunction& f) {
  const double outer = std::isfinite(f.series.radius) ? 0.9 * f.series.radius : 0.9;
  return {0.0, 0.1, 0.5, outer};
}

VerificationReport cmd_verify_main(const std::string& function_id, const std::vector<double>& t_list,
                                   unsigned series_k, double tol, const QuadratureConfig& cfg) {
  cfg.validate();
  const CatalogFunction f = catalog_function(function_id, series_k);
  const std::vector<double> points = t_list.empty() ? default_main_points(f) : t_list;
  VerificationReport report{"verify-main", cfg, {}, {}};
  for (double t : points) {
    VerificationCase c;
    c.name = "main:" + f.id;
    c.params = {{"t", t}, {"terms", f.series.coeffs.size()}};
    c.sort_key = {t};
    c.expected = (t >= 0.0 && t < f.series.radius) ? f.direct(t) : std::numeric_limits<double>::quiet_NaN();
    c.tol = tol;
    const auto start = Clock::now();
    double remainder = 0.0;
    try {
      const auto r = orderquad::main_identity_eval(f.series, t, cfg);
      attach(c, r);
      remainder = f.series.remainder(t);
    } catch (const std::domain_error& e) {
      c.params["error"] = e.what();
      c.computed = std::numeric_limits<double>::quiet_NaN();
    }
    c.runtime_ms = elapsed_ms(start);
    grade(c, TolPolicy::relative_plus_remainder, remainder);
    report.cases.push_back(std::move(c));
  }
  report.sort_cases();
  return report;
}

VerificationReport cmd_residues(unsigned n, double tol, const QuadratureConfig& cfg) {
  cfg.validate();
  if (n < 1) throw std::invalid_argument("residues: --n must be >= 1");
  VerificationReport report{"residues", cfg, {}, {}};

  json listed = json::array();
  for (const residue::ResidueTerm& term : residue::residues(n)) {
    listed.push_back({{"pole", term.pole}, {"value", term.value.to_string()}});
    VerificationCase c;
    c.name = "residue";
    c.params = {{"n", n}, {"pole", term.pole}};
    c.sort_key = {static_cast<double>(term.pole)};
    const residue::Rational closed = binomial_over_factorial(n, term.pole);
    c.expected = closed.to_double();
    c.computed = term.value.to_double();
    grade(c, TolPolicy::exact);
    c.passed = c.passed && term.value == closed;
    report.cases.push_back(std::move(c));
  }

  const residue::Rational sum = residue::closed_form_coeff(n);
  const residue::Rational expected_sum(residue::BigInt(1) << n, binomial_over_factorial(n, 0).den());
  {
    VerificationCase c;
    c.name = "residue_sum";
    c.params = {{"n", n}};
    c.expected = expected_sum.to_double();
    c.computed = sum.to_double();
    grade(c, TolPolicy::exact);
    c.passed = c.passed && sum == expected_sum;
    report.cases.push_back(std::move(c));
  }
  {
    VerificationCase c;
    c.name = "quadrature";
    c.params = {{"n", n}};
    c.expected = residue::indented_integral_value(n);
    c.tol = tol;
    const auto start = Clock::now();
    attach(c, orderquad::integrate_order(orderquad::SineRational{n, 1.0}, n + 1, cfg));
    c.runtime_ms = elapsed_ms(start);
    grade(c, TolPolicy::relative);
    report.cases.push_back(std::move(c));
  }

  report.details = {{"n", n},
                    {"residues", listed},
                    {"sum", sum.to_string()},
                    {"indented_integral_value", residue::indented_integral_value(n)}};
  report.sort_cases();
  return report;
}

std::size_t cmd_plotdata(const std::string& kind, const PlotOptions& opts,
                         const std::string& out_path, const QuadratureConfig& cfg) {
  cfg.validate();
  if (opts.n < 1) throw std::invalid_argument("plot-data: --n must be >= 1");
  if (!(opts.t > 0.0)) throw std::invalid_argument("plot-data: --t must be > 0");
  const orderquad::LemmaIntegrand g{opts.n, opts.t};
  std::size_t rows = 0;

  if (kind == "integrand") {
    if (!(opts.step > 0.0) || !(opts.alpha_max >= opts.alpha_min)) {
      throw std::invalid_argument("plot-data: need step > 0 and alpha-max >= alpha-min");
    }
    const auto count = static_cast<std::size_t>(std::llround((opts.alpha_max - opts.alpha_min) / opts.step)) + 1;
    std::ofstream out = open_csv(out_path);
    out << "alpha,integrand\n";
    for (std::size_t i = 0; i < count; ++i) {
      const double alpha = opts.alpha_min + static_cast<double>(i) * opts.step;
      out << format_real(alpha) << ',' << format_real(g(alpha)) << '\n';
      ++rows;
    }
    close_csv(out, out_path);
    return rows;
  }

  if (kind == "partial_sums") {
    const std::size_t periods = opts.periods ? opts.periods : 60;
    const std::size_t accel = cfg.accel_terms;
    const std::vector<double> sums = orderquad::period_sums(g, periods + accel, cfg);
    const std::span<const double> all(sums);
    std::ofstream out = open_csv(out_path);
    out << "period,pair_sum,raw_partial_sum,accelerated\n";
    double partial = 0.0;
    for (std::size_t k = 1; k <= periods; ++k) {
      partial += sums[k - 1];
      const double accelerated = partial + orderquad::euler_transform(all.subspan(k, accel)).value;
      out << k << ',' << format_real(sums[k - 1]) << ',' << format_real(partial) << ','
          << format_real(accelerated) << '\n';
      ++rows;
    }
    close_csv(out, out_path);
    return rows;
  }

  if (kind == "convergence") {
    const std::size_t periods = opts.periods ? opts.periods : 200;
    const std::vector<double> sums = orderquad::period_sums(g, periods, cfg);
    const double exact = std::pow(2.0 * opts.t, static_cast<double>(opts.n - 1));
    const double d = static_cast<double>(opts.n);
    std::ofstream out = open_csv(out_path);
    out << "period,abs_error,tail_bound\n";
    double partial = 0.0;
    for (std::size_t k = 1; k <= periods; ++k) {
      partial += sums[k - 1];
      double bound = std::abs(sums[k - 1]);
      if (opts.n >= 2) {
        const double mid = static_cast<double>(k) - 0.5;
        const double envelope = std::max(std::abs(g(mid)), std::abs(g(-mid))) * std::pow(mid, d);
        bound = orderquad::power_tail_bound(envelope, static_cast<double>(k), opts.n);
      }
      out << k << ',' << format_real(std::abs(partial - exact)) << ',' << format_real(bound) << '\n';
      ++rows;
    }
    close_csv(out, out_path);
    return rows;
  }

  throw std::invalid_argument("plot-data: unknown kind '" + kind +
                              "' (expected integrand, partial_sums or convergence)");
}

}  // namespace fracorder::cli
