#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "fracorder/errors.hpp"
#include "verify.hpp"

namespace fracorder::cli {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fracorder: integration over the order of Riemann-Liouville derivatives"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Key-value (TOML/INI) file with option defaults");

  QuadratureConfig cfg;
  std::string json_path;
  app.add_option("--panel-order", cfg.panel_order, "Gauss-Legendre nodes per unit panel")->capture_default_str();
  app.add_option("--max-periods", cfg.max_periods, "Upper limit on summed periods")->capture_default_str();
  app.add_option("--accel-terms", cfg.accel_terms, "Terms fed to the Euler transformation")->capture_default_str();
  app.add_option("--abs-tol", cfg.abs_tol, "Absolute tolerance of each order-integral")->capture_default_str();
  app.add_flag("!--no-pv-symmetric", cfg.pv_symmetric, "Sum the two half-lines separately");
  app.add_option("--json", json_path, "Write the JSON report here instead of stdout");

  LemmaOptions lemma;
  auto* verify_lemma = app.add_subcommand("verify-lemma", "Check int t^a/Gamma(1+a) D^a t^(n-1) da = (2t)^(n-1)");
  verify_lemma->add_option("--n-max", lemma.n_max)->capture_default_str();
  verify_lemma->add_option("--t", lemma.t_list)->delimiter(',')->capture_default_str();
  verify_lemma->add_option("--tol", lemma.tol, "Relative tolerance")->capture_default_str();
  verify_lemma->add_option("--unit-tol", lemma.unit_tol, "Absolute tolerance where the exact value is 1")
      ->capture_default_str();

  unsigned binom_n_max = 10;
  double binom_tol = 1e-6;
  auto* verify_binom = app.add_subcommand("verify-binom", "Check int C(n, a) da = 2^n");
  verify_binom->add_option("--n-max", binom_n_max)->capture_default_str();
  verify_binom->add_option("--tol", binom_tol, "Relative tolerance")->capture_default_str();

  std::string function_id = "exp";
  std::vector<double> main_t;
  unsigned series_k = 20;
  double main_tol = 1e-6;
  auto* verify_main = app.add_subcommand("verify-main", "Check the order-integral reproduces f(t)");
  verify_main->add_option("--function", function_id, "exp | sin | geom | poly:c0,c1,...")->capture_default_str();
  verify_main->add_option("--t", main_t, "Evaluation points (default 0, 0.1, 0.5, 0.9*radius)")->delimiter(',');
  verify_main->add_option("--series-k", series_k, "Highest retained power")->capture_default_str();
  verify_main->add_option("--tol", main_tol, "Relative tolerance on top of the remainder bound")->capture_default_str();

  unsigned residue_n = 3;
  double residue_tol = 1e-8;
  auto* residues = app.add_subcommand("residues", "Exact residues and the indented integral value");
  residues->add_option("--n", residue_n)->capture_default_str();
  residues->add_option("--tol", residue_tol, "Relative tolerance of the quadrature cross-check")->capture_default_str();

  std::string kind;
  std::string out_path;
  PlotOptions plot;
  auto* plot_data = app.add_subcommand("plot-data", "Write CSV samples for external plotting");
  plot_data->add_option("--kind", kind, "integrand | partial_sums | convergence")->required();
  plot_data->add_option("--out", out_path, "CSV output path")->required();
  plot_data->add_option("--n", plot.n)->capture_default_str();
  plot_data->add_option("--t", plot.t)->capture_default_str();
  plot_data->add_option("--alpha-min", plot.alpha_min)->capture_default_str();
  plot_data->add_option("--alpha-max", plot.alpha_max)->capture_default_str();
  plot_data->add_option("--step", plot.step)->capture_default_str();
  plot_data->add_option("--periods", plot.periods, "0 = per-kind default")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::FileError& e) {
    err << "fracorder: " << e.what() << '\n';
    return 3;
  } catch (const CLI::ParseError& e) {
    err << "fracorder: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  std::optional<VerificationReport> report;
  try {
    if (verify_lemma->parsed()) {
      report = cmd_verify_lemma(lemma, cfg);
    } else if (verify_binom->parsed()) {
      report = cmd_verify_binom(binom_n_max, binom_tol, cfg);
    } else if (verify_main->parsed()) {
      report = cmd_verify_main(function_id, main_t, series_k, main_tol, cfg);
    } else if (residues->parsed()) {
      report = cmd_residues(residue_n, residue_tol, cfg);
    } else if (plot_data->parsed()) {
      const std::size_t rows = cmd_plotdata(kind, plot, out_path, cfg);
      out << "wrote " << rows << " rows to " << out_path << '\n';
      return 0;
    }
  } catch (const io_error& e) {
    err << "fracorder: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "fracorder: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::domain_error& e) {
    err << "fracorder: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const std::string text = report->to_json().dump(2) + "\n";
  if (json_path.empty()) {
    out << text;
  } else {
    std::ofstream file(json_path, std::ios::binary | std::ios::trunc);
    file << text;
    file.flush();
    if (!file) {
      err << "fracorder: cannot write report to '" << json_path << "'\n";
      return 3;
    }
    out << report->command << ": " << report->passed() << "/" << report->cases.size() << " passed\n";
  }
  return report->all_passed() ? 0 : 1;
}

}  // namespace fracorder::cli
