#pragma once

// Verification commands behind the fracorder CLI. Each command runs one family
// of identity checks and returns a report; run_cli() wires them to argv.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracorder/frac.hpp"
#include "fracorder/orderquad.hpp"

namespace fracorder::cli {

using orderquad::QuadratureConfig;

/// File could not be opened or written (exit status 3).
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TolPolicy { relative, absolute, either, relative_plus_remainder, exact };

const char* policy_name(TolPolicy policy);

struct VerificationCase {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  double expected = 0.0;
  double computed = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool passed = false;
  unsigned periods_used = 0;
  std::uint64_t runtime_ms = 0;
  /// Ordering key within cases of the same name; not serialized.
  std::vector<double> sort_key;
};

/// Fills the error fields and `passed` from expected/computed under `policy`.
/// `slack` is added to the allowed absolute error (series remainder bounds).
void grade(VerificationCase& c, TolPolicy policy, double slack = 0.0);

struct VerificationReport {
  std::string command;
  QuadratureConfig config;
  std::vector<VerificationCase> cases;
  nlohmann::json details = nlohmann::json::object();

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  bool all_passed() const { return failed() == 0; }
  /// Sort by name, then sort_key.
  void sort_cases();
  nlohmann::json to_json() const;
};

struct LemmaOptions {
  unsigned n_max = 8;
  std::vector<double> t_list = {0.25, 0.5, 1.0, 2.0};
  double tol = 1e-6;       ///< relative
  double unit_tol = 1e-8;  ///< absolute, applied when the expected value is 1
};

struct CatalogFunction {
  std::string id;
  frac::PowerSeries series;
  std::function<double(double)> direct;  ///< evaluation that bypasses the series
};

/// exp | sin | geom | poly:c0,c1,... truncated to `series_k` + 1 terms where that applies.
CatalogFunction catalog_function(const std::string& id, unsigned series_k);

/// t = 0, 0.1, 0.5 and 0.9 * radius (0.9 for entire functions).
std::vector<double> default_main_points(const CatalogFunction& f);

struct PlotOptions {
  unsigned n = 1;
  double t = 1.0;
  double alpha_min = -10.0;
  double alpha_max = 10.0;
  double step = 0.01;
  unsigned periods = 0;  ///< 0 picks 60 for partial_sums and 200 for convergence
};

VerificationReport cmd_verify_lemma(const LemmaOptions& opts, const QuadratureConfig& cfg);
VerificationReport cmd_verify_binom(unsigned n_max, double tol, const QuadratureConfig& cfg);
VerificationReport cmd_verify_main(const std::string& function_id, const std::vector<double>& t_list,
                                   unsigned series_k, double tol, const QuadratureConfig& cfg);
VerificationReport cmd_residues(unsigned n, double tol, const QuadratureConfig& cfg);

/// Writes CSV plot data; returns the number of data rows. Throws io_error.
std::size_t cmd_plotdata(const std::string& kind, const PlotOptions& opts,
                         const std::string& out_path, const QuadratureConfig& cfg);

/// Full command line. Exit codes: 0 all passed, 1 a check failed,
/// 2 usage or configuration error, 3 I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracorder::cli
