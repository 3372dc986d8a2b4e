#ifndef PEQ_VERIFY_HPP
#define PEQ_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "peq/field.hpp"

namespace peq {
namespace verify {

struct EstimateReport {
    std::string estimate_id;
    std::optional<Real> predicted_exponent;
    std::optional<Real> fitted_exponent;
    std::optional<Real> fitted_constant;
    int n_samples = 0;
    Real max_violation = 0;
    Real r2 = 1.0;
    std::string verdict;  // "pass" | "fail" | "inconclusive"
    Real t_lo = 0, t_hi = 0;
    std::uint64_t seed = 0;
    Real h = 0;  // vertical extent of the grid the check ran on
    std::string note;

    std::string to_json() const;
};

std::string reports_to_csv(const std::vector<EstimateReport>& reports);

struct SuiteConfig {
    std::vector<std::string> selection;  // empty -> default suite
    Real t_lo = 1e-4, t_hi = 1e-2;
    int n_t = 13;
    Real tol_exponent = 0.05;
    Real r2_min = 0.98;
    Real tol_violation = 1e-6;
    int trials = 200;
    std::uint64_t seed = 20240817;
    /// self-test hook: shift every predicted exponent to force fail verdicts
    Real inject_exponent_shift = 0.0;
};

/// Least-squares fit of log(max-over-data norm ratio) against log t for one
/// registered composite operator.
struct FitResult {
    Real slope = 0, amplitude = 0, r2 = 1;
    std::vector<Real> ts, ratios;
};
FitResult fit_ratio_curve(const std::vector<Real>& ts, const std::vector<Real>& ratios);

/// Named checks, each returning one report. `ids()` lists everything
/// registered; `default_suite()` is the 14-entry standard selection.
std::vector<std::string> registry_ids();
std::vector<std::string> default_suite();
EstimateReport run_check(const std::string& id, const SuiteConfig& cfg);

std::vector<EstimateReport> run_suite(const SuiteConfig& cfg);

/// Interpolation-inequality checks with explicit constants.
EstimateReport check_caputo_interp(Real tol_violation, int n_trials, std::uint64_t seed,
                                   bool proof_constant);
EstimateReport check_grad_fraclap_interp(Real alpha, int n_trials, std::uint64_t seed);

/// Pointwise Gauss-kernel derivative bounds on an (x, t) grid with the sharp
/// analytic constant 2 e^{-1/2} for the first derivative; the third-derivative
/// constant is fitted and reported.
EstimateReport check_kernel_bounds(const std::vector<Real>& t_grid,
                                   const std::vector<Real>& x_grid);

}  // namespace verify
}  // namespace peq

#endif
