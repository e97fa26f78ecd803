#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rieszlab/quadrature.hpp"
#include "rieszlab/series_config.hpp"
#include "rieszlab/zeros.hpp"

namespace rieszlab {

enum class CheckStatus { pass, fail, inconclusive, report_only };

std::string_view to_string(CheckStatus s);

enum class TolKind { abs, rel, none };

std::string_view to_string(TolKind k);

using NamedValues = std::vector<std::pair<std::string, double>>;

struct CheckResult
{
    std::string id;
    NamedValues params;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_resid = 0.0;
    double rel_resid = 0.0;
    double tol = 0.0;
    TolKind tol_kind = TolKind::none;
    CheckStatus status = CheckStatus::report_only;
    std::string notes;
    NamedValues diagnostics;  // check-specific extras, in insertion order
};

// Shared, read-only state for one verification run.
struct VerifyContext
{
    SeriesConfig cfg;
    // Needed only by the zero-sum checks; null means "no table".
    std::shared_ptr<const std::vector<ZetaZero>> zeros;
    std::size_t budget = kDefaultQuadBudget;
};

// Checks. Preconditions on the parameters raise DomainError; precision and
// range errors from the evaluators, and quadrature that fails to converge,
// come back as INCONCLUSIVE results from run_all.
CheckResult check_gram_collapse(double x, const VerifyContext& ctx);
CheckResult check_gram_error(std::span<const double> x_grid, const VerifyContext& ctx);
CheckResult check_j_vs_gram(std::span<const double> x_grid, const VerifyContext& ctx);
CheckResult check_eq_1_3(double X, const VerifyContext& ctx);
CheckResult check_eq_1_4(double s, const VerifyContext& ctx);
CheckResult check_eq_1_5(double s, const VerifyContext& ctx);
CheckResult check_eq_1_5_trend(std::span<const double> s_grid, const VerifyContext& ctx);
CheckResult check_eq_1_6(double s, const VerifyContext& ctx);
CheckResult check_prime_zeta_asymptotic(double s, const VerifyContext& ctx);
CheckResult check_eq_2_2(double a, double w, const VerifyContext& ctx);
CheckResult check_eq_2_3(double a, double w, const VerifyContext& ctx);
CheckResult check_thm_2_1(double x, double a, const VerifyContext& ctx);
CheckResult check_thm_2_2(double x, double cutoff_T, const VerifyContext& ctx);
CheckResult check_thm_2_3(double x, const VerifyContext& ctx);
CheckResult check_thm_2_4(double X, double r, const VerifyContext& ctx);
CheckResult check_riesz_decay(std::span<const double> x_grid, const VerifyContext& ctx);

// Registry entry. A "point" is one parameter tuple; for grid checks
// (grid = true) the single point is the whole grid.
struct CheckSpec
{
    std::string id;
    std::string summary;
    std::vector<std::string> param_names;
    bool grid = false;
    std::vector<std::vector<double>> default_points;
    // Evaluators behind each side; shared infrastructure (sieve, zeta(n)
    // table, tail moments, quadrature engines' common code) is not listed.
    std::vector<std::string> lhs_deps;
    std::vector<std::string> rhs_deps;
    // Non-empty when both sides legitimately share an evaluator (integral
    // equations with the unknown function on both sides).
    std::string shared_reason;
    std::function<CheckResult(std::span<const double>, const VerifyContext&)> run;
};

const std::vector<CheckSpec>& check_registry();

// ConfigError for an unknown id.
const CheckSpec& find_check(std::string_view id);

// Parameter overrides: id -> points, where points are separated by ',' and
// the values inside one point by ':' (e.g. "thm_2_1" -> "1:1,0.5:3").
using PointOverrides = std::vector<std::pair<std::string, std::string>>;

std::vector<std::vector<double>> parse_points(const CheckSpec& spec, std::string_view text);

// Runs every point of the selected checks ("all" selects everything) on up
// to `threads` workers. Results are ordered by id, then by parameters.
std::vector<CheckResult> run_all(const std::vector<std::string>& ids, const VerifyContext& ctx,
                                 const PointOverrides& overrides = {}, unsigned threads = 1);

struct Summary
{
    std::size_t pass = 0, fail = 0, inconclusive = 0, report_only = 0;
};

Summary summarize(std::span<const CheckResult> results);

} // namespace rieszlab
