#pragma once

#include <cmath>
#include <string>

#include "rieszlab/errors.hpp"
#include "rieszlab/quadrature.hpp"
#include "rieszlab/verify.hpp"
#include "format.hpp"

namespace rieszlab::detail {

inline CheckResult start(const std::string& id, NamedValues params)
{
    CheckResult r;
    r.id = id;
    r.params = std::move(params);
    return r;
}

inline void set_sides(CheckResult& r, double lhs, double rhs)
{
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_resid = std::abs(lhs - rhs);
    const double den = std::abs(rhs) > 0.0 ? std::abs(rhs) : std::abs(lhs);
    r.rel_resid = den > 0.0 ? r.abs_resid / den : 0.0;
}

// PASS iff the declared residual is within tol.
inline void decide(CheckResult& r, double tol, TolKind kind)
{
    r.tol = tol;
    r.tol_kind = kind;
    const double resid = kind == TolKind::rel ? r.rel_resid : r.abs_resid;
    r.status = resid <= tol ? CheckStatus::pass : CheckStatus::fail;
}

inline void report_only(CheckResult& r)
{
    r.tol = 0.0;
    r.tol_kind = TolKind::none;
    r.status = CheckStatus::report_only;
}

inline void diag(CheckResult& r, std::string key, double value)
{
    r.diagnostics.emplace_back(std::move(key), value);
}

inline void note(CheckResult& r, const std::string& text)
{
    if (!r.notes.empty())
        r.notes += " ";
    r.notes += text;
}

// Records a quadrature result and turns non-convergence into a precision
// error, which run_all reports as INCONCLUSIVE.
inline void absorb(CheckResult& r, const std::string& label, const QuadResult& q)
{
    diag(r, label + "_err", q.err_estimate);
    diag(r, label + "_evals", static_cast<double>(q.evaluations));
    if (!q.converged)
        throw PrecisionError(r.id + ": quadrature for " + label + " did not converge (err " +
                             fmt_g(q.err_estimate) + ", " + std::to_string(q.evaluations) +
                             " evaluations)");
}

// A PASS must sit at least 100x above the error estimates feeding it; when
// it does not, the check cannot tell a pass from a fail.
inline void certify(CheckResult& r, double error_budget)
{
    diag(r, "error_budget", error_budget);
    if (r.status == CheckStatus::pass && 100.0 * error_budget > r.tol)
        throw PrecisionError(r.id + ": component error " + fmt_g(error_budget) +
                             " is not 100x below tol " + fmt_g(r.tol));
}

inline std::string key_at(const std::string& name, double x)
{
    return name + "@" + fmt_g(x);
}

} // namespace rieszlab::detail
