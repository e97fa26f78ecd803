#include "rieszlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "rieszlab/errors.hpp"

namespace rieszlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae on [-1, 1] (positive half, centre last) and weights;
// the Gauss 7-point rule uses the odd-indexed abscissae and the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment
{
    double a, b;
    double value, error, l1;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Integrand& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    double l1 = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        kron += kWgk[j] * (f1 + f2);
        l1 += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
            gauss += kWg[j / 2] * (f1 + f2);
    }
    if (!std::isfinite(kron))
        throw DomainError("quadrature: integrand is not finite on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
    return {a, b, kron * h, std::abs((kron - gauss) * h), l1 * std::abs(h)};
}

void check_tol(double tol)
{
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw ConfigError("quadrature tolerance must be positive and finite");
}

} // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, double tol, std::size_t budget)
{
    check_tol(tol);
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("integrate_finite: need finite a < b");

    std::priority_queue<Segment> heap;
    heap.push(gk15(f, a, b));
    std::size_t evals = 15;
    double value = heap.top().value;
    double error = heap.top().error;
    double l1 = heap.top().l1;

    auto floor = [&] { return 50.0 * kEps * l1; };
    while (error + floor() > tol && evals + 30 <= budget) {
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b))
            break;  // cannot split further
        if (error < floor())
            break;  // already at rounding level
        heap.pop();
        const Segment left = gk15(f, worst.a, mid);
        const Segment right = gk15(f, mid, worst.b);
        evals += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        l1 += left.l1 + right.l1 - worst.l1;
        heap.push(left);
        heap.push(right);
    }

    // Recompute from the segments so no cancellation from the running updates leaks in.
    QuadResult out;
    double v = 0.0, e = 0.0, m = 0.0;
    while (!heap.empty()) {
        v += heap.top().value;
        e += heap.top().error;
        m += heap.top().l1;
        heap.pop();
    }
    out.value = v;
    out.l1_estimate = m;
    out.err_estimate = e + 50.0 * kEps * m;
    out.evaluations = evals;
    out.converged = out.err_estimate <= tol;
    return out;
}

QuadResult integrate_semi_infinite(const Integrand& f, double tol, const SemiInfiniteOptions& opts)
{
    check_tol(tol);
    if (!(opts.upper > 0.0))
        throw DomainError("integrate_semi_infinite: upper limit must be positive");

    // h(v) dv = f(y) dy with y = e^v, or y = u^2, u = e^v.
    const bool sq = opts.sqrt_substitution;
    const Integrand h = [&f, sq](double v) {
        if (sq) {
            const double u2 = std::exp(2.0 * v);
            return u2 == 0.0 ? 0.0 : 2.0 * u2 * f(u2);
        }
        const double y = std::exp(v);
        return y == 0.0 ? 0.0 : y * f(y);
    };
    const double v_max = std::isinf(opts.upper) ? 350.0 : (sq ? 0.5 : 1.0) * std::log(opts.upper);
    const double v_min = -370.0;
    const double panel_tol = tol / 100.0;
    const double small = tol / 100.0;

    QuadResult out;
    out.converged = true;
    double value = 0.0;

    // direction +1 marches right from 0, -1 marches left.
    for (int dir : {+1, -1}) {
        double prev_l1 = -1.0;
        double prev_density = -1.0, density = -1.0;
        double v = 0.0;
        bool closed = false;
        for (int k = 0; k < 800; ++k) {
            double lo = dir > 0 ? v : v - 1.0;
            double hi = dir > 0 ? v + 1.0 : v;
            if (dir > 0 && lo >= v_max) {
                out.reached_upper = true;
                const double r = prev_density > 0.0 ? density / prev_density : 1.0;
                out.tail_estimate = density == 0.0 ? 0.0
                                    : r < 0.95     ? density * r / (1.0 - r)
                                                   : std::numeric_limits<double>::infinity();
                closed = true;
                break;
            }
            if (dir < 0 && hi <= v_min) {
                closed = true;
                break;
            }
            hi = std::min(hi, v_max);
            if (lo >= hi) {
                closed = true;
                break;
            }
            if (out.evaluations >= opts.budget)
                break;
            const QuadResult p = integrate_finite(h, lo, hi, panel_tol, opts.budget - out.evaluations);
            out.evaluations += p.evaluations;
            out.err_estimate += p.err_estimate;
            out.l1_estimate += p.l1_estimate;
            if (!p.converged)
                out.converged = false;
            value += p.value;
            v = dir > 0 ? hi : lo;
            prev_density = density;
            density = p.l1_estimate / (hi - lo);

            if (k >= 2 && p.l1_estimate < small && prev_l1 > 0.0) {
                const double r = p.l1_estimate / prev_l1;
                if (p.l1_estimate == 0.0) {
                    closed = true;
                    break;
                }
                if (r < 0.95) {
                    const double rest = p.l1_estimate * r / (1.0 - r);
                    if (rest < small) {
                        out.err_estimate += rest;
                        closed = true;
                        break;
                    }
                }
            }
            prev_l1 = p.l1_estimate;
        }
        if (!closed)
            out.converged = false;
    }
    out.value = value;
    if (out.err_estimate > tol)
        out.converged = false;
    return out;
}

Extrapolation wynn_epsilon(const double* sums, std::size_t count)
{
    if (count == 0)
        return {};
    auto run = [&](std::size_t n) {
        // Columns of the epsilon table; even columns hold limit estimates.
        std::vector<double> prev(n + 1, 0.0);
        std::vector<double> cur(sums, sums + n);
        double best = cur.back();
        for (std::size_t k = 1; k < n; ++k) {
            std::vector<double> next(n - k);
            for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
                const double d = cur[j + 1] - cur[j];
                if (d == 0.0 || !std::isfinite(d))
                    return best;
                next[j] = prev[j + 1] + 1.0 / d;
            }
            prev = std::move(cur);
            cur = std::move(next);
            if (k % 2 == 0) {
                if (!std::isfinite(cur.back()))
                    return best;
                best = cur.back();
            }
        }
        return best;
    };
    const double a = run(count);
    if (count < 3)
        return {a, count == 2 ? std::abs(sums[1] - sums[0]) : std::abs(a)};
    const double b = run(count - 1);
    return {a, std::abs(a - b)};
}

QuadResult oscillatory_transform(const Integrand& f, TransformKind kind, double w, double tol,
                                 const CutoffPolicy& policy, std::size_t budget)
{
    check_tol(tol);
    if (!(w > 0.0) || !std::isfinite(w))
        throw DomainError("oscillatory_transform: w must be positive");

    const Integrand g = [&f, kind, w](double x) {
        return f(x) * (kind == TransformKind::sine ? std::sin(w * x) : std::cos(w * x));
    };
    const double half = std::numbers::pi / w;
    auto node = [&](std::size_t k) {
        // k-th zero of the trigonometric factor beyond 0 (for sine, 0 itself is k = 0).
        return kind == TransformKind::sine ? k * half : (k - 0.5) * half;
    };

    const bool hard = policy.hard_cutoff > 0.0;
    const double panel_tol = tol / 100.0;
    QuadResult out;
    out.converged = false;
    std::vector<double> partial;
    double sum = 0.0;
    double last_estimate = 0.0;
    double lo = 0.0;
    constexpr std::size_t kWindow = 40;

    for (std::size_t k = 1; k <= policy.max_panels; ++k) {
        double hi = node(k);
        if (hard)
            hi = std::min(hi, policy.hard_cutoff);
        if (out.evaluations >= budget)
            break;
        const QuadResult p = integrate_finite(g, lo, hi, panel_tol, budget - out.evaluations);
        out.evaluations += p.evaluations;
        out.err_estimate += p.err_estimate;
        out.l1_estimate += p.l1_estimate;
        sum += p.value;
        lo = hi;
        if (!p.converged) {
            out.value = sum;
            return out;
        }

        if (hard) {
            if (hi >= policy.hard_cutoff) {
                out.value = sum;
                out.converged = out.err_estimate <= tol;
                return out;
            }
            continue;
        }

        partial.push_back(sum);
        if (partial.size() < 8)
            continue;
        const std::size_t n = std::min(partial.size(), kWindow);
        const Extrapolation e = wynn_epsilon(partial.data() + partial.size() - n, n);
        const double drift = std::abs(e.value - last_estimate);
        last_estimate = e.value;
        if (partial.size() >= 10 && e.error < tol / 10.0 && drift < tol / 10.0) {
            out.value = e.value;
            out.err_estimate += std::max(e.error, drift);
            out.converged = out.err_estimate <= tol;
            return out;
        }
    }
    out.value = partial.empty() ? sum : last_estimate;
    return out;
}

} // namespace rieszlab
