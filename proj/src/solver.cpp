#include "cheeger/solver.hpp"

#include "cheeger/gauss.hpp"
#include "cheeger/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cheeger {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void require_canonical(const CanonicalMixture& cm) {
    if (!(cm.m > 0.0) || cm.m > 0.5 || !(cm.d > 0.0)) {
        throw std::domain_error("solver: degenerate input, use the Gaussian fast path");
    }
}

} // namespace

std::vector<double> f_critical_points(const CanonicalMixture& cm) {
    // Zeros of F, bracketed by the three monotone segments that the analytic
    // zeros alpha < beta of h' delimit. For d <= 2, F > 0 everywhere.
    std::vector<double> zeros;
    const auto ab = cm.h_prime_zeros();
    if (!ab) {
        return zeros;
    }
    const auto [alpha, beta] = *ab;
    const double f_beta = cm.F_value(beta);
    if (f_beta >= 0.0) {
        return zeros; // F stays positive: no critical points of f
    }
    // F(alpha) > 0 > F(beta): one zero in (alpha, beta).
    const auto fv = [&cm](double x) { return cm.F_value(x); };
    zeros.push_back(bisect(fv, alpha, beta, 1e-12));
    // F increasing after beta toward +inf: one zero in (beta, hi).
    double hi = beta + 1.0;
    while (cm.F_value(hi) < 0.0) {
        hi += 1.0;
    }
    zeros.push_back(bisect(fv, beta, hi, 1e-12));
    return zeros;
}

double median_r_star(const CanonicalMixture& cm) {
    require_canonical(cm);
    // Q(d/2) <= 1/2 < Q(d); bisect then polish with Newton (Q' > 0).
    const auto g = [&cm](double r) { return cm.cdf(r) - 0.5; };
    double r = bisect(g, 0.5 * cm.d, cm.d, 1e-9);
    for (int i = 0; i < 4; ++i) {
        r -= g(r) / cm.perimeter(r);
    }
    return r;
}

MinimizerResult find_minimizers(const CanonicalMixture& cm) {
    require_canonical(cm);
    const double r_star = median_r_star(cm);

    std::vector<double> cand = {0.0, r_star};
    for (double z : f_critical_points(cm)) {
        if (z > 0.0 && z < r_star) {
            cand.push_back(z);
        }
    }
    std::sort(cand.begin(), cand.end());

    // Deduplicate at spacing 1e-8 (an interior zero can land on an endpoint).
    std::vector<double> pos, val;
    for (double t : cand) {
        if (!pos.empty() && t - pos.back() < 1e-8) {
            continue;
        }
        pos.push_back(t);
        val.push_back(cm.log_ratio_f(t));
    }

    MinimizerResult out;
    out.candidates = pos;
    out.candidate_values = val;
    out.h = *std::min_element(val.begin(), val.end());
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (val[i] - out.h <= tie_tol) {
            out.minimizers.push_back(pos[i]);
        }
    }
    if (pos.size() < 2) {
        out.gap = inf;
    } else {
        std::vector<double> sorted_vals = val;
        std::sort(sorted_vals.begin(), sorted_vals.end());
        out.gap = sorted_vals[1] - sorted_vals[0];
    }
    return out;
}

CheegerSolution cheeger(const MixtureSpec& spec) {
    const auto canon = canonicalize(spec);
    CheegerSolution sol;

    if (const auto* deg = std::get_if<DegenerateGaussian>(&canon)) {
        sol.h = sqrt_2_over_pi;
        sol.r_star = 0.0;
        sol.minimizers = {0.0};
        sol.unique = true;
        sol.degenerate_gaussian = true;
        std::vector<double> e1(deg->center.size(), 0.0);
        e1[0] = 1.0;
        const double c = deg->center[0];
        sol.halfspaces.push_back({e1, c, HalfSpace::Side::minus});
        sol.halfspaces.push_back({e1, c, HalfSpace::Side::plus});
        return sol;
    }

    const auto& cm = std::get<CanonicalMixture>(canon);
    const auto min_res = find_minimizers(cm);
    sol.h = min_res.h;
    sol.r_star = median_r_star(cm);
    sol.minimizers = min_res.minimizers;
    sol.unique = min_res.minimizers.size() == 1;
    for (double t : min_res.minimizers) {
        sol.halfspaces.push_back({cm.nu, cm.offset + t, HalfSpace::Side::minus});
        sol.halfspaces.push_back({cm.nu, cm.offset + t, HalfSpace::Side::plus});
    }
    return sol;
}

std::vector<ProfilePoint> iso_profile(const CanonicalMixture& cm,
                                      const std::vector<double>& v_grid) {
    require_canonical(cm);
    const double v_lo = cm.cdf(0.0);
    const double v_hi = cm.cdf(cm.d);
    std::vector<ProfilePoint> out;
    out.reserve(v_grid.size());
    for (double v : v_grid) {
        if (v < v_lo || v > v_hi) {
            throw std::domain_error("iso_profile: volume outside [Q(0), Q(d)] = [" +
                                    std::to_string(v_lo) + ", " + std::to_string(v_hi) + "]");
        }
        const auto g = [&cm, v](double r) { return cm.cdf(r) - v; };
        double r = bisect(g, -10.0, cm.d + 10.0, 1e-9);
        for (int i = 0; i < 4; ++i) {
            r -= g(r) / cm.perimeter(r);
        }
        out.push_back({v, cm.perimeter(r), r});
    }
    return out;
}

bool check_r_star_location(const CanonicalMixture& cm) {
    const double r = median_r_star(cm);
    // m = 1/2 puts r* exactly at d/2; allow root-refinement noise there.
    return r >= 0.5 * cm.d - 1e-12 * (1.0 + cm.d) && r < cm.d;
}

bool check_halfspace_ratio_monotone(const CanonicalMixture& cm, int grid_size) {
    require_canonical(cm);
    if (grid_size < 100) {
        throw std::invalid_argument("check_halfspace_ratio_monotone: grid_size >= 100");
    }
    double prev = inf;
    for (int i = 0; i <= grid_size; ++i) {
        const double t = 0.5 * cm.d * i / grid_size;
        const double ratio = cm.perimeter(cm.d - t) / (1.0 - cm.cdf(cm.d - t));
        if (ratio >= prev) {
            return false;
        }
        prev = ratio;
    }
    return true;
}

bool check_local_logconcavity(double a_ratio, double d, int grid_size) {
    if (a_ratio < 1.0 || d < 0.0) {
        throw std::domain_error("check_local_logconcavity: need a_ratio >= 1, d >= 0");
    }
    if (grid_size < 100) {
        throw std::invalid_argument("check_local_logconcavity: grid_size >= 100");
    }
    const double root_2pi = 2.5066282746310005024157653;
    for (int i = 0; i <= grid_size; ++i) {
        const double x = 0.5 * d * i / grid_size;
        const double gx = std::exp(-0.5 * x * x);
        const double gz = std::exp(-0.5 * (x - d) * (x - d));
        const double j = root_2pi * (a_ratio * norm_cdf(x) + norm_cdf(x - d));
        const double jp = a_ratio * gx + gz;
        const double jpp = -a_ratio * x * gx - (x - d) * gz;
        // (log J)'' < 0  <=>  N = J''J - (J')^2 < 0
        if (jpp * j - jp * jp >= 0.0) {
            return false;
        }
    }
    return true;
}

bool check_ode_inequality(int grid_size) {
    if (grid_size < 100) {
        throw std::invalid_argument("check_ode_inequality: grid_size >= 100");
    }
    const double root_2pi = 2.5066282746310005024157653;
    for (int i = 0; i <= grid_size; ++i) {
        const double x = static_cast<double>(i) / grid_size;
        const double lhs = std::exp(0.5 * (x * x - 1.0));
        const double rhs = x + std::exp(-0.5 * x * x) / (root_2pi * norm_cdf(x));
        if (lhs >= rhs) {
            return false;
        }
    }
    return true;
}

} // namespace cheeger
