#pragma once

#include "cheeger/mixture.hpp"

#include <vector>

namespace cheeger {

/// H- = {x.nu < c}, H+ = {x.nu > c}.
struct HalfSpace {
    enum class Side { minus, plus };
    std::vector<double> nu;
    double c = 0.0;
    Side side = Side::minus;
};

struct CheegerSolution {
    double h = 0.0;                    // the Cheeger constant
    double r_star = 0.0;               // median of the canonical problem
    std::vector<double> minimizers;    // 1 or 2 points in [0, r_star]
    std::vector<HalfSpace> halfspaces; // both sides per minimizer
    bool unique = true;
    bool degenerate_gaussian = false;
};

struct ProfilePoint {
    double v = 0.0;   // prescribed volume
    double iso = 0.0; // Q'(r) at the matching offset
    double r = 0.0;   // half-space offset with Q(r) = v
};

/// Two candidate minimizers closer than this in value count as a tie.
inline constexpr double tie_tol = 1e-9;

/// Result of minimizing f = (log Q)' over [0, r_star]. `candidates` holds the
/// deduplicated candidate offsets (endpoints plus interior zeros of F) with
/// their f values; `gap` is the second-lowest candidate value minus h
/// (+infinity with a single candidate).
struct MinimizerResult {
    double h = 0.0;
    std::vector<double> minimizers;
    std::vector<double> candidates;
    std::vector<double> candidate_values;
    double gap = 0.0;
};

/// The median r* with Q(r*) = 1/2, located in [d/2, d).
double median_r_star(const CanonicalMixture& cm);

/// Zeros of F on the whole line (0 or 2 of them, sorted). These are the
/// critical points of f; f decreases before the first, increases between
/// them, and decreases after the second.
std::vector<double> f_critical_points(const CanonicalMixture& cm);

MinimizerResult find_minimizers(const CanonicalMixture& cm);

/// Full pipeline: canonicalize, minimize, reconstruct half-spaces in R^n.
CheegerSolution cheeger(const MixtureSpec& spec);

/// Restricted isoperimetric profile I(v) = Q'(Q^{-1}(v)) on [Q(0), Q(d)].
std::vector<ProfilePoint> iso_profile(const CanonicalMixture& cm,
                                      const std::vector<double>& v_grid);

// Numerical checks of the supporting inequalities; each returns true iff the
// inequality holds across a uniform grid.

/// r* lies in [d/2, d).
bool check_r_star_location(const CanonicalMixture& cm);

/// t -> perimeter(H+_{d-t}) / measure(H+_{d-t}) strictly decreasing on [0, d/2].
bool check_halfspace_ratio_monotone(const CanonicalMixture& cm, int grid_size);

/// (log J)'' < 0 on [0, d/2] for J(x) = a_ratio*G(x) + G(x-d),
/// G the unnormalized Gaussian integral; requires a_ratio >= 1.
bool check_local_logconcavity(double a_ratio, double d, int grid_size);

/// exp((x^2-1)/2) < x + g(x)/G(x) on [0, 1], g = exp(-x^2/2), G its integral.
bool check_ode_inequality(int grid_size);

} // namespace cheeger
