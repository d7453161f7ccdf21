#pragma once

#include "cheeger/mixture.hpp"
#include "cheeger/solver.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

// Independent verification surface: exact half-space formulas in R^n,
// Monte-Carlo measure and Minkowski-content estimation for arbitrary test
// sets, and randomized sweeps against the computed Cheeger constant.

namespace cheeger {

struct Ball {
    std::vector<double> center;
    double radius = 1.0;
};

/// {x : c_lo < x.nu < c_hi}.
struct Slab {
    std::vector<double> nu;
    double c_lo = 0.0;
    double c_hi = 1.0;
};

using TestSet = std::variant<HalfSpace, Ball, Slab>;

bool set_contains(const TestSet& set, const std::vector<double>& x);

/// dist(x, set); zero for points inside.
double set_distance(const TestSet& set, const std::vector<double>& x);

std::string describe(const TestSet& set);

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Exact half-space measure: p*Phi(+-(c - a.nu)) + (1-p)*Phi(+-(c - b.nu)).
double halfspace_measure(const MixtureSpec& spec, const HalfSpace& hs);

/// Exact half-space perimeter: p*phi(c - a.nu) + (1-p)*phi(c - b.nu).
double halfspace_perimeter(const MixtureSpec& spec, const HalfSpace& hs);

/// Hit-fraction estimate of mu(set) from `samples` mixture draws.
McEstimate mc_measure(const MixtureSpec& spec, const TestSet& set,
                      std::uint64_t samples, std::uint64_t seed);

/// Minkowski-content estimate: outer eps-quotients at eps in
/// {1e-2, 5e-3, 2.5e-3}, Richardson-extrapolated to eps -> 0.
McEstimate mc_minkowski(const MixtureSpec& spec, const TestSet& set,
                        std::uint64_t samples, std::uint64_t seed);

/// Checks Phi(t-|lambda|) <= gamma(set + lambda*nu) <= Phi(t+|lambda|)
/// (4-standard-error band on the MC side; exact for half-spaces). The set's
/// standard-Gaussian measure must be Phi(t).
bool shift_bounds_check(double t, double lambda, const std::vector<double>& nu,
                        const TestSet& set, std::uint64_t samples, std::uint64_t seed);

/// Exact standard-Gaussian measure of a shifted half-space; helper for the
/// equality case of the shift inequality.
double gaussian_shifted_halfspace_measure(const HalfSpace& hs, double lambda,
                                          const std::vector<double>& nu);

struct VerifyReport {
    double h_mu = 0.0;
    int trials = 0;
    double worst_ratio = 0.0;
    std::string worst_set;
    double tilt_margin = 0.0; // min ratio excess over h_mu among tilted half-spaces
    bool pass = false;
    std::uint64_t seed = 0;
};

/// Randomized sweep: `trials` test sets with measure in (0.02, 0.98), each
/// Cheeger ratio checked against h_mu (exact for half-spaces, MC otherwise).
VerifyReport verify_cheeger_lower_bound(const MixtureSpec& spec, int trials,
                                        std::uint64_t samples, std::uint64_t seed);

} // namespace cheeger
