#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace cheeger {

/// User-facing mixture parameters: p*gamma(.-a) + (1-p)*gamma(.-b) on R^n.
struct MixtureSpec {
    double p = 0.5;
    std::vector<double> a;
    std::vector<double> b;

    std::size_t dim() const { return a.size(); }
};

/// Throws std::domain_error / std::invalid_argument on bad parameters.
void validate(const MixtureSpec& spec);

/// True when the mixture collapses to a single translated Gaussian
/// (p in {0,1} or a == b up to scale-relative tolerance).
bool is_degenerate(const MixtureSpec& spec);

/// Marker for the single-Gaussian fast path.
struct DegenerateGaussian {
    std::vector<double> center;
};

/// The reduced 1D problem: weight m = min(p, 1-p) at 0, weight 1-m at d,
/// plus the rigid-motion data needed to map answers back to R^n. All scalar
/// functions of the mixture distribution Q(r) = m*Phi(r) + (1-m)*Phi(r-d)
/// live here.
struct CanonicalMixture {
    double m = 0.5;            // min(p, 1-p), in (0, 1/2]
    double d = 1.0;            // |a - b| > 0
    std::vector<double> nu;    // unit emission normal in R^n
    double offset = 0.0;       // a.nu (or -b.nu when reflected)
    bool reflected = false;    // true when p > 1/2

    // Q and its derivatives.
    double cdf(double r) const;           // Q(r)
    double perimeter(double r) const;     // Q'(r) = m*phi(r) + (1-m)*phi(r-d)
    double second(double r) const;        // Q''(r)

    // Derived scalar functions of the canonical problem.
    double log_ratio_f(double r) const;   // f = Q'/Q = (log Q)'
    double hazard_h(double r) const;      // h = Q''/Q'
    double F_value(double r) const;       // F = Q' - Q*h, same zeros as f'
    double log_k(double r) const;         // log k(r) = d*r - d^2/2
    double k_value(double r) const;       // k(r) = phi(r-d)/phi(r)
    double h_prime(double r) const;       // -1 + m(1-m)d^2 k/(m+(1-m)k)^2

    /// Analytic zeros alpha < beta of h' (as x-coordinates); empty for d <= 2.
    /// d == 2 counts as a double root and returns empty.
    std::optional<std::pair<double, double>> h_prime_zeros() const;
};

/// Builds the canonical 1D problem with trivial embedding data; handy for
/// working directly in (m, d) parameter space.
CanonicalMixture canonical_1d(double m, double d);

/// Reduce an n-dimensional spec to the canonical problem, or flag the
/// single-Gaussian case.
std::variant<CanonicalMixture, DegenerateGaussian> canonicalize(const MixtureSpec& spec);

/// S(u) = u/(m + (1-m)u)^2, the unimodal profile behind h'; peaks at
/// u = m/(1-m) with maximum 1/(4 m (1-m)).
double s_profile(double m, double u);

} // namespace cheeger
