#include "cheeger/mixture.hpp"

#include "cheeger/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cheeger {

namespace {

constexpr double log_sqrt_2pi = 0.9189385332046727417803297;

double log_sum_exp(double la, double lb) {
    if (la < lb) std::swap(la, lb);
    if (lb == -std::numeric_limits<double>::infinity()) return la;
    return la + std::log1p(std::exp(lb - la));
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

} // namespace

void validate(const MixtureSpec& spec) {
    if (spec.a.empty() || spec.a.size() != spec.b.size()) {
        throw std::invalid_argument("MixtureSpec: a and b must be non-empty and of equal dimension");
    }
    if (!std::isfinite(spec.p) || spec.p < 0.0 || spec.p > 1.0) {
        throw std::domain_error("MixtureSpec: p must lie in [0, 1]");
    }
    for (double v : spec.a) {
        if (!std::isfinite(v)) throw std::domain_error("MixtureSpec: non-finite center a");
    }
    for (double v : spec.b) {
        if (!std::isfinite(v)) throw std::domain_error("MixtureSpec: non-finite center b");
    }
}

bool is_degenerate(const MixtureSpec& spec) {
    if (spec.p == 0.0 || spec.p == 1.0) return true;
    double dist2 = 0.0, na2 = 0.0, nb2 = 0.0;
    for (std::size_t i = 0; i < spec.a.size(); ++i) {
        const double diff = spec.a[i] - spec.b[i];
        dist2 += diff * diff;
        na2 += spec.a[i] * spec.a[i];
        nb2 += spec.b[i] * spec.b[i];
    }
    const double scale = 1.0 + std::sqrt(na2) + std::sqrt(nb2);
    return std::sqrt(dist2) <= 1e-14 * scale;
}

std::variant<CanonicalMixture, DegenerateGaussian> canonicalize(const MixtureSpec& spec) {
    validate(spec);
    if (is_degenerate(spec)) {
        // Weight-1 center; for a == b either one works.
        return DegenerateGaussian{spec.p >= 0.5 ? spec.a : spec.b};
    }

    CanonicalMixture cm;
    cm.m = std::min(spec.p, 1.0 - spec.p);
    cm.reflected = spec.p > 0.5;

    std::vector<double> diff(spec.a.size());
    double d2 = 0.0;
    for (std::size_t i = 0; i < diff.size(); ++i) {
        diff[i] = spec.b[i] - spec.a[i];
        d2 += diff[i] * diff[i];
    }
    cm.d = std::sqrt(d2);
    cm.nu = diff;
    for (double& v : cm.nu) v /= cm.d;

    if (cm.reflected) {
        // Reflection along {x.nu = (a.nu + b.nu)/2}: weight m ends up at the
        // origin of the reduced axis, pointing along -nu.
        for (double& v : cm.nu) v = -v;
        cm.offset = dot(spec.b, cm.nu); // -b . (original nu)
    } else {
        cm.offset = dot(spec.a, cm.nu);
    }
    return cm;
}

CanonicalMixture canonical_1d(double m, double d) {
    if (!(m > 0.0) || m > 0.5 || !(d > 0.0) || !std::isfinite(m) || !std::isfinite(d)) {
        throw std::domain_error("canonical_1d: need m in (0, 1/2] and d > 0");
    }
    CanonicalMixture cm;
    cm.m = m;
    cm.d = d;
    cm.nu = {1.0};
    cm.offset = 0.0;
    cm.reflected = false;
    return cm;
}

double CanonicalMixture::cdf(double r) const {
    return m * norm_cdf(r) + (1.0 - m) * norm_cdf(r - d);
}

double CanonicalMixture::perimeter(double r) const {
    return m * norm_pdf(r) + (1.0 - m) * norm_pdf(r - d);
}

double CanonicalMixture::second(double r) const {
    return -m * r * norm_pdf(r) - (1.0 - m) * (r - d) * norm_pdf(r - d);
}

double CanonicalMixture::log_ratio_f(double r) const {
    if (r > -8.0) {
        return perimeter(r) / cdf(r);
    }
    // Deep left tail: Q and Q' both underflow long before their ratio does.
    const double lm = std::log(m);
    const double lq = std::log1p(-m);
    const double log_q = log_sum_exp(lm + norm_logcdf(r), lq + norm_logcdf(r - d));
    const double log_qp = log_sum_exp(lm - 0.5 * r * r - log_sqrt_2pi,
                                      lq - 0.5 * (r - d) * (r - d) - log_sqrt_2pi);
    return std::exp(log_qp - log_q);
}

double CanonicalMixture::hazard_h(double r) const {
    return second(r) / perimeter(r);
}

double CanonicalMixture::F_value(double r) const {
    return perimeter(r) - cdf(r) * hazard_h(r);
}

double CanonicalMixture::log_k(double r) const {
    return d * r - 0.5 * d * d;
}

double CanonicalMixture::k_value(double r) const {
    const double lk = log_k(r);
    if (lk > 700.0) {
        throw std::overflow_error("k_value: use log_k for this argument");
    }
    return std::exp(lk);
}

double CanonicalMixture::h_prime(double r) const {
    // -1 + m(1-m) d^2 k / (m + (1-m)k)^2, folded so neither k nor 1/k is
    // formed: with L = log k, the fraction equals m(1-m) d^2 / w^2 where
    // w = m exp(-L/2) + (1-m) exp(L/2).
    const double half_l = 0.5 * log_k(r);
    if (std::abs(half_l) > 350.0) {
        return -1.0;
    }
    const double w = m * std::exp(-half_l) + (1.0 - m) * std::exp(half_l);
    return -1.0 + m * (1.0 - m) * d * d / (w * w);
}

std::optional<std::pair<double, double>> CanonicalMixture::h_prime_zeros() const {
    if (d <= 2.0) {
        return std::nullopt;
    }
    // (1-m)^2 k^2 + (2m(1-m) - m(1-m)d^2) k + m^2 = 0, i.e.
    // k = m/(1-m) * ((d^2-2) +/- d*sqrt(d^2-4))/2. The minus root is written
    // as 2/((d^2-2) + d*sqrt(d^2-4)) to dodge cancellation at large d.
    const double s = std::sqrt((d - 2.0) * (d + 2.0));
    const double big = d * d - 2.0 + d * s;
    const double log_ratio = std::log(m) - std::log1p(-m);
    const double log_k_hi = log_ratio + std::log(0.5 * big);
    const double log_k_lo = log_ratio + std::log(2.0 / big);
    const double alpha = (log_k_lo + 0.5 * d * d) / d;
    const double beta = (log_k_hi + 0.5 * d * d) / d;
    return std::make_pair(alpha, beta);
}

double s_profile(double m, double u) {
    const double w = m + (1.0 - m) * u;
    return u / (w * w);
}

} // namespace cheeger
