#include "cheeger/gauss.hpp"

#include <cmath>
#include <stdexcept>

namespace cheeger {

namespace {

constexpr double inv_sqrt2 = 0.7071067811865475244008444;
constexpr double log_sqrt_2pi = 0.9189385332046727417803297;

void require_finite(double x, const char* who) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(who) + ": non-finite argument");
    }
}

// Mills ratio Phi(x)/phi(x) for x << 0 via the Laplace continued fraction
//   R(y) = 1/(y + 1/(y + 2/(y + 3/(...)))) with y = -x,
// evaluated backward. Converges fast for y > 8.
double mills_ratio_neg(double x) {
    const double y = -x;
    double cf = 0.0;
    for (int k = 60; k >= 1; --k) {
        cf = static_cast<double>(k) / (y + cf);
    }
    return 1.0 / (y + cf);
}

} // namespace

double norm_pdf(double x) {
    require_finite(x, "norm_pdf");
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double norm_cdf(double x) {
    require_finite(x, "norm_cdf");
    return 0.5 * std::erfc(-x * inv_sqrt2);
}

double norm_logcdf(double x) {
    require_finite(x, "norm_logcdf");
    if (x >= -10.0) {
        return std::log(0.5 * std::erfc(-x * inv_sqrt2));
    }
    // log Phi(x) = log phi(x) + log R(-x)
    return -0.5 * x * x - log_sqrt_2pi + std::log(mills_ratio_neg(x));
}

double norm_logccdf(double x) {
    require_finite(x, "norm_logccdf");
    return norm_logcdf(-x);
}

double norm_quantile(double v) {
    if (!std::isfinite(v) || v <= 0.0 || v >= 1.0) {
        throw std::domain_error("norm_quantile: argument must lie in (0, 1)");
    }

    // Acklam's rational approximation, ~1.15e-9 relative error.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double e[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};

    const double p_low = 0.02425;
    double x;
    if (v < p_low) {
        const double q = std::sqrt(-2.0 * std::log(v));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((e[0] * q + e[1]) * q + e[2]) * q + e[3]) * q + 1.0);
    } else if (v <= 1.0 - p_low) {
        const double q = v - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - v));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((e[0] * q + e[1]) * q + e[2]) * q + e[3]) * q + 1.0);
    }

    // Two Newton steps against the erfc-accurate CDF. Skip once the density
    // underflows (|x| > 38); Acklam's tail branch is already adequate there.
    for (int i = 0; i < 2; ++i) {
        const double density = norm_pdf(x);
        if (density <= 0.0) {
            break;
        }
        const double err = norm_cdf(x) - v;
        x -= err / density;
    }
    return x;
}

} // namespace cheeger
