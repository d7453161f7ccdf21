#pragma once

#include <cmath>
#include <stdexcept>

// Minimal bracketed scalar root finding used across the solver and scanner.

namespace cheeger {

/// Bisection on a sign change of fn over [lo, hi] down to interval width
/// xtol. Assumes fn(lo) and fn(hi) have opposite (non-strict) signs.
template <class Fn>
double bisect(Fn&& fn, double lo, double hi, double xtol, int max_iter = 200) {
    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::invalid_argument("bisect: root not bracketed");
    }
    for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = fn(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace cheeger
