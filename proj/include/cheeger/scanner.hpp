#pragma once

#include <string>
#include <utility>
#include <vector>

// Parameter-space exploration over (p, d): grid scans, detection of the
// two-Cheeger-set locus, and the numerical uniqueness threshold.

namespace cheeger {

struct ScanRecord {
    double p = 0.0;
    double d = 0.0;
    double h = 0.0;
    double r_star = 0.0;
    std::vector<double> minimizers;
    int n_min = 1;
    double gap = 0.0; // +inf with a single candidate
};

/// Solves every cell of the inclusive (p, d) grid; records sorted by (p, d).
std::vector<ScanRecord> scan_grid(double p_lo, double p_hi, double d_lo, double d_hi,
                                  int np, int nd);

/// Locates the weight p where the two minimizer basins of f tie at fixed d.
/// Throws std::runtime_error when the tie signal has no sign change on the
/// bracket (e.g. any d <= 2).
double tie_locus(double d, std::pair<double, double> p_bracket);

/// Smallest d (resolution 1e-4) such that the Cheeger set is unique with
/// value gap > 1e-6 for all sampled d' in [d, d_hi] (1e-2-spaced grid).
/// Returns 0 when uniqueness holds over the whole range.
double uniqueness_threshold(double p, double d_hi);

/// Header `p,d,h,r_star,n_min,t1,t2,gap`, floats at 17 significant digits,
/// t2 empty when n_min = 1.
std::string scan_to_csv(const std::vector<ScanRecord>& records);

std::vector<ScanRecord> scan_from_csv(const std::string& csv);

/// JSON mirror of the CSV fields.
std::string scan_to_json(const std::vector<ScanRecord>& records);

} // namespace cheeger
