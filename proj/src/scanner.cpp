#include "cheeger/scanner.hpp"

#include "cheeger/mixture.hpp"
#include "cheeger/roots.hpp"
#include "cheeger/solver.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cheeger {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

std::string fmt17(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ScanRecord solve_cell(double p, double d) {
    const auto cm = canonical_1d(std::min(p, 1.0 - p), d);
    const auto res = find_minimizers(cm);
    ScanRecord rec;
    rec.p = p;
    rec.d = d;
    rec.h = res.h;
    rec.r_star = median_r_star(cm);
    rec.minimizers = res.minimizers;
    rec.n_min = static_cast<int>(res.minimizers.size());
    rec.gap = res.gap;
    return rec;
}

/// Competing minimizer basins of f on [0, r*]: a left basin around the first
/// critical point of f (or the endpoint 0) and a right basin ending at r*.
/// Both exist only when the second critical point lies below r*.
struct Basins {
    bool two = false;
    double left = 0.0;
    double right = 0.0;
};

Basins locate_basins(double m, double d) {
    const auto cm = canonical_1d(m, d);
    const double r_star = median_r_star(cm);
    const auto zeros = f_critical_points(cm);
    Basins b;
    if (zeros.size() != 2 || zeros[1] >= r_star || zeros[0] >= r_star) {
        return b;
    }
    b.two = true;
    b.left = std::max(zeros[0], 0.0); // local max at zeros[1] separates basins
    b.right = r_star;
    return b;
}

/// Signed tie signal: f(left basin) - f(right basin); +-1 markers when only
/// one basin survives, so sign changes still flag a basin swap.
double tie_signal(double m, double d) {
    const auto b = locate_basins(m, d);
    if (!b.two) {
        const auto cm = canonical_1d(m, d);
        const auto zeros = f_critical_points(cm);
        const double r_star = median_r_star(cm);
        return (zeros.size() == 2 && zeros[0] < r_star) ? -1.0 : 1.0;
    }
    const auto cm = canonical_1d(m, d);
    return cm.log_ratio_f(b.left) - cm.log_ratio_f(b.right);
}

} // namespace

std::vector<ScanRecord> scan_grid(double p_lo, double p_hi, double d_lo, double d_hi,
                                  int np, int nd) {
    if (!(0.0 < p_lo && p_lo <= p_hi && p_hi < 1.0) || !(0.0 < d_lo && d_lo <= d_hi) ||
        np < 2 || nd < 2) {
        throw std::invalid_argument("scan_grid: invalid grid bounds");
    }
    std::vector<ScanRecord> records;
    records.reserve(static_cast<std::size_t>(np) * nd);
    for (int i = 0; i < np; ++i) {
        const double p = p_lo + (p_hi - p_lo) * i / (np - 1);
        for (int j = 0; j < nd; ++j) {
            const double d = d_lo + (d_hi - d_lo) * j / (nd - 1);
            records.push_back(solve_cell(p, d));
        }
    }
    return records;
}

double tie_locus(double d, std::pair<double, double> p_bracket) {
    if (d <= 2.0) {
        throw std::runtime_error("tie_locus: no tie locus in bracket (d <= 2 has a single basin)");
    }
    // Positive signal: the right basin (at r*) wins; negative: the left one.
    const auto signal = [d](double p) { return tie_signal(std::min(p, 1.0 - p), d); };

    const auto [p_lo, p_hi] = p_bracket;
    const double s_lo = signal(p_lo);
    const double s_hi = signal(p_hi);
    if (s_lo == 0.0) return p_lo;
    if (s_hi == 0.0) return p_hi;
    if ((s_lo > 0.0) == (s_hi > 0.0)) {
        throw std::runtime_error("tie_locus: no tie locus in bracket");
    }
    return bisect(signal, p_lo, p_hi, 1e-10);
}

double uniqueness_threshold(double p, double d_hi) {
    if (p == 0.5) {
        return 0.0; // always unique: single basin with minimizer d/2
    }
    if (!(p > 0.0) || !(p < 0.5)) {
        throw std::domain_error("uniqueness_threshold: need p in (0, 1/2]");
    }
    constexpr double tau_gap = 1e-6;
    const auto unique_at = [p](double d) {
        const auto res = find_minimizers(canonical_1d(p, d));
        return res.minimizers.size() == 1 && res.gap > tau_gap;
    };

    if (!unique_at(d_hi)) {
        throw std::runtime_error("uniqueness_threshold: non-uniqueness at d_hi, enlarge the range");
    }
    // Outer certificate: walk the 1e-2 grid downward. A failing grid point or a
    // sign change of the tie signal (a basin swap inside the cell, where the
    // gap dips through zero between grid points) marks the largest failure.
    double d_fail = -1.0, d_ok = d_hi;
    double s_prev = tie_signal(p, d_hi);
    for (double d = d_hi - 1e-2; d > 1e-2; d -= 1e-2) {
        if (!unique_at(d)) {
            d_fail = d;
            break;
        }
        const double s = tie_signal(p, d);
        if ((s > 0.0) != (s_prev > 0.0)) {
            // The tie sits strictly inside (d, d_ok); refine on the signal.
            double lo = d, hi = d_ok;
            while (hi - lo > 1e-4) {
                const double mid = 0.5 * (lo + hi);
                ((tie_signal(p, mid) > 0.0) == (s > 0.0) ? lo : hi) = mid;
            }
            return hi;
        }
        s_prev = s;
        d_ok = d;
    }
    if (d_fail < 0.0) {
        return 0.0;
    }
    // Refine the boundary between the failing grid point and the next one up.
    double lo = d_fail, hi = d_ok;
    while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        (unique_at(mid) ? hi : lo) = mid;
    }
    return hi;
}

std::string scan_to_csv(const std::vector<ScanRecord>& records) {
    std::ostringstream os;
    os << "p,d,h,r_star,n_min,t1,t2,gap\n";
    for (const auto& r : records) {
        os << fmt17(r.p) << ',' << fmt17(r.d) << ',' << fmt17(r.h) << ','
           << fmt17(r.r_star) << ',' << r.n_min << ',' << fmt17(r.minimizers.at(0)) << ',';
        if (r.n_min > 1) {
            os << fmt17(r.minimizers.at(1));
        }
        os << ',' << fmt17(r.gap) << '\n';
    }
    return os.str();
}

std::vector<ScanRecord> scan_from_csv(const std::string& csv) {
    std::istringstream is(csv);
    std::string line;
    if (!std::getline(is, line) || line != "p,d,h,r_star,n_min,t1,t2,gap") {
        throw std::invalid_argument("scan_from_csv: missing or malformed header");
    }
    std::vector<ScanRecord> records;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (line.back() == ',') fields.push_back("");
        if (fields.size() != 8) {
            throw std::invalid_argument("scan_from_csv: expected 8 fields per row");
        }
        ScanRecord rec;
        rec.p = std::stod(fields[0]);
        rec.d = std::stod(fields[1]);
        rec.h = std::stod(fields[2]);
        rec.r_star = std::stod(fields[3]);
        rec.n_min = std::stoi(fields[4]);
        rec.minimizers.push_back(std::stod(fields[5]));
        if (!fields[6].empty()) {
            rec.minimizers.push_back(std::stod(fields[6]));
        }
        rec.gap = std::stod(fields[7]);
        records.push_back(std::move(rec));
    }
    return records;
}

std::string scan_to_json(const std::vector<ScanRecord>& records) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json cell;
        cell["p"] = r.p;
        cell["d"] = r.d;
        cell["h"] = r.h;
        cell["r_star"] = r.r_star;
        cell["n_min"] = r.n_min;
        cell["t1"] = r.minimizers.at(0);
        if (r.n_min > 1) {
            cell["t2"] = r.minimizers.at(1);
        } else {
            cell["t2"] = nullptr;
        }
        if (std::isinf(r.gap)) {
            cell["gap"] = "inf";
        } else {
            cell["gap"] = r.gap;
        }
        out.push_back(std::move(cell));
    }
    return out.dump(2);
}

} // namespace cheeger
