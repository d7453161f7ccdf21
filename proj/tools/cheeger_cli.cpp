#include "cheeger/gauss.hpp"
#include "cheeger/mixture.hpp"
#include "cheeger/oracle.hpp"
#include "cheeger/scanner.hpp"
#include "cheeger/solver.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using cheeger::MixtureSpec;
using json = nlohmann::ordered_json;

std::vector<double> parse_point(const std::string& s) {
    std::vector<double> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        out.push_back(std::stod(tok));
    }
    if (out.empty()) {
        throw CLI::ValidationError("expected a comma-separated list of reals");
    }
    return out;
}

struct MixtureArgs {
    double p = -1.0;
    std::string a_str, b_str, md_str;
    double m = -1.0, d = -1.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--p", p, "mixture weight p in [0,1]");
        cmd->add_option("--a", a_str, "first center, comma-separated");
        cmd->add_option("--b", b_str, "second center, comma-separated");
        cmd->add_option("--m", m, "canonical weight min(p,1-p)");
        cmd->add_option("--d", d, "canonical center distance");
        cmd->add_option("--m-d", md_str, "canonical shorthand m,d");
    }

    MixtureSpec resolve() const {
        double mm = m, dd = d;
        if (!md_str.empty()) {
            const auto pair = parse_point(md_str);
            if (pair.size() != 2) {
                throw CLI::ValidationError("--m-d expects exactly m,d");
            }
            mm = pair[0];
            dd = pair[1];
        }
        const bool have_md = mm >= 0.0 && dd >= 0.0;
        const bool have_ab = !a_str.empty() && !b_str.empty();
        if (have_md == have_ab) {
            throw CLI::ValidationError("provide either (--a, --b) or the (m, d) shorthand");
        }
        MixtureSpec spec;
        if (have_md) {
            spec.p = mm;
            spec.a = {0.0};
            spec.b = {dd};
        } else {
            if (p < 0.0) {
                throw CLI::ValidationError("--p is required with --a/--b");
            }
            spec.p = p;
            spec.a = parse_point(a_str);
            spec.b = parse_point(b_str);
            // Pad the shorter center with zeros, so `--a 0 --b 0,5` works.
            const std::size_t dim = std::max(spec.a.size(), spec.b.size());
            spec.a.resize(dim, 0.0);
            spec.b.resize(dim, 0.0);
        }
        cheeger::validate(spec);
        return spec;
    }
};

std::string fmt17(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json halfspace_json(const cheeger::HalfSpace& hs) {
    json j;
    j["nu"] = hs.nu;
    j["c"] = hs.c;
    j["side"] = hs.side == cheeger::HalfSpace::Side::minus ? "minus" : "plus";
    return j;
}

json solution_json(const cheeger::CheegerSolution& sol) {
    json j;
    j["h"] = sol.h;
    j["r_star"] = sol.r_star;
    j["minimizers"] = sol.minimizers;
    j["unique"] = sol.unique;
    j["degenerate_gaussian"] = sol.degenerate_gaussian;
    j["halfspaces"] = json::array();
    for (const auto& hs : sol.halfspaces) {
        j["halfspaces"].push_back(halfspace_json(hs));
    }
    return j;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output path: " + output_path);
    }
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Cheeger constants and Cheeger sets of two-component Gaussian mixtures"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "human";
    std::string output_path;
    app.add_option("--format", format, "output format: json, csv, human")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    app.add_option("--output", output_path, "output path (default stdout)");

    MixtureArgs mix;

    auto* cmd_compute = app.add_subcommand("compute", "Cheeger constant, minimizers, half-spaces");
    mix.attach(cmd_compute);

    auto* cmd_profile = app.add_subcommand("profile", "restricted isoperimetric profile on a volume grid");
    mix.attach(cmd_profile);
    int profile_grid = 20;
    cmd_profile->add_option("--grid", profile_grid, "number of volumes")->check(CLI::PositiveNumber);

    auto* cmd_scan = app.add_subcommand("scan", "solve a (p, d) parameter grid");
    double p_lo = 0.05, p_hi = 0.95, d_lo = 0.1, d_hi = 6.0;
    int np = 10, nd = 10;
    cmd_scan->add_option("--p-lo", p_lo);
    cmd_scan->add_option("--p-hi", p_hi);
    cmd_scan->add_option("--d-lo", d_lo);
    cmd_scan->add_option("--d-hi", d_hi);
    cmd_scan->add_option("--np", np)->check(CLI::PositiveNumber);
    cmd_scan->add_option("--nd", nd)->check(CLI::PositiveNumber);

    auto* cmd_verify = app.add_subcommand("verify", "randomized Cheeger-ratio lower-bound sweep");
    mix.attach(cmd_verify);
    int trials = 60;
    std::uint64_t samples = 200000;
    std::uint64_t seed = 1;
    cmd_verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
    cmd_verify->add_option("--samples", samples);
    cmd_verify->add_option("--seed", seed);

    auto* cmd_locus = app.add_subcommand("locus", "weight p where two minimizer basins tie");
    double locus_d = 3.0;
    std::string bracket_str = "0.05,0.10";
    cmd_locus->add_option("--d", locus_d, "center distance (> 2)");
    cmd_locus->add_option("--bracket", bracket_str, "p bracket lo,hi");

    auto* cmd_checks = app.add_subcommand("checks", "numerical checks of the supporting inequalities");
    mix.attach(cmd_checks);
    int checks_grid = 1000;
    cmd_checks->add_option("--grid", checks_grid, "grid size per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_compute) {
            const auto sol = cheeger::cheeger(mix.resolve());
            if (format == "json") {
                emit(solution_json(sol).dump(2) + "\n", output_path);
            } else {
                std::ostringstream os;
                os << "h = " << fmt17(sol.h) << "\n"
                   << "r_star = " << fmt17(sol.r_star) << "\n"
                   << "unique = " << (sol.unique ? "true" : "false") << "\n"
                   << "degenerate_gaussian = " << (sol.degenerate_gaussian ? "true" : "false")
                   << "\nminimizers =";
                for (double t : sol.minimizers) os << ' ' << fmt17(t);
                os << "\n";
                for (const auto& hs : sol.halfspaces) {
                    os << "halfspace " << (hs.side == cheeger::HalfSpace::Side::minus ? "H-" : "H+")
                       << " c = " << fmt17(hs.c) << " nu =";
                    for (double v : hs.nu) os << ' ' << fmt17(v);
                    os << "\n";
                }
                emit(os.str(), output_path);
            }
        } else if (*cmd_profile) {
            const auto spec = mix.resolve();
            const auto canon = cheeger::canonicalize(spec);
            if (std::holds_alternative<cheeger::DegenerateGaussian>(canon)) {
                std::cerr << "profile: degenerate mixture has the Gaussian profile phi(Phi^-1(v))\n";
                return 2;
            }
            const auto& cm = std::get<cheeger::CanonicalMixture>(canon);
            const double v_lo = cm.cdf(0.0), v_hi = cm.cdf(cm.d);
            std::vector<double> grid(profile_grid);
            for (int i = 0; i < profile_grid; ++i) {
                grid[i] = v_lo + (v_hi - v_lo) * (i + 0.5) / profile_grid;
            }
            const auto points = cheeger::iso_profile(cm, grid);
            if (format == "json") {
                json arr = json::array();
                for (const auto& pt : points) {
                    arr.push_back({{"v", pt.v}, {"iso", pt.iso}, {"r", pt.r}});
                }
                emit(arr.dump(2) + "\n", output_path);
            } else {
                std::ostringstream os;
                os << "v,iso,r\n";
                for (const auto& pt : points) {
                    os << fmt17(pt.v) << ',' << fmt17(pt.iso) << ',' << fmt17(pt.r) << '\n';
                }
                emit(os.str(), output_path);
            }
        } else if (*cmd_scan) {
            const auto records = cheeger::scan_grid(p_lo, p_hi, d_lo, d_hi, np, nd);
            if (format == "json") {
                emit(cheeger::scan_to_json(records) + "\n", output_path);
            } else {
                emit(cheeger::scan_to_csv(records), output_path);
            }
        } else if (*cmd_verify) {
            const auto spec = mix.resolve();
            const auto report = cheeger::verify_cheeger_lower_bound(
                spec, trials, samples, seed);
            json j;
            j["spec"] = {{"p", spec.p}, {"a", spec.a}, {"b", spec.b}};
            j["trials"] = report.trials;
            j["h_mu"] = report.h_mu;
            j["worst_ratio"] = report.worst_ratio;
            j["worst_set"] = report.worst_set;
            j["tilt_margin"] = report.tilt_margin;
            j["seed"] = report.seed;
            j["pass"] = report.pass;
            if (format == "json") {
                emit(j.dump(2) + "\n", output_path);
            } else {
                std::ostringstream os;
                os << "h_mu = " << fmt17(report.h_mu) << "\n"
                   << "worst_ratio = " << fmt17(report.worst_ratio) << "\n"
                   << "worst_set = " << report.worst_set << "\n"
                   << "tilt_margin = " << fmt17(report.tilt_margin) << "\n"
                   << (report.pass ? "PASS" : "FAIL") << "\n";
                emit(os.str(), output_path);
            }
            if (!report.pass) return 1;
        } else if (*cmd_locus) {
            const auto bracket = parse_point(bracket_str);
            if (bracket.size() != 2) {
                std::cerr << "locus: --bracket expects lo,hi\n";
                return 2;
            }
            const double p_hat = cheeger::tie_locus(locus_d, {bracket[0], bracket[1]});
            if (format == "json") {
                json j;
                j["d"] = locus_d;
                j["p_hat"] = p_hat;
                emit(j.dump(2) + "\n", output_path);
            } else {
                emit("p_hat = " + fmt17(p_hat) + "\n", output_path);
            }
        } else if (*cmd_checks) {
            const auto spec = mix.resolve();
            const auto canon = cheeger::canonicalize(spec);
            if (std::holds_alternative<cheeger::DegenerateGaussian>(canon)) {
                std::cerr << "checks: degenerate mixture, nothing to check\n";
                return 2;
            }
            const auto& cm = std::get<cheeger::CanonicalMixture>(canon);
            const bool ok_median = cheeger::check_r_star_location(cm);
            const bool ok_monotone = cheeger::check_halfspace_ratio_monotone(cm, checks_grid);
            const bool ok_logconcave =
                cheeger::check_local_logconcavity((1.0 - cm.m) / cm.m, cm.d, checks_grid);
            const bool ok_ode = cheeger::check_ode_inequality(checks_grid);
            std::ostringstream os;
            os << "median_location " << (ok_median ? "pass" : "fail") << "\n"
               << "halfspace_ratio_monotone " << (ok_monotone ? "pass" : "fail") << "\n"
               << "local_logconcavity " << (ok_logconcave ? "pass" : "fail") << "\n"
               << "ode_inequality " << (ok_ode ? "pass" : "fail") << "\n";
            emit(os.str(), output_path);
            if (!(ok_median && ok_monotone && ok_logconcave && ok_ode)) return 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
