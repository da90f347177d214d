#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "chtg/certify.hpp"
#include "chtg/classify.hpp"
#include "chtg/cyclotomic.hpp"
#include "chtg/numtheory.hpp"
#include "chtg/polynomial.hpp"
#include "chtg/rational.hpp"
#include "chtg/triangle.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// Routes a report to --out when given, stdout otherwise.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

struct ScanRow {
    double alpha, tau_re, tau_im, f;
    chtg::classify::IsometryClass cls;
};

int cmd_scan(int m, int steps, mpfr_prec_t prec, const std::string& format,
             const std::string& out_path) {
    std::vector<ScanRow> rows;
    rows.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        double alpha = 2.0 * M_PI * i / steps;
        auto params = chtg::triangle::TriangleParams::mm_inf(m, alpha);
        auto tau_b = chtg::triangle::trace_formula(params, prec);
        std::complex<double> tau(tau_b.re.to_double(), tau_b.im.to_double());
        rows.push_back({alpha, tau.real(), tau.imag(),
                        chtg::classify::goldman_discriminant(tau),
                        chtg::classify::classify_trace(tau)});
    }

    std::string text;
    if (format == "json") {
        ordered_json j;
        j["command"] = "scan";
        j["m"] = m;
        j["alpha_steps"] = steps;
        j["precision_bits"] = static_cast<long>(prec);
        j["rows"] = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["alpha"] = r.alpha;
            row["tau_re"] = r.tau_re;
            row["tau_im"] = r.tau_im;
            row["f"] = r.f;
            row["class"] = chtg::classify::to_string(r.cls);
            j["rows"].push_back(row);
        }
        text = j.dump(2);
    } else if (format == "csv") {
        text = "alpha,tau_re,tau_im,f,class\n";
        for (const auto& r : rows)
            text += fmt17(r.alpha) + "," + fmt17(r.tau_re) + "," + fmt17(r.tau_im) + ","
                    + fmt17(r.f) + "," + chtg::classify::to_string(r.cls) + "\n";
    } else {
        text = "alpha\ttau_re\ttau_im\tf\tclass\n";
        for (const auto& r : rows)
            text += fmt17(r.alpha) + "\t" + fmt17(r.tau_re) + "\t" + fmt17(r.tau_im) + "\t"
                    + fmt17(r.f) + "\t" + chtg::classify::to_string(r.cls) + "\n";
    }
    emit(text, out_path);
    return 0;
}

int cmd_windows(int m, int resolution, const std::string& format,
                const std::string& out_path) {
    auto windows = chtg::classify::elliptic_windows(m, resolution);

    std::string text;
    if (format == "csv") {
        text = "lo,hi\n";
        for (const auto& w : windows) text += fmt17(w.lo) + "," + fmt17(w.hi) + "\n";
    } else if (format == "text") {
        text = "m=" + std::to_string(m) + " elliptic windows: "
               + std::to_string(windows.size()) + "\n";
        for (const auto& w : windows)
            text += "  [" + fmt17(w.lo) + ", " + fmt17(w.hi) + "]\n";
    } else {
        ordered_json j = ordered_json::array();
        for (const auto& w : windows) j.push_back({w.lo, w.hi});
        text = j.dump(2);
    }
    emit(text, out_path);
    return 0;
}

int cmd_certify(const chtg::triangle::TriangleParams& params, long n_max,
                const chtg::certify::SearchOptions& opts, const std::string& format,
                const std::string& out_path) {
    chtg::certify::Certificate cert = chtg::certify::certify_non_discrete(params, n_max, opts);

    std::string text;
    if (format == "text") {
        text = "verdict: " + std::string(chtg::certify::to_string(cert.verdict)) + "\n";
        text += "class: " + std::string(chtg::classify::to_string(cert.isometry_class)) + "\n";
        text += "tau: (" + fmt17(cert.tau_numeric.real()) + ", "
                + fmt17(cert.tau_numeric.imag()) + ")\n";
        text += "n_max: " + std::to_string(cert.n_max) + "\n";
        text += "candidates_examined: " + std::to_string(cert.candidates_examined) + "\n";
        text += "survivors: " + std::to_string(cert.survivors) + "\n";
        text += "checks:\n";
        for (const auto& rec : cert.checks)
            text += std::string("  [") + (rec.passed ? "pass" : "FAIL") + "] " + rec.name
                    + ": " + rec.outcome + "\n";
    } else {
        text = chtg::certify::certificate_to_json(cert);
    }
    emit(text, out_path);
    return cert.verdict == chtg::certify::Verdict::Inconclusive ? 3 : 0;
}

int cmd_search(int m, long n_max, const chtg::certify::SearchOptions& opts,
               const std::string& format, const std::string& out_path) {
    chtg::certify::SearchResult sr = chtg::certify::search_finite_order_traces(m, n_max, opts);
    const chtg::certify::SearchStats& st = sr.stats;

    std::string text;
    if (format == "json") {
        ordered_json j;
        j["command"] = "search";
        j["m"] = sr.m;
        j["n_max"] = sr.n_max;
        j["symmetry_reduction"] = sr.symmetry_reduced;
        j["candidates_examined"] = st.examined;
        j["triples_covered"] = st.triples_covered;
        j["rejected"]["not_regular_elliptic"] = st.rejected_not_regular_elliptic;
        j["rejected"]["phi_filter"] = st.rejected_phi_filter;
        j["rejected"]["re_bound"] = st.rejected_re_bound;
        j["rejected"]["circle"] = st.rejected_circle;
        j["re_bound_inconclusive"] = st.re_bound_inconclusive;
        j["survivors"] = sr.survivors.size();
        j["survivor_list"] = ordered_json::array();
        for (const auto& c : sr.survivors) j["survivor_list"].push_back(c.to_string());
        j["accounting_consistent"] =
            (st.examined == st.rejected_total() + st.surviving_reps);
        text = j.dump(2);
    } else {
        text = "m=" + std::to_string(sr.m) + " n_max=" + std::to_string(sr.n_max)
               + " symmetry_reduction=" + (sr.symmetry_reduced ? "on" : "off") + "\n";
        text += "candidates_examined: " + std::to_string(st.examined) + "\n";
        text += "triples_covered: " + std::to_string(st.triples_covered) + "\n";
        text += "rejected_not_regular_elliptic: "
                + std::to_string(st.rejected_not_regular_elliptic) + "\n";
        text += "rejected_phi_filter: " + std::to_string(st.rejected_phi_filter) + "\n";
        text += "rejected_re_bound: " + std::to_string(st.rejected_re_bound) + "\n";
        text += "rejected_circle: " + std::to_string(st.rejected_circle) + "\n";
        text += "re_bound_inconclusive: " + std::to_string(st.re_bound_inconclusive) + "\n";
        text += "survivors: " + std::to_string(sr.survivors.size()) + "\n";
        for (const auto& c : sr.survivors) text += "  " + c.to_string() + "\n";
        text += std::string("accounting: ")
                + (st.examined == st.rejected_total() + st.surviving_reps ? "consistent"
                                                                          : "INCONSISTENT")
                + "\n";
    }
    emit(text, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational toolkit for (m,m,inf) complex hyperbolic triangle groups"};
    app.require_subcommand(1);

    int m = 2;
    int alpha_steps = 1024;
    int resolution = 4096;
    long n_max = 24;
    long precision_bits = 128;
    bool no_symmetry = false;
    double alpha = 0.0;
    std::string alpha_turns;
    std::string format_scan = "text";
    std::string format_windows = "json";
    std::string format_certify = "json";
    std::string format_search = "text";
    std::string out_path;
    long nt_arg = 0;

    auto add_common = [&](CLI::App* sub, std::string& format) {
        sub->add_option("--precision-bits", precision_bits, "working precision in bits")
            ->envname("CHTG_PRECISION_BITS")
            ->check(CLI::Range(53L, 4096L))
            ->capture_default_str();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("--out", out_path, "write the report to a file instead of stdout");
    };

    CLI::App* scan = app.add_subcommand("scan", "classify tau(alpha) over an alpha grid");
    scan->add_option("--m", m, "vertex order m")->required()->check(CLI::Range(2, 1 << 20));
    scan->add_option("--alpha-steps", alpha_steps, "number of grid points")
        ->check(CLI::Range(1, 1 << 24))
        ->capture_default_str();
    add_common(scan, format_scan);

    CLI::App* windows = app.add_subcommand("windows", "locate regular elliptic alpha-windows");
    windows->add_option("--m", m, "vertex order m")->required()->check(CLI::Range(2, 1 << 20));
    windows->add_option("--resolution", resolution, "scan resolution")
        ->check(CLI::Range(16, 1 << 24))
        ->capture_default_str();
    add_common(windows, format_windows);

    CLI::App* certify = app.add_subcommand("certify", "emit a non-discreteness certificate");
    certify->add_option("--m", m, "vertex order m")->required()->check(CLI::Range(2, 1 << 20));
    auto* alpha_opt = certify->add_option("--alpha", alpha, "angular invariant in radians");
    auto* turns_opt =
        certify->add_option("--alpha-turns", alpha_turns,
                            "angular invariant as a rational number of turns, alpha = 2*pi*(p/q)");
    alpha_opt->excludes(turns_opt);
    certify->add_option("--n-max", n_max, "finite-order search bound")
        ->check(CLI::Range(1L, 1000L))
        ->capture_default_str();
    certify->add_flag("--no-symmetry", no_symmetry, "disable Galois-orbit symmetry reduction");
    add_common(certify, format_certify);

    CLI::App* search = app.add_subcommand("search", "exhaustive finite-order trace search");
    search->add_option("--m", m, "vertex order m")->required()->check(CLI::Range(2, 1 << 20));
    search->add_option("--n-max", n_max, "order bound")
        ->check(CLI::Range(1L, 1000L))
        ->capture_default_str();
    search->add_flag("--no-symmetry", no_symmetry, "disable Galois-orbit symmetry reduction");
    add_common(search, format_search);

    CLI::App* nt = app.add_subcommand("nt", "number-theory utilities");
    nt->require_subcommand(1);
    nt->add_option("--out", out_path, "write the value to a file instead of stdout");
    CLI::App* nt_phi = nt->add_subcommand("phi", "Euler phi of n");
    nt_phi->add_option("n", nt_arg, "argument")->required()->check(CLI::Range(1L, 1L << 40));
    CLI::App* nt_moebius = nt->add_subcommand("moebius", "Moebius mu of n");
    nt_moebius->add_option("n", nt_arg, "argument")->required()->check(CLI::Range(1L, 1L << 40));
    CLI::App* nt_cyclopoly = nt->add_subcommand("cyclopoly", "N-th cyclotomic polynomial");
    nt_cyclopoly->add_option("n", nt_arg, "argument")->required()->check(CLI::Range(1L, 100000L));

    try {
        app.parse(argc, argv);

        chtg::certify::SearchOptions opts;
        opts.symmetry_reduction = !no_symmetry;
        opts.compare.start_bits = precision_bits;
        opts.compare.max_bits = std::max<long>(512, precision_bits);

        if (scan->parsed())
            return cmd_scan(m, alpha_steps, precision_bits, format_scan, out_path);
        if (windows->parsed()) return cmd_windows(m, resolution, format_windows, out_path);
        if (certify->parsed()) {
            chtg::triangle::TriangleParams params;
            if (turns_opt->count() > 0) {
                params = chtg::triangle::TriangleParams::mm_inf_turns(
                    m, chtg::exact::Rational::from_string(alpha_turns));
            } else if (alpha_opt->count() > 0) {
                params = chtg::triangle::TriangleParams::mm_inf(m, alpha);
            } else {
                std::cerr << "certify: one of --alpha or --alpha-turns is required\n";
                return 2;
            }
            return cmd_certify(params, n_max, opts, format_certify, out_path);
        }
        if (search->parsed()) return cmd_search(m, n_max, opts, format_search, out_path);
        if (nt->parsed()) {
            if (nt_phi->parsed()) {
                emit(std::to_string(chtg::exact::euler_phi(nt_arg)), out_path);
            } else if (nt_moebius->parsed()) {
                emit(std::to_string(chtg::exact::moebius(nt_arg)), out_path);
            } else if (nt_cyclopoly->parsed()) {
                emit(chtg::exact::cyclotomic_polynomial(nt_arg).to_string(), out_path);
            }
            return 0;
        }
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
