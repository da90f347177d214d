// Acceptance gate: ten self-contained criteria, one line of output each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "chtg/ball.hpp"
#include "chtg/certify.hpp"
#include "chtg/classify.hpp"
#include "chtg/cyclotomic.hpp"
#include "chtg/matrix.hpp"
#include "chtg/numtheory.hpp"
#include "chtg/polynomial.hpp"
#include "chtg/triangle.hpp"

using namespace chtg;
using exact::CycloElement;
using exact::Rational;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
    std::printf("%s %2d %s: %s\n", pass ? "PASS" : "FAIL", idx, name, detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
    va_list ap;
    va_start(ap, f);
    char buf[512];
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// 1. matrix product trace vs the closed (m,m,inf) formula on the grid
void criterion_trace_cross_validation() {
    auto t0 = Clock::now();
    double max_delta = 0.0;
    for (int m = 2; m <= 12; ++m) {
        for (int i = 0; i < 100; ++i) {
            double alpha = 2.0 * M_PI * i / 100.0;
            auto params = triangle::TriangleParams::mm_inf(m, alpha);
            auto g = triangle::build_gram(params, 128);
            auto refl = triangle::reflection_matrices(g);
            auto tr = (refl[0] * refl[1] * refl[2]).trace();

            exact::BigFloat r = triangle::r_value(m, 128);
            exact::BigFloat r8 = exact::BigFloat::from_long(8, 128) * r * r;
            exact::BigFloat a = exact::BigFloat::from_double(alpha, 128);
            exact::BigFloat fre = r8 * a.cos() - (r8 + exact::BigFloat::from_long(1, 128));
            exact::BigFloat fim = r8 * a.sin();

            double d = std::hypot(tr.re.to_double() - fre.to_double(),
                                  tr.im.to_double() - fim.to_double());
            max_delta = std::max(max_delta, d);
        }
    }
    double dt = seconds_since(t0);
    report(1, "trace cross-validation (11 m x 100 alpha)",
           max_delta < 1e-9 && dt < 5.0,
           fmt("max |trace(R1R2R3) - formula| = %.3g (< 1e-9), %.2f s (< 5 s)", max_delta, dt));
}

// 2. | |tau + 8r^2 + 1| - 8r^2 | on the same grid
void criterion_circle_identity() {
    double worst = 0.0;
    for (int m = 2; m <= 12; ++m) {
        for (int i = 0; i < 100; ++i) {
            double alpha = 2.0 * M_PI * i / 100.0;
            auto params = triangle::TriangleParams::mm_inf(m, alpha);
            worst = std::max(worst, triangle::circle_residual_numeric(params, 128).to_double());
        }
    }
    report(2, "trace circle identity", worst < 1e-12,
           fmt("max | |tau+8r^2+1| - 8r^2 | = %.3g (< 1e-12)", worst));
}

// 3. involution, form preservation, unit determinant, trace exactly -1
void criterion_reflection_contracts() {
    double worst = 0.0;
    bool trace_exact = true;
    auto id = triangle::Mat3::identity(128);
    for (int m = 2; m <= 12; ++m) {
        for (int i = 0; i < 100; ++i) {
            double alpha = 2.0 * M_PI * i / 100.0;
            auto g = triangle::build_gram(triangle::TriangleParams::mm_inf(m, alpha), 128);
            for (const auto& R : triangle::reflection_matrices(g)) {
                worst = std::max(worst, (R * R).max_abs_diff(id));
                worst = std::max(worst, (R.conj_transpose() * g.h * R).max_abs_diff(g.h));
                auto d = R.det();
                worst = std::max(worst, std::hypot(d.re.to_double() - 1.0, d.im.to_double()));
                auto t = R.trace();
                trace_exact = trace_exact && t.re.to_double() == -1.0 && t.im.to_double() == 0.0;
            }
        }
    }
    report(3, "reflection contracts", worst < 1e-12 && trace_exact,
           fmt("max deviation of R^2=I, R*HR=H, det=1: %.3g (< 1e-12); trace == -1 exactly: %s",
               worst, trace_exact ? "yes" : "NO"));
}

// 4. direct Galois orbit sums equal the closed rational form, exactly
void criterion_orbit_sums() {
    auto t0 = Clock::now();
    long cases = 0;
    bool ok = true;
    for (long n = 1; n <= 50 && ok; ++n) {
        for (long e = 0; e < n && ok; ++e) {
            auto direct = CycloElement::zero(n);
            auto we = CycloElement::root_of_unity(n, e);
            for (long k = 1; k <= n; ++k) {
                if (std::gcd(k, n) != 1) continue;
                direct = direct + we.galois(n == 1 ? 1 : k);
            }
            ok = ok && direct.is_rational()
                 && *direct.as_rational() == exact::primitive_root_sum(n, e);
            ++cases;
        }
    }
    double dt = seconds_since(t0);
    report(4, "exact orbit-sum identity (n <= 50)", ok && dt < 60.0,
           fmt("%ld (n,e) pairs, zero tolerance, %.2f s (< 60 s)", cases, dt));
}

// 5. on-circle traces: zero residual image and Re(sigma_k(tau)) <= -1 for all k
void criterion_sigma_k_mechanical() {
    auto t0 = Clock::now();
    long checks = 0, exact_path = 0;
    bool ok = true;
    for (long M = 1; M <= 24 && ok; ++M) {
        for (long j = 0; j < M && ok; ++j) {
            if (std::gcd(j, M) != 1) continue;  // reduced angles cover all 2 pi j / M
            for (int m = 2; m <= 12 && ok; ++m) {
                auto tau = certify::on_circle_trace(m, M, j);
                if (!certify::circle_residual_of(tau, m).is_zero()) { ok = false; break; }
                long N = tau.modulus();
                for (long k = 1; k <= N; ++k) {
                    if (std::gcd(k, N) != 1) continue;
                    auto rec = certify::check_lemma1(tau, m, k);
                    bool zero_image =
                        rec.outcome.find("residual image zero") != std::string::npos;
                    if (!(rec.passed && rec.conclusive && zero_image)) { ok = false; break; }
                    if (rec.precision_bits == 0) ++exact_path;
                    ++checks;
                }
            }
        }
    }
    report(5, "Galois constraint on on-circle traces (M <= 24, m <= 12)", ok,
           fmt("%ld (angle,m,k) checks, %ld settled exactly, all certified Re <= -1, %.1f s",
               checks, exact_path, seconds_since(t0)));
}

// 6. the unit-fraction case analysis over totient values
void criterion_phi_families() {
    auto fam = certify::enumerate_phi_triples();
    bool ok = fam.realizable == std::vector<std::string>{"(1,*,*)", "(2,2,*)"}
              && fam.excluded == std::vector<std::string>{"(2,3,3)", "(2,3,4)", "(2,3,5)"}
              && !certify::is_totient_value(3) && !certify::is_totient_value(5);
    long bad = 0;
    for (const auto& t : certify::phi_triples_up_to(24))
        for (long v : t)
            if (v == 3 || v == 5 || !certify::is_totient_value(v)) ++bad;
    report(6, "phi-triple case analysis", ok && bad == 0,
           fmt("families (1,*,*) and (2,2,*); sporadics excluded; %ld forbidden entries", bad));
}

// 7. desk-scale theorem: empty survivor list for every m in 2..8 at n_max = 36
void criterion_search_emptiness() {
    auto t0 = Clock::now();
    bool ok = true;
    std::uint64_t covered = 0, total_examined = 0;
    for (int m = 2; m <= 8; ++m) {
        auto r = certify::search_finite_order_traces(m, 36);
        ok = ok && r.survivors.empty()
             && r.stats.examined == r.stats.rejected_total() + r.stats.surviving_reps;
        if (m == 2) covered = r.stats.triples_covered;
        ok = ok && r.stats.triples_covered == covered;  // same space for every m
        total_examined += r.stats.examined;
    }
    double dt = seconds_since(t0);
    report(7, "exhaustive search emptiness (m in 2..8, n <= 36)", ok && dt < 600.0,
           fmt("0 survivors, %llu orbit reps examined over %llu triples per m, %.2f s (< 600 s)",
               static_cast<unsigned long long>(total_examined),
               static_cast<unsigned long long>(covered), dt));
}

// 8. the tau = 3 w_3 family is off-circle for every m up to 100, exactly
void criterion_exclude_3w3() {
    auto t0 = Clock::now();
    certify::TraceCandidate c{3, 1, 1, 1};
    bool ok = true;
    for (int m = 2; m <= 100; ++m)
        ok = ok && !certify::circle_residual_exact(c, m).is_zero();
    double dt = seconds_since(t0);
    report(8, "exclusion of the tau = 3 w_3 family (m <= 100)", ok && dt < 10.0,
           fmt("exact circle residual nonzero for all m, %.2f s (< 10 s)", dt));
}

// 9. elliptic windows: none for m = 2; found and regular elliptic inside
void criterion_windows() {
    bool ok = classify::elliptic_windows(2).empty();
    std::string note = ok ? "m=2 empty" : "m=2 NOT empty";

    bool found_any = false;
    double worst_unit = 0.0, min_sep = 10.0, worst_mirror = 0.0;
    for (int m : {10, 12}) {
        auto ws = classify::elliptic_windows(m);
        if (ws.empty()) continue;
        found_any = true;
        ok = ok && ws.size() % 2 == 0;
        for (std::size_t i = 0; i < ws.size() / 2; ++i) {
            const auto& a = ws[i];
            const auto& b = ws[ws.size() - 1 - i];
            worst_mirror = std::max(worst_mirror, std::abs(b.lo - (2 * M_PI - a.hi)));
            worst_mirror = std::max(worst_mirror, std::abs(b.hi - (2 * M_PI - a.lo)));
        }
        for (const auto& w : ws) {
            for (int s = 1; s < 20; ++s) {
                double alpha = w.lo + (w.hi - w.lo) * s / 20.0;
                auto g = triangle::build_gram(triangle::TriangleParams::mm_inf(m, alpha), 128);
                auto refl = triangle::reflection_matrices(g);
                auto ev = triangle::eigenvalues(refl[0] * refl[1] * refl[2]);
                for (int i = 0; i < 3; ++i) {
                    worst_unit = std::max(worst_unit, std::abs(std::abs(ev[i]) - 1.0));
                    for (int j = i + 1; j < 3; ++j)
                        min_sep = std::min(min_sep, std::abs(ev[i] - ev[j]));
                }
            }
        }
    }
    ok = ok && found_any && worst_unit < 1e-6 && min_sep > 1e-6 && worst_mirror < 2e-5;
    report(9, "elliptic windows", ok,
           fmt("%s; interior eigenvalues unit within %.2g, separated by >= %.2g; "
               "mirror symmetry defect %.2g",
               note.c_str(), worst_unit, min_sep, worst_mirror));
}

// 10. cyclotomic foundation: factorization identity and randomized field laws
void criterion_cyclotomic_foundation() {
    bool ok = true;
    for (long n = 1; n <= 100 && ok; ++n) {
        exact::Poly prod = exact::Poly::monomial(0);
        for (long long d : exact::divisors(n))
            prod = prod * exact::cyclotomic_polynomial(d);
        ok = prod == exact::Poly::x_pow_minus_one(n);
    }

    std::mt19937 rng(20260814);
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 5);
    long cases = 0, failures = 0;
    for (long N : {8L, 9L, 12L, 15L, 21L}) {
        auto rand_elt = [&] {
            std::vector<std::pair<long, Rational>> t;
            for (long e = 0; e < exact::euler_phi(N); ++e)
                t.emplace_back(e, Rational(num(rng), den(rng)));
            return CycloElement::from_monomials(N, t);
        };
        std::vector<long> units;
        for (long k = 1; k < N; ++k)
            if (std::gcd(k, N) == 1) units.push_back(k);
        std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);

        for (int t = 0; t < 60; ++t) {
            auto a = rand_elt(), b = rand_elt(), c = rand_elt();
            long k = units[pick(rng)];
            auto check = [&](bool cond) { ++cases; failures += cond ? 0 : 1; };
            check((a + b) + c == a + (b + c));
            check(a * (b + c) == a * b + a * c);
            check(a * b == b * a);
            check((a * b).galois(k) == a.galois(k) * b.galois(k));
            check((a + b).conj() == a.conj() + b.conj());
            check(a.conj().conj() == a);
            if (!a.is_zero()) check(a * a.inverse() == CycloElement::one(N));
        }
    }
    report(10, "cyclotomic foundation", ok && cases >= 1000 && failures == 0,
           fmt("product identity to N = 100 exact; %ld randomized field/automorphism "
               "cases, %ld failures",
               cases, failures));
}

}  // namespace

int main() {
    criterion_trace_cross_validation();
    criterion_circle_identity();
    criterion_reflection_contracts();
    criterion_orbit_sums();
    criterion_sigma_k_mechanical();
    criterion_phi_families();
    criterion_search_emptiness();
    criterion_exclude_3w3();
    criterion_windows();
    criterion_cyclotomic_foundation();
    return g_failures;
}
