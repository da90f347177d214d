#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "chtg/ball.hpp"
#include "chtg/classify.hpp"
#include "chtg/cyclotomic.hpp"
#include "chtg/triangle.hpp"

namespace chtg::certify {

using exact::CycloElement;
using exact::Rational;

/// Hypothetical trace of a finite-order product: tau = w^k1 + w^k2 + w^k3
/// with w = exp(2 pi i / n) and k1 + k2 + k3 = 0 mod n (unit determinant).
/// Minimality pins the modulus: gcd(k1, k2, k3, n) = 1, otherwise the same
/// trace already occurs at a proper divisor of n.
struct TraceCandidate {
    long n = 1;
    long k1 = 0;
    long k2 = 0;
    long k3 = 0;

    std::array<long, 3> exponents() const { return {k1, k2, k3}; }
    /// d_i = n / gcd(k_i, n), the multiplicative orders of the eigenvalues.
    std::array<long, 3> eigenvalue_orders() const;
    bool minimal() const;
    /// Regular elliptic exactly when the eigenvalue exponents are pairwise
    /// distinct mod n; decides the discriminant sign combinatorially.
    bool regular_elliptic_shape() const;

    std::string to_string() const;
    friend bool operator==(const TraceCandidate&, const TraceCandidate&) = default;
    friend auto operator<=>(const TraceCandidate&, const TraceCandidate&) = default;
};

/// One entry of a certificate transcript.
struct CheckRecord {
    std::string name;
    std::string inputs;
    std::string outcome;
    long precision_bits = 0;  // 0 when the check was settled exactly
    bool passed = true;
    bool conclusive = true;
};

/// tau as an exact element of Q[w_N]; requires n | N.
CycloElement candidate_trace(const TraceCandidate& c, long N);

/// 8 cos^2(pi/m) = 2 (w_2m + w_2m^-1)^2 in Q[w_N]; requires 2m | N.
/// Totally real with non-negative Galois images.
CycloElement eight_r_squared(int m, long N);

/// Exact product trace 8r^2 w_M^j - (8r^2 + 1) of an (m,m,inf) triangle
/// with e^{i alpha} = w_M^j, as an element of Q[w_lcm(M, 2m)].
CycloElement on_circle_trace(int m, long M, long j);

/// (tau + 8r^2 + 1)(conj(tau) + 8r^2 + 1) - (8r^2)^2 in Q[w_N] with
/// N = lcm(modulus(tau), 2m). Zero iff tau lies on the trace circle of m,
/// i.e. iff some real alpha realizes tau; alpha itself never appears.
CycloElement circle_residual_of(const CycloElement& tau, int m);

/// The residual of a finite-order candidate, N = lcm(n, 2m).
CycloElement circle_residual_exact(const TraceCandidate& c, int m);

/// Galois constraint check for one automorphism sigma_k. Verifies that the
/// image of the circle residual under sigma_k equals the residual rebuilt
/// from the sigma_k images of tau and 8r^2 (field homomorphism mechanics),
/// reports whether that image is the zero element, and certifies the sign
/// of Re(sigma_k(tau)) + 1 rigorously. For a zero residual the record
/// fails unless Re(sigma_k(tau)) <= -1 is certified.
CheckRecord check_lemma1(const TraceCandidate& c, int m, long k,
                         const exact::CompareOptions& opts = {});
/// Same, for an exactly represented trace; k is taken mod the working
/// modulus N = lcm(modulus(tau), 2m) and must be a unit mod N.
CheckRecord check_lemma1(const CycloElement& tau, int m, long k,
                         const exact::CompareOptions& opts = {});

/// phi-sum filter data for a candidate. The strict sum condition S > 1 is
/// the operative filter; the non-strict S >= 1 form is recorded alongside
/// for audit, not used to reject. Also carries the Galois orbit sums
/// sum_{gcd(k,n)=1} sigma_k(w_n^{k_i}) with their |mu(d_i)| phi(n)/phi(d_i)
/// closed form and bound.
struct Lemma2Result {
    std::array<long, 3> orders{};      // d_i
    std::array<long, 3> phi_orders{};  // phi(d_i)
    Rational sum;                      // S = sum 1/phi(d_i)
    bool strict = false;               // S > 1
    bool nonstrict = false;            // S >= 1
    std::array<long, 3> orbit_sums{};  // mu(d_i) phi(n)/phi(d_i)
    std::array<long, 3> orbit_bounds{};// phi(n)/phi(d_i)
    CheckRecord record;
};
Lemma2Result check_lemma2(const TraceCandidate& c);

/// The unit-fraction case analysis 1/a + 1/b + 1/c > 1 over multisets of
/// integers, split by phi-realizability. The two parametric families
/// (1,*,*) and (2,2,*) are realizable; the sporadic solutions (2,3,3),
/// (2,3,4), (2,3,5) are not, because 3 and 5 are not totient values.
struct PhiTripleFamilies {
    std::vector<std::string> realizable;
    std::vector<std::string> excluded;
};
PhiTripleFamilies enumerate_phi_triples();

/// All multisets a <= b <= c of totient values bounded by max_value with
/// 1/a + 1/b + 1/c > 1, ascending lexicographic order.
std::vector<std::array<long, 3>> phi_triples_up_to(long max_value);

/// True when some integer x has phi(x) = v.
bool is_totient_value(long v);

struct SearchOptions {
    bool symmetry_reduction = true;
    exact::CompareOptions compare{};
};

struct SearchStats {
    std::uint64_t examined = 0;
    std::uint64_t rejected_not_regular_elliptic = 0;
    std::uint64_t rejected_phi_filter = 0;
    std::uint64_t rejected_re_bound = 0;
    std::uint64_t rejected_circle = 0;
    std::uint64_t surviving_reps = 0;
    /// Candidates whose Re bound stayed inconclusive at the precision cap;
    /// these always fall through to the exact circle test, so the search
    /// verdict itself never degrades.
    std::uint64_t re_bound_inconclusive = 0;
    /// Underlying sorted triples covered (equals examined without symmetry
    /// reduction; counts whole orbits with it).
    std::uint64_t triples_covered = 0;

    std::uint64_t rejected_total() const {
        return rejected_not_regular_elliptic + rejected_phi_filter + rejected_re_bound
               + rejected_circle;
    }
};

struct SearchResult {
    int m = 2;
    long n_max = 1;
    bool symmetry_reduced = true;
    SearchStats stats;
    /// Circle-consistent regular elliptic candidates; the emptiness of this
    /// list at every bound is the computational content of the theorem.
    std::vector<TraceCandidate> survivors;
    std::vector<CheckRecord> notes;
};

/// Exhaustive scan of minimal candidates with n <= n_max. Enumerates sorted
/// exponent triples (multisets); with symmetry_reduction only the least
/// representative of each orbit under the global Galois action
/// u.(k1,k2,k3), gcd(u,n)=1 (which subsumes conjugation u = -1) is
/// examined by the order filters, and the exact circle test then runs on
/// every orbit member, since sigma_u moves the circle radius along with
/// the trace. Filters, in order: (a) regular elliptic shape, (b) strict
/// phi-sum, (c) Re(sigma_u(tau)) <= -1 for all units u, (d) exact circle
/// residual for this m. Counts land in exactly one bucket per examined
/// candidate, so examined = rejections + surviving_reps.
SearchResult search_finite_order_traces(int m, long n_max, const SearchOptions& opts = {});

enum class Verdict { NonDiscreteOrNonFaithful, NotApplicable, Inconclusive };
const char* to_string(Verdict v);

struct Certificate {
    triangle::TriangleParams params;
    std::complex<double> tau_numeric;
    classify::IsometryClass isometry_class = classify::IsometryClass::Boundary;
    Verdict verdict = Verdict::Inconclusive;
    long n_max = 0;
    std::vector<CheckRecord> checks;
    std::uint64_t candidates_examined = 0;
    std::uint64_t survivors = 0;
    bool search_ran = false;
};

/// Full pipeline for an (m,m,inf) triangle: trace, matrix cross-check,
/// classification, and (when regular elliptic) the exhaustive finite-order
/// search up to n_max. Verdict NonDiscreteOrNonFaithful records that the
/// product is regular elliptic and no finite order n <= n_max is
/// circle-consistent; NotApplicable when the product is not regular
/// elliptic; Inconclusive when a survivor appears or a load-bearing check
/// cannot be certified at the precision cap.
Certificate certify_non_discrete(const triangle::TriangleParams& params, long n_max,
                                 const SearchOptions& opts = {});

/// Stable-key-order JSON rendering of a certificate.
std::string certificate_to_json(const Certificate& cert);

}  // namespace chtg::certify
