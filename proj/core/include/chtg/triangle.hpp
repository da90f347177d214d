#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "chtg/matrix.hpp"
#include "chtg/rational.hpp"

namespace chtg::triangle {

/// Vertex orders of a triangle of complex geodesics together with the
/// angular invariant alpha of the polar configuration. Order p_k belongs
/// to the angle opposite side k, with kInfinity for an ideal vertex.
struct TriangleParams {
    static constexpr int kInfinity = std::numeric_limits<int>::max();

    int p1 = 2;
    int p2 = 2;
    int p3 = kInfinity;
    double alpha = 0.0;
    /// Set when alpha is an exact rational turn: alpha = 2*pi*j/M,
    /// stored as (M, j). Enables exact trace identification downstream.
    std::optional<std::pair<long, long>> alpha_exact;

    static TriangleParams mm_inf(int m, double alpha);
    /// alpha = 2*pi*turns with the exact representation recorded.
    static TriangleParams mm_inf_turns(int m, const exact::Rational& turns);

    bool is_mm_inf() const {
        return p1 == p2 && p1 >= 2 && p1 != kInfinity && p3 == kInfinity;
    }
    int m() const;  // throws unless is_mm_inf()

    std::string to_string() const;
};

using ReflectionMatrix = Mat3;

/// Gram matrix of the normalized polar vectors, with the eigenvalues used
/// for the signature check kept for inspection.
struct GramTriangle {
    Mat3 h;
    std::array<double, 3> eigenvalues;
    mpfr_prec_t prec = 128;
};

/// r = cos(pi/p), the half-trace parameter of a complex reflection pair
/// meeting at angle pi/p; r = 1 at an ideal vertex.
BigFloat r_value(int p, mpfr_prec_t prec);

/// alpha as a BigFloat, from the exact turn representation when present.
BigFloat alpha_value(const TriangleParams& params, mpfr_prec_t prec);

/// Hermitian Gram matrix with unit diagonal and |h_12| = r3, |h_23| = r1,
/// |h_31| = r2, phases distributed so arg(h_12 h_23 h_31) = alpha.
/// Throws std::domain_error when the form cannot have signature (2,1),
/// i.e. when it is positive definite or has two negative directions.
/// Degenerate (rank-deficient) boundary configurations are allowed.
GramTriangle build_gram(const TriangleParams& params, mpfr_prec_t prec = 128);

/// R_k = -I + 2 e_k h_k with h_k the k-th row of the Gram matrix. Each is
/// an involution preserving the form: R* H R = H, det R = 1, trace R = -1.
std::array<ReflectionMatrix, 3> reflection_matrices(const GramTriangle& g);

/// trace(R_1 R_2 R_3) by the closed formula
/// 8 r1 r2 r3 e^{i alpha} - (4 (r1^2 + r2^2 + r3^2) - 3).
BComplex trace_formula(const TriangleParams& params, mpfr_prec_t prec = 128);

/// | |tau + 8r^2 + 1| - 8r^2 | for the (m,m,inf) family; near zero at
/// working precision since these traces lie on the circle exactly.
BigFloat circle_residual_numeric(const TriangleParams& params, mpfr_prec_t prec = 128);

}  // namespace chtg::triangle
