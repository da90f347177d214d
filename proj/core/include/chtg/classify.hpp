#pragma once

#include <complex>
#include <vector>

namespace chtg::classify {

/// Conjugacy type of an element of SU(2,1) as read off its trace.
enum class IsometryClass { RegularElliptic, Loxodromic, Boundary };

const char* to_string(IsometryClass c);

/// f(tau) = |tau|^4 - 8 Re(tau^3) + 18 |tau|^2 - 27. Negative exactly on
/// the regular elliptic traces, positive on the loxodromic ones; zero on
/// the boundary surface (parabolic and special elliptic classes meet there).
double goldman_discriminant(std::complex<double> tau);

/// Sign of the discriminant with a symmetric tolerance band around zero
/// collapsed to Boundary, so float noise near the surface stays stable.
IsometryClass classify_trace(std::complex<double> tau, double boundary_tol = 1e-9);

struct AlphaWindow {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};

/// Maximal alpha-intervals in (0, 2pi) where the (m,m,inf) product trace
/// tau(alpha) = 8r^2 e^{i alpha} - (8r^2 + 1) is regular elliptic. Grid
/// scan at `resolution` points, endpoints refined by bisection to width
/// below 2pi * 1e-6. Empty when no window exists (in particular m = 2).
std::vector<AlphaWindow> elliptic_windows(int m, int resolution = 4096,
                                          double boundary_tol = 1e-9);

}  // namespace chtg::classify
