#include "chtg/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace chtg::classify {

const char* to_string(IsometryClass c) {
    switch (c) {
        case IsometryClass::RegularElliptic: return "RegularElliptic";
        case IsometryClass::Loxodromic: return "Loxodromic";
        case IsometryClass::Boundary: return "Boundary";
    }
    return "Boundary";
}

double goldman_discriminant(std::complex<double> tau) {
    double n2 = std::norm(tau);
    std::complex<double> cube = tau * tau * tau;
    return n2 * n2 - 8.0 * cube.real() + 18.0 * n2 - 27.0;
}

IsometryClass classify_trace(std::complex<double> tau, double boundary_tol) {
    double f = goldman_discriminant(tau);
    if (f < -boundary_tol) return IsometryClass::RegularElliptic;
    if (f > boundary_tol) return IsometryClass::Loxodromic;
    return IsometryClass::Boundary;
}

std::vector<AlphaWindow> elliptic_windows(int m, int resolution, double boundary_tol) {
    if (m < 2) throw std::invalid_argument("elliptic_windows: m must be >= 2");
    if (resolution < 16) resolution = 16;

    const double two_pi = 2.0 * M_PI;
    const double r = std::cos(M_PI / m);
    const double R = 8.0 * r * r;
    auto tau_at = [&](double alpha) {
        return std::complex<double>(R * std::cos(alpha) - (R + 1.0), R * std::sin(alpha));
    };
    auto inside = [&](double alpha) {
        return goldman_discriminant(tau_at(alpha)) < -boundary_tol;
    };

    // f(tau(0)) = 0 up to float noise well inside the tolerance band, so a
    // window never touches the grid seam at alpha = 0 and no wrap handling
    // is needed.
    auto alpha_of = [&](int i) { return two_pi * i / resolution; };
    std::vector<bool> in(resolution);
    for (int i = 0; i < resolution; ++i) in[i] = inside(alpha_of(i));

    // Shrinks a bracket with inside(a) != inside(b) below the target width
    // and returns its midpoint as the window endpoint.
    auto refine = [&](double a, double b) {
        const double target = two_pi * 1e-6;
        bool in_a = inside(a);
        while (b - a >= target) {
            double mid = 0.5 * (a + b);
            if (inside(mid) == in_a)
                a = mid;
            else
                b = mid;
        }
        return 0.5 * (a + b);
    };

    std::vector<AlphaWindow> windows;
    int i = 0;
    while (i < resolution) {
        if (!in[i]) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < resolution && in[j + 1]) ++j;
        double lo = refine(alpha_of(i - 1), alpha_of(i));
        double hi = refine(alpha_of(j), alpha_of(j + 1));
        windows.push_back({lo, hi});
        i = j + 1;
    }
    return windows;
}

}  // namespace chtg::classify
