#pragma once

// Hyperbolic data of the regular truncated tetrahedron with dihedral angle
// theta in (0, pi/3): internal edge length, volume, and the manifold volume
// n * V(pi/n).
//
// Tolerances (fixed): Lobachevsky series tail <= 1e-12; volume quadrature
// target 1e-12 internally, documented contract 1e-9; the Schlaefli
// finite-difference self-test is expected to hold to 1e-5 relative.

#include <array>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "trieuler/errors.hpp"

namespace trieuler {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Lobachevsky function L(x) = -Integral_0^x log|2 sin t| dt, odd and
// pi-periodic.  After reduction to |x| <= pi/2 it is evaluated by the
// classical expansion
//   L(x) = x - x log(2x) + sum_{m>=1} zeta(2m) x^{2m+1} / (m (2m+1) pi^{2m}),
// whose terms shrink geometrically (ratio <= 1/4), giving absolute error
// below 1e-12 long before the iteration cap.
inline double lobachevsky(double x) {
    if (!std::isfinite(x)) throw OutOfRange("lobachevsky: non-finite argument");
    // Reduce modulo pi to [-pi/2, pi/2].
    double r = std::remainder(x, kPi);
    double sign = 1.0;
    if (r < 0) {
        r = -r;
        sign = -1.0;
    }
    if (r == 0.0) return 0.0;
    static const std::array<double, 65> zeta_even = [] {
        std::array<double, 65> z{};
        for (int m = 1; m <= 64; ++m) z[m] = std::riemann_zeta(2.0 * m);
        return z;
    }();
    double sum = r - r * std::log(2.0 * r);
    double ratio = (r / kPi) * (r / kPi);
    double power = ratio; // (r/pi)^{2m}
    for (int m = 1; m <= 64; ++m) {
        double term = zeta_even[m] * r * power / (m * (2 * m + 1));
        sum += term;
        if (term < 1e-17) break;
        power *= ratio;
    }
    return sign * sum;
}

// Internal edge length of the regular truncated tetrahedron:
// cosh(l) = cos(theta) / (2 cos(theta) - 1), from the cofactors of the
// 4x4 Gram matrix with unit diagonal and off-diagonal -cos(theta).
inline double edge_length(double theta) {
    if (!(theta > 0.0 && theta < kPi / 3.0))
        throw OutOfRange("edge_length: theta must lie in (0, pi/3)");
    double c = std::cos(theta);
    return std::acosh(c / (2.0 * c - 1.0));
}

// Volume by Schlaefli integration from the ideal limit: the six internal
// edges all carry angle theta and the right angles along the truncation
// triangles contribute nothing, so dV = -3 l(t) dt and
//   V(theta) = 2 L(pi/6) + 3 Integral_theta^{pi/3} l(t) dt,
// anchored at the ideal regular tetrahedron volume 2 L(pi/6).
inline double trunc_tet_volume(double theta) {
    if (!(theta > 0.0 && theta < kPi / 3.0))
        throw OutOfRange("trunc_tet_volume: theta must lie in (0, pi/3)");
    using boost::math::quadrature::gauss_kronrod;
    double integral = gauss_kronrod<double, 61>::integrate(
        [](double t) { return edge_length(t); }, theta, kPi / 3.0, 15, 1e-12);
    return 2.0 * lobachevsky(kPi / 6.0) + 3.0 * integral;
}

struct TruncTetGeometry {
    double theta = 0.0;
    double edge_length = 0.0;
    double tet_volume = 0.0;
    int n_context = 0; // the n with theta = pi/n, when applicable
};

inline TruncTetGeometry trunc_tet_geometry(int n) {
    if (n <= 3) throw OutOfRange("hyperbolic structure requires n >= 4");
    TruncTetGeometry g;
    g.n_context = n;
    g.theta = kPi / n;
    g.edge_length = edge_length(g.theta);
    g.tet_volume = trunc_tet_volume(g.theta);
    return g;
}

// Total volume of a manifold glued from n regular truncated tetrahedra with
// 2n dihedral angles around every edge: theta = pi/n, n >= 4.
inline double manifold_volume(int n) {
    if (n <= 3) throw OutOfRange("hyperbolic structure requires n >= 4");
    return n * trunc_tet_volume(kPi / n);
}

} // namespace trieuler
