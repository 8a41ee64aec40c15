#include "ddcosmo/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace ddcosmo {

namespace {

double clamp_cos(double c) { return std::clamp(c, -1.0, 1.0); }

} // namespace

ArcDecomposition TwoDiskGeometry::arcs(int j) const {
    const Disk& self = disk(j);
    const Disk& other = disk(3 - j);
    const double toward = std::arg(other.center - self.center);
    const double half = beta(j);
    ArcDecomposition d;
    d.interior = {toward, half};
    d.exterior = {toward + pi, pi - half};
    return d;
}

Disk TwoDiskGeometry::canonical_disk(int j) const {
    const double s = sigma(j);
    return {Point(0.0, -1.0 / std::tan(s)), 1.0 / std::sin(s)};
}

TwoDiskGeometry intersect(const Disk& d1, const Disk& d2) {
    if (!(d1.radius > 0.0) || !(d2.radius > 0.0))
        throw DegenerateGeometry("disk radius must be positive");

    const double r1 = d1.radius, r2 = d2.radius;
    const double d = std::abs(d2.center - d1.center);
    const double tol = 1e-12 * std::max(r1, r2);
    if (d >= r1 + r2 - tol)
        throw DegenerateGeometry("disks are tangent or disjoint");
    if (d <= std::abs(r1 - r2) + tol)
        throw DegenerateGeometry("one disk contains the other");

    TwoDiskGeometry g;
    g.disks = {d1, d2};
    g.theta = std::acos(clamp_cos((r1 * r1 + r2 * r2 - d * d) / (2.0 * r1 * r2)));
    g.beta1 = std::acos(clamp_cos((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1)));
    g.beta2 = std::acos(clamp_cos((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2)));
    g.sigma1 = g.beta1;
    g.sigma2 = pi - g.beta2;

    const Complex u = (d2.center - d1.center) / d;
    g.a1 = d1.center + r1 * u * std::polar(1.0, g.beta1);
    g.a2 = d1.center + r1 * u * std::polar(1.0, -g.beta1);

    // Affine map sending a1 -> -1, a2 -> +1; conjugate afterwards if that
    // leaves the exterior arc of disk 1 in the upper half-plane.
    Similarity map;
    map.a = 2.0 / (g.a2 - g.a1);
    map.b = 1.0 - map.a * g.a2;
    map.reflect = false;
    if ((map(d1.center)).imag() > (map(d2.center)).imag()) {
        map.a = std::conj(map.a);
        map.b = std::conj(map.b);
        map.reflect = true;
    }
    g.canonical_map = map;
    return g;
}

TwoDiskGeometry symmetric_geometry(double theta) {
    if (!(theta > 0.0 && theta < pi))
        throw DegenerateGeometry("theta must lie in (0, pi)");
    const double beta = (pi - theta) / 2.0;
    const double r = 1.0 / std::sin(beta);
    const double c = 1.0 / std::tan(beta);
    return intersect({Point(0.0, -c), r}, {Point(0.0, c), r});
}

TwoDiskGeometry geometry_from_sigmas(double sigma1, double sigma2) {
    if (!(0.0 < sigma1 && sigma1 < sigma2 && sigma2 < pi))
        throw DegenerateGeometry("need 0 < sigma1 < sigma2 < pi");
    return intersect(circle_of_line(sigma1), circle_of_line(sigma2));
}

Point bipolar(double tau, double sigma) {
    const double den = std::cosh(tau) - std::cos(sigma);
    return {std::sinh(tau) / den, -std::sin(sigma) / den};
}

StripPoint inverse_bipolar(Point p) {
    if (p.imag() == 0.0 && std::abs(p.real()) >= 1.0)
        throw OutOfDomain("point lies on the slits |x| >= 1, y = 0");
    const Complex w = std::log((p + 1.0) / (p - 1.0));
    double sigma = w.imag();
    if (sigma <= 0.0) sigma += 2.0 * pi;
    return {w.real(), sigma};
}

Disk circle_of_line(double sigma) {
    return {Point(0.0, -1.0 / std::tan(sigma)), 1.0 / std::sin(sigma)};
}

} // namespace ddcosmo
