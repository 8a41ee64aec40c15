#pragma once

#include <array>
#include <complex>

#include "ddcosmo/errors.hpp"

namespace ddcosmo {

using Complex = std::complex<double>;

/// Points in the plane are represented as complex numbers; similarity
/// transforms and harmonic polynomials are then plain complex arithmetic.
using Point = std::complex<double>;

constexpr double pi = 3.14159265358979323846;

struct Disk {
    Point center;
    double radius; // > 0

    bool contains(Point p) const { return std::abs(p - center) < radius; }
    /// Signed distance to the boundary, positive inside.
    double boundary_distance(Point p) const { return radius - std::abs(p - center); }
    Point boundary_point(double phi) const {
        return center + radius * std::polar(1.0, phi);
    }
};

/// Direct similarity z -> a*z + b, optionally composed with conjugation
/// (z -> a*conj(z) + b) when a reflection is needed to put the frame in
/// the reference orientation.
struct Similarity {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    bool reflect = false;

    Point operator()(Point z) const { return reflect ? a * std::conj(z) + b : a * z + b; }

    Similarity inverse() const {
        if (!reflect) return {1.0 / a, -b / a, false};
        return {std::conj(1.0 / a), std::conj(-b / a), true};
    }

    double scale() const { return std::abs(a); }
};

/// Angular interval on a circle, stored as midpoint and half-width.
struct ArcInterval {
    double mid;  // angle of the arc midpoint, as seen from the disk center
    double half; // half-aperture, in (0, pi)

    double start() const { return mid - half; }
    double end() const { return mid + half; }
    double length(double radius) const { return 2.0 * half * radius; }
};

/// Interior/exterior arcs of one disk of an overlapping pair. The two arcs
/// partition the circle up to the two intersection points.
struct ArcDecomposition {
    ArcInterval interior; // part of the boundary inside the other disk
    ArcInterval exterior; // part of the boundary on the boundary of the union
};

/// Two properly overlapping disks together with the derived intersection
/// angles and the similarity taking the pair to the reference frame:
/// intersection points at (-1,0) and (1,0), exterior arc of disk 1 in the
/// lower half-plane. In that frame disk j is the image of the strip
/// R x (sigma_j, sigma_j + pi) under the bipolar transform.
struct TwoDiskGeometry {
    std::array<Disk, 2> disks;
    Point a1, a2;          // intersection points; canonical_map sends them to -1, +1
    double theta;          // angle at a1 between the segments to the two centers
    double beta1, beta2;   // half-apertures of the interior arcs
    double sigma1, sigma2; // line heights: sigma1 = beta1, sigma2 = pi - beta2
    Similarity canonical_map;

    const Disk& disk(int j) const { return disks[static_cast<size_t>(j - 1)]; }
    double beta(int j) const { return j == 1 ? beta1 : beta2; }
    double sigma(int j) const { return j == 1 ? sigma1 : sigma2; }

    /// Arc decomposition of disk j (1 or 2) in the original frame.
    ArcDecomposition arcs(int j) const;

    /// The geometry mapped through canonical_map: disk j has center
    /// (0, -cot(sigma_j)) and radius 1/sin(sigma_j).
    Disk canonical_disk(int j) const;

    /// Line height of the arc of disk j: sigma_j for the lower (exterior for
    /// j=1, interior for j=2) arc, sigma_j + pi for the upper one.
    double line_height(int j, bool interior) const {
        const double s = sigma(j);
        const bool upper = (j == 1) ? interior : !interior;
        return upper ? s + pi : s;
    }
};

/// Intersects two disks. Throws DegenerateGeometry unless the boundaries
/// cross at exactly two points (proper overlap, no containment).
TwoDiskGeometry intersect(const Disk& d1, const Disk& d2);

/// Symmetric reference-frame pair with intersection angle theta: both disks
/// have radius 1/sin(beta), beta = (pi - theta)/2, centers (0, -cot(beta))
/// and (0, +cot(beta)). Its canonical map is the identity.
TwoDiskGeometry symmetric_geometry(double theta);

/// Reference-frame pair from the two line heights 0 < sigma1 < sigma2 < pi.
TwoDiskGeometry geometry_from_sigmas(double sigma1, double sigma2);

/// The bipolar transform Psi(tau, sigma) on the strip R x (0, 2*pi);
/// equals coth((tau + i*sigma)/2).
Point bipolar(double tau, double sigma);

struct StripPoint {
    double tau;
    double sigma; // in (0, 2*pi)
};

/// Inverse of the bipolar transform. Throws OutOfDomain on the slits
/// {(x, 0) : |x| >= 1}.
StripPoint inverse_bipolar(Point p);

/// The circle Psi(R_sigma) for sigma in (0, pi): center (0, -cot(sigma)),
/// radius 1/sin(sigma).
Disk circle_of_line(double sigma);

/// |dPsi/dtau| = 1/(cosh(tau) - cos(sigma)): arc length element of the
/// parameterization tau -> Psi(tau, sigma).
inline double bipolar_arc_factor(double tau, double sigma) {
    return 1.0 / (std::cosh(tau) - std::cos(sigma));
}

} // namespace ddcosmo
