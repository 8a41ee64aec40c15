#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ddcosmo/geometry.hpp"
#include "ddcosmo/quadrature.hpp"

namespace ddcosmo {

using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Boundary function on one disk, stored as complex Fourier coefficients
/// c_l, |l| <= L, in the boundary basis e^{i*l*phi} of unit modulus (the
/// radial factor of the harmonic polynomial is absorbed into the synthesis).
/// Optionally carries samples on a periodic rule.
struct TraceFunction {
    int disk_index = 1; // which disk's boundary it lives on (1 or 2)
    Disk disk{Point(0.0, 0.0), 1.0};
    Vector coefficients; // size 2L+1, entry l+L holds c_l
    bool alias_risk = false;

    std::optional<std::vector<Complex>> samples; // values at circle rule nodes
    std::optional<PeriodicRule> sample_rule;

    int bandwidth() const { return (static_cast<int>(coefficients.size()) - 1) / 2; }
    Complex coeff(int l) const { return coefficients(l + bandwidth()); }
    Complex& coeff(int l) { return coefficients(l + bandwidth()); }

    /// Value of the truncated Fourier series at boundary angle phi.
    Complex boundary_value(double phi) const;

    /// L2(boundary) norm: sqrt(2*pi*r) * euclidean norm of the coefficients.
    double norm() const {
        return std::sqrt(2.0 * pi * disk.radius) * coefficients.norm();
    }

    static TraceFunction zero(int disk_index, const Disk& d, int bandwidth) {
        TraceFunction t;
        t.disk_index = disk_index;
        t.disk = d;
        t.coefficients = Vector::Zero(2 * bandwidth + 1);
        return t;
    }
    static TraceFunction constant(int disk_index, const Disk& d, int bandwidth, Complex value) {
        TraceFunction t = zero(disk_index, d, bandwidth);
        t.coeff(0) = value;
        return t;
    }
};

/// Pair of traces, one per disk, with the product-space norm.
struct GlobalTrace {
    TraceFunction u1, u2;

    double norm() const { return std::hypot(u1.norm(), u2.norm()); }
    const TraceFunction& trace(int j) const { return j == 1 ? u1 : u2; }
    TraceFunction& trace(int j) { return j == 1 ? u1 : u2; }
};

/// Fourier coefficients of samples on a periodic rule,
/// c_l = (1/2pi) \int g(phi) e^{-i*l*phi} dphi. Sets alias_risk (not fatal)
/// when the rule has M <= 2L nodes.
TraceFunction fourier_coefficients(std::span<const Complex> g, const PeriodicRule& rule,
                                   int disk_index, const Disk& disk, int bandwidth);

/// Harmonic extension of a trace evaluated at an interior point: the harmonic
/// polynomial c_0 + sum_{l=1..L} c_l z^l + c_{-l} conj(z)^l, z = (x-c)/r.
/// Exact on the closed disk for bandlimited data. Throws OutsideDisk.
Complex truncated_extension(const TraceFunction& t, Point x);

/// Poisson integral of sampled boundary data at an interior point, by the
/// periodic rule. Sets *near_boundary when the point is within 10 node
/// spacings of the boundary, where the kernel outruns the rule.
Complex poisson_integral(std::span<const Complex> g, const PeriodicRule& rule,
                         const Disk& disk, Point x, bool* near_boundary = nullptr);

} // namespace ddcosmo
