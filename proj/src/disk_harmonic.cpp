#include "ddcosmo/disk_harmonic.hpp"

#include <cmath>

#include "ddcosmo/errors.hpp"

namespace ddcosmo {

Complex TraceFunction::boundary_value(double phi) const {
    const int l_max = bandwidth();
    const Complex e = std::polar(1.0, phi);
    Complex zp{1.0, 0.0};
    Complex acc = coeff(0);
    for (int l = 1; l <= l_max; ++l) {
        zp *= e;
        acc += coeff(l) * zp + coeff(-l) * std::conj(zp);
    }
    return acc;
}

TraceFunction fourier_coefficients(std::span<const Complex> g, const PeriodicRule& rule,
                                   int disk_index, const Disk& disk, int bandwidth) {
    TraceFunction t = TraceFunction::zero(disk_index, disk, bandwidth);
    t.alias_risk = rule.node_count <= 2 * bandwidth;

    const int m = rule.node_count;
    for (int k = 0; k < m; ++k) {
        const Complex e = std::polar(1.0, -rule.node(k));
        Complex ep{1.0, 0.0};
        t.coeff(0) += g[static_cast<size_t>(k)];
        for (int l = 1; l <= bandwidth; ++l) {
            ep *= e;
            t.coeff(l) += g[static_cast<size_t>(k)] * ep;
            t.coeff(-l) += g[static_cast<size_t>(k)] * std::conj(ep);
        }
    }
    t.coefficients /= static_cast<double>(m);

    t.samples = std::vector<Complex>(g.begin(), g.end());
    t.sample_rule = rule;
    return t;
}

Complex truncated_extension(const TraceFunction& t, Point x) {
    const Complex z = (x - t.disk.center) / t.disk.radius;
    if (std::abs(z) > 1.0 + 1e-10)
        throw OutsideDisk("evaluation point lies outside the closed disk");
    const int l_max = t.bandwidth();
    Complex zp{1.0, 0.0};
    Complex acc = t.coeff(0);
    for (int l = 1; l <= l_max; ++l) {
        zp *= z;
        acc += t.coeff(l) * zp + t.coeff(-l) * std::conj(zp);
    }
    return acc;
}

Complex poisson_integral(std::span<const Complex> g, const PeriodicRule& rule,
                         const Disk& disk, Point x, bool* near_boundary) {
    const double r = disk.radius;
    const double rho = std::abs(x - disk.center);
    if (rho >= r) throw OutsideDisk("Poisson integral point must be interior");
    if (near_boundary)
        *near_boundary = (r - rho) < 10.0 * rule.weight() * r;

    // (1/2pi) \int (r^2 - |x-c|^2) / |x-y|^2 g(y) dphi, the 1/r of the kernel
    // cancelling against dH^1 = r dphi.
    const double num = r * r - rho * rho;
    Complex acc{0.0, 0.0};
    for (int k = 0; k < rule.node_count; ++k) {
        const Point y = disk.boundary_point(rule.node(k));
        acc += g[static_cast<size_t>(k)] * (num / std::norm(x - y));
    }
    return acc / (2.0 * pi) * rule.weight();
}

} // namespace ddcosmo
