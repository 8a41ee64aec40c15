#include "ddcosmo/dtd.hpp"

#include <cmath>

#include "ddcosmo/errors.hpp"

namespace ddcosmo {

double ArcFunction::norm() const {
    double acc = 0.0;
    for (size_t k = 0; k < rule.size(); ++k) acc += rule.weights[k] * std::norm(values[k]);
    return std::sqrt(acc * disk.radius);
}

namespace {

/// Gauss order adequate for integrands of the given angular frequency on the
/// widest panel of a geometrically graded rule: n-point Gauss resolves
/// e^{i omega phi} on a panel of width w once n > omega*w/2 plus a margin.
int order_for_frequency(double frequency, ArcInterval arc, int panels, int base_order) {
    const int half = std::max(1, panels / 2);
    const double widest = arc.half * std::pow(2.0, half - 1) / (std::pow(2.0, half) - 1.0);
    const int needed = static_cast<int>(std::ceil(0.5 * frequency * widest)) + 16;
    return std::max(base_order, needed);
}

/// Largest angular frequency carried by the assembly integrand on
/// Gamma_j^int: the target mode contributes up to L; the source polynomial
/// z(phi)^l oscillates at rate l*|z'|/|z| <= (r_j/r_i)(l + 82) wherever
/// |z|^l is above machine scale (|z'| = r_j/r_i, and l(1-|z|) <= 41 there).
double assembly_frequency(const TwoDiskGeometry& geom, int to_j, int bandwidth) {
    const double ratio = geom.disk(to_j).radius / geom.disk(3 - to_j).radius;
    return bandwidth + ratio * (bandwidth + 82.0);
}

/// Arc rule resolving the bandwidth-L assembly integrand on Gamma_j^int.
ArcRule assembly_rule(const TwoDiskGeometry& geom, int to_j, int bandwidth,
                      const Profile& profile, int panel_doubling = 1) {
    const ArcInterval arc = geom.arcs(to_j).interior;
    const int panels = profile.panels_per_arc * panel_doubling;
    const int order = order_for_frequency(assembly_frequency(geom, to_j, bandwidth), arc,
                                          panels, profile.gauss_order);
    return ArcRule(arc, panels, order);
}

} // namespace

ArcFunction apply_dtd(const TraceFunction& g, const TwoDiskGeometry& geom,
                      const Profile& profile) {
    const int j = g.disk_index == 1 ? 2 : 1;
    ArcFunction out;
    out.disk_index = j;
    out.disk = geom.disk(j);
    out.arc = geom.arcs(j).interior;
    out.rule = assembly_rule(geom, j, g.bandwidth(), profile);
    out.values.resize(out.rule.size());
    for (size_t q = 0; q < out.rule.size(); ++q) {
        const Point y = out.disk.boundary_point(out.rule.nodes[q]);
        out.values[q] = truncated_extension(g, y);
    }
    return out;
}

TraceFunction arc_fourier_coefficients(const ArcFunction& f, int bandwidth) {
    TraceFunction t = TraceFunction::zero(f.disk_index, f.disk, bandwidth);
    for (size_t q = 0; q < f.rule.size(); ++q) {
        const Complex fw = f.values[q] * f.rule.weights[q];
        const Complex e = std::polar(1.0, -f.rule.nodes[q]);
        Complex ep{1.0, 0.0};
        t.coeff(0) += fw;
        for (int l = 1; l <= bandwidth; ++l) {
            ep *= e;
            t.coeff(l) += fw * ep;
            t.coeff(-l) += fw * std::conj(ep);
        }
    }
    t.coefficients /= 2.0 * pi;
    return t;
}

namespace {

/// Harmonic polynomial basis values E_l(y) = ((y-c)/r)^l (conjugated powers
/// for negative l) at the given points, as a (points x modes) matrix.
Matrix harmonic_basis_at(const std::vector<Point>& pts, const Disk& source, int bandwidth) {
    const int k = 2 * bandwidth + 1;
    Matrix e(static_cast<Eigen::Index>(pts.size()), k);
    for (size_t q = 0; q < pts.size(); ++q) {
        const Complex z = (pts[q] - source.center) / source.radius;
        Complex zp{1.0, 0.0};
        e(static_cast<Eigen::Index>(q), bandwidth) = 1.0;
        for (int l = 1; l <= bandwidth; ++l) {
            zp *= z;
            e(static_cast<Eigen::Index>(q), bandwidth + l) = zp;
            e(static_cast<Eigen::Index>(q), bandwidth - l) = std::conj(zp);
        }
    }
    return e;
}

/// Rows w_q * e^{-i*k*phi_q} of the projection onto circle Fourier modes.
Matrix fourier_rows(const ArcRule& rule, int bandwidth) {
    const int k = 2 * bandwidth + 1;
    Matrix v(k, static_cast<Eigen::Index>(rule.size()));
    for (size_t q = 0; q < rule.size(); ++q) {
        const Complex e = std::polar(1.0, -rule.nodes[q]);
        Complex ep{1.0, 0.0};
        v(bandwidth, static_cast<Eigen::Index>(q)) = rule.weights[q];
        for (int l = 1; l <= bandwidth; ++l) {
            ep *= e;
            v(bandwidth + l, static_cast<Eigen::Index>(q)) = rule.weights[q] * ep;
            v(bandwidth - l, static_cast<Eigen::Index>(q)) = rule.weights[q] * std::conj(ep);
        }
    }
    return v;
}

Matrix assemble_gamma_with_panels(const TwoDiskGeometry& geom, int from_i, int to_j,
                                  int bandwidth, const Profile& profile,
                                  int panel_doubling) {
    const Disk& source = geom.disk(from_i);
    const Disk& target = geom.disk(to_j);
    const ArcRule rule = assembly_rule(geom, to_j, bandwidth, profile, panel_doubling);

    std::vector<Point> pts(rule.size());
    for (size_t q = 0; q < rule.size(); ++q) pts[q] = target.boundary_point(rule.nodes[q]);

    const Matrix rows = fourier_rows(rule, bandwidth);
    const Matrix basis = harmonic_basis_at(pts, source, bandwidth);
    const double factor = std::sqrt(target.radius / source.radius) / (2.0 * pi);
    return factor * (rows * basis);
}

} // namespace

Matrix assemble_gamma(const TwoDiskGeometry& geom, int from_i, int to_j, int bandwidth,
                      const Profile& profile) {
    Matrix m = assemble_gamma_with_panels(geom, from_i, to_j, bandwidth, profile, 1);
    if (profile.name == "paranoid") {
        const Matrix refined =
            assemble_gamma_with_panels(geom, from_i, to_j, bandwidth, profile, 2);
        const double drift = (refined - m).cwiseAbs().maxCoeff();
        if (drift > 1e-8)
            throw QuadratureUnconverged("doubling panels moved a gamma entry by " +
                                        std::to_string(drift));
        m = refined;
    }
    return m;
}

Matrix BlockOperator::assembled() const {
    const int k = block_size();
    Matrix m(2 * k, 2 * k);
    m.topLeftCorner(k, k) = blocks[0][0];
    m.topRightCorner(k, k) = blocks[0][1];
    m.bottomLeftCorner(k, k) = blocks[1][0];
    m.bottomRightCorner(k, k) = blocks[1][1];
    return m;
}

BlockOperator assemble_block(const TwoDiskGeometry& geom, int bandwidth,
                             BlockOperator::Kind kind, const Profile& profile) {
    const Matrix g1 = assemble_gamma(geom, 2, 1, bandwidth, profile);
    const Matrix g2 = assemble_gamma(geom, 1, 2, bandwidth, profile);
    const int k = 2 * bandwidth + 1;

    BlockOperator op;
    op.bandwidth = bandwidth;
    op.kind = kind;
    switch (kind) {
        case BlockOperator::Kind::B:
            op.blocks[0][0] = Matrix::Zero(k, k);
            op.blocks[0][1] = g1;
            op.blocks[1][0] = g2;
            op.blocks[1][1] = Matrix::Zero(k, k);
            break;
        case BlockOperator::Kind::A:
            op.blocks[0][0] = Matrix::Identity(k, k);
            op.blocks[0][1] = -g1;
            op.blocks[1][0] = -g2;
            op.blocks[1][1] = Matrix::Identity(k, k);
            break;
        case BlockOperator::Kind::Gamma12:
            op.blocks[0][0] = g1 * g2;
            op.blocks[0][1] = Matrix::Zero(k, k);
            op.blocks[1][0] = Matrix::Zero(k, k);
            op.blocks[1][1] = g2 * g1;
            break;
    }
    return op;
}

Matrix restricted_gamma(const TwoDiskGeometry& geom, int from_i, int to_j,
                        RestrictedSide side, int bandwidth, const Profile& profile) {
    const Disk& source = geom.disk(from_i);
    const Disk& target = geom.disk(to_j);
    const ArcDecomposition src_arcs = geom.arcs(from_i);
    const ArcInterval domain = side == RestrictedSide::interior ? src_arcs.interior
                                                                : src_arcs.exterior;
    const ArcInterval range = geom.arcs(to_j).interior;

    // Arc modes on an interval of half-width b oscillate at up to L*pi/b.
    const ArcRule rd(domain, profile.panels_per_arc,
                     order_for_frequency(bandwidth * pi / domain.half, domain,
                                         profile.panels_per_arc, profile.gauss_order));
    const ArcRule rt(range, profile.panels_per_arc,
                     order_for_frequency(bandwidth * pi / range.half, range,
                                         profile.panels_per_arc, profile.gauss_order));
    const int k = 2 * bandwidth + 1;
    const Eigen::Index qd = static_cast<Eigen::Index>(rd.size());
    const Eigen::Index qt = static_cast<Eigen::Index>(rt.size());

    // Arc Fourier modes e^{i*k*pi*(phi-mid)/half}/sqrt(2*half*r), orthonormal
    // w.r.t. arc length.
    const auto arc_modes = [k, bandwidth](const ArcRule& rule, const ArcInterval& arc,
                                          double radius) {
        Matrix u(static_cast<Eigen::Index>(rule.size()), k);
        const double scale = 1.0 / std::sqrt(2.0 * arc.half * radius);
        for (size_t q = 0; q < rule.size(); ++q) {
            const double s = pi * (rule.nodes[q] - arc.mid) / arc.half;
            for (int m = -bandwidth; m <= bandwidth; ++m)
                u(static_cast<Eigen::Index>(q), m + bandwidth) = scale * std::polar(1.0, m * s);
        }
        return u;
    };

    const Matrix u = arc_modes(rd, domain, source.radius);
    const Matrix v = arc_modes(rt, range, target.radius);

    // Poisson kernel of the source disk from domain-arc nodes to target nodes;
    // the 1/r of the kernel cancels against dH^1 = r dphi.
    Matrix kernel(qt, qd);
    for (Eigen::Index t = 0; t < qt; ++t) {
        const Point x = target.boundary_point(rt.nodes[static_cast<size_t>(t)]);
        const double num = source.radius * source.radius - std::norm(x - source.center);
        for (Eigen::Index d = 0; d < qd; ++d) {
            const Point y = source.boundary_point(rd.nodes[static_cast<size_t>(d)]);
            kernel(t, d) = rd.weights[static_cast<size_t>(d)] * num /
                           (2.0 * pi * std::norm(x - y));
        }
    }

    Matrix wt(k, qt);
    for (Eigen::Index t = 0; t < qt; ++t)
        wt.col(t) = rt.weights[static_cast<size_t>(t)] * target.radius *
                    v.row(t).adjoint();

    return wt * (kernel * u);
}

namespace {

StripSample pullback_on_line(const std::function<Complex(Point)>& value_at,
                             const TwoDiskGeometry& geom, double height,
                             const LineRule& rule) {
    const Similarity inv = geom.canonical_map.inverse();
    // Arc length in the original frame is 1/scale times canonical arc
    // length; the root makes the pullback an isometry for any geometry.
    const double amplitude = 1.0 / std::sqrt(geom.canonical_map.scale());
    StripSample s;
    s.sigma = height;
    s.rule = rule;
    s.values.resize(rule.size());
    for (size_t q = 0; q < rule.size(); ++q)
        s.values[q] = amplitude * value_at(inv(bipolar(rule.nodes[q], height)));
    s.tail_left = amplitude * value_at(geom.a1);
    s.tail_right = amplitude * value_at(geom.a2);
    return s;
}

} // namespace

std::pair<StripSample, StripSample> pullback_trace(const TraceFunction& t,
                                                   const TwoDiskGeometry& geom,
                                                   const LineRule& rule) {
    const int j = t.disk_index;
    const auto eval = [&t](Point p) {
        return t.boundary_value(std::arg(p - t.disk.center));
    };
    return {pullback_on_line(eval, geom, geom.sigma(j), rule),
            pullback_on_line(eval, geom, geom.sigma(j) + pi, rule)};
}

StripSample pullback_dtd(const TraceFunction& g, const TwoDiskGeometry& geom, int to_j,
                         const LineRule& rule) {
    const auto eval = [&g](Point p) { return truncated_extension(g, p); };
    return pullback_on_line(eval, geom, geom.line_height(to_j, true), rule);
}

} // namespace ddcosmo
