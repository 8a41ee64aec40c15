#include "ddcosmo/spectral.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "ddcosmo/errors.hpp"

namespace ddcosmo {

namespace {

void check_theta(double theta) {
    if (!(theta > 0.0 && theta < pi - 1e-9))
        throw std::domain_error("theta must lie in (0, pi - 1e-9)");
}

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

} // namespace

double alpha_function(double theta) {
    check_theta(theta);
    const double s2 = std::pow(std::sin(theta / 2.0), 2);
    const double c = std::cos(theta);
    return (pi * pi * s2 * c + theta * theta) / (pi * pi * s2 + theta * theta * c);
}

double g_function(double theta) {
    check_theta(theta);
    const double s2 = std::pow(std::sin(theta / 2.0), 2);
    const double ap = positive_part(alpha_function(theta));
    const double cp = positive_part(std::cos(theta));
    const double q = (pi - theta) / pi;
    const double t = ap * (theta / pi) * q / s2;
    // -s2*(1 - sqrt(1+t)) written cancellation-free as s2*t/(1 + sqrt(1+t)).
    return (0.5 * ap * theta / pi + 0.5 * cp * q) * q + s2 * t / (1.0 + std::sqrt(1.0 + t));
}

double h_function(double theta) {
    check_theta(theta);
    const double s2 = std::pow(std::sin(theta / 2.0), 2);
    const double g = g_function(theta);
    const double cp = positive_part(std::cos(theta));
    const double c2 = std::pow(std::cos(theta / 2.0), 2);
    const double q = (pi - theta) / pi;
    return g * g + 2.0 * g * (1.0 + s2) - c2 * cp * q * q;
}

double f_function(double theta) {
    check_theta(theta);
    const double s2 = std::pow(std::sin(theta / 2.0), 2);
    return 0.5 * std::sqrt(1.0 + s2 + g_function(theta) +
                           std::sqrt(4.0 * s2 + h_function(theta)));
}

TheoryReport theory(const TwoDiskGeometry& geom) {
    const double theta = geom.theta;
    check_theta(theta);
    TheoryReport r;
    r.theta = theta;
    r.sigma1 = geom.sigma1;
    r.sigma2 = geom.sigma2;
    r.beta1 = geom.beta1;
    r.beta2 = geom.beta2;
    r.rho = (1.0 - std::cos(theta)) / 2.0;
    r.rate = std::sin(theta / 2.0);
    r.alpha_theta = alpha_function(theta);
    r.g_theta = g_function(theta);
    r.h_theta = h_function(theta);
    r.f_theta = f_function(theta);

    const double sigma = geom.sigma1;
    const double s2 = r.rho; // sin^2(theta/2)
    const double c2 = 1.0 - s2;
    const double st = std::sin(theta);
    const double sig2 = sigma + theta; // = sigma2
    const double tail = (pi - sigma - theta) / pi;

    r.gamma2_norm_sq_upper =
        1.0 + positive_part(st * std::cos(sig2) / std::sin(sig2)) * tail;

    const double bound_ext =
        positive_part(std::cos(sig2)) * st / std::sin(sig2) * ((pi - theta) / pi) * tail;
    const double ratio = theta * theta / (pi * pi * s2);
    const double bound_int =
        positive_part((std::cos(sig2) + std::cos(sigma) * ratio) /
                      (1.0 + std::cos(theta) * ratio)) *
        st / std::sin(sig2) * (theta / pi) * tail;

    r.interior_window = {s2, s2 + bound_int};
    r.exterior_window = {c2, c2 + bound_ext};
    r.numerical_radius_window = {(1.0 + r.rate) / 2.0, r.f_theta};
    return r;
}

double top_singular_value(const Matrix& m, double tol, int max_iters) {
    if (m.size() == 0) return 0.0;
    const Eigen::Index n = m.cols();
    Vector v = Vector::Ones(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v(i) += Complex(0.3 * std::sin(0.7 * static_cast<double>(i) + 0.4), 0.0);
    v.normalize();
    double sigma = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        Vector w = m.adjoint() * (m * v);
        const double nw = w.norm();
        if (nw == 0.0) return 0.0;
        w /= nw;
        const double next = std::sqrt(nw);
        const bool done = std::abs(next - sigma) <= tol * std::max(next, 1.0);
        sigma = next;
        v.swap(w);
        if (done) break;
    }
    return sigma;
}

double hermitian_part_max(const Matrix& m) {
    const Matrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw EigenFailure("Hermitian eigensolver did not converge");
    return es.eigenvalues().maxCoeff();
}

namespace {

/// Maximizes a smooth 2*pi-periodic function over a 721-point grid followed
/// by golden-section refinement of the bracketing interval.
template <class F>
double maximize_periodic(const F& value) {
    const int grid = 721;
    double best = -1e300;
    int best_k = 0;
    std::vector<double> cache(grid);
    for (int k = 0; k < grid; ++k) {
        cache[static_cast<size_t>(k)] = value(2.0 * pi * k / grid);
        if (cache[static_cast<size_t>(k)] > best) {
            best = cache[static_cast<size_t>(k)];
            best_k = k;
        }
    }
    double a = 2.0 * pi * (best_k - 1) / grid;
    double b = 2.0 * pi * (best_k + 1) / grid;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = value(x1), f2 = value(x2);
    while (b - a > 1e-7) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = value(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = value(x1);
        }
    }
    return std::max({best, f1, f2});
}

/// Warm-started top singular value for a family of slowly varying matrices.
struct WarmSigma {
    Vector v;

    double operator()(const Matrix& m, double tol = 1e-12, int max_iters = 10000) {
        const Eigen::Index n = m.cols();
        if (v.size() != n) {
            v = Vector::Ones(n);
            for (Eigen::Index i = 0; i < n; ++i)
                v(i) += Complex(0.3 * std::sin(0.7 * static_cast<double>(i) + 0.4), 0.0);
            v.normalize();
        }
        double sigma = 0.0;
        for (int it = 0; it < max_iters; ++it) {
            Vector w = m.adjoint() * (m * v);
            const double nw = w.norm();
            if (nw == 0.0) return 0.0;
            w /= nw;
            const double next = std::sqrt(nw);
            const bool done = std::abs(next - sigma) <= tol * std::max(next, 1.0);
            sigma = next;
            v.swap(w);
            if (done) break;
        }
        return sigma;
    }
};

} // namespace

double numerical_radius(const Matrix& m) {
    return maximize_periodic([&m](double phi) {
        return hermitian_part_max(std::polar(1.0, phi) * m);
    });
}

double numerical_radius_offdiag(const Matrix& g1, const Matrix& g2) {
    // Hermitian part of e^{i phi} B has eigenvalues +-sigma(C)/2 with
    // C = e^{2 i phi} g1 + g2^*; scan psi = 2 phi over a full period.
    const Matrix g2a = g2.adjoint();
    WarmSigma warm;
    return 0.5 * maximize_periodic([&](double psi) {
        return warm(Matrix(std::polar(1.0, psi) * g1 + g2a));
    });
}

SpectrumEstimate spectrum(const Matrix& m, int bandwidth) {
    SpectrumEstimate est;
    est.bandwidth = bandwidth;
    if (m.size() == 0) return est;

    Eigen::ComplexEigenSolver<Matrix> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw EigenFailure("dense eigensolver did not converge");
    est.eigenvalues.assign(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
    for (const Complex& ev : est.eigenvalues)
        est.spectral_radius = std::max(est.spectral_radius, std::abs(ev));
    est.numerical_radius = numerical_radius(m);
    est.top_singular_value = top_singular_value(m);
    return est;
}

SpectrumEstimate spectrum(const BlockOperator& op) {
    if (op.kind != BlockOperator::Kind::B) return spectrum(op.assembled(), op.bandwidth);

    SpectrumEstimate est;
    est.bandwidth = op.bandwidth;
    const Matrix m = op.assembled();
    Eigen::ComplexEigenSolver<Matrix> es(m, false);
    if (es.info() != Eigen::Success)
        throw EigenFailure("dense eigensolver did not converge");
    est.eigenvalues.assign(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
    for (const Complex& ev : est.eigenvalues)
        est.spectral_radius = std::max(est.spectral_radius, std::abs(ev));
    est.numerical_radius = numerical_radius_offdiag(op.blocks[0][1], op.blocks[1][0]);
    est.top_singular_value = top_singular_value(m);
    return est;
}

Eigenpair eigenpair(const TwoDiskGeometry& geom, Complex z0, const Profile& profile) {
    if (!(std::abs(z0.imag()) < 0.5))
        throw std::domain_error("z0 must lie in the open dual strip |Im z0| < 1/2");
    const double theta = geom.theta;
    const Complex s = symbol(z0, pi - theta);
    const Complex w = std::conj(z0); // exponent of the strip eigenfunction

    Eigenpair ep;
    ep.lambda = std::conj(s * s);
    ep.near_boundary_z0 = std::abs(z0.imag()) > 0.45;

    // Push tau -> e^{i w tau} on the line of Gamma_1^int to the arc.
    ep.eigenfunction.disk_index = 1;
    ep.eigenfunction.disk = geom.disk(1);
    ep.eigenfunction.arc = geom.arcs(1).interior;
    ep.eigenfunction.rule =
        ArcRule(ep.eigenfunction.arc, profile.panels_per_arc, profile.gauss_order);
    ep.eigenfunction.values.resize(ep.eigenfunction.rule.size());
    const Similarity to_canonical = geom.canonical_map;
    for (size_t q = 0; q < ep.eigenfunction.rule.size(); ++q) {
        const Point y = ep.eigenfunction.disk.boundary_point(ep.eigenfunction.rule.nodes[q]);
        const StripPoint sp = inverse_bipolar(to_canonical(y));
        ep.eigenfunction.values[q] = std::exp(Complex(0.0, 1.0) * w * sp.tau);
    }

    // Residual of the eigen-relation, with the operator applied twice by
    // numerical convolution on the line grid.
    const LineRule rule(profile.line_t, profile.line_h);
    StripSample f = StripSample::from_function(
        geom.sigma1 + pi, rule,
        [w](double tau) { return std::exp(Complex(0.0, 1.0) * w * tau); });
    StripSample once = convolve(f, pi - theta); // to the line of Gamma_2^int
    once.sigma = geom.sigma2;
    StripSample twice = convolve(once, pi - theta); // back to Gamma_1^int
    twice.sigma = geom.sigma1 + pi;
    ep.residual = weighted_norm(twice - ep.lambda * f) / weighted_norm(f);
    return ep;
}

std::vector<Complex> spectrum_image(double theta, int nx, int ny, double xmax) {
    check_theta(theta);
    std::vector<Complex> image;
    image.reserve(static_cast<size_t>((2 * nx + 1)) * static_cast<size_t>(2 * ny + 1));
    for (int iy = -ny; iy <= ny; ++iy) {
        const double y = 0.5 * iy / ny;
        for (int ix = -nx; ix <= nx; ++ix) {
            const double x = xmax * ix / nx;
            const Complex s = symbol(Complex(x, y), pi - theta);
            image.push_back(std::conj(s * s));
        }
    }
    return image;
}

} // namespace ddcosmo
