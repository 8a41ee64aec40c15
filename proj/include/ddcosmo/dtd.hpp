#pragma once

#include "ddcosmo/disk_harmonic.hpp"
#include "ddcosmo/strip.hpp"

namespace ddcosmo {

/// Boundary function supported on a single arc of one disk, stored as values
/// on the arc rule nodes and implicitly extended by zero on the complement.
struct ArcFunction {
    int disk_index = 1;
    Disk disk{Point(0.0, 0.0), 1.0};
    ArcInterval arc{0.0, 1.0};
    ArcRule rule{{0.0, 1.0}, 1, 4};
    std::vector<Complex> values;

    /// L2 norm over the arc (equals the L2(boundary) norm of the extension).
    double norm() const;
};

/// Dirichlet-to-Dirichlet application: trace along Gamma_j^int of the
/// harmonic extension of g from the other disk, extended by zero on
/// Gamma_j^ext. Exact for bandlimited g (the extension is a polynomial).
ArcFunction apply_dtd(const TraceFunction& g, const TwoDiskGeometry& geom,
                      const Profile& profile);

/// Fourier coefficients of an arc-supported function (zero extension).
TraceFunction arc_fourier_coefficients(const ArcFunction& f, int bandwidth);

/// Matrix of P_{j,L} gamma_j restricted to H_L(boundary_i) in the
/// orthonormalized bases e^{i*l*phi}/sqrt(2*pi*r). Entries integrate over
/// Gamma_j^int only, where the integrand is a polynomial trace; no Poisson
/// kernel singularity enters. Under the paranoid profile the assembly is
/// repeated with doubled panels and QuadratureUnconverged is thrown if any
/// entry moves by more than 1e-8.
Matrix assemble_gamma(const TwoDiskGeometry& geom, int from_i, int to_j, int bandwidth,
                      const Profile& profile);

/// 2x2-block operator over the orthonormalized per-disk Fourier bases.
struct BlockOperator {
    enum class Kind { B, A, Gamma12 };

    int bandwidth = 0;
    Kind kind = Kind::B;
    // blocks[r][c], each (2L+1) x (2L+1)
    std::array<std::array<Matrix, 2>, 2> blocks;

    int block_size() const { return 2 * bandwidth + 1; }
    /// The full 2(2L+1) square matrix.
    Matrix assembled() const;
};

/// Assemble B = offdiag(gamma_1, gamma_2), A = I - B, or
/// Gamma12 = blockdiag((gamma_1 gamma_2)_L, (gamma_2 gamma_1)_L).
BlockOperator assemble_block(const TwoDiskGeometry& geom, int bandwidth,
                             BlockOperator::Kind kind, const Profile& profile);

enum class RestrictedSide { interior, exterior };

/// Matrix of gamma_j acting on functions supported on Gamma_i^int (resp.
/// Gamma_i^ext) extended by zero. Domain basis: Fourier modes
/// e^{i*k*pi*(phi-phi_mid)/beta} on the arc, orthonormal w.r.t. arc length;
/// target basis: the same construction on Gamma_j^int (where the output is
/// supported). The harmonic extension of the arc modes is evaluated by the
/// Poisson integral over the source arc.
Matrix restricted_gamma(const TwoDiskGeometry& geom, int from_i, int to_j,
                        RestrictedSide side, int bandwidth, const Profile& profile);

/// Pullback of a bandlimited trace to the two strip lines of its disk
/// (lower line at sigma_j, upper at sigma_j + pi), evaluated through the
/// geometry's canonical frame and scaled so that the two weighted line norms
/// add up to the L2(boundary) norm. Tail limits are the values at the
/// intersection points.
std::pair<StripSample, StripSample> pullback_trace(const TraceFunction& t,
                                                   const TwoDiskGeometry& geom,
                                                   const LineRule& rule);

/// gamma_j g evaluated directly on the strip line of Gamma_j^int: the
/// harmonic extension of bandlimited g at the pulled-back grid points.
StripSample pullback_dtd(const TraceFunction& g, const TwoDiskGeometry& geom,
                         int to_j, const LineRule& rule);

} // namespace ddcosmo
