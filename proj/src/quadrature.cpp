#include "ddcosmo/quadrature.hpp"

#include <cmath>
#include <numeric>

#include "ddcosmo/errors.hpp"

namespace ddcosmo {

const Profile& Profile::fast() {
    static const Profile p{"fast", 256, 4, 8, 6, 30.0, 0.1};
    return p;
}

const Profile& Profile::standard() {
    static const Profile p{"standard", 512, 8, 12, 8, 40.0, 0.05};
    return p;
}

const Profile& Profile::paranoid() {
    static const Profile p{"paranoid", 1024, 16, 20, 16, 60.0, 0.025};
    return p;
}

const Profile& Profile::by_name(const std::string& name) {
    if (name == "fast") return fast();
    if (name == "standard") return standard();
    if (name == "paranoid") return paranoid();
    throw ConfigError("unknown quadrature profile '" + name + "'");
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<size_t>(order), 0.0);
    weights.assign(static_cast<size_t>(order), 0.0);
    const int n = order;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<size_t>(i)] = -x;
        nodes[static_cast<size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[static_cast<size_t>(i)] = w;
        weights[static_cast<size_t>(n - 1 - i)] = w;
    }
}

ArcRule::ArcRule(ArcInterval arc, int panels, int gauss_order) {
    // Panel breakpoints on [0, 1]: half the panels cover [0, 1/2] with widths
    // doubling away from 0, the rest mirror them on [1/2, 1].
    const int half = std::max(1, panels / 2);
    const double w0 = 0.5 / (std::pow(2.0, half) - 1.0);
    std::vector<double> breaks{0.0};
    double width = w0;
    for (int k = 0; k < half; ++k, width *= 2.0) breaks.push_back(breaks.back() + width);
    breaks.back() = 0.5;
    for (int k = half - 1; k >= 0; --k) breaks.push_back(1.0 - breaks[static_cast<size_t>(k)]);

    std::vector<double> gx, gw;
    gauss_legendre(gauss_order, gx, gw);

    const double a = arc.start(), len = arc.end() - arc.start();
    for (size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double x0 = a + len * breaks[p];
        const double x1 = a + len * breaks[p + 1];
        const double mid = 0.5 * (x0 + x1), hw = 0.5 * (x1 - x0);
        for (size_t q = 0; q < gx.size(); ++q) {
            nodes.push_back(mid + hw * gx[q]);
            weights.push_back(hw * gw[q]);
        }
    }
}

LineRule::LineRule(double t, double h) : truncation(t), spacing(h) {
    int half = static_cast<int>(std::round(t / h));
    if (half < 1) half = 1;
    spacing = t / half;
    const int n = 2 * half + 1;
    nodes.resize(static_cast<size_t>(n));
    weights.assign(static_cast<size_t>(n), spacing);
    for (int k = 0; k < n; ++k) nodes[static_cast<size_t>(k)] = (k - half) * spacing;
    weights.front() = 0.5 * spacing;
    weights.back() = 0.5 * spacing;
}

ArcRule resolved_arc_rule(ArcInterval arc, double frequency, const Profile& profile,
                          int panel_doubling) {
    const int panels = profile.panels_per_arc * panel_doubling;
    const int half = std::max(1, panels / 2);
    const double widest = arc.half * std::pow(2.0, half - 1) / (std::pow(2.0, half) - 1.0);
    const int needed = static_cast<int>(std::ceil(0.5 * frequency * widest)) + 16;
    return ArcRule(arc, panels, std::max(profile.gauss_order, needed));
}

Complex integrate_circle(std::span<const Complex> f, const PeriodicRule& rule, double radius) {
    Complex s{0.0, 0.0};
    for (const Complex& v : f) s += v;
    return s * (rule.weight() * radius);
}

Complex integrate_arc(std::span<const Complex> f, const ArcRule& rule, double radius) {
    Complex s{0.0, 0.0};
    for (size_t k = 0; k < rule.size(); ++k) s += rule.weights[k] * f[k];
    return s * radius;
}

// Symmetric pairing: contributions of +-tau cancel exactly for odd data.
Complex integrate_line(std::span<const Complex> f, const LineRule& rule) {
    const size_t n = rule.size();
    Complex s{0.0, 0.0};
    for (size_t k = 0; k < n / 2; ++k)
        s += rule.weights[k] * f[k] + rule.weights[n - 1 - k] * f[n - 1 - k];
    if (n % 2 == 1) s += rule.weights[n / 2] * f[n / 2];
    return s;
}

double integrate_line(std::span<const double> f, const LineRule& rule) {
    const size_t n = rule.size();
    double s = 0.0;
    for (size_t k = 0; k < n / 2; ++k)
        s += rule.weights[k] * f[k] + rule.weights[n - 1 - k] * f[n - 1 - k];
    if (n % 2 == 1) s += rule.weights[n / 2] * f[n / 2];
    return s;
}

} // namespace ddcosmo
