#pragma once

#include <span>
#include <string>
#include <vector>

#include "ddcosmo/geometry.hpp"

namespace ddcosmo {

/// One global precision profile scales every rule in the project; the rules
/// themselves are fixed (non-adaptive) so that identical configurations
/// reproduce byte-identical outputs.
struct Profile {
    std::string name;
    int circle_min;     // minimum node count of the periodic rule
    int circle_per_l;   // periodic nodes per unit of bandwidth
    int gauss_order;    // Gauss-Legendre order per panel
    int panels_per_arc; // panels per arc, split between the two endpoints
    double line_t;      // truncation of the line rule
    double line_h;      // target spacing of the line rule

    int circle_nodes(int bandwidth) const {
        return std::max(circle_min, circle_per_l * bandwidth);
    }

    static const Profile& fast();
    static const Profile& standard();
    static const Profile& paranoid();
    /// Throws ConfigError for unknown names.
    static const Profile& by_name(const std::string& name);
};

/// Periodic trapezoid rule on a full circle: nodes 2*pi*k/M, equal weights
/// 2*pi/M. Spectrally accurate for smooth periodic integrands.
struct PeriodicRule {
    int node_count;

    explicit PeriodicRule(int m) : node_count(m) {}
    double node(int k) const { return 2.0 * pi * k / node_count; }
    double weight() const { return 2.0 * pi / node_count; }
};

/// Panelled Gauss-Legendre rule on an angular interval, with panel widths
/// geometrically refined (ratio 2) toward both endpoints. Traces of harmonic
/// extensions lose smoothness at the intersection points, so endpoint
/// clustering is what recovers high order in practice.
struct ArcRule {
    std::vector<double> nodes;   // angles
    std::vector<double> weights; // d(angle) weights; multiply by radius for arc length

    ArcRule(ArcInterval arc, int panels, int gauss_order);
    size_t size() const { return nodes.size(); }
};

/// Symmetric truncated trapezoid rule on [-T, T]. The spacing is adjusted so
/// that the node set is exactly symmetric with a node at 0.
struct LineRule {
    double truncation;
    double spacing;
    std::vector<double> nodes;
    std::vector<double> weights;

    LineRule(double t, double h);
    size_t size() const { return nodes.size(); }
    bool operator==(const LineRule& o) const {
        return truncation == o.truncation && spacing == o.spacing;
    }
};

/// Nodes and weights of the Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

/// Arc rule whose Gauss order resolves integrands of the given angular
/// frequency: n-point Gauss handles e^{i*omega*phi} on a panel of width w
/// once n exceeds omega*w/2, so the order scales with the widest panel.
ArcRule resolved_arc_rule(ArcInterval arc, double frequency, const Profile& profile,
                          int panel_doubling = 1);

Complex integrate_circle(std::span<const Complex> f, const PeriodicRule& rule, double radius);
Complex integrate_arc(std::span<const Complex> f, const ArcRule& rule, double radius);
Complex integrate_line(std::span<const Complex> f, const LineRule& rule);
double integrate_line(std::span<const double> f, const LineRule& rule);

} // namespace ddcosmo
