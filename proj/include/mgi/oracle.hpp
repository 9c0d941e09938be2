#pragma once

#include "mgi/graph_io.hpp"
#include "mgi/potential.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mgi {

// Floating-point certifiers for the exact engine. They sample the engine's
// pointwise values (g(x,x), f(x), r(x,y)) and integrate with the composite
// midpoint rule, never touching the per-edge polynomial profiles.

/// -delta/4 + 1/4 int g(x,x) ((10h+2) mu - K_q), M midpoints per edge.
long double quadrature_phi(const PotentialField& field, int m);
long double quadrature_phi(const PolarizedMetricGraph& g, int m);

/// int g(x,x) ((2h-2) mu + K_q), M midpoints per edge.
long double quadrature_epsilon(const PotentialField& field, int m);
long double quadrature_epsilon(const PolarizedMetricGraph& g, int m);

/// c = 1/2 int f dmu with the edge parts of the integral by midpoints.
long double quadrature_capacity(const PotentialField& field, int m);
/// f(x) + f(y) - r(x,y))/2 minus quadrature_capacity.
long double quadrature_green(const PotentialField& field, const GraphPoint& x, const GraphPoint& y, int m);

struct OracleRung {
    int m = 0;
    long double approximation = 0;
    long double error = 0;
    long double ratio = 0;  // error(previous rung) / error(this rung); 0 on the first rung
};

struct OracleReport {
    std::string quantity;
    Rational exact;
    std::vector<OracleRung> ladder;
    long double tolerance = 1e-6L;

    long double final_error() const { return ladder.empty() ? 0 : ladder.back().error; }
    bool errors_non_increasing() const;
    /// Every ratio after the first rung in [low, high]; rungs whose previous
    /// error is already at rounding level are skipped.
    bool ratios_within(long double low, long double high) const;
    bool converged() const { return final_error() < tolerance; }
};

/// Ladder over `orders` (each >= 2), evaluated concurrently.
OracleReport oracle_phi(const PotentialField& field, const std::vector<int>& orders, long double tolerance = 1e-6L);
OracleReport oracle_epsilon(const PotentialField& field, const std::vector<int>& orders,
                            long double tolerance = 1e-6L);

struct ProbeReport {
    std::string edge;
    long double step = 0;
    std::vector<long double> constants;  // -(second difference)/step^2 per interior node
    long double mean = 0;
    long double expected = 0;  // -density of mu on the edge
    long double max_deviation = 0;
    long double tolerance = 1e-6L;

    bool passed() const { return max_deviation <= tolerance; }
};

/// Samples y -> g(x,y) at offsets k*step along `edge` and reports
/// -(g(y-h) - 2g(y) + g(y+h))/h^2, which should equal -density(mu, edge).
/// Requires x off the open edge and step = m(e)/N with N >= 4.
ProbeReport laplacian_probe(const PotentialField& field, const GraphPoint& x, const std::string& edge,
                            const Rational& step, long double tolerance = 1e-6L);

struct SubdivisionFailure {
    std::size_t trial = 0;
    std::string quantity;
    Rational base;
    Rational refined;
};

struct SubdivisionReport {
    std::size_t trials = 0;
    std::size_t comparisons = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> inserted;  // points inserted per trial
    std::vector<SubdivisionFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// Each trial inserts 1-5 random rational points and compares delta, phi,
/// eps, psi, c and sampled g values exactly with the unrefined graph.
SubdivisionReport subdivision_invariance_check(const PolarizedMetricGraph& g, std::size_t trials,
                                               std::uint64_t seed);

std::string to_decimal(long double value, int digits = 12);
Json oracle_to_json(const OracleReport& r);
std::string oracle_to_csv(const OracleReport& r);
Json probe_to_json(const ProbeReport& r);
Json subdivision_to_json(const SubdivisionReport& r);

}  // namespace mgi
