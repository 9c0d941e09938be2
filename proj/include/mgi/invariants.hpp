#pragma once

#include "mgi/graph_io.hpp"
#include "mgi/potential.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mgi {

struct InvariantReport {
    long h = 0;
    long b1 = 0;
    Rational delta, epsilon, phi, psi, capacity;
    std::vector<std::pair<std::string, ResistanceValue>> excised;
    Measure canonical, admissible;
    bool epsilon_paths_agree = false;
    bool phi_paths_agree = false;
    bool measures_agree = false;
    bool stable = false;
};

// Integrates x -> g(x,x) = f(x) - c against a measure exactly, with atoms
// evaluated at vertices and densities against the edge profiles of f.
Rational diagonal_integral(const PotentialField& field, const Measure& weight);

/// eps = int g(x,x) ((2h-2) mu + K_q), checked against sum K_q(v) f(v).
Rational epsilon(const PotentialField& field);
/// phi = -delta/4 + 1/4 int g(x,x) ((10h+2) mu - K_q), checked against
/// -delta/4 + 3hc - 1/4 sum K_q(v) f(v).
Rational phi(const PotentialField& field);
Rational psi(const PotentialField& field);

Rational epsilon(const PolarizedMetricGraph& g);
Rational phi(const PolarizedMetricGraph& g);
Rational psi(const PolarizedMetricGraph& g);

/// psi from eps and phi: eps + (2h-2)/(2h+1) phi.
Rational psi_from(long h, const Rational& epsilon, const Rational& phi);

InvariantReport report(const PolarizedMetricGraph& g);
InvariantReport report(const PotentialField& field);

Json measure_to_json(const Measure& m, int digits);
Json report_to_json(const InvariantReport& r, int digits = 12);

}  // namespace mgi
