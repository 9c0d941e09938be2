#pragma once

#include "mgi/circuit.hpp"
#include "mgi/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mgi {

enum class MeasureKind { Canonical, Admissible, DivisorCurrent };

const char* to_string(MeasureKind kind);

// Atoms at vertices plus a uniform density on each edge.
struct Measure {
    MeasureKind kind = MeasureKind::Canonical;
    std::map<std::string, Rational> atoms;
    std::map<std::string, Rational> densities;

    Rational atom(const std::string& vertex) const;
    Rational density(const std::string& edge) const;
    Rational total_mass(const PolarizedMetricGraph& g) const;
};

// Polynomial in the offset s along an edge, coefficients low to high.
struct EdgePolynomial {
    std::string edge;
    Rational length;
    std::vector<Rational> coefficients;

    Rational operator()(const Rational& s) const;
    Rational integral() const;
    int degree() const;
};

/// -1/2 K_can plus density 1/(m(e)+r(e)) on every non-bridge edge.
Measure canonical_measure(const PolarizedMetricGraph& g);

/// (1/2h)(K_q + 2 mu_can), checked against (1/h)(sum q(x) x + sum dy/(m+r)).
Measure admissible_measure(const PolarizedMetricGraph& g);

/// The divisor K_q as a measure made of atoms only.
Measure divisor_current(const PolarizedMetricGraph& g);

// The potential f(x) = integral of r(x, .) against the admissible measure,
// its per-edge polynomial profiles, the constant c = 1/2 double integral of
// r against mu, and the Green's function g(x,y) = (f(x)+f(y)-r(x,y))/2 - c.
// Everything is exact and computed once per graph on construction.
class PotentialField {
public:
    explicit PotentialField(const PolarizedMetricGraph& g);

    const PolarizedMetricGraph& graph() const { return table_.graph(); }
    const Genus& genus() const { return genus_; }
    const ResistanceTable& table() const { return table_; }
    const Measure& canonical() const { return canonical_; }
    const Measure& admissible() const { return admissible_; }
    const ResistanceValue& excised(const std::string& edge) const;

    Rational potential(const GraphPoint& x) const;
    const EdgePolynomial& profile(const std::string& edge) const;
    const Rational& capacity() const { return capacity_; }
    Rational resistance(const GraphPoint& x, const GraphPoint& y) const { return table_.between(x, y); }
    Rational green(const GraphPoint& x, const GraphPoint& y) const;

private:
    struct SelfEdge {
        std::size_t edge;
        Rational offset;
    };

    Rational potential_from_row(std::span<const Rational> row, const std::optional<SelfEdge>& self) const;
    Rational self_term(std::size_t edge, const Rational& s) const;

    ResistanceTable table_;
    Genus genus_;
    Measure canonical_;
    Measure admissible_;
    std::vector<Rational> node_potential_;
    std::vector<EdgePolynomial> profiles_;
    Rational capacity_;
};

Rational potential_f(const PolarizedMetricGraph& g, const GraphPoint& x);
EdgePolynomial potential_profile(const PolarizedMetricGraph& g, const std::string& edge);
Rational capacity_c(const PolarizedMetricGraph& g);
Rational green(const PolarizedMetricGraph& g, const GraphPoint& x, const GraphPoint& y);

}  // namespace mgi
