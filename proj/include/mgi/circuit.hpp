#pragma once

#include "mgi/graph.hpp"
#include "mgi/linalg.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mgi {

// Effective resistance that may be infinite (terminals in different
// components of the network under consideration).
class ResistanceValue {
public:
    static ResistanceValue finite(Rational value) { return ResistanceValue(std::move(value)); }
    static ResistanceValue infinite() { return ResistanceValue(); }

    bool is_infinite() const { return !value_.has_value(); }
    const Rational& value() const;
    std::string to_string() const;

    bool operator==(const ResistanceValue& other) const { return value_ == other.value_; }

private:
    ResistanceValue() = default;
    explicit ResistanceValue(Rational value) : value_(std::move(value)) {}

    std::optional<Rational> value_;
};

// s -> a s^2 + b s + c on [0, length], s measured from the edge's ends[0].
struct QuadraticProfile {
    std::string edge;
    Rational length;
    Rational a, b, c;

    Rational operator()(const Rational& s) const { return (a * s + b) * s + c; }
    Rational integral() const;
};

/// Weighted Laplacian with conductance 1/m(e) per non-loop edge, indexed in
/// vertex order. `skip_edge` is left out.
Matrix laplacian(const PolarizedMetricGraph& g, const std::string& skip_edge = {});

/// Effective resistance between two points; interior points are inserted as
/// temporary vertices and the grounded Laplacian is solved exactly.
Rational resistance(const PolarizedMetricGraph& g, const GraphPoint& x, const GraphPoint& y);

/// r(e): resistance between the ends of e with e's interior removed. Zero for
/// loops, infinite for bridges.
ResistanceValue excised_edge_resistance(const PolarizedMetricGraph& g, const std::string& edge);

/// r(x, .) restricted to `edge`, by interpolation through L/4, L/2, 3L/4 and
/// certified at both ends and at L/8. x must not be interior to `edge`.
QuadraticProfile resistance_profile(const PolarizedMetricGraph& g, const GraphPoint& x, const std::string& edge);

/// Resistance between offsets s and t of the same edge: u(L-u+r)/(L+r) with
/// u = |s-t|, or u when the edge is a bridge.
Rational same_edge_resistance(const Rational& length, const ResistanceValue& excised, const Rational& s,
                              const Rational& t);
Rational same_edge_resistance(const PolarizedMetricGraph& g, const std::string& edge, const Rational& s,
                              const Rational& t);

/// Sum over non-bridge edges of m(e)/(m(e)+r(e)); equals b1.
Rational foster_sum(const PolarizedMetricGraph& g);

// All pairwise resistances among the vertices of a graph and a fixed set of
// sample points on every edge (L/8, L/4, L/2, 3L/4). The vertex block comes
// from one grounded Laplacian solve; each sample point is then added as an
// exact one-vertex extension of the table, which is what inserting it as a
// valence-2 vertex and re-solving would produce. Resistances to any other
// point are derived the same way without modifying the table.
class ResistanceTable {
public:
    explicit ResistanceTable(const PolarizedMetricGraph& g);

    const PolarizedMetricGraph& graph() const { return graph_; }
    std::size_t size() const { return size_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return table_[i * size_ + j]; }

    const ResistanceValue& excised(std::size_t edge) const { return excised_[edge]; }

    /// Table index of the k-th interpolation sample (k = 0,1,2 for L/4, L/2,
    /// 3L/4) and of the check sample L/8 on an edge.
    std::size_t sample(std::size_t edge, int k) const { return samples_[edge][static_cast<std::size_t>(k) + 1]; }
    std::size_t check_sample(std::size_t edge) const { return samples_[edge][0]; }
    std::size_t vertex(std::size_t v) const { return v; }

    /// Index of the table node at `p`, if any.
    std::optional<std::size_t> find(const GraphPoint& p) const;

    /// Resistances from `p` to every table node.
    std::vector<Rational> row(const GraphPoint& p) const;

    Rational between(const GraphPoint& x, const GraphPoint& y) const;

    /// Certified quadratic profile of a resistance row along `edge`.
    QuadraticProfile profile(std::span<const Rational> row, std::size_t edge) const;

    std::span<const Rational> node_row(std::size_t i) const { return {table_.data() + i * size_, size_}; }

private:
    struct Node {
        Rational position;
        std::size_t index;
    };
    struct Segment {
        std::size_t a, b;
        Rational length, offset;  // offset of the point from node a
    };

    Segment segment_of(const InteriorPoint& p) const;
    Rational& at(std::size_t i, std::size_t j) { return table_[i * size_ + j]; }

    PolarizedMetricGraph graph_;
    std::size_t size_ = 0;
    std::vector<Rational> table_;
    std::vector<ResistanceValue> excised_;
    std::vector<std::vector<Node>> chains_;          // per edge, ordered by position
    std::vector<std::vector<std::size_t>> samples_;  // per edge: L/8, L/4, L/2, 3L/4
};

}  // namespace mgi
