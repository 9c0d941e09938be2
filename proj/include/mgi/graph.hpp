#pragma once

#include "mgi/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace mgi {

struct Vertex {
    std::string id;
    long q = 0;  // polarization, a non-negative integer
};

struct Edge {
    std::string id;
    std::array<std::string, 2> ends;  // sorted; equal ids for a loop
    Rational length;

    bool is_loop() const { return ends[0] == ends[1]; }
};

// A connected multigraph with exact edge lengths and a vertex polarization.
// Construction canonicalizes: vertices and edges are ordered by id and the
// two ends of every edge are ordered lexicographically. Offsets of interior
// points are always measured from ends[0].
//
// The constructor checks referential integrity only (unique ids, known
// endpoints, q >= 0). Connectivity, positive lengths and positive genus are
// reported by validate() so that a malformed graph can still be inspected.
class PolarizedMetricGraph {
public:
    PolarizedMetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(const std::string& id) const { return vertex_index_.count(id) != 0; }
    bool has_edge(const std::string& id) const { return edge_index_.count(id) != 0; }

    std::size_t vertex_index(const std::string& id) const;
    std::size_t edge_index(const std::string& id) const;
    const Vertex& vertex(const std::string& id) const { return vertices_[vertex_index(id)]; }
    const Edge& edge(const std::string& id) const { return edges_[edge_index(id)]; }

    /// Number of half-edges at a vertex; a loop counts twice.
    long valence(const std::string& id) const;

    bool operator==(const PolarizedMetricGraph& other) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, std::size_t, std::less<>> vertex_index_;
    std::map<std::string, std::size_t, std::less<>> edge_index_;
};

struct VertexPoint {
    std::string vertex;
};

// A point strictly inside an edge, at `offset` from the edge's ends[0].
struct InteriorPoint {
    std::string edge;
    Rational offset;
};

using GraphPoint = std::variant<VertexPoint, InteriorPoint>;

inline bool is_vertex(const GraphPoint& p) { return std::holds_alternative<VertexPoint>(p); }
std::string to_string(const GraphPoint& p);

/// Checks that `p` refers to an existing element and lies strictly inside
/// its edge. Throws UnknownPoint or OffsetOutOfRange.
void check_point(const PolarizedMetricGraph& g, const GraphPoint& p);

/// The point at distance `distance` from `from_vertex` along `edge`.
/// Returns a VertexPoint at either end.
GraphPoint point_along(const PolarizedMetricGraph& g, const std::string& edge,
                       const std::string& from_vertex, const Rational& distance);

struct Divisor {
    std::map<std::string, Rational> coefficients;

    Rational degree() const;
    Rational at(const std::string& vertex) const;
};

enum class Issue { DisconnectedGraph, NonPositiveLength, GenusZero };

struct ValidationIssue {
    Issue issue;
    std::string element;
};

struct ValidationReport {
    bool connected = false;
    bool positive_lengths = false;
    bool positive_genus = false;
    bool stable = false;
    long b1 = 0;  // meaningful only when connected
    long h = 0;
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
};

ValidationReport validate(const PolarizedMetricGraph& g);

/// Throws the first validation issue as an Error.
void require_valid(const PolarizedMetricGraph& g);

struct Genus {
    long b1 = 0;
    long h = 0;
};

Genus genus(const PolarizedMetricGraph& g);

Divisor canonical_divisor(const PolarizedMetricGraph& g);
Divisor polarized_divisor(const PolarizedMetricGraph& g);

Rational total_length(const PolarizedMetricGraph& g);

/// Vertex ids grouped by connected component, components ordered by their
/// smallest vertex id. `skip_edge` is treated as removed (its interior only).
std::vector<std::vector<std::string>> components(const PolarizedMetricGraph& g,
                                                 const std::string& skip_edge = {});

bool is_bridge(const PolarizedMetricGraph& g, const std::string& edge);

struct Insertion {
    PolarizedMetricGraph graph;
    std::string vertex;
};

// Splits the edge at an interior point. Edge E with ends (a, b) becomes
// "E.0" = (a, new) of length offset and "E.1" = (new, b) of length
// length - offset; the new vertex is named "E@offset" and has q = 0.
Insertion insert_point(const PolarizedMetricGraph& g, const GraphPoint& p);

/// Same metric graph with every length multiplied by `factor` > 0.
PolarizedMetricGraph scaled(const PolarizedMetricGraph& g, const Rational& factor);

// Tracks repeated insert_point calls so that points of the original graph
// can be located in the refined model.
class Refinement {
public:
    explicit Refinement(PolarizedMetricGraph base);

    const PolarizedMetricGraph& base() const { return base_; }
    const PolarizedMetricGraph& current() const { return current_; }

    /// Inserts the point at `position` along the base edge (measured from
    /// the base edge's ends[0]); returns the id of the vertex there.
    std::string insert(const std::string& base_edge, const Rational& position);

    /// The point of the current model corresponding to a base point.
    GraphPoint map(const GraphPoint& base_point) const;

private:
    struct Node {
        Rational position;
        std::string vertex;
    };
    struct Chain {
        std::vector<Node> nodes;          // from ends[0] to ends[1]
        std::vector<std::string> pieces;  // current edge between nodes[k], nodes[k+1]
    };

    GraphPoint locate(const std::string& base_edge, const Rational& position, std::size_t* piece) const;

    PolarizedMetricGraph base_;
    PolarizedMetricGraph current_;
    std::map<std::string, Chain> chains_;
};

}  // namespace mgi
