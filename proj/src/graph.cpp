#include "mgi/graph.hpp"

#include "mgi/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace mgi {

PolarizedMetricGraph::PolarizedMetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges))
{
    std::sort(vertices_.begin(), vertices_.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (auto& e : edges_)
        if (e.ends[1] < e.ends[0])
            std::swap(e.ends[0], e.ends[1]);
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });

    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& v = vertices_[i];
        if (!vertex_index_.emplace(v.id, i).second)
            throw Error(ErrorKind::DuplicateId, "vertex '" + v.id + "'");
        if (v.q < 0)
            throw Error(ErrorKind::InvalidPolarization,
                        "vertex '" + v.id + "' has q = " + std::to_string(v.q));
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (!edge_index_.emplace(e.id, i).second)
            throw Error(ErrorKind::DuplicateId, "edge '" + e.id + "'");
        for (const auto& end : e.ends)
            if (!has_vertex(end))
                throw Error(ErrorKind::UnknownVertex, "edge '" + e.id + "' references '" + end + "'");
    }
}

std::size_t PolarizedMetricGraph::vertex_index(const std::string& id) const
{
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end())
        throw Error(ErrorKind::UnknownVertex, "'" + id + "'");
    return it->second;
}

std::size_t PolarizedMetricGraph::edge_index(const std::string& id) const
{
    auto it = edge_index_.find(id);
    if (it == edge_index_.end())
        throw Error(ErrorKind::UnknownEdge, "'" + id + "'");
    return it->second;
}

long PolarizedMetricGraph::valence(const std::string& id) const
{
    long count = 0;
    for (const auto& e : edges_)
        for (const auto& end : e.ends)
            if (end == id)
                ++count;
    return count;
}

bool PolarizedMetricGraph::operator==(const PolarizedMetricGraph& other) const
{
    if (vertices_.size() != other.vertices_.size() || edges_.size() != other.edges_.size())
        return false;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id != other.vertices_[i].id || vertices_[i].q != other.vertices_[i].q)
            return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& a = edges_[i];
        const auto& b = other.edges_[i];
        if (a.id != b.id || a.ends != b.ends || a.length != b.length)
            return false;
    }
    return true;
}

std::string to_string(const GraphPoint& p)
{
    if (const auto* v = std::get_if<VertexPoint>(&p))
        return "vertex:" + v->vertex;
    const auto& i = std::get<InteriorPoint>(p);
    return "edge:" + i.edge + "@" + to_string(i.offset);
}

void check_point(const PolarizedMetricGraph& g, const GraphPoint& p)
{
    if (const auto* v = std::get_if<VertexPoint>(&p)) {
        if (!g.has_vertex(v->vertex))
            throw Error(ErrorKind::UnknownPoint, "no vertex '" + v->vertex + "'");
        return;
    }
    const auto& i = std::get<InteriorPoint>(p);
    if (!g.has_edge(i.edge))
        throw Error(ErrorKind::UnknownPoint, "no edge '" + i.edge + "'");
    const auto& e = g.edge(i.edge);
    if (i.offset <= 0 || i.offset >= e.length)
        throw Error(ErrorKind::OffsetOutOfRange, "offset " + to_string(i.offset) + " on edge '" + e.id
                                                     + "' of length " + to_string(e.length));
}

GraphPoint point_along(const PolarizedMetricGraph& g, const std::string& edge,
                       const std::string& from_vertex, const Rational& distance)
{
    const auto& e = g.edge(edge);
    if (from_vertex != e.ends[0] && from_vertex != e.ends[1])
        throw Error(ErrorKind::Precondition, "'" + from_vertex + "' is not an end of '" + edge + "'");
    if (distance < 0 || distance > e.length)
        throw Error(ErrorKind::OffsetOutOfRange, "distance " + to_string(distance) + " on '" + edge + "'");
    const std::string& other = from_vertex == e.ends[0] ? e.ends[1] : e.ends[0];
    if (distance == 0)
        return VertexPoint{from_vertex};
    if (distance == e.length)
        return VertexPoint{other};
    if (from_vertex == e.ends[0])
        return InteriorPoint{edge, distance};
    return InteriorPoint{edge, e.length - distance};
}

Rational Divisor::degree() const
{
    Rational sum = 0;
    for (const auto& [_, c] : coefficients)
        sum += c;
    return sum;
}

Rational Divisor::at(const std::string& vertex) const
{
    auto it = coefficients.find(vertex);
    return it == coefficients.end() ? Rational(0) : it->second;
}

std::vector<std::vector<std::string>> components(const PolarizedMetricGraph& g, const std::string& skip_edge)
{
    const auto n = g.vertices().size();
    std::vector<std::vector<std::size_t>> adjacent(n);
    for (const auto& e : g.edges()) {
        if (e.id == skip_edge || e.is_loop())
            continue;
        auto a = g.vertex_index(e.ends[0]);
        auto b = g.vertex_index(e.ends[1]);
        adjacent[a].push_back(b);
        adjacent[b].push_back(a);
    }
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::string>> result;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        std::vector<std::string> component;
        std::queue<std::size_t> todo;
        todo.push(start);
        seen[start] = true;
        while (!todo.empty()) {
            auto v = todo.front();
            todo.pop();
            component.push_back(g.vertices()[v].id);
            for (auto w : adjacent[v])
                if (!seen[w]) {
                    seen[w] = true;
                    todo.push(w);
                }
        }
        std::sort(component.begin(), component.end());
        result.push_back(std::move(component));
    }
    return result;
}

bool is_bridge(const PolarizedMetricGraph& g, const std::string& edge)
{
    const auto& e = g.edge(edge);
    if (e.is_loop())
        return false;
    for (const auto& component : components(g, edge)) {
        bool has_a = std::find(component.begin(), component.end(), e.ends[0]) != component.end();
        bool has_b = std::find(component.begin(), component.end(), e.ends[1]) != component.end();
        if (has_a || has_b)
            return has_a != has_b;
    }
    return false;
}

ValidationReport validate(const PolarizedMetricGraph& g)
{
    ValidationReport report;
    auto parts = components(g);
    report.connected = parts.size() == 1;
    if (parts.empty())
        report.issues.push_back({Issue::DisconnectedGraph, "<no vertices>"});
    else if (parts.size() > 1)
        report.issues.push_back({Issue::DisconnectedGraph, "component containing '" + parts[1].front() + "'"});

    report.positive_lengths = true;
    for (const auto& e : g.edges())
        if (e.length <= 0) {
            report.positive_lengths = false;
            report.issues.push_back({Issue::NonPositiveLength, e.id});
        }

    long total_q = 0;
    for (const auto& v : g.vertices())
        total_q += v.q;
    if (report.connected) {
        report.b1 = static_cast<long>(g.edges().size()) - static_cast<long>(g.vertices().size()) + 1;
        report.h = report.b1 + total_q;
        report.positive_genus = report.h >= 1;
        if (!report.positive_genus)
            report.issues.push_back({Issue::GenusZero, "genus " + std::to_string(report.h)});
    }

    report.stable = true;
    for (const auto& v : g.vertices())
        if (v.q == 0 && g.valence(v.id) < 3)
            report.stable = false;
    return report;
}

void require_valid(const PolarizedMetricGraph& g)
{
    auto report = validate(g);
    if (report.ok())
        return;
    const auto& first = report.issues.front();
    switch (first.issue) {
    case Issue::DisconnectedGraph: throw Error(ErrorKind::DisconnectedGraph, first.element);
    case Issue::NonPositiveLength: throw Error(ErrorKind::NonPositiveLength, "edge '" + first.element + "'");
    case Issue::GenusZero: throw Error(ErrorKind::GenusZero, first.element);
    }
}

Genus genus(const PolarizedMetricGraph& g)
{
    auto parts = components(g);
    if (parts.size() != 1)
        throw Error(ErrorKind::DisconnectedGraph,
                    parts.empty() ? "<no vertices>" : "graph has " + std::to_string(parts.size()) + " components");
    Genus result;
    result.b1 = static_cast<long>(g.edges().size()) - static_cast<long>(g.vertices().size()) + 1;
    result.h = result.b1;
    for (const auto& v : g.vertices())
        result.h += v.q;
    return result;
}

Divisor canonical_divisor(const PolarizedMetricGraph& g)
{
    genus(g);
    Divisor k;
    for (const auto& v : g.vertices())
        k.coefficients[v.id] = Rational(g.valence(v.id) - 2);
    return k;
}

Divisor polarized_divisor(const PolarizedMetricGraph& g)
{
    Divisor k = canonical_divisor(g);
    for (const auto& v : g.vertices())
        k.coefficients[v.id] += 2 * v.q;
    return k;
}

Rational total_length(const PolarizedMetricGraph& g)
{
    Rational sum = 0;
    for (const auto& e : g.edges())
        sum += e.length;
    return sum;
}

Insertion insert_point(const PolarizedMetricGraph& g, const GraphPoint& p)
{
    const auto* interior = std::get_if<InteriorPoint>(&p);
    if (interior == nullptr)
        throw Error(ErrorKind::Precondition, "insert_point needs an interior point, got " + to_string(p));
    if (!g.has_edge(interior->edge))
        throw Error(ErrorKind::UnknownEdge, "'" + interior->edge + "'");
    const Edge& split = g.edge(interior->edge);
    if (interior->offset <= 0 || interior->offset >= split.length)
        throw Error(ErrorKind::OffsetOutOfRange, "offset " + to_string(interior->offset) + " on edge '"
                                                     + split.id + "' of length " + to_string(split.length));

    std::string fresh = split.id + "@" + to_string(interior->offset);
    std::vector<Vertex> vertices = g.vertices();
    vertices.push_back({fresh, 0});
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() + 1);
    for (const auto& e : g.edges())
        if (e.id != split.id)
            edges.push_back(e);
    edges.push_back({split.id + ".0", {split.ends[0], fresh}, interior->offset});
    edges.push_back({split.id + ".1", {fresh, split.ends[1]}, split.length - interior->offset});
    return {PolarizedMetricGraph(std::move(vertices), std::move(edges)), fresh};
}

PolarizedMetricGraph scaled(const PolarizedMetricGraph& g, const Rational& factor)
{
    if (factor <= 0)
        throw Error(ErrorKind::Precondition, "scale factor must be positive");
    std::vector<Edge> edges = g.edges();
    for (auto& e : edges)
        e.length *= factor;
    return PolarizedMetricGraph(g.vertices(), std::move(edges));
}

Refinement::Refinement(PolarizedMetricGraph base) : base_(base), current_(std::move(base))
{
    for (const auto& e : base_.edges())
        chains_[e.id] = Chain{{{Rational(0), e.ends[0]}, {e.length, e.ends[1]}}, {e.id}};
}

GraphPoint Refinement::locate(const std::string& base_edge, const Rational& position, std::size_t* piece) const
{
    auto it = chains_.find(base_edge);
    if (it == chains_.end())
        throw Error(ErrorKind::UnknownEdge, "'" + base_edge + "'");
    const auto& chain = it->second;
    if (position < 0 || position > chain.nodes.back().position)
        throw Error(ErrorKind::OffsetOutOfRange, "position " + to_string(position) + " on '" + base_edge + "'");
    for (std::size_t k = 0; k + 1 < chain.nodes.size(); ++k) {
        const auto& lo = chain.nodes[k];
        const auto& hi = chain.nodes[k + 1];
        if (position == lo.position)
            return VertexPoint{lo.vertex};
        if (position == hi.position)
            return VertexPoint{hi.vertex};
        if (position < hi.position) {
            if (piece)
                *piece = k;
            return point_along(current_, chain.pieces[k], lo.vertex, position - lo.position);
        }
    }
    throw Error(ErrorKind::OffsetOutOfRange, "position " + to_string(position) + " on '" + base_edge + "'");
}

std::string Refinement::insert(const std::string& base_edge, const Rational& position)
{
    std::size_t k = 0;
    GraphPoint where = locate(base_edge, position, &k);
    if (const auto* v = std::get_if<VertexPoint>(&where))
        return v->vertex;

    auto& chain = chains_.at(base_edge);
    const std::string piece = chain.pieces[k];
    const Edge old = current_.edge(piece);
    auto inserted = insert_point(current_, where);
    current_ = std::move(inserted.graph);

    // piece.0 touches old.ends[0]; for a loop that is the lower chain node.
    bool forward = old.is_loop() || old.ends[0] == chain.nodes[k].vertex;
    std::string near = forward ? piece + ".0" : piece + ".1";
    std::string far = forward ? piece + ".1" : piece + ".0";
    chain.nodes.insert(chain.nodes.begin() + static_cast<std::ptrdiff_t>(k) + 1, Node{position, inserted.vertex});
    chain.pieces[k] = near;
    chain.pieces.insert(chain.pieces.begin() + static_cast<std::ptrdiff_t>(k) + 1, far);
    return inserted.vertex;
}

GraphPoint Refinement::map(const GraphPoint& base_point) const
{
    if (is_vertex(base_point))
        return base_point;
    const auto& p = std::get<InteriorPoint>(base_point);
    check_point(base_, p);
    return locate(p.edge, p.offset, nullptr);
}

}  // namespace mgi
