#include "mgi/circuit.hpp"

#include "mgi/errors.hpp"

#include <algorithm>
#include <array>

namespace mgi {

const Rational& ResistanceValue::value() const
{
    if (!value_)
        throw Error(ErrorKind::Precondition, "resistance is infinite");
    return *value_;
}

std::string ResistanceValue::to_string() const
{
    return value_ ? mgi::to_string(*value_) : std::string("inf");
}

Rational QuadraticProfile::integral() const
{
    return ((a * length / 3 + b / 2) * length + c) * length;
}

Matrix laplacian(const PolarizedMetricGraph& g, const std::string& skip_edge)
{
    const auto n = g.vertices().size();
    Matrix l(n, n);
    for (const auto& e : g.edges()) {
        if (e.id == skip_edge || e.is_loop())
            continue;
        Rational conductance = 1 / e.length;
        auto a = g.vertex_index(e.ends[0]);
        auto b = g.vertex_index(e.ends[1]);
        l(a, a) += conductance;
        l(b, b) += conductance;
        l(a, b) -= conductance;
        l(b, a) -= conductance;
    }
    return l;
}

namespace {

void require_circuit(const PolarizedMetricGraph& g)
{
    genus(g);
    for (const auto& e : g.edges())
        if (e.length <= 0)
            throw Error(ErrorKind::NonPositiveLength, "edge '" + e.id + "'");
}

// Potential at `source` when unit current enters there and leaves at
// `ground`, the Laplacian being grounded at `ground`.
Rational grounded_potential(const Matrix& l, std::size_t source, std::size_t ground)
{
    const auto n = l.rows();
    Matrix reduced(n - 1, n - 1);
    Matrix rhs(n - 1, 1);
    auto shrink = [ground](std::size_t i) { return i < ground ? i : i - 1; };
    for (std::size_t i = 0; i < n; ++i) {
        if (i == ground)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (j != ground)
                reduced(shrink(i), shrink(j)) = l(i, j);
    }
    rhs(shrink(source), 0) = 1;
    return solve(reduced, rhs)(shrink(source), 0);
}

}  // namespace

Rational resistance(const PolarizedMetricGraph& g, const GraphPoint& x, const GraphPoint& y)
{
    require_circuit(g);
    check_point(g, x);
    check_point(g, y);
    Refinement refined(g);
    auto as_vertex = [&refined](const GraphPoint& p) {
        if (const auto* v = std::get_if<VertexPoint>(&p))
            return v->vertex;
        const auto& i = std::get<InteriorPoint>(p);
        return refined.insert(i.edge, i.offset);
    };
    std::string vx = as_vertex(x);
    std::string vy = as_vertex(y);
    if (vx == vy)
        return 0;
    const auto& h = refined.current();
    return grounded_potential(laplacian(h), h.vertex_index(vx), h.vertex_index(vy));
}

ResistanceValue excised_edge_resistance(const PolarizedMetricGraph& g, const std::string& edge)
{
    require_circuit(g);
    const auto& e = g.edge(edge);
    if (e.is_loop())
        return ResistanceValue::finite(0);
    if (is_bridge(g, edge))
        return ResistanceValue::infinite();
    return ResistanceValue::finite(
        grounded_potential(laplacian(g, edge), g.vertex_index(e.ends[0]), g.vertex_index(e.ends[1])));
}

Rational same_edge_resistance(const Rational& length, const ResistanceValue& excised, const Rational& s,
                              const Rational& t)
{
    if (s < 0 || s > length || t < 0 || t > length)
        throw Error(ErrorKind::OffsetOutOfRange,
                    "offsets " + to_string(s) + ", " + to_string(t) + " on an edge of length " + to_string(length));
    Rational u = abs(Rational(s - t));
    if (excised.is_infinite())
        return u;
    const Rational& r = excised.value();
    return u * (length - u + r) / (length + r);
}

Rational same_edge_resistance(const PolarizedMetricGraph& g, const std::string& edge, const Rational& s,
                              const Rational& t)
{
    return same_edge_resistance(g.edge(edge).length, excised_edge_resistance(g, edge), s, t);
}

Rational foster_sum(const PolarizedMetricGraph& g)
{
    Rational sum = 0;
    for (const auto& e : g.edges()) {
        auto r = excised_edge_resistance(g, e.id);
        if (!r.is_infinite())
            sum += e.length / (e.length + r.value());
    }
    return sum;
}

QuadraticProfile resistance_profile(const PolarizedMetricGraph& g, const GraphPoint& x, const std::string& edge)
{
    check_point(g, x);
    g.edge(edge);
    if (const auto* i = std::get_if<InteriorPoint>(&x); i && i->edge == edge)
        throw Error(ErrorKind::Precondition, to_string(x) + " is interior to '" + edge + "'; split the edge first");
    ResistanceTable table(g);
    return table.profile(table.row(x), g.edge_index(edge));
}

namespace {

const Rational kSampleFractions[4] = {Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(3, 4)};

}  // namespace

ResistanceTable::ResistanceTable(const PolarizedMetricGraph& g) : graph_(g)
{
    require_circuit(graph_);
    const auto n = graph_.vertices().size();
    const auto edge_count = graph_.edges().size();
    size_ = n + 4 * edge_count;
    table_.assign(size_ * size_, Rational(0));

    if (n >= 2) {
        // Grounded at vertex 0: r(i,j) = M_ii + M_jj - 2 M_ij, M_0. = 0.
        Matrix l = laplacian(graph_);
        Matrix reduced(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j)
                reduced(i - 1, j - 1) = l(i, j);
        Matrix green = solve(reduced, Matrix::identity(n - 1));
        auto m = [&green](std::size_t i, std::size_t j) -> Rational {
            return i == 0 || j == 0 ? Rational(0) : green(i - 1, j - 1);
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                at(i, j) = at(j, i) = m(i, i) + m(j, j) - 2 * m(i, j);
    }

    excised_.reserve(edge_count);
    for (const auto& e : graph_.edges())
        excised_.push_back(excised_edge_resistance(graph_, e.id));

    chains_.resize(edge_count);
    samples_.resize(edge_count);
    std::size_t filled = n;
    for (std::size_t e = 0; e < edge_count; ++e) {
        const auto& edge = graph_.edges()[e];
        auto& chain = chains_[e];
        chain = {{Rational(0), graph_.vertex_index(edge.ends[0])}, {edge.length, graph_.vertex_index(edge.ends[1])}};
        for (const auto& fraction : kSampleFractions) {
            Rational position = fraction * edge.length;
            Segment seg = segment_of(InteriorPoint{edge.id, position});
            const Rational& ell = seg.length;
            const Rational& t = seg.offset;
            Rational alpha = (ell - t) / ell;
            Rational beta = t / ell;
            Rational gamma = t * (ell - t) * (ell - (*this)(seg.a, seg.b)) / (ell * ell);
            const std::size_t k = filled++;
            for (std::size_t w = 0; w < k; ++w)
                at(k, w) = at(w, k) = alpha * (*this)(seg.a, w) + beta * (*this)(seg.b, w) + gamma;
            auto pos = std::find_if(chain.begin(), chain.end(), [&](const Node& node) { return position < node.position; });
            chain.insert(pos, Node{position, k});
            samples_[e].push_back(k);
        }
    }
}

ResistanceTable::Segment ResistanceTable::segment_of(const InteriorPoint& p) const
{
    const auto& chain = chains_[graph_.edge_index(p.edge)];
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        if (chain[k].position < p.offset && p.offset < chain[k + 1].position)
            return {chain[k].index, chain[k + 1].index, chain[k + 1].position - chain[k].position,
                    p.offset - chain[k].position};
    throw Error(ErrorKind::OffsetOutOfRange, to_string(GraphPoint(p)) + " is not strictly between table nodes");
}

std::optional<std::size_t> ResistanceTable::find(const GraphPoint& p) const
{
    if (const auto* v = std::get_if<VertexPoint>(&p))
        return graph_.vertex_index(v->vertex);
    const auto& i = std::get<InteriorPoint>(p);
    for (const auto& node : chains_[graph_.edge_index(i.edge)])
        if (node.position == i.offset)
            return node.index;
    return std::nullopt;
}

std::vector<Rational> ResistanceTable::row(const GraphPoint& p) const
{
    check_point(graph_, p);
    std::vector<Rational> out(size_);
    if (auto idx = find(p)) {
        for (std::size_t w = 0; w < size_; ++w)
            out[w] = (*this)(*idx, w);
        return out;
    }
    Segment seg = segment_of(std::get<InteriorPoint>(p));
    const Rational& ell = seg.length;
    const Rational& t = seg.offset;
    Rational alpha = (ell - t) / ell;
    Rational beta = t / ell;
    Rational gamma = t * (ell - t) * (ell - (*this)(seg.a, seg.b)) / (ell * ell);
    for (std::size_t w = 0; w < size_; ++w)
        out[w] = alpha * (*this)(seg.a, w) + beta * (*this)(seg.b, w) + gamma;
    return out;
}

Rational ResistanceTable::between(const GraphPoint& x, const GraphPoint& y) const
{
    check_point(graph_, x);
    check_point(graph_, y);
    if (auto ix = find(x))
        return row(y)[*ix];
    if (auto iy = find(y))
        return row(x)[*iy];
    const auto& px = std::get<InteriorPoint>(x);
    const auto& py = std::get<InteriorPoint>(y);
    Segment sx = segment_of(px);
    Segment sy = segment_of(py);
    if (px.edge == py.edge && sx.a == sy.a && sx.b == sy.b) {
        const Rational& ell = sx.length;
        Rational u = abs(Rational(sx.offset - sy.offset));
        Rational r_ab = (*this)(sx.a, sx.b);
        return u * ((ell - u) * (ell - r_ab) + ell * r_ab) / (ell * ell);
    }
    auto coefficients = [this](const Segment& s) {
        const Rational& ell = s.length;
        const Rational& t = s.offset;
        return std::array<Rational, 3>{(ell - t) / ell, t / ell,
                                       t * (ell - t) * (ell - (*this)(s.a, s.b)) / (ell * ell)};
    };
    auto cx = coefficients(sx);
    auto cy = coefficients(sy);
    auto from_x = [&](std::size_t w) -> Rational { return cx[0] * (*this)(sx.a, w) + cx[1] * (*this)(sx.b, w) + cx[2]; };
    return cy[0] * from_x(sy.a) + cy[1] * from_x(sy.b) + cy[2];
}

QuadraticProfile ResistanceTable::profile(std::span<const Rational> row, std::size_t edge) const
{
    const auto& e = graph_.edges()[edge];
    const Rational& length = e.length;
    const Rational& y1 = row[sample(edge, 0)];
    const Rational& y2 = row[sample(edge, 1)];
    const Rational& y3 = row[sample(edge, 2)];
    Rational step = length / 4;
    Rational a = (y1 - 2 * y2 + y3) / (2 * step * step);
    Rational slope = (y3 - y1) / (2 * step);
    QuadraticProfile q{e.id, length, a, slope - a * length, y2 - slope * length / 2 + a * length * length / 4};

    const std::pair<Rational, std::size_t> checks[3] = {
        {Rational(0), graph_.vertex_index(e.ends[0])},
        {length, graph_.vertex_index(e.ends[1])},
        {length / 8, check_sample(edge)},
    };
    for (const auto& [s, index] : checks)
        if (q(s) != row[index])
            throw Error(ErrorKind::ProfileSampleMismatch,
                        "edge '" + e.id + "' at offset " + to_string(s) + ": quadratic gives " + to_string(q(s))
                            + ", sample is " + to_string(row[index]));
    return q;
}

}  // namespace mgi
