#include "mgi/potential.hpp"

#include "mgi/errors.hpp"

namespace mgi {

const char* to_string(MeasureKind kind)
{
    switch (kind) {
    case MeasureKind::Canonical: return "canonical";
    case MeasureKind::Admissible: return "admissible";
    case MeasureKind::DivisorCurrent: return "divisor-current";
    }
    return "unknown";
}

Rational Measure::atom(const std::string& vertex) const
{
    auto it = atoms.find(vertex);
    return it == atoms.end() ? Rational(0) : it->second;
}

Rational Measure::density(const std::string& edge) const
{
    auto it = densities.find(edge);
    return it == densities.end() ? Rational(0) : it->second;
}

Rational Measure::total_mass(const PolarizedMetricGraph& g) const
{
    Rational mass = 0;
    for (const auto& [_, a] : atoms)
        mass += a;
    for (const auto& [edge, d] : densities)
        mass += d * g.edge(edge).length;
    return mass;
}

Rational EdgePolynomial::operator()(const Rational& s) const
{
    Rational value = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        value = value * s + *it;
    return value;
}

Rational EdgePolynomial::integral() const
{
    Rational value = 0;
    for (std::size_t k = coefficients.size(); k-- > 0;)
        value = value * length + coefficients[k] / static_cast<long>(k + 1);
    return value * length;
}

int EdgePolynomial::degree() const
{
    for (std::size_t k = coefficients.size(); k-- > 0;)
        if (coefficients[k] != 0)
            return static_cast<int>(k);
    return -1;
}

namespace {

Measure canonical_from(const PolarizedMetricGraph& g, const std::vector<ResistanceValue>& excised)
{
    Measure mu{MeasureKind::Canonical, {}, {}};
    Divisor k = canonical_divisor(g);
    for (const auto& v : g.vertices())
        mu.atoms[v.id] = -k.at(v.id) / 2;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        mu.densities[e.id] = excised[i].is_infinite() ? Rational(0) : Rational(1 / (e.length + excised[i].value()));
    }
    Rational mass = mu.total_mass(g);
    if (mass != 1)
        throw Error(ErrorKind::CrosscheckFailure, "canonical measure has mass " + to_string(mass));
    return mu;
}

Measure admissible_from(const PolarizedMetricGraph& g, const Measure& can, long h)
{
    Divisor kq = polarized_divisor(g);
    Measure defined{MeasureKind::Admissible, {}, {}};
    for (const auto& v : g.vertices())
        defined.atoms[v.id] = (kq.at(v.id) + 2 * can.atom(v.id)) / (2 * h);
    for (const auto& e : g.edges())
        defined.densities[e.id] = 2 * can.density(e.id) / (2 * h);

    Measure simplified{MeasureKind::Admissible, {}, {}};
    for (const auto& v : g.vertices())
        simplified.atoms[v.id] = Rational(v.q) / h;
    for (const auto& e : g.edges())
        simplified.densities[e.id] = can.density(e.id) / h;

    for (const auto& [id, a] : defined.atoms)
        if (a != simplified.atom(id))
            throw Error(ErrorKind::CrosscheckFailure, "admissible atom at '" + id + "': " + to_string(a) + " vs "
                                                          + to_string(simplified.atom(id)));
    for (const auto& [id, d] : defined.densities)
        if (d != simplified.density(id))
            throw Error(ErrorKind::CrosscheckFailure, "admissible density on '" + id + "': " + to_string(d) + " vs "
                                                          + to_string(simplified.density(id)));
    Rational mass = defined.total_mass(g);
    if (mass != 1)
        throw Error(ErrorKind::CrosscheckFailure, "admissible measure has mass " + to_string(mass));
    return defined;
}

std::vector<ResistanceValue> all_excised(const PolarizedMetricGraph& g)
{
    std::vector<ResistanceValue> out;
    for (const auto& e : g.edges())
        out.push_back(excised_edge_resistance(g, e.id));
    return out;
}

std::vector<ResistanceValue> all_excised(const ResistanceTable& table)
{
    std::vector<ResistanceValue> out;
    for (std::size_t i = 0; i < table.graph().edges().size(); ++i)
        out.push_back(table.excised(i));
    return out;
}

}  // namespace

Measure canonical_measure(const PolarizedMetricGraph& g)
{
    // mu_can does not involve the polarization, so genus zero is allowed.
    auto report = validate(g);
    if (!report.connected || !report.positive_lengths)
        require_valid(g);
    return canonical_from(g, all_excised(g));
}

Measure admissible_measure(const PolarizedMetricGraph& g)
{
    require_valid(g);
    return admissible_from(g, canonical_from(g, all_excised(g)), genus(g).h);
}

Measure divisor_current(const PolarizedMetricGraph& g)
{
    Measure m{MeasureKind::DivisorCurrent, {}, {}};
    for (const auto& [id, c] : polarized_divisor(g).coefficients)
        m.atoms[id] = c;
    return m;
}

namespace {

const PolarizedMetricGraph& validated(const PolarizedMetricGraph& g)
{
    require_valid(g);
    return g;
}

}  // namespace

PotentialField::PotentialField(const PolarizedMetricGraph& g)
    : table_(validated(g)), genus_(mgi::genus(g)), canonical_(canonical_from(g, all_excised(table_))),
      admissible_(admissible_from(g, canonical_, genus_.h))
{
    const auto& graph = table_.graph();
    const auto n = graph.vertices().size();
    const auto edge_count = graph.edges().size();

    // f at every table node; sample nodes sit on their own edge.
    node_potential_.resize(table_.size());
    for (std::size_t v = 0; v < n; ++v)
        node_potential_[v] = potential_from_row(table_.node_row(v), std::nullopt);
    for (std::size_t e = 0; e < edge_count; ++e) {
        const Rational& length = graph.edges()[e].length;
        const Rational positions[4] = {length / 8, length / 4, length / 2, 3 * length / 4};
        const std::size_t nodes[4] = {table_.check_sample(e), table_.sample(e, 0), table_.sample(e, 1),
                                      table_.sample(e, 2)};
        for (int k = 0; k < 4; ++k)
            node_potential_[nodes[k]] = potential_from_row(table_.node_row(nodes[k]), SelfEdge{e, positions[k]});
    }

    // Profiles: the off-edge part is quadratic and interpolated through the
    // three samples; the on-edge part is added in closed form.
    profiles_.reserve(edge_count);
    for (std::size_t e = 0; e < edge_count; ++e) {
        const auto& edge = graph.edges()[e];
        const Rational& length = edge.length;
        std::vector<Rational> off_edge(table_.size());
        for (int k = 0; k < 3; ++k) {
            Rational s = length * (k + 1) / 4;
            off_edge[table_.sample(e, k)] = node_potential_[table_.sample(e, k)] - self_term(e, s);
        }
        Rational step = length / 4;
        const Rational& y1 = off_edge[table_.sample(e, 0)];
        const Rational& y2 = off_edge[table_.sample(e, 1)];
        const Rational& y3 = off_edge[table_.sample(e, 2)];
        Rational a = (y1 - 2 * y2 + y3) / (2 * step * step);
        Rational slope = (y3 - y1) / (2 * step);
        EdgePolynomial poly{edge.id, length,
                            {y2 - slope * length / 2 + a * length * length / 4, slope - a * length, a, Rational(0)}};

        // density * ((L+r) A(s) - B(s)) / (L+r) with A(s) = s^2 - L s + L^2/2
        // and B(s) = L s^2 - L^2 s + L^3/3; A(s) alone on a bridge.
        Rational d = admissible_.density(edge.id);
        if (d != 0) {
            const auto& r = table_.excised(e);
            Rational a0 = length * length / 2, a1 = -length, a2 = 1;
            if (r.is_infinite()) {
                poly.coefficients[0] += d * a0;
                poly.coefficients[1] += d * a1;
                poly.coefficients[2] += d * a2;
            } else {
                Rational total = length + r.value();
                Rational b0 = length * length * length / 3, b1 = -length * length, b2 = length, b3 = 0;
                poly.coefficients[0] += d * (total * a0 - b0) / total;
                poly.coefficients[1] += d * (total * a1 - b1) / total;
                poly.coefficients[2] += d * (total * a2 - b2) / total;
                poly.coefficients[3] += d * (0 - b3) / total;
            }
        }

        const std::pair<Rational, std::size_t> checks[3] = {
            {Rational(0), graph.vertex_index(edge.ends[0])},
            {length, graph.vertex_index(edge.ends[1])},
            {length / 8, table_.check_sample(e)},
        };
        for (const auto& [s, node] : checks)
            if (poly(s) != node_potential_[node])
                throw Error(ErrorKind::ProfileSampleMismatch, "potential on '" + edge.id + "' at offset "
                                                                  + to_string(s) + ": profile " + to_string(poly(s))
                                                                  + ", direct " + to_string(node_potential_[node]));
        profiles_.push_back(std::move(poly));
    }

    Rational pairing = 0;
    for (std::size_t v = 0; v < n; ++v)
        pairing += admissible_.atom(graph.vertices()[v].id) * node_potential_[v];
    for (std::size_t e = 0; e < edge_count; ++e)
        pairing += admissible_.density(graph.edges()[e].id) * profiles_[e].integral();
    capacity_ = pairing / 2;
}

const ResistanceValue& PotentialField::excised(const std::string& edge) const
{
    return table_.excised(graph().edge_index(edge));
}

Rational PotentialField::self_term(std::size_t edge, const Rational& s) const
{
    const auto& e = graph().edges()[edge];
    Rational d = admissible_.density(e.id);
    if (d == 0)
        return 0;
    const Rational& length = e.length;
    Rational t = length - s;
    Rational a = (s * s + t * t) / 2;
    const auto& r = table_.excised(edge);
    if (r.is_infinite())
        return d * a;
    Rational b = (s * s * s + t * t * t) / 3;
    Rational total = length + r.value();
    return d * (total * a - b) / total;
}

Rational PotentialField::potential_from_row(std::span<const Rational> row, const std::optional<SelfEdge>& self) const
{
    const auto& graph = table_.graph();
    Rational f = 0;
    for (std::size_t v = 0; v < graph.vertices().size(); ++v) {
        const Rational& a = admissible_.atom(graph.vertices()[v].id);
        if (a != 0)
            f += a * row[v];
    }
    for (std::size_t e = 0; e < graph.edges().size(); ++e) {
        Rational d = admissible_.density(graph.edges()[e].id);
        if (d == 0)
            continue;
        if (self && self->edge == e)
            f += self_term(e, self->offset);
        else
            f += d * table_.profile(row, e).integral();
    }
    return f;
}

Rational PotentialField::potential(const GraphPoint& x) const
{
    check_point(graph(), x);
    if (auto node = table_.find(x))
        return node_potential_[*node];
    const auto& p = std::get<InteriorPoint>(x);
    auto row = table_.row(x);
    return potential_from_row(row, SelfEdge{graph().edge_index(p.edge), p.offset});
}

const EdgePolynomial& PotentialField::profile(const std::string& edge) const
{
    return profiles_[graph().edge_index(edge)];
}

Rational PotentialField::green(const GraphPoint& x, const GraphPoint& y) const
{
    return (potential(x) + potential(y) - resistance(x, y)) / 2 - capacity_;
}

Rational potential_f(const PolarizedMetricGraph& g, const GraphPoint& x)
{
    return PotentialField(g).potential(x);
}

EdgePolynomial potential_profile(const PolarizedMetricGraph& g, const std::string& edge)
{
    return PotentialField(g).profile(edge);
}

Rational capacity_c(const PolarizedMetricGraph& g)
{
    return PotentialField(g).capacity();
}

Rational green(const PolarizedMetricGraph& g, const GraphPoint& x, const GraphPoint& y)
{
    return PotentialField(g).green(x, y);
}

}  // namespace mgi
