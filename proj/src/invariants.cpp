#include "mgi/invariants.hpp"

#include "mgi/errors.hpp"

namespace mgi {

namespace {

Measure combine(const PolarizedMetricGraph& g, const Rational& mu_weight, const Measure& mu, const Rational& kq_weight)
{
    Divisor kq = polarized_divisor(g);
    Measure w{MeasureKind::Admissible, {}, {}};
    for (const auto& v : g.vertices())
        w.atoms[v.id] = mu_weight * mu.atom(v.id) + kq_weight * kq.at(v.id);
    for (const auto& e : g.edges())
        w.densities[e.id] = mu_weight * mu.density(e.id);
    return w;
}

Rational kq_pairing(const PotentialField& field)
{
    Divisor kq = polarized_divisor(field.graph());
    Rational sum = 0;
    for (const auto& v : field.graph().vertices())
        sum += kq.at(v.id) * field.potential(VertexPoint{v.id});
    return sum;
}

}  // namespace

Rational diagonal_integral(const PotentialField& field, const Measure& weight)
{
    const auto& g = field.graph();
    const Rational& c = field.capacity();
    Rational total = 0;
    for (const auto& v : g.vertices()) {
        Rational w = weight.atom(v.id);
        if (w != 0)
            total += w * (field.potential(VertexPoint{v.id}) - c);
    }
    for (const auto& e : g.edges()) {
        Rational w = weight.density(e.id);
        if (w != 0)
            total += w * (field.profile(e.id).integral() - c * e.length);
    }
    return total;
}

Rational epsilon(const PotentialField& field)
{
    const auto& g = field.graph();
    const long h = field.genus().h;
    Rational primary = diagonal_integral(field, combine(g, Rational(2 * h - 2), field.admissible(), Rational(1)));
    Rational secondary = kq_pairing(field);
    if (primary != secondary)
        throw Error(ErrorKind::CrosscheckFailure,
                    "epsilon: integral gives " + to_string(primary) + ", K_q pairing gives " + to_string(secondary));
    return primary;
}

Rational phi(const PotentialField& field)
{
    const auto& g = field.graph();
    const long h = field.genus().h;
    Rational delta = total_length(g);
    Rational primary =
        -delta / 4 + diagonal_integral(field, combine(g, Rational(10 * h + 2), field.admissible(), Rational(-1))) / 4;
    Rational secondary = -delta / 4 + 3 * h * field.capacity() - kq_pairing(field) / 4;
    if (primary != secondary)
        throw Error(ErrorKind::CrosscheckFailure,
                    "phi: integral gives " + to_string(primary) + ", reduced form gives " + to_string(secondary));
    return primary;
}

Rational psi_from(long h, const Rational& epsilon, const Rational& phi)
{
    return epsilon + Rational(2 * h - 2) / (2 * h + 1) * phi;
}

Rational psi(const PotentialField& field)
{
    return psi_from(field.genus().h, epsilon(field), phi(field));
}

Rational epsilon(const PolarizedMetricGraph& g) { return epsilon(PotentialField(g)); }
Rational phi(const PolarizedMetricGraph& g) { return phi(PotentialField(g)); }
Rational psi(const PolarizedMetricGraph& g) { return psi(PotentialField(g)); }

InvariantReport report(const PotentialField& field)
{
    const auto& g = field.graph();
    InvariantReport r;
    r.h = field.genus().h;
    r.b1 = field.genus().b1;
    r.delta = total_length(g);
    r.capacity = field.capacity();
    for (const auto& e : g.edges())
        r.excised.emplace_back(e.id, field.excised(e.id));
    r.canonical = field.canonical();
    r.admissible = field.admissible();
    // The field's constructor throws unless both forms of mu agree and all
    // masses are exactly one.
    r.measures_agree = true;
    r.epsilon = epsilon(field);
    r.epsilon_paths_agree = true;
    r.phi = phi(field);
    r.phi_paths_agree = true;
    r.psi = psi_from(r.h, r.epsilon, r.phi);
    r.stable = validate(g).stable;
    return r;
}

InvariantReport report(const PolarizedMetricGraph& g)
{
    return report(PotentialField(g));
}

namespace {

Json exact(const Rational& value, int digits)
{
    return Json{{"exact", to_string(value)}, {"decimal", to_decimal(value, digits)}};
}

}  // namespace

Json measure_to_json(const Measure& m, int digits)
{
    Json out;
    out["kind"] = to_string(m.kind);
    out["atoms"] = Json::object();
    for (const auto& [id, a] : m.atoms)
        out["atoms"][id] = exact(a, digits);
    out["densities"] = Json::object();
    for (const auto& [id, d] : m.densities)
        out["densities"][id] = exact(d, digits);
    return out;
}

Json report_to_json(const InvariantReport& r, int digits)
{
    Json out;
    out["h"] = r.h;
    out["b1"] = r.b1;
    out["stable"] = r.stable;
    out["delta"] = exact(r.delta, digits);
    out["epsilon"] = exact(r.epsilon, digits);
    out["phi"] = exact(r.phi, digits);
    out["psi"] = exact(r.psi, digits);
    out["capacity"] = exact(r.capacity, digits);
    out["edge_resistance"] = Json::object();
    for (const auto& [id, value] : r.excised)
        out["edge_resistance"][id] = value.to_string();
    out["measures"] = {{"canonical", measure_to_json(r.canonical, digits)},
                       {"admissible", measure_to_json(r.admissible, digits)}};
    out["crosschecks"] = {{"epsilon_paths", r.epsilon_paths_agree},
                          {"phi_paths", r.phi_paths_agree},
                          {"admissible_forms", r.measures_agree}};
    return out;
}

}  // namespace mgi
