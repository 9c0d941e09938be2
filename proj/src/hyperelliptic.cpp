#include "mgi/hyperelliptic.hpp"

#include "mgi/errors.hpp"
#include "mgi/invariants.hpp"

namespace mgi {

namespace {

std::size_t xi_size(long h) { return static_cast<std::size_t>((h - 1) / 2 + 1); }
std::size_t delta_size(long h) { return static_cast<std::size_t>(h / 2); }

}  // namespace

NodeTypeCounts NodeTypeCounts::zero(long h)
{
    NodeTypeCounts c;
    c.h = h;
    c.xi.assign(xi_size(h), Rational(0));
    c.delta_i.assign(delta_size(h), Rational(0));
    return c;
}

Rational NodeTypeCounts::total() const
{
    Rational sum = delta0;
    for (const auto& d : delta_i)
        sum += d;
    return sum;
}

void validate_counts(const NodeTypeCounts& c)
{
    if (c.h < 2)
        throw Error(ErrorKind::InconsistentCounts, "h = " + std::to_string(c.h) + " is below 2");
    if (c.xi.size() != xi_size(c.h))
        throw Error(ErrorKind::InconsistentCounts, "xi has " + std::to_string(c.xi.size()) + " entries, genus "
                                                       + std::to_string(c.h) + " needs " + std::to_string(xi_size(c.h)));
    if (c.delta_i.size() != delta_size(c.h))
        throw Error(ErrorKind::InconsistentCounts, "delta_i has " + std::to_string(c.delta_i.size())
                                                       + " entries, genus " + std::to_string(c.h) + " needs "
                                                       + std::to_string(delta_size(c.h)));
    auto non_negative = [](const Rational& v, const std::string& name) {
        if (v < 0)
            throw Error(ErrorKind::InconsistentCounts, name + " = " + to_string(v) + " is negative");
    };
    non_negative(c.xi0_fixed, "xi0_fixed");
    non_negative(c.delta0, "delta0");
    for (std::size_t j = 0; j < c.xi.size(); ++j)
        non_negative(c.xi[j], "xi[" + std::to_string(j) + "]");
    for (std::size_t i = 0; i < c.delta_i.size(); ++i)
        non_negative(c.delta_i[i], "delta_i[" + std::to_string(i + 1) + "]");

    Rational expected = c.xi0_fixed;
    for (const auto& x : c.xi)
        expected += 2 * x;
    if (expected != c.delta0)
        throw Error(ErrorKind::InconsistentCounts,
                    "delta0 = " + to_string(c.delta0) + " but xi0_fixed + 2 sum xi = " + to_string(expected));
}

Rational d_invariant(const NodeTypeCounts& c)
{
    validate_counts(c);
    const long h = c.h;
    Rational d = h * c.xi0_fixed;
    for (std::size_t j = 0; j < c.xi.size(); ++j) {
        const long jj = static_cast<long>(j);
        d += 2 * (jj + 1) * (h - jj) * c.xi[j];
    }
    for (std::size_t k = 0; k < c.delta_i.size(); ++k) {
        const long i = static_cast<long>(k) + 1;
        d += 4 * i * (h - i) * c.delta_i[k];
    }
    return d;
}

Rational psi_explicit(const NodeTypeCounts& c)
{
    validate_counts(c);
    const long h = c.h;
    Rational rhs = (h - 1) * c.delta0;
    for (std::size_t j = 1; j < c.xi.size(); ++j) {
        const long jj = static_cast<long>(j);
        rhs += 6 * jj * (h - 1 - jj) * c.xi[j];
    }
    for (std::size_t k = 0; k < c.delta_i.size(); ++k) {
        const long i = static_cast<long>(k) + 1;
        rhs += (12 * i * (h - i) - (2 * h + 1)) * c.delta_i[k];
    }
    return rhs / (2 * h + 1);
}

Rational combi_rhs(const NodeTypeCounts& c)
{
    validate_counts(c);
    const long h = c.h;
    Rational rhs = (h - 1) * c.delta0;
    for (std::size_t j = 0; j < c.xi.size(); ++j) {
        const long jj = static_cast<long>(j);
        rhs += (6 * (jj + 1) * (h - jj) - 6 * h) * c.xi[j];
    }
    for (std::size_t k = 0; k < c.delta_i.size(); ++k) {
        const long i = static_cast<long>(k) + 1;
        rhs += (12 * i * (h - i) - (2 * h + 1)) * c.delta_i[k];
    }
    return rhs;
}

IdentityReport check_identities(const PotentialField& field, const NodeTypeCounts& counts)
{
    validate_counts(counts);
    const long h = field.genus().h;
    if (h != counts.h)
        throw Error(ErrorKind::GenusMismatch,
                    "graph has genus " + std::to_string(h) + ", counts are for genus " + std::to_string(counts.h));
    IdentityReport r;
    r.h = h;
    r.delta = total_length(field.graph());
    if (r.delta != counts.total())
        throw Error(ErrorKind::LengthMismatch,
                    "graph has total length " + to_string(r.delta) + ", counts total " + to_string(counts.total()));
    r.epsilon = epsilon(field);
    r.phi = phi(field);
    r.psi = psi_from(h, r.epsilon, r.phi);
    r.d = d_invariant(counts);
    r.phi_identity = {(2 * h - 2) * r.phi, 3 * r.d - (2 * h + 1) * (r.delta + r.epsilon)};
    r.psi_identity = {(2 * h + 1) * r.psi, 3 * r.d - (2 * h + 1) * r.delta};
    r.psi_counts = {r.psi, psi_explicit(counts)};
    return r;
}

IdentityReport check_identities(const PolarizedMetricGraph& g, const NodeTypeCounts& counts)
{
    return check_identities(PotentialField(g), counts);
}

NodeTypeCounts counts_from_json(const Json& doc)
{
    if (!doc.is_object())
        throw Error(ErrorKind::Parse, "counts must be a JSON object");
    for (const char* key : {"h", "xi0_fixed", "xi", "delta_i", "delta0"})
        if (!doc.contains(key))
            throw Error(ErrorKind::Parse, std::string("counts lack \"") + key + "\"");
    if (!doc["h"].is_number_integer())
        throw Error(ErrorKind::Parse, "counts: \"h\" must be an integer");
    if (!doc["xi"].is_array() || !doc["delta_i"].is_array())
        throw Error(ErrorKind::Parse, "counts: \"xi\" and \"delta_i\" must be arrays");
    NodeTypeCounts c;
    c.h = doc["h"].get<long>();
    c.xi0_fixed = rational_from_json(doc["xi0_fixed"], "xi0_fixed");
    for (const auto& x : doc["xi"])
        c.xi.push_back(rational_from_json(x, "xi entry"));
    for (const auto& d : doc["delta_i"])
        c.delta_i.push_back(rational_from_json(d, "delta_i entry"));
    c.delta0 = rational_from_json(doc["delta0"], "delta0");
    validate_counts(c);
    return c;
}

Json counts_to_json(const NodeTypeCounts& c)
{
    Json doc;
    doc["h"] = c.h;
    doc["xi0_fixed"] = to_string(c.xi0_fixed);
    doc["xi"] = Json::array();
    for (const auto& x : c.xi)
        doc["xi"].push_back(to_string(x));
    doc["delta_i"] = Json::array();
    for (const auto& d : c.delta_i)
        doc["delta_i"].push_back(to_string(d));
    doc["delta0"] = to_string(c.delta0);
    return doc;
}

namespace {

Json side_json(const IdentitySide& s)
{
    return Json{{"lhs", to_string(s.lhs)},
                {"rhs", to_string(s.rhs)},
                {"discrepancy", to_string(s.discrepancy())},
                {"status", s.holds() ? "exact" : "mismatch"}};
}

}  // namespace

Json identity_report_to_json(const IdentityReport& r, int digits)
{
    Json out;
    out["h"] = r.h;
    out["delta"] = to_string(r.delta);
    out["epsilon"] = to_string(r.epsilon);
    out["phi"] = to_string(r.phi);
    out["psi"] = to_string(r.psi);
    out["psi_decimal"] = to_decimal(r.psi, digits);
    out["d"] = to_string(r.d);
    out["phi_identity"] = side_json(r.phi_identity);
    out["psi_identity"] = side_json(r.psi_identity);
    out["psi_from_counts"] = side_json(r.psi_counts);
    out["holds"] = r.holds();
    return out;
}

}  // namespace mgi
