#include "mgi/genus2.hpp"

#include "mgi/errors.hpp"
#include "mgi/invariants.hpp"

namespace mgi {

const std::vector<Genus2Type>& all_genus2_types()
{
    static const std::vector<Genus2Type> types = {Genus2Type::Trivial, Genus2Type::I,  Genus2Type::II, Genus2Type::III,
                                                  Genus2Type::IV,      Genus2Type::V, Genus2Type::VI};
    return types;
}

std::string to_string(Genus2Type tag)
{
    switch (tag) {
    case Genus2Type::Trivial: return "trivial";
    case Genus2Type::I: return "I";
    case Genus2Type::II: return "II";
    case Genus2Type::III: return "III";
    case Genus2Type::IV: return "IV";
    case Genus2Type::V: return "V";
    case Genus2Type::VI: return "VI";
    }
    return "?";
}

Genus2Type parse_genus2_type(const std::string& text)
{
    for (auto tag : all_genus2_types())
        if (to_string(tag) == text)
            return tag;
    throw Error(ErrorKind::Parse, "unknown genus-two type '" + text + "' (expected trivial, I, II, III, IV, V, VI)");
}

std::size_t arity(Genus2Type tag)
{
    switch (tag) {
    case Genus2Type::Trivial: return 0;
    case Genus2Type::I: return 3;
    case Genus2Type::II: return 1;
    case Genus2Type::III: return 1;
    case Genus2Type::IV: return 2;
    case Genus2Type::V: return 2;
    case Genus2Type::VI: return 3;
    }
    return 0;
}

namespace {

void require_arity(Genus2Type tag, const std::vector<Rational>& lengths)
{
    if (lengths.size() != arity(tag))
        throw Error(ErrorKind::ArityMismatch, "type " + to_string(tag) + " takes " + std::to_string(arity(tag))
                                                  + " lengths, got " + std::to_string(lengths.size()));
}

}  // namespace

PolarizedMetricGraph build(Genus2Type tag, const std::vector<Rational>& x)
{
    require_arity(tag, x);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] <= 0)
            throw Error(ErrorKind::NonPositiveLength, "x" + std::to_string(i + 1) + " = " + to_string(x[i]));
    switch (tag) {
    case Genus2Type::Trivial: return PolarizedMetricGraph({{"v", 2}}, {});
    case Genus2Type::I:
        return PolarizedMetricGraph({{"a", 0}, {"b", 0}},
                                    {{"e1", {"a", "b"}, x[0]}, {"e2", {"a", "b"}, x[1]}, {"e3", {"a", "b"}, x[2]}});
    case Genus2Type::II: return PolarizedMetricGraph({{"a", 1}, {"b", 1}}, {{"e1", {"a", "b"}, x[0]}});
    case Genus2Type::III: return PolarizedMetricGraph({{"v", 1}}, {{"e1", {"v", "v"}, x[0]}});
    case Genus2Type::IV:
        return PolarizedMetricGraph({{"a", 1}, {"b", 0}}, {{"e1", {"a", "b"}, x[0]}, {"e2", {"b", "b"}, x[1]}});
    case Genus2Type::V:
        return PolarizedMetricGraph({{"v", 0}}, {{"e1", {"v", "v"}, x[0]}, {"e2", {"v", "v"}, x[1]}});
    case Genus2Type::VI:
        return PolarizedMetricGraph({{"a", 0}, {"b", 0}},
                                    {{"e1", {"a", "b"}, x[0]}, {"e2", {"a", "a"}, x[1]}, {"e3", {"b", "b"}, x[2]}});
    }
    throw Error(ErrorKind::Precondition, "unreachable genus-two type");
}

CatalogFunction table1_function(Genus2Type tag)
{
    const std::size_t r = arity(tag);
    auto x = [r](std::size_t i) { return Polynomial::variable(r, i); };
    auto k = [r](const Rational& c) { return Polynomial::constant(r, c); };
    switch (tag) {
    case Genus2Type::Trivial: return {Polynomial(0), k(1)};
    case Genus2Type::I: {
        // (s1 s2 - 5 s3) / (12 s2) with s_k the elementary symmetric polynomials
        Polynomial s1 = x(0) + x(1) + x(2);
        Polynomial s2 = x(0) * x(1) + x(1) * x(2) + x(2) * x(0);
        Polynomial s3 = x(0) * x(1) * x(2);
        return {s1 * s2 - s3 * Rational(5), s2 * Rational(12)};
    }
    case Genus2Type::II: return {x(0), k(1)};
    case Genus2Type::III: return {x(0), k(12)};
    case Genus2Type::IV: return {x(0) * Rational(12) + x(1), k(12)};
    case Genus2Type::V: return {x(0) + x(1), k(12)};
    case Genus2Type::VI: return {x(0) * Rational(12) + x(1) + x(2), k(12)};
    }
    throw Error(ErrorKind::Precondition, "unreachable genus-two type");
}

Rational table1_phi(Genus2Type tag, const std::vector<Rational>& x)
{
    require_arity(tag, x);
    switch (tag) {
    case Genus2Type::Trivial: return 0;
    case Genus2Type::I: {
        Rational sum = x[0] + x[1] + x[2];
        Rational pairs = x[0] * x[1] + x[1] * x[2] + x[2] * x[0];
        return sum / 12 - Rational(5) / 12 * x[0] * x[1] * x[2] / pairs;
    }
    case Genus2Type::II: return x[0];
    case Genus2Type::III: return x[0] / 12;
    case Genus2Type::IV: return x[0] + x[1] / 12;
    case Genus2Type::V: return (x[0] + x[1]) / 12;
    case Genus2Type::VI: return x[0] + (x[1] + x[2]) / 12;
    }
    throw Error(ErrorKind::Precondition, "unreachable genus-two type");
}

NodeTypeCounts documented_counts(Genus2Type tag, const std::vector<Rational>& x)
{
    require_arity(tag, x);
    NodeTypeCounts c = NodeTypeCounts::zero(2);
    switch (tag) {
    case Genus2Type::Trivial: break;
    case Genus2Type::I: c.xi0_fixed = x[0] + x[1] + x[2]; break;
    case Genus2Type::II: c.delta_i[0] = x[0]; break;
    case Genus2Type::III: c.xi0_fixed = x[0]; break;
    case Genus2Type::IV:
        c.delta_i[0] = x[0];
        c.xi0_fixed = x[1];
        break;
    case Genus2Type::V: c.xi0_fixed = x[0] + x[1]; break;
    case Genus2Type::VI:
        c.delta_i[0] = x[0];
        c.xi0_fixed = x[1] + x[2];
        break;
    }
    c.delta0 = c.xi0_fixed;
    for (const auto& xi : c.xi)
        c.delta0 += 2 * xi;
    return c;
}

EqualityReport check_table1(Genus2Type tag, const std::vector<Rational>& lengths)
{
    return {phi(build(tag, lengths)), table1_phi(tag, lengths)};
}

PiMonomial PiMonomial::operator*(const PiMonomial& other) const
{
    return {coefficient * other.coefficient, power + other.power};
}

PiMonomial PiMonomial::operator/(const PiMonomial& other) const
{
    if (other.coefficient == 0)
        throw Error(ErrorKind::DenominatorZero, "division by zero multiple of a power of pi");
    return {coefficient / other.coefficient, power - other.power};
}

PiMonomial PiMonomial::operator+(const PiMonomial& other) const
{
    if (coefficient == 0)
        return other;
    if (other.coefficient == 0)
        return *this;
    if (power != other.power)
        throw Error(ErrorKind::Precondition, "adding pi^" + std::to_string(power) + " and pi^"
                                                 + std::to_string(other.power) + " terms");
    return {coefficient + other.coefficient, power};
}

PiMonomial PiMonomial::operator-(const PiMonomial& other) const
{
    return *this + PiMonomial{-other.coefficient, other.power};
}

SupergravityReport sunset_supergrav_crosscheck(const std::vector<Rational>& x)
{
    require_arity(Genus2Type::I, x);
    const PiMonomial two_pi{2, 1};
    std::vector<PiMonomial> l;
    for (const auto& xi : x)
        l.push_back(PiMonomial{xi, 0} / two_pi);
    PiMonomial sum = l[0] + l[1] + l[2];
    PiMonomial pairs = l[0] * l[1] + l[1] * l[2] + l[2] * l[0];
    PiMonomial triple = l[0] * l[1] * l[2];
    PiMonomial bracket = sum - PiMonomial{5, 0} * triple / pairs;
    PiMonomial leading = PiMonomial{Rational(1) / 6, 1} * bracket;
    return {leading, table1_phi(Genus2Type::I, x)};
}

}  // namespace mgi
