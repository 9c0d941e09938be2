#include "mgi/polynomial.hpp"

#include "mgi/errors.hpp"

#include <algorithm>
#include <numeric>

namespace mgi {

Polynomial Polynomial::constant(std::size_t variables, const Rational& value)
{
    Polynomial p(variables);
    p.add_term(Exponents(variables, 0), value);
    return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index)
{
    Polynomial p(variables);
    Exponents e(variables, 0);
    e.at(index) = 1;
    p.add_term(e, 1);
    return p;
}

Rational Polynomial::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c)
{
    if (e.size() != variables_)
        throw Error(ErrorKind::ArityMismatch,
                    "monomial with " + std::to_string(e.size()) + " exponents in " + std::to_string(variables_)
                        + " variables");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int Polynomial::degree() const
{
    int d = -1;
    for (const auto& [e, _] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool Polynomial::is_homogeneous(int d) const
{
    for (const auto& [e, _] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d)
            return false;
    return true;
}

Rational monomial_value(const Exponents& e, const std::vector<Rational>& point)
{
    Rational value = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k)
            value *= point[i];
    return value;
}

Rational Polynomial::operator()(const std::vector<Rational>& point) const
{
    if (point.size() != variables_)
        throw Error(ErrorKind::ArityMismatch,
                    std::to_string(point.size()) + " values for " + std::to_string(variables_) + " variables");
    Rational value = 0;
    for (const auto& [e, c] : terms_)
        value += c * monomial_value(e, point);
    return value;
}

Polynomial Polynomial::operator+(const Polynomial& other) const
{
    Polynomial out = *this;
    for (const auto& [e, c] : other.terms_)
        out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const
{
    return *this + other * Rational(-1);
}

Polynomial Polynomial::operator*(const Polynomial& other) const
{
    if (variables_ != other.variables_)
        throw Error(ErrorKind::ArityMismatch, "product of polynomials in different rings");
    Polynomial out(variables_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            Exponents e(variables_);
            for (std::size_t i = 0; i < variables_; ++i)
                e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const
{
    Polynomial out(variables_);
    for (const auto& [e, c] : terms_)
        out.add_term(e, c * scalar);
    return out;
}

std::pair<Exponents, Rational> Polynomial::leading() const
{
    if (terms_.empty())
        throw Error(ErrorKind::Precondition, "zero polynomial has no leading term");
    return *terms_.rbegin();
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!monomial.empty())
                monomial += "*";
            monomial += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
            if (e[i] > 1)
                monomial += "^" + std::to_string(e[i]);
        }
        Rational magnitude = abs(c);
        if (out.empty())
            out = c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (monomial.empty())
            out += mgi::to_string(magnitude);
        else if (magnitude == 1)
            out += monomial;
        else
            out += mgi::to_string(magnitude) + "*" + monomial;
    }
    return out;
}

namespace {

void fill(std::size_t index, int remaining, Exponents& current, std::vector<Exponents>& out)
{
    if (index + 1 == current.size()) {
        current[index] = remaining;
        out.push_back(current);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        current[index] = k;
        fill(index + 1, remaining - k, current, out);
    }
}

}  // namespace

std::vector<Exponents> monomials(std::size_t variables, int degree)
{
    std::vector<Exponents> out;
    if (degree < 0)
        return out;
    if (variables == 0) {
        if (degree == 0)
            out.emplace_back();
        return out;
    }
    Exponents current(variables, 0);
    fill(0, degree, current, out);
    return out;
}

std::string exponents_key(const Exponents& e)
{
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i)
            key += ",";
        key += std::to_string(e[i]);
    }
    return key;
}

}  // namespace mgi
