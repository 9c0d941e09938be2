#pragma once

#include "mgi/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace mgi {

using Exponents = std::vector<int>;

// Sparse polynomial in a fixed number of variables with rational
// coefficients. Zero coefficients are never stored.
class Polynomial {
public:
    explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}

    static Polynomial constant(std::size_t variables, const Rational& value);
    static Polynomial variable(std::size_t variables, std::size_t index);

    std::size_t variables() const { return variables_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& c);

    /// Total degree of the highest term; -1 for the zero polynomial.
    int degree() const;
    /// True when every term has total degree `d` (the zero polynomial is
    /// homogeneous of every degree).
    bool is_homogeneous(int d) const;

    Rational operator()(const std::vector<Rational>& point) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& scalar) const;
    bool operator==(const Polynomial& other) const = default;

    /// Leading term in lex order with x1 > x2 > ... .
    std::pair<Exponents, Rational> leading() const;

    /// e.g. "12*x1*x2^2 - x3".
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t variables_;
    std::map<Exponents, Rational> terms_;
};

/// Exponent vectors of all monomials of total degree `degree` in `variables`
/// variables, in lex order with x1 > x2 > ... .
std::vector<Exponents> monomials(std::size_t variables, int degree);

Rational monomial_value(const Exponents& e, const std::vector<Rational>& point);

std::string exponents_key(const Exponents& e);

}  // namespace mgi
