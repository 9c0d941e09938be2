#pragma once

#include "mgi/graph.hpp"
#include "mgi/hyperelliptic.hpp"
#include "mgi/polynomial.hpp"

#include <string>
#include <vector>

namespace mgi {

// The seven stable polarized graphs of genus two. Edge ids are e1, e2, e3
// in the order of the length arguments x1, x2, x3.
//   Trivial  one vertex q=2
//   I    a, b (q=0), three parallel edges
//   II   a, b (q=1), one edge
//   III  v (q=1), one loop
//   IV   a (q=1) --e1-- b (q=0), loop e2 at b
//   V    v (q=0), loops e1, e2
//   VI   a, b (q=0), bridge e1, loop e2 at a, loop e3 at b
enum class Genus2Type { Trivial, I, II, III, IV, V, VI };

const std::vector<Genus2Type>& all_genus2_types();
std::string to_string(Genus2Type tag);
/// "trivial", "I", ..., "VI". Throws Parse.
Genus2Type parse_genus2_type(const std::string& text);
std::size_t arity(Genus2Type tag);

/// Throws ArityMismatch if the number of lengths is wrong and
/// NonPositiveLength for a length <= 0.
PolarizedMetricGraph build(Genus2Type tag, const std::vector<Rational>& lengths);

// phi of the catalog graph as a rational function P/Q of the lengths,
// in lowest terms.
struct CatalogFunction {
    Polynomial numerator;
    Polynomial denominator;
};
CatalogFunction table1_function(Genus2Type tag);

/// The closed form, e.g. (x1+x2+x3)/12 - (5/12) x1x2x3/(x1x2+x2x3+x3x1).
Rational table1_phi(Genus2Type tag, const std::vector<Rational>& lengths);

/// The node classification used for the hyperelliptic identities.
NodeTypeCounts documented_counts(Genus2Type tag, const std::vector<Rational>& lengths);

struct EqualityReport {
    Rational engine;
    Rational expected;
    Rational discrepancy() const { return engine - expected; }
    bool equal() const { return engine == expected; }
};

/// Engine phi of build(tag, lengths) against table1_phi.
EqualityReport check_table1(Genus2Type tag, const std::vector<Rational>& lengths);

// c * pi^power with c rational. Only the operations needed to carry the
// substitution x = 2 pi L through the sunset leading term.
struct PiMonomial {
    Rational coefficient;
    int power = 0;

    PiMonomial operator*(const PiMonomial& other) const;
    PiMonomial operator/(const PiMonomial& other) const;
    /// Throws Precondition when the powers of pi differ.
    PiMonomial operator+(const PiMonomial& other) const;
    PiMonomial operator-(const PiMonomial& other) const;
};

struct SupergravityReport {
    PiMonomial leading_term;  // (pi/6)[sum L - 5 L1L2L3/(L1L2+L2L3+L3L1)]
    Rational table_value;
    bool equal() const { return leading_term.power == 0 && leading_term.coefficient == table_value; }
};

/// Evaluates the sunset leading term with L_i = x_i/(2 pi) and compares it
/// to table1_phi(I, x).
SupergravityReport sunset_supergrav_crosscheck(const std::vector<Rational>& lengths);

}  // namespace mgi
