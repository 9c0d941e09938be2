#pragma once

#include "mgi/graph_io.hpp"
#include "mgi/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mgi {

// P/Q in the edge lengths of a graph family, variables in edge order.
struct MultivariateRationalFunction {
    std::vector<std::string> variables;
    Polynomial numerator;
    Polynomial denominator;
};

/// Throws DenominatorZero.
Rational evaluate(const MultivariateRationalFunction& f, const std::vector<Rational>& lengths);

/// P Q' - P' Q is the zero polynomial.
bool same_function(const Polynomial& p, const Polynomial& q, const Polynomial& p2, const Polynomial& q2);

/// First Symanzik polynomial: sum over spanning trees T of the product of
/// the edge variables not in T.
Polynomial symanzik(const PolarizedMetricGraph& g);

struct FitOptions {
    std::uint64_t seed = 1;
    int min_length = 1;
    int max_length = 97;
    std::size_t holdout = 10;
    /// Samples per unknown coefficient; at least 2.
    std::size_t oversampling = 2;
};

struct HoldoutCheck {
    std::vector<Rational> lengths;
    Rational engine;
    Rational fitted;
};

struct FitResult {
    MultivariateRationalFunction function;  // degrees 2 b1 + 1 and 2 b1
    MultivariateRationalFunction reduced;   // lowest degrees that fit
    long b1 = 0;
    int reduced_degree = 0;  // degree of the reduced denominator
    std::size_t kernel_dimension = 0;
    bool symanzik_normalized = false;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<HoldoutCheck> holdout;
};

// Fits phi on the family of metric graphs with the combinatorics and
// polarization of `family` (its lengths are ignored). Samples are random
// integer length vectors; phi at each is exact.
//
// The kernel of the linear system for the full degrees (2b1+1, 2b1) contains
// M*(P0, Q0) for every form M of the complementary degree, where P0/Q0 is
// the reduced fit. The fit is accepted when the kernel is exactly that space.
// The representative with Q = const * U^2, U the Symanzik polynomial, is
// returned when it exists; otherwise the first kernel basis vector.
//
// Throws RankDeficient or ValidationFailure.
FitResult fit_phi(const PolarizedMetricGraph& family, const FitOptions& options = {});

/// Integer coefficients with gcd one; lex-leading denominator term positive.
void normalize(Polynomial& p, Polynomial& q);

Json polynomial_to_json(const Polynomial& p);
Json fit_to_json(const FitResult& fit);

}  // namespace mgi
