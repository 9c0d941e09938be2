#pragma once

#include "mgi/graph_io.hpp"
#include "mgi/potential.hpp"

#include <vector>

namespace mgi {

// Node-type counts of a hyperelliptic polarized graph. Counts are lengths,
// so they may be rational: a chain of unit edges counts one per edge.
//   xi0_fixed  nodes of type 0 fixed by the involution (xi'_0)
//   xi[j]      j = 0..floor((h-1)/2), pairs of type-j nodes swapped by it
//   delta_i[i-1]  i = 1..floor(h/2), separating nodes of type i
//   delta0     all non-separating nodes, = xi'_0 + 2 sum xi_j
struct NodeTypeCounts {
    long h = 2;
    Rational xi0_fixed;
    std::vector<Rational> xi;
    std::vector<Rational> delta_i;
    Rational delta0;

    /// All-zero counts of the right shape for genus h.
    static NodeTypeCounts zero(long h);

    /// delta0 + sum delta_i.
    Rational total() const;
};

/// Shape, sign and delta0 checks. Throws InconsistentCounts.
void validate_counts(const NodeTypeCounts& counts);

/// d = h xi'_0 + sum 2(j+1)(h-j) xi_j + sum 4i(h-i) delta_i.
Rational d_invariant(const NodeTypeCounts& counts);

/// psi from counts: [(h-1) delta0 + sum_{j>=1} 6j(h-1-j) xi_j
///                   + sum (12i(h-i) - (2h+1)) delta_i] / (2h+1).
Rational psi_explicit(const NodeTypeCounts& counts);

/// (h-1) delta0 + sum_{j>=0} (6(j+1)(h-j) - 6h) xi_j
///   + sum (12i(h-i) - (2h+1)) delta_i, which equals 3d - (2h+1) delta.
Rational combi_rhs(const NodeTypeCounts& counts);

struct IdentitySide {
    Rational lhs, rhs;
    Rational discrepancy() const { return lhs - rhs; }
    bool holds() const { return lhs == rhs; }
};

struct IdentityReport {
    long h = 0;
    Rational delta, epsilon, phi, psi, d;
    IdentitySide phi_identity;  // (2h-2) phi = 3d - (2h+1)(delta + eps)
    IdentitySide psi_identity;  // (2h+1) psi = 3d - (2h+1) delta
    IdentitySide psi_counts;    // psi = psi_explicit(counts)

    bool holds() const { return phi_identity.holds() && psi_identity.holds() && psi_counts.holds(); }
};

/// Throws GenusMismatch if h differs and LengthMismatch if the counts'
/// total differs from the total length of g.
IdentityReport check_identities(const PolarizedMetricGraph& g, const NodeTypeCounts& counts);
IdentityReport check_identities(const PotentialField& field, const NodeTypeCounts& counts);

NodeTypeCounts counts_from_json(const Json& doc);
Json counts_to_json(const NodeTypeCounts& counts);
Json identity_report_to_json(const IdentityReport& r, int digits = 12);

}  // namespace mgi
