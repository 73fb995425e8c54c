#pragma once

#include "wakimoto/liealg.hpp"
#include "wakimoto/poly.hpp"

#include <vector>

namespace wakimoto {

// Polynomial vector field sum_beta comp[beta] d/dy_beta in the homogeneous
// coordinates y_alpha of the big cell; polynomials live in npos variables.
struct PolyVectorField {
    std::vector<Poly> comp;

    bool operator==(const PolyVectorField& o) const { return comp == o.comp; }
};

struct BigCellRealization {
    std::vector<PolyVectorField> images; // one per basis element of g
    std::vector<Rat> scalings;           // coordinate scalings applied
};

// Action of g on functions on the big cell through u = exp(sum y_alpha
// e_alpha): differentiate exp(-s x) u at s = 0 through the Gauss
// factorization, all in exact arithmetic with s nilpotent. Coordinates are
// rescaled afterwards so every e_alpha leads with coefficient exactly 1.
BigCellRealization compute_realization(const LieAlgebra& g);

// Same, but with an extra coordinate scaling y_alpha -> mu_alpha y_alpha on
// top (mu nonzero); used to check that downstream results do not depend on
// the normalization.
BigCellRealization rescale_realization(const LieAlgebra& g,
                                       const BigCellRealization& r,
                                       const std::vector<Rat>& mu);

// commutator of vector fields, [V,W] f = V(W f) - W(V f)
PolyVectorField vf_bracket(const LieAlgebra& g, const PolyVectorField& v,
                           const PolyVectorField& w);

struct PQTables {
    // P^i_beta and Q^i_beta for simple i, P^alpha_beta for all positive
    // alpha; all without constant terms
    std::vector<std::vector<Poly>> P, Q;
    std::vector<std::vector<Poly>> P_all;
};

// Reads the tables off the realization and verifies the structural claims
// (unit leading coefficients, vanishing constant terms, height support of
// P^alpha_beta). Throws on violation.
PQTables extract_pq(const LieAlgebra& g, const BigCellRealization& r);

std::string pq_tables_json(const LieAlgebra& g, const PQTables& t);

} // namespace wakimoto
