#pragma once

#include "wakimoto/poly.hpp"
#include "wakimoto/ratfun.hpp"

#include <optional>
#include <vector>

namespace wakimoto {

using PolyMatrix = std::vector<std::vector<Poly>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// Fraction-free Gaussian elimination. All divisions are exact by the Bareiss
// identity, so everything stays in the polynomial ring.
int bareiss_rank(PolyMatrix m);
Poly bareiss_det(PolyMatrix m);

// Rank over the fraction field of a RatFun matrix (denominators cleared
// row by row first).
int ratfun_rank(const std::vector<std::vector<RatFun>>& m);

// Solves A x = b over the fraction field, returning numerators and the
// common denominator polynomial, so that x_j = num[j] / den exactly.
// Requires A square of full rank; the solution is verified by substitution.
struct PolySolution {
    std::vector<Poly> num;
    Poly den;
};
std::optional<PolySolution> bareiss_solve(const PolyMatrix& a,
                                          const std::vector<Poly>& b);

// Least-structure solver for overdetermined systems over the fraction field:
// picks a full-rank square subsystem, solves, verifies every remaining row by
// cross multiplication. Returns nullopt if inconsistent or rank-deficient.
std::optional<PolySolution> solve_overdetermined(const PolyMatrix& a,
                                                 const std::vector<Poly>& b);

// Plain exact Gaussian elimination over Q.
int rat_rank(RatMatrix m);
std::optional<std::vector<Rat>> rat_solve(RatMatrix a, std::vector<Rat> b);

} // namespace wakimoto
