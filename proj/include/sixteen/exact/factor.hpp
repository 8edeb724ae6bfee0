#pragma once

#include "sixteen/exact/unipoly.hpp"

#include <cstdint>
#include <vector>

namespace sixteen::exact {

struct Factor {
    FqPoly poly; // monic irreducible
    int multiplicity;
};

/// Complete factorisation over the coefficient field F_q (q odd): squarefree
/// split, distinct-degree split, then Cantor-Zassenhaus equal-degree split
/// driven by a seeded generator. Factors come back sorted by degree, then by
/// coefficient vector, so the result does not depend on the seed.
std::vector<Factor> factor_univariate_fq(const FqPoly& f, std::uint64_t seed = 0);

/// Independent irreducibility test (Ben-Or / Rabin style gcd criterion).
bool is_irreducible(const FqPoly& f);

/// Squarefree decomposition: pairs (squarefree monic part, multiplicity).
std::vector<Factor> squarefree_decomposition(const FqPoly& f);

bool is_squarefree(const FqPoly& f);

/// Binary-form style perfect-square test: every multiplicity is even. The
/// constant factor is ignored.
bool is_perfect_square_up_to_unit(const FqPoly& f);

/// All roots of f (coefficients in a subfield of `ext`) that lie in `ext`,
/// sorted ascending with Fq ordering, repeated roots listed once.
std::vector<Fq> roots_in(const FqPoly& f, const FqField& ext, std::uint64_t seed = 0);

/// Degree of the smallest extension of F_p over which f splits (the lcm of
/// the degrees of its irreducible factors). f has prime-field coefficients.
int splitting_degree(const FqPoly& f);

bool is_square(const Fq& a);

/// Square root with the canonical choice: of the two roots r, -r the one with
/// the lexicographically smaller coordinate vector (constant coordinate
/// first). Over F_p that is the smaller least nonnegative representative.
/// Throws NotASquare.
Fq sqrt_in_fq(const Fq& a);

} // namespace sixteen::exact
