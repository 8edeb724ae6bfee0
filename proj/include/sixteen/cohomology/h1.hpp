#pragma once

#include "sixteen/exact/intmatrix.hpp"
#include "sixteen/weyl/signed_perm.hpp"

#include <string>
#include <vector>

namespace sixteen::cohomology {

using exact::BigInt;
using exact::IntMatrix;

/// Finite abelian group as invariant factors d1 | d2 | ..., each >= 2.
struct FinAbGroup {
    std::vector<long> factors;

    static FinAbGroup from_factors(std::vector<long> f); // sorts, validates
    bool trivial() const { return factors.empty(); }
    long order() const;
    long exponent() const;
    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
    friend auto operator<=>(const FinAbGroup&, const FinAbGroup&) = default;
    std::string to_string() const; // e.g. "Z/4 + (Z/2)^2"
};

/// Finite group acting on Z^r. Element 0 is the identity.
struct IntegralRep {
    std::vector<weyl::SignedPerm> elements; // may be empty for abstract reps
    std::vector<std::vector<int>> table;    // table[a][b] = index of a*b
    std::vector<IntMatrix> matrices;

    std::size_t order() const { return matrices.size(); }
    std::size_t rank() const { return matrices.empty() ? 0 : matrices[0].rows(); }
};

/// Columns are the E8 simple roots in doubled coordinates.
const IntMatrix& e8_basis_doubled();
/// Gram matrix of the simple roots (Euclidean form, determinant 1).
const IntMatrix& e8_gram();
/// Coordinates of a root on the simple-root basis.
std::vector<BigInt> e8_coordinates(const weyl::Root& r);

/// Action of a closed subgroup of W_D8 on Lambda_E8 in simple-root
/// coordinates. Throws NotClosed.
IntegralRep rep_from_subgroup(const std::vector<weyl::SignedPerm>& group);

/// Action on the sublattice spanned by the columns of `basis` (which must be
/// G-stable and saturated is not required).
IntegralRep restrict_rep(const IntegralRep& rep, const IntMatrix& basis);

/// H^1(G, Z^r) for the given action. Throws CapExceeded when |G| > cap.
FinAbGroup h1(const IntegralRep& rep, std::size_t cap = 64);

/// Independent computation for cyclic groups: ker(N) / im(sigma - 1).
FinAbGroup h1_cyclic_oracle(const IntMatrix& sigma);

/// Group structure of Z^n / (column span of m), requiring finite index.
FinAbGroup cokernel(const IntMatrix& m);

} // namespace sixteen::cohomology
