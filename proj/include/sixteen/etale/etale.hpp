#pragma once

#include "sixteen/exact/unipoly.hpp"
#include "sixteen/weyl/signed_perm.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace sixteen::etale {

using exact::BigInt;
using exact::QPoly;
using exact::Rational;

struct OrbitData {
    std::vector<std::vector<int>> symbols; // orbits on the 16 symbols (i, s)
    std::vector<std::vector<int>> lines;   // orbits on the 8 pairs {(i,+), (i,-)}
};

OrbitData omega_orbits(const std::vector<weyl::SignedPerm>& gens);
/// Same for raw permutations of the 16 symbols that commute with (i,s) -> (i,-s).
OrbitData omega_orbits(const std::vector<weyl::Perm16>& gens);

/// One factor K_j = Q[t]/(m_j) of the degree-8 algebra together with the
/// residue alpha_j(t). L_j = K_j[x]/(x^2 - alpha_j).
struct EtaleFactor {
    QPoly modulus;
    QPoly alpha;
    bool squarefree = false;                    // certificate: gcd(m, m') = 1
    std::optional<std::uint64_t> irreducible_mod; // a prime where m is irreducible
};

struct EtalePresentation {
    std::vector<EtaleFactor> factors;
    int degree() const;
};

/// Q^8 with the given alpha values.
EtalePresentation split_presentation(const std::vector<Rational>& alphas);

/// Fill in the squarefree and mod-p irreducibility certificates, trying
/// primes below `prime_bound`.
void certify(EtalePresentation& pres, std::uint64_t prime_bound = 1000);

/// Product over factors of the characteristic polynomial of multiplication by
/// alpha_j on K_j, i.e. Res_t(m_j(t), x - alpha_j(t)) for monic m_j.
QPoly char_poly_mult(const EtalePresentation& pres);

/// Characteristic polynomial of a square rational matrix (Faddeev-LeVerrier).
QPoly matrix_char_poly(const std::vector<std::vector<Rational>>& m);

/// Matrix of multiplication by alpha on Q[t]/(m) in the basis 1, t, ....
std::vector<std::vector<Rational>> multiplication_matrix(const QPoly& modulus, const QPoly& alpha);

struct NormCheck {
    Rational norm;
    bool is_square;
};

/// prod_j N(alpha_j) and whether it is a rational square. Throws ZeroNorm.
NormCheck norm_and_dagger_check(const EtalePresentation& pres);

/// Integer octic f(z,1) as 9 coefficients, constant term first.
std::vector<BigInt> integer_octic(const QPoly& f);

/// Degrees of the irreducible factors of f(z^2) mod p, sorted descending.
/// Throws BadPrime when p divides the leading coefficient or f(z^2) mod p is
/// not squarefree.
std::vector<int> frobenius_cycle_type(const std::vector<BigInt>& f, std::uint64_t p);

/// Cycle types on the 16 symbols of the elements of a group.
std::set<std::vector<int>> cycle_types(const std::vector<weyl::SignedPerm>& group);

struct ChebotarevEntry {
    std::uint64_t prime;
    std::vector<int> type; // empty when bad
    bool good;
    bool realized;
};

/// Frobenius cycle types for the odd primes in [lo, hi), flagged by whether
/// each type occurs among `allowed`.
std::vector<ChebotarevEntry> chebotarev_sample(const std::vector<BigInt>& f, std::uint64_t lo, std::uint64_t hi,
                                               const std::set<std::vector<int>>& allowed);

} // namespace sixteen::etale
