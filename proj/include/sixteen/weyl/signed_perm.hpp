#pragma once

#include "sixteen/weyl/roots.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sixteen::weyl {

/// Symbol (i, s) of the 16-element set, i in 0..7, s = +1 or -1.
inline int symbol(int i, int s) { return 2 * i + (s < 0 ? 1 : 0); }
inline int symbol_index(int sym) { return sym / 2; }
inline int symbol_sign(int sym) { return sym % 2 ? -1 : 1; }

using Perm16 = std::array<std::uint8_t, 16>;

Perm16 perm16_identity();
Perm16 compose(const Perm16& a, const Perm16& b); // a after b
Perm16 inverse(const Perm16& a);
std::uint64_t pack(const Perm16& a);
/// Cycle lengths, sorted descending.
std::vector<int> cycle_type(const Perm16& a);

/// Signed permutation e_i -> signs[perm[i]] * e_{perm[i]}. Signs are indexed
/// by the target coordinate.
struct SignedPerm {
    std::array<std::uint8_t, 8> perm{0, 1, 2, 3, 4, 5, 6, 7};
    std::array<std::int8_t, 8> signs{1, 1, 1, 1, 1, 1, 1, 1};

    static SignedPerm identity() { return {}; }
    static SignedPerm minus_identity();
    /// Sign changes on the listed coordinates, trivial permutation.
    static SignedPerm flips(const std::vector<int>& coords);
    /// From 0-based perm and signs (indexed by target); validates.
    static SignedPerm make(const std::array<int, 8>& perm, const std::array<int, 8>& signs);

    bool is_identity() const;
    /// Product of signs is +1.
    bool in_wd8() const;
    int sign_changes() const;
    SignedPerm inverse() const;
    int order() const;
    friend SignedPerm operator*(const SignedPerm& v, const SignedPerm& w); // v after w
    friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
    std::string to_string() const;
};

Root act_root(const SignedPerm& w, const Root& r);
Perm16 omega_perm(const SignedPerm& w);
/// Inverse of omega_perm on permutations commuting with (i,s) -> (i,-s).
SignedPerm from_omega(const Perm16& p);

/// Permutation of the 240 root indices.
std::array<std::uint8_t, 240> root_permutation(const SignedPerm& w);

/// Closure of `gens` under composition, identity first then breadth-first.
/// Throws CapExceeded when the group would exceed `cap` elements.
std::vector<SignedPerm> subgroup_generate(const std::vector<SignedPerm>& gens, std::size_t cap);

/// Uniformly random element of W_D8.
SignedPerm random_wd8(std::mt19937_64& rng);

/// Coxeter-style generators of W_D8: adjacent transpositions and one sign
/// pair flip.
std::vector<SignedPerm> wd8_generators();

struct StabilizerChain {
    std::vector<int> base;
    std::vector<std::size_t> orbit_lengths;
    std::uint64_t order() const;
};

/// Deterministic Schreier-Sims on 16 points. New base points are taken as the
/// first point in `base_preference` moved by the element being added.
StabilizerChain schreier_sims(const std::vector<Perm16>& gens, const std::vector<int>& base_preference);

/// |W_D8| from a stabilizer chain of its degree-16 representation.
std::uint64_t wd8_order_check();

} // namespace sixteen::weyl
