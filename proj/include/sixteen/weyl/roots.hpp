#pragma once

#include <array>
#include <bitset>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sixteen::weyl {

/// Vector of the E8 lattice in R^8, stored as doubled coordinates so that
/// half-integral vectors are exact. Also used for non-root lattice vectors.
struct Root {
    std::array<std::int8_t, 8> c{};

    static Root from_doubled(const std::array<int, 8>& doubled);
    static Root unit_sum(int i, int si, int j, int sj); // si*e_i + sj*e_j, 0-based

    bool integral() const { return c[0] % 2 == 0; }
    Root operator-() const;
    friend Root operator+(const Root& a, const Root& b);
    friend Root operator-(const Root& a, const Root& b);
    friend auto operator<=>(const Root&, const Root&) = default;
    std::string to_string() const;
};

/// Euclidean dot product. The E8(-1) form used on Pic is its negative.
int dot(const Root& a, const Root& b);
inline int pairing(const Root& a, const Root& b) { return -dot(a, b); }

/// Intersection number of the exceptional classes r - k and r' - k, where k
/// is the canonical-type class with k^2 = 1.
inline int exceptional_pairing(const Root& a, const Root& b) { return pairing(a, b) + 1; }

/// Class k*kappa + v in Pic = <kappa> + E8(-1).
struct PicClass {
    int kappa_coeff = 0;
    Root root_part;

    static PicClass exceptional(const Root& r) { return {-1, r}; }
    friend int intersect(const PicClass& a, const PicClass& b) {
        return a.kappa_coeff * b.kappa_coeff + pairing(a.root_part, b.root_part);
    }
};

/// The 240 roots, sorted lexicographically on doubled coordinates.
const std::vector<Root>& e8_roots();
/// Position of r in e8_roots(), or -1.
int root_index(const Root& r);

using RootSet = std::bitset<240>;

/// Simple roots of E8 (Bourbaki numbering), a Z-basis of the lattice.
const std::array<Root, 8>& e8_simple_roots();

/// Reflection in the hyperplane orthogonal to a root.
Root reflect(const Root& v, const Root& root);

struct D8Sublattice {
    RootSet members;
    std::vector<int> roots; // indices into e8_roots()
    std::array<Root, 8> basis; // simple roots of the D8 system
};

/// Orbit of the standard D8 root system {+-e_i +- e_j} under W(E8), found by
/// breadth-first search over simple reflections. Entry 0 is the standard one.
const std::vector<D8Sublattice>& d8_sublattice_orbit();

/// Simple system of a root subsystem with respect to a fixed generic
/// functional.
std::vector<Root> simple_system(const std::vector<Root>& roots);

/// Determinant of the Euclidean Gram matrix.
long gram_determinant(const std::vector<Root>& basis);

} // namespace sixteen::weyl
