#pragma once

#include "sixteen/exact/fq.hpp"
#include "sixteen/exact/mpoly.hpp"
#include "sixteen/exact/rational.hpp"
#include "sixteen/exact/unipoly.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sixteen::geometry {

using exact::Fq;
using exact::FqField;
using exact::MPoly;

/// f(z0, z1) = sum f[i] z0^i z1^(8-i) over F_p, so f[i] is also the
/// coefficient of z^i in f(z, 1).
struct BinaryOctic {
    std::uint64_t p = 0;
    std::array<Fq, 9> f;

    static BinaryOctic from_ints(std::uint64_t p, const std::vector<std::int64_t>& coeffs);
    exact::FqPoly dehomogenized() const; // f(z, 1)
};

/// Quartic binary form, index i = exponent of z0.
using Quartic = std::array<Fq, 5>;

struct QuarticPair {
    Quartic b;
    Quartic c;
};

/// True when f(z,1) has degree 8, is squarefree, and f(0,1), f(1,0) are
/// nonzero squares.
bool is_admissible(const BinaryOctic& f);

/// f = b^2 - z0 z1^3 c with b1 = 0 and canonical square roots for the outer
/// coefficients of b. Throws NotASquare, DivisionFailure.
QuarticPair decompose_octic(const BinaryOctic& f);

/// b^2 - z0 z1^3 c as an octic.
BinaryOctic expand(std::uint64_t p, const QuarticPair& pair);

using Sym3 = std::array<std::array<Fq, 3>, 3>;
using Sym5 = std::array<std::array<Fq, 5>, 5>;

/// Symmetric Gram matrix of a quartic after z0^2 -> y2, z0 z1 -> y3,
/// z1^2 -> y4 (z0^2 z1^2 goes to y3^2).
Sym3 veronese(const Quartic& q);

struct BlockTensor {
    std::uint64_t p = 0;
    std::array<Sym5, 4> slices;
    Sym3 block(int i) const; // lower-right 3x3 block of slice i
};

/// Slices from the four 3x3 blocks a, b, c, d (the conic).
BlockTensor build_tensor(std::uint64_t p, const Sym3& a, const Sym3& b, const Sym3& c, const Sym3& d);
/// a = y3 y4, b and c from the pair, conic y3^2 - y2 y4.
BlockTensor build_tensor(std::uint64_t p, const QuarticPair& pair);

/// sum_i x_i A_i.
Sym5 contract(const BlockTensor& t, const std::array<Fq, 4>& x);

/// q_i(y) = y^T A_i y in y0..y4.
std::vector<MPoly> web_quadrics(const BlockTensor& t);

using Point5 = std::array<Fq, 5>;

struct PointSet16 {
    const FqField* field = nullptr;  // F_{p^k} containing every coordinate
    std::vector<Fq> alphas;          // sorted roots of f(z,1)
    std::vector<Fq> roots;           // canonical square roots of the alphas
    std::array<Point5, 16> points;   // indexed by symbol 2i + (s < 0)
};

/// The sixteen points (s r_i : (s r_i)^-1 b(a_i,1) : a_i^2 : a_i : 1) over
/// the splitting field of f(z^2, 1). Throws DegenerateRoots.
PointSet16 sixteen_points(const BinaryOctic& f, const Quartic& b, int max_degree = 24);

/// Number of points minus the rank of the 16 x 15 matrix of quadratic
/// monomials at the points; equals 1 + the number of independent quadrics
/// through them.
int vandermonde_corank(const std::vector<Point5>& points);
int vandermonde_corank(const PointSet16& pts);

struct CurveModel {
    MPoly q{4, 3}; // 4 x0 x2 - x1^2
    MPoly g{4, 3}; // det of the 3x3 block of the contraction
};

CurveModel curve_model(const BlockTensor& t);

/// True iff q, g and the 2x2 minors of their Jacobian have no common
/// projective zero over the algebraic closure.
bool nonsingularity_check(const CurveModel& m);

/// Plane (l0 : l1 : l2 : l3) with l_i = P^T A_i Q, scaled so that the first
/// nonzero entry is 1. Throws NotProportional.
std::array<Fq, 4> psi_contract_secant(const BlockTensor& t, const PointSet16& pts, int a, int b);

struct Bundle {
    BinaryOctic octic;
    QuarticPair pair;
    BlockTensor tensor;
    PointSet16 points;
    CurveModel model;
};

struct BundleCheck {
    bool admissible = false;
    bool on_quadrics = false;
    bool nonsingular = false;
    exact::HilbertData hilbert{-1, std::nullopt};
    bool good() const;
};

/// Run the pipeline on one octic. Throws NotASquare, DegenerateRoots, Error.
Bundle make_bundle(const BinaryOctic& f, int max_degree = 24);
BundleCheck check_bundle(const Bundle& b);

struct SampleConstraints {
    std::optional<std::uint64_t> f0;   // force f(0,1)
    std::optional<std::uint64_t> f8;   // force f(1,0)
    int max_extension_degree = 8;      // of the splitting field of f(z^2,1)
    std::size_t max_trials = 100;
};

/// Seeded rejection sampling of octics whose bundle passes check_bundle.
/// Throws BudgetExhausted.
Bundle sample_good_input(std::uint64_t seed, std::uint64_t p, const SampleConstraints& c = {},
                         std::size_t* trials_used = nullptr);

/// The octic prod_{k=1..4} (z0^2 - k^2 z1^2) over F_p.
BinaryOctic example_octic(std::uint64_t p = 101);

std::string bundle_to_json(const Bundle& b);
/// Rebuilds the bundle from p and f and checks the stored b, c, slices and
/// points against it. Throws ParseError.
Bundle bundle_from_json(const std::string& text);

/// Integer octic f(z,1), constant term first, from a JSON file: a bare array
/// of 9 integers, {"f": [9 ints]}, or an etale presentation
/// {"factors": [{"modulus": [...], "alpha": [...]}]} with rational entries
/// given as strings or integers. Throws ParseError.
std::vector<exact::BigInt> integer_octic_from_json(const std::string& text);

/// The same reduced mod p, where p is the file's "p" field if present.
BinaryOctic octic_from_json(const std::string& text, std::uint64_t default_p);

} // namespace sixteen::geometry
