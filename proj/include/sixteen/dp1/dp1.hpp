#pragma once

#include "sixteen/exact/linalg.hpp"
#include "sixteen/geometry/geometry.hpp"
#include "sixteen/weyl/roots.hpp"
#include "sixteen/weyl/signed_perm.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sixteen::dp1 {

using exact::Fq;
using geometry::Point5;

/// Unordered pair of symbols a < b. Type 8 when b = a ^ 1, i.e. the two
/// points are exchanged by eta.
struct Secant {
    int a = 0, b = 0;
    int type() const { return (a ^ 1) == b ? 8 : 112; }
    Secant eta() const;
    Secant image(const weyl::Perm16& g) const;
    friend auto operator<=>(const Secant&, const Secant&) = default;
};

Secant make_secant(int x, int y);

/// All 120 secants in lexicographic order.
std::vector<Secant> enumerate_secants();

using FqMatrix = exact::Matrix<Fq>;

struct QuadricData {
    FqMatrix matrix;
    int rank = 0;
    std::vector<std::vector<Fq>> kernel;
};

QuadricData quadric_rank_kernel(const FqMatrix& q);
FqMatrix to_matrix(const geometry::Sym5& s);

/// v^T Q w = 0 for all pairs of basis vectors.
bool isotropic_check(const FqMatrix& q, const std::vector<std::vector<Fq>>& basis);

/// Dimension of the span of the vectors.
int span_dimension(const std::vector<std::vector<Fq>>& vs);

/// For a rank-4 quadric in five variables and two isotropic subspaces of
/// dimension 3: whether dim V - dim(V n W) is even. Throws NotMaximal.
bool same_family(const FqMatrix& q, const std::vector<std::vector<Fq>>& v, const std::vector<std::vector<Fq>>& w);

/// A point of the double cover: a base point on the cone and one bit naming
/// a family of maximal isotropic subspaces relative to a reference subspace.
struct CoverPoint {
    std::array<Fq, 4> x;
    bool family = false;
    CoverPoint deck() const { return {x, !family}; }
};

struct TauSample {
    std::array<Fq, 4> x;
    bool same = false; // V_l + ker and V_{eta l} + ker in the same family
    int meet = 0;      // dim of their intersection
};

struct TauReport {
    std::vector<TauSample> samples;
    std::optional<bool> constant; // set when every sample agrees
    std::vector<CoverPoint> tau, tau_eta;
};

/// Samples x = (u^2, 2uv, v^2, w) on the cone with rank A(x) = 4 and A(x)
/// vanishing on the secant, and compares the families of V_l + ker and
/// V_{eta l} + ker. Throws NoSamples, Error for type-8 secants.
TauReport tau_family_samples(const geometry::BlockTensor& t, const Secant& l, const geometry::PointSet16& pts,
                             int trials, std::uint64_t seed);

/// Restrict q and g to the plane, eliminate one variable by a resultant and
/// test that the binary sextic is a square. Two independent random
/// projections must agree. Throws DegenerateRestriction.
bool tritangency_test(const std::array<Fq, 4>& plane, const geometry::CurveModel& m, std::uint64_t seed = 0);

/// The sextic cut out on the plane (as a dehomogenized polynomial plus its
/// multiplicity at infinity) for one projection; exposed for testing.
struct PlaneSextic {
    exact::FqPoly poly;
    int at_infinity = 0;
};
PlaneSextic plane_sextic(const std::array<Fq, 4>& plane, const geometry::CurveModel& m, std::uint64_t seed);

/// {(i,s),(j,t)} -> s e_i + t e_j for type-112 secants.
weyl::Root secant_root(const Secant& l);
std::map<Secant, weyl::Root> secant_root_bijection();

struct EquivarianceReport {
    bool pass = false;
    weyl::SignedPerm from_field;     // from alpha^p and r^p
    weyl::Perm16 from_points{};      // from the coordinates of the points
    std::vector<int> cycle_type;     // of from_points on the 16 symbols
    std::vector<int> factor_type;    // degrees of f(z^2) mod p
    std::vector<int> secant_orbits;  // sorted orbit sizes on type-112 secants
    std::vector<int> root_orbits;    // sorted orbit sizes on the 112 integral roots
    bool even_signs = false;
    std::string detail;
};

EquivarianceReport frobenius_equivariance_check(const geometry::Bundle& b);

struct SecantReport {
    int type8 = 0, type112 = 0;
    int planes = 0;
    int tritangent_pass = 0;
    bool eta_invariant = false;
    EquivarianceReport equivariance;
    std::string to_json() const;
};

SecantReport secant_report(const geometry::Bundle& b, std::uint64_t seed = 0);

} // namespace sixteen::dp1
