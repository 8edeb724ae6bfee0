#include "doctest.h"

#include "sixteen/dp1/dp1.hpp"
#include "sixteen/errors.hpp"
#include "sixteen/exact/factor.hpp"

#include <random>
#include <set>

using namespace sixteen;
using namespace sixteen::dp1;
using exact::Fq;
using exact::FqField;
using Vec = std::vector<Fq>;

namespace {

FqMatrix diag(const FqField& F, const std::vector<int>& d) {
    FqMatrix m(d.size(), d.size(), Fq(F, 0));
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Fq(F, d[i]);
    return m;
}

Vec vec(const FqField& F, const std::vector<int>& v) {
    Vec out;
    for (int x : v) out.emplace_back(F, x);
    return out;
}

const geometry::Bundle& example() {
    static const geometry::Bundle b = geometry::make_bundle(geometry::example_octic());
    return b;
}

// Rows of the reduced echelon form, used as a canonical key for a subspace.
std::vector<Vec> canonical(const std::vector<Vec>& vs) {
    FqMatrix m(vs.size(), vs[0].size(), exact::zero_like(vs[0][0]));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs[i].size(); ++j) m(i, j) = vs[i][j];
    const auto piv = exact::rref(m);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < piv.size(); ++i) {
        Vec r;
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        out.push_back(r);
    }
    return out;
}

} // namespace

TEST_SUITE("secants") {
    TEST_CASE("counts and eta") {
        const auto s = enumerate_secants();
        CHECK(s.size() == 120);
        int eight = 0;
        for (const auto& l : s) {
            eight += l.type() == 8;
            CHECK(l.eta().type() == l.type());
            CHECK(l.eta().eta() == l);
            if (l.type() == 8) CHECK(l.eta() == l);
        }
        CHECK(eight == 8);
        // (1,+) and (2,-) are symbols 0 and 3
        CHECK(make_secant(0, 3).type() == 112);
        CHECK_THROWS_AS(make_secant(4, 4), Error);
    }
}

TEST_SUITE("quadrics") {
    const FqField& F = FqField::get(101, 1);

    TEST_CASE("rank and kernel") {
        auto d = quadric_rank_kernel(diag(F, {1, 1, 1, 1, 1}));
        CHECK(d.rank == 5);
        CHECK(d.kernel.empty());
        d = quadric_rank_kernel(diag(F, {1, 1, 1, 1, 0}));
        CHECK(d.rank == 4);
        REQUIRE(d.kernel.size() == 1);
        CHECK(d.kernel[0] == vec(F, {0, 0, 0, 0, 1}));
    }

    TEST_CASE("contraction at points of the cone has rank 4") {
        std::mt19937_64 rng(1);
        const auto& E = *example().points.field;
        for (int t = 0; t < 50; ++t) {
            const Fq u = Fq::random(E, rng), v = Fq::random(E, rng), w = Fq::random(E, rng);
            if (u.is_zero() && v.is_zero()) continue;
            const auto a = to_matrix(geometry::contract(example().tensor, {u * u, Fq(E, 2) * u * v, v * v, w}));
            CHECK(quadric_rank_kernel(a).rank <= 4);
        }
        int four = 0;
        for (int t = 0; t < 50; ++t) {
            const Fq u = Fq::random(E, rng), v = Fq::random(E, rng), w = Fq::random(E, rng);
            four += quadric_rank_kernel(to_matrix(geometry::contract(example().tensor, {u * u, Fq(E, 2) * u * v, v * v, w})))
                        .rank == 4;
        }
        CHECK(four >= 45);
    }

    TEST_CASE("rank is invariant under congruence") {
        std::mt19937_64 rng(2);
        for (int t = 0; t < 200; ++t) {
            FqMatrix q(5, 5, Fq(F, 0));
            const int r = t % 6;
            // sum of r random rank-one symmetric terms
            for (int k = 0; k < r; ++k) {
                Vec v(5, Fq(F, 0));
                v[k] = Fq(F, 1);
                for (int i = k + 1; i < 5; ++i) v[i] = Fq::random(F, rng);
                const Fq c = Fq(F, 1 + static_cast<std::int64_t>(rng() % 100));
                for (int i = 0; i < 5; ++i)
                    for (int j = 0; j < 5; ++j) q(i, j) += c * v[i] * v[j];
            }
            FqMatrix p(5, 5, Fq(F, 0));
            do {
                for (int i = 0; i < 5; ++i)
                    for (int j = 0; j < 5; ++j) p(i, j) = Fq::random(F, rng);
            } while (exact::determinant(p).is_zero());
            const auto d = quadric_rank_kernel(q);
            CHECK(d.rank == r);
            CHECK(quadric_rank_kernel(p.transpose() * q * p).rank == d.rank);
            CHECK(isotropic_check(q, d.kernel));
        }
    }

    TEST_CASE("isotropic subspaces") {
        const auto q = diag(F, {1, 1, 1, 1, 0});
        CHECK(isotropic_check(q, {vec(F, {0, 0, 0, 0, 1})}));
        CHECK_FALSE(isotropic_check(q, {vec(F, {1, 0, 0, 0, 0}), vec(F, {0, 1, 0, 0, 0})}));
    }

    TEST_CASE("families on diag(1,-1,1,-1,0)") {
        const auto q = diag(F, {1, -1, 1, -1, 0});
        const std::vector<Vec> v{vec(F, {1, 1, 0, 0, 0}), vec(F, {0, 0, 1, 1, 0}), vec(F, {0, 0, 0, 0, 1})};
        const std::vector<Vec> w{vec(F, {1, -1, 0, 0, 0}), vec(F, {0, 0, 1, -1, 0}), vec(F, {0, 0, 0, 0, 1})};
        const std::vector<Vec> u{vec(F, {1, 1, 0, 0, 0}), vec(F, {0, 0, 1, -1, 0}), vec(F, {0, 0, 0, 0, 1})};
        CHECK(same_family(q, v, v));
        CHECK(same_family(q, v, w)); // meet only in the kernel
        CHECK_FALSE(same_family(q, v, u)); // meet in a plane
        CHECK_THROWS_AS(same_family(q, {v[0], v[2]}, w), NotMaximal);
        CHECK_THROWS_AS(same_family(q, {vec(F, {1, 0, 0, 0, 0}), v[1], v[2]}, w), NotMaximal);
    }

    TEST_CASE("exhaustive: families are the two rulings of the quadric surface") {
        // y0 y1 - y2 y3 is det [[y0, y2], [y3, y1]]; the lines of one ruling
        // share a right kernel vector, those of the other a left one
        for (std::uint64_t p : {3, 5, 7}) {
            const FqField& G = FqField::get(p, 1);
            const Fq half = Fq(G, 2).inverse();
            FqMatrix q(5, 5, Fq(G, 0));
            q(0, 1) = q(1, 0) = half;
            q(2, 3) = q(3, 2) = -half;
            std::vector<Vec> vecs;
            for (std::uint64_t n = 1; n < p * p * p * p; ++n) {
                Vec v;
                std::uint64_t m = n;
                for (int i = 0; i < 4; ++i) v.emplace_back(G, static_cast<std::int64_t>(m % p)), m /= p;
                v.emplace_back(G, 0);
                vecs.push_back(v);
            }
            std::set<std::vector<Vec>> lines;
            for (const auto& a : vecs) {
                if (!isotropic_check(q, {a})) continue;
                for (const auto& b : vecs)
                    if (span_dimension({a, b}) == 2 && isotropic_check(q, {a, b})) lines.insert(canonical({a, b}));
            }
            CHECK(lines.size() == 2 * (p + 1));
            auto ruling = [&](const std::vector<Vec>& l) {
                // right kernel of M = [[y0, y2], [y3, y1]] common to the line
                auto mat = [](const Vec& y) { return std::array<Fq, 4>{y[0], y[2], y[3], y[1]}; };
                const auto m0 = mat(l[0]), m1 = mat(l[1]);
                FqMatrix stack(4, 2, Fq(G, 0));
                stack(0, 0) = m0[0], stack(0, 1) = m0[1], stack(1, 0) = m0[2], stack(1, 1) = m0[3];
                stack(2, 0) = m1[0], stack(2, 1) = m1[1], stack(3, 0) = m1[2], stack(3, 1) = m1[3];
                return exact::rank(stack) == 1;
            };
            const Vec kernel = vec(G, {0, 0, 0, 0, 1});
            const std::vector<std::vector<Vec>> all(lines.begin(), lines.end());
            for (const auto& a : all)
                for (const auto& b : all) {
                    const std::vector<Vec> va{a[0], a[1], kernel}, vb{b[0], b[1], kernel};
                    CHECK(same_family(q, va, vb) == (ruling(a) == ruling(b)));
                }
        }
    }
}

TEST_SUITE("tau") {
    TEST_CASE("family comparison is constant along tau") {
        const auto& b = example();
        int checked = 0;
        for (const auto& l : enumerate_secants()) {
            if (l.type() != 112 || checked++ >= 12) continue;
            const auto rep = tau_family_samples(b.tensor, l, b.points, 30, 7 + checked);
            CHECK_FALSE(rep.samples.empty());
            CHECK(rep.constant.has_value());
            for (const auto& s : rep.samples) CHECK(s.same == ((3 - s.meet) % 2 == 0));
            for (std::size_t i = 0; i < rep.tau.size(); ++i) {
                CHECK(rep.tau[i].deck().family != rep.tau[i].family);
                CHECK(rep.tau[i].deck().deck().family == rep.tau[i].family);
            }
        }
        CHECK_THROWS_AS(tau_family_samples(b.tensor, make_secant(0, 1), b.points, 10, 0), Error);
    }
}

TEST_SUITE("tritangency") {
    TEST_CASE("planes of secants are tritangent") {
        const auto& b = example();
        std::set<std::array<Fq, 4>> planes;
        for (const auto& l : enumerate_secants()) planes.insert(geometry::psi_contract_secant(b.tensor, b.points, l.a, l.b));
        std::uint64_t seed = 0;
        for (const auto& h : planes) CHECK(tritangency_test(h, b.model, seed++));
    }

    TEST_CASE("random planes are not") {
        const auto& b = example();
        std::mt19937_64 rng(3);
        int squares = 0;
        for (int t = 0; t < 40; ++t) {
            std::array<Fq, 4> h;
            for (auto& c : h) c = Fq::random(*b.points.field, rng);
            squares += tritangency_test(h, b.model, t);
        }
        CHECK(squares == 0);
    }

    TEST_CASE("plane through three curve points over F_101") {
        const auto& m = example().model;
        const FqField& F = FqField::get(101, 1);
        std::vector<std::array<Fq, 4>> pts;
        // points (u^2, 2uv, v^2, w) of the cone with g = 0
        for (std::int64_t u = 1; u < 101 && pts.size() < 3; u += 7) {
            const Fq uu(F, u), vv(F, 1);
            std::vector<Fq> c(4, Fq(F, 0));
            for (int k = 0; k < 4; ++k) {
                std::vector<Fq> x{uu * uu, Fq(F, 2) * uu * vv, vv * vv, Fq(F, k)};
                c[k] = m.g.eval(x, [&](std::uint64_t a) { return Fq(F, static_cast<std::int64_t>(a)); });
            }
            std::vector<Fq> ks{Fq(F, 0), Fq(F, 1), Fq(F, 2), Fq(F, 3)};
            const auto cubic = exact::interpolate(ks, c);
            const auto roots = exact::roots_in(cubic, F);
            if (roots.empty()) continue;
            pts.push_back({uu * uu, Fq(F, 2) * uu * vv, vv * vv, roots[0]});
        }
        REQUIRE(pts.size() == 3);
        FqMatrix a(3, 4, Fq(F, 0));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) a(i, j) = pts[i][j];
        const auto k = exact::kernel(a);
        REQUIRE(k.size() == 1);
        std::array<Fq, 4> h{k[0][0], k[0][1], k[0][2], k[0][3]};
        const auto s = plane_sextic(h, m, 1);
        CHECK(s.poly.degree() + s.at_infinity == 6);
        CHECK_FALSE(tritangency_test(h, m, 1));
    }

    TEST_CASE("degenerate restriction") {
        const FqField& F = FqField::get(101, 1);
        geometry::CurveModel m;
        m.q = exact::MPoly::variable(4, 101, 3);
        m.g = example().model.g;
        CHECK_THROWS_AS(tritangency_test({Fq(F, 0), Fq(F, 0), Fq(F, 0), Fq(F, 1)}, m), DegenerateRestriction);
    }
}

TEST_SUITE("secant-root bijection") {
    TEST_CASE("definition and image") {
        CHECK(secant_root(make_secant(0, 2)) == weyl::Root::unit_sum(0, 1, 1, 1));
        const auto m = secant_root_bijection();
        CHECK(m.size() == 112);
        std::set<weyl::Root> image;
        for (const auto& [l, r] : m) {
            CHECK(r.integral());
            CHECK(weyl::root_index(r) >= 0);
            image.insert(r);
        }
        CHECK(image.size() == 112);
        CHECK_THROWS_AS(secant_root(make_secant(4, 5)), Error);
    }

    TEST_CASE("equivariance on random pairs") {
        std::mt19937_64 rng(4);
        const auto secants = enumerate_secants();
        int done = 0;
        while (done < 1000) {
            const auto w = weyl::random_wd8(rng);
            const auto& l = secants[rng() % secants.size()];
            if (l.type() != 112) continue;
            ++done;
            CHECK(secant_root(l.image(weyl::omega_perm(w))) == weyl::act_root(w, secant_root(l)));
        }
    }
}

TEST_SUITE("frobenius equivariance") {
    TEST_CASE("example") {
        const auto r = frobenius_equivariance_check(example());
        CHECK(r.pass);
        CHECK(r.cycle_type == std::vector<int>{2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1});
        CHECK(r.even_signs);
        CHECK(r.from_field.sign_changes() == 4);
        // a root s e_i + t e_j is fixed iff neither coordinate is flipped
        CHECK(r.root_orbits == r.secant_orbits);
        const long fixed = std::count(r.root_orbits.begin(), r.root_orbits.end(), 1);
        CHECK(fixed == 4 * 4 * 3 / 2); // both indices among the 4 unflipped coordinates
    }

    TEST_CASE("split bundle") {
        // alphas are squares 1, 4, ..., 64 over F_101 with all roots rational
        const FqField& F = FqField::get(101, 1);
        exact::FqPoly f = exact::FqPoly::constant(Fq(F, 1));
        for (int s = 1; s <= 8; ++s) f *= exact::FqPoly(std::vector<Fq>{Fq(F, -s * s), Fq(F, 1)}, Fq(F, 0));
        geometry::BinaryOctic o;
        o.p = 101;
        for (int i = 0; i < 9; ++i) o.f[i] = f.coeff(i);
        const auto b = geometry::make_bundle(o);
        CHECK(b.points.field->degree() == 1);
        const auto r = frobenius_equivariance_check(b);
        CHECK(r.pass);
        CHECK(r.from_field.is_identity());
        CHECK(r.secant_orbits == std::vector<int>(112, 1));
    }

    TEST_CASE("sampled bundles") {
        for (std::uint64_t p : {97, 103, 107}) {
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const auto b = geometry::sample_good_input(seed, p);
                const auto r = frobenius_equivariance_check(b);
                CHECK(r.pass);
                CHECK(r.even_signs);
                const auto rep = secant_report(b, seed);
                CHECK(rep.planes == 64);
                CHECK(rep.tritangent_pass == 64);
                CHECK(rep.eta_invariant);
                // types are preserved by Frobenius
                for (const auto& l : enumerate_secants()) CHECK(l.image(r.from_points).type() == l.type());
            }
        }
    }
}
