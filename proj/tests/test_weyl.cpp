#include "doctest.h"

#include "sixteen/errors.hpp"
#include "sixteen/exact/intmatrix.hpp"
#include "sixteen/weyl/signed_perm.hpp"

#include <chrono>
#include <numeric>
#include <set>

using namespace sixteen;
using namespace sixteen::weyl;

namespace {

Root e(int i, int si, int j, int sj) { return Root::unit_sum(i, si, j, sj); }

SignedPerm cycle_with_flips(const std::vector<int>& flipped) {
    std::array<int, 8> p{}, s{};
    for (int i = 0; i < 8; ++i) p[i] = (i + 1) % 8, s[i] = 1;
    for (int c : flipped) s[c] = -s[c];
    return SignedPerm::make(p, s);
}

// Integer coordinates of v on the basis, or nullopt.
bool in_span(const std::vector<Root>& basis, const Root& v) {
    exact::IntMatrix b(8, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (int i = 0; i < 8; ++i) b(i, j) = basis[j].c[i];
    std::vector<exact::BigInt> t(8), out;
    for (int i = 0; i < 8; ++i) t[i] = v.c[i];
    return exact::solve_integer(b, t, out);
}

} // namespace

TEST_SUITE("roots") {
    TEST_CASE("counts and norms") {
        const auto& roots = e8_roots();
        CHECK(roots.size() == 240);
        CHECK(std::count_if(roots.begin(), roots.end(), [](const Root& r) { return r.integral(); }) == 112);
        CHECK(std::set<Root>(roots.begin(), roots.end()).size() == 240);
        CHECK(std::is_sorted(roots.begin(), roots.end()));
        for (const auto& r : roots) {
            CHECK(pairing(r, r) == -2);
            if (!r.integral()) {
                int neg = 0;
                for (auto x : r.c) neg += x < 0;
                CHECK(neg % 2 == 0);
            }
            CHECK(root_index(-r) >= 0);
        }
    }

    TEST_CASE("simple roots are a unimodular basis generating every root") {
        const auto& s = e8_simple_roots();
        std::vector<Root> basis(s.begin(), s.end());
        CHECK(gram_determinant(basis) == 1);
        for (const auto& r : basis) CHECK(root_index(r) >= 0);
        for (const auto& r : e8_roots()) CHECK(in_span(basis, r));
    }

    TEST_CASE("exceptional pairing") {
        const Root r = e(0, 1, 1, -1);
        CHECK(exceptional_pairing(r, r) == -1);
        // (r - k).(-r - k) = -r.r + k.k in E8(-1) + <k>
        CHECK(exceptional_pairing(r, -r) == 3);
        CHECK(exceptional_pairing(r, e(2, 1, 3, -1)) == 1);
        CHECK(intersect(PicClass::exceptional(r), PicClass::exceptional(-r)) == 3);
        CHECK(intersect(PicClass::exceptional(r), PicClass{1, Root{}}) == -1);
        std::set<int> values;
        for (const auto& a : e8_roots())
            for (const auto& b : e8_roots()) {
                const int v = exceptional_pairing(a, b);
                values.insert(v);
                CHECK((v == -1) == (a == b));
            }
        CHECK(values == std::set<int>{-1, 0, 1, 2, 3});
    }
}

TEST_SUITE("signed permutations") {
    TEST_CASE("act_root examples") {
        const auto& roots = e8_roots();
        for (const auto& r : roots) CHECK(act_root(SignedPerm::identity(), r) == r);
        for (const auto& r : roots) CHECK(act_root(SignedPerm::minus_identity(), r) == -r);
        SignedPerm t;
        std::swap(t.perm[0], t.perm[1]);
        const Root r = e(0, 1, 1, -1);
        CHECK(act_root(t, r) == -r);
    }

    TEST_CASE("omega_perm examples") {
        CHECK(omega_perm(SignedPerm::identity()) == perm16_identity());
        const Perm16 m = omega_perm(SignedPerm::minus_identity());
        CHECK(cycle_type(m) == std::vector<int>(8, 2));
        for (int i = 0; i < 8; ++i) CHECK(m[symbol(i, 1)] == symbol(i, -1));

        // An 8-cycle with an odd number of sign changes along the cycle gives
        // a 16-cycle, but such an element has odd sign count and lies outside
        // W_D8. With an even number the image splits into two 8-cycles.
        const SignedPerm odd = cycle_with_flips({3});
        CHECK_FALSE(odd.in_wd8());
        CHECK(cycle_type(omega_perm(odd)) == std::vector<int>{16});
        CHECK(odd.order() == 16);
        const SignedPerm even = cycle_with_flips({3, 5});
        CHECK(even.in_wd8());
        CHECK(cycle_type(omega_perm(even)) == std::vector<int>{8, 8});
        CHECK(even.order() == 8);
    }

    TEST_CASE("no element of W_D8 acts as a 16-cycle") {
        std::mt19937_64 rng(8);
        for (int t = 0; t < 20000; ++t) {
            const SignedPerm w = random_wd8(rng);
            REQUIRE(w.in_wd8());
            CHECK(cycle_type(omega_perm(w)).front() != 16);
        }
    }

    TEST_CASE("omega_perm is a faithful homomorphism") {
        std::mt19937_64 rng(1);
        for (int t = 0; t < 10000; ++t) {
            const SignedPerm v = random_wd8(rng), w = random_wd8(rng);
            REQUIRE(omega_perm(v * w) == compose(omega_perm(v), omega_perm(w)));
            REQUIRE(from_omega(omega_perm(v)) == v);
            REQUIRE((v * v.inverse()).is_identity());
        }
        for (const auto& g : subgroup_generate({cycle_with_flips({0, 1}), SignedPerm::flips({2, 3})}, 5000)) {
            if (!g.is_identity()) CHECK(omega_perm(g) != perm16_identity());
        }
    }

    TEST_CASE("root action preserves the form and the two root shapes") {
        std::mt19937_64 rng(2);
        const auto& roots = e8_roots();
        std::uniform_int_distribution<int> pick(0, 239);
        for (int t = 0; t < 5000; ++t) {
            const SignedPerm w = random_wd8(rng);
            const Root& a = roots[pick(rng)];
            const Root& b = roots[pick(rng)];
            const Root wa = act_root(w, a), wb = act_root(w, b);
            CHECK(pairing(wa, wb) == pairing(a, b));
            CHECK(exceptional_pairing(wa, wb) == exceptional_pairing(a, b));
            CHECK(wa.integral() == a.integral());
            CHECK(root_index(wa) >= 0);
        }
    }

    TEST_CASE("composition acts as composition on roots") {
        std::mt19937_64 rng(3);
        const auto& roots = e8_roots();
        for (int t = 0; t < 1000; ++t) {
            const SignedPerm v = random_wd8(rng), w = random_wd8(rng);
            const Root& r = roots[t % 240];
            CHECK(act_root(v * w, r) == act_root(v, act_root(w, r)));
        }
    }

    TEST_CASE("subgroup_generate") {
        CHECK(subgroup_generate({}, 64).size() == 1);
        CHECK(subgroup_generate({SignedPerm::minus_identity()}, 64).size() == 2);
        // two commuting disjoint sign-pair flips: {1, a, b, ab}
        CHECK(subgroup_generate({SignedPerm::flips({0, 1}), SignedPerm::flips({2, 3})}, 64).size() == 4);
        CHECK_THROWS_AS(subgroup_generate(wd8_generators(), 1000), CapExceeded);
        auto g = subgroup_generate({cycle_with_flips({0, 1})}, 64);
        CHECK(g.size() == 8);
        CHECK(g.front().is_identity());
    }
}

TEST_SUITE("W_D8 order") {
    TEST_CASE("stabilizer chain order matches the closed formula") {
        const std::uint64_t formula = (1u << 7) * 40320u;
        CHECK(wd8_order_check() == formula);
        CHECK(formula == 5160960);
    }

    TEST_CASE("two base orders, orbit of (1,+)") {
        std::vector<Perm16> gens;
        for (const auto& g : wd8_generators()) gens.push_back(omega_perm(g));
        std::vector<int> forward(16), backward(16);
        std::iota(forward.begin(), forward.end(), 0);
        std::iota(backward.rbegin(), backward.rend(), 0);
        const auto a = schreier_sims(gens, forward);
        const auto b = schreier_sims(gens, backward);
        CHECK(a.base.front() == symbol(0, 1));
        CHECK(a.orbit_lengths.front() == 16);
        CHECK(a.order() == b.order());
        CHECK(a.base != b.base);
    }

    TEST_CASE("stabilizer chain on small groups matches enumeration") {
        std::mt19937_64 rng(4);
        std::vector<int> pref(16);
        std::iota(pref.begin(), pref.end(), 0);
        for (int t = 0; t < 30; ++t) {
            std::vector<SignedPerm> gens{random_wd8(rng)};
            if (t % 2) gens.push_back(SignedPerm::flips({0, 7}));
            std::vector<Perm16> pg;
            for (const auto& g : gens) pg.push_back(omega_perm(g));
            try {
                const auto elems = subgroup_generate(gens, 200000);
                CHECK(schreier_sims(pg, pref).order() == elems.size());
            } catch (const CapExceeded&) {
            }
        }
    }
}

TEST_SUITE("D8 sublattices") {
    TEST_CASE("orbit has 135 members of 112 roots") {
        const auto t0 = std::chrono::steady_clock::now();
        const auto& orbit = d8_sublattice_orbit();
        CHECK(orbit.size() == 135);
        const auto& roots = e8_roots();
        for (const auto& d : orbit) {
            CHECK(d.roots.size() == 112);
            for (int i : d.roots) CHECK(d.members.test(root_index(-roots[i])));
            std::vector<Root> basis(d.basis.begin(), d.basis.end());
            CHECK(gram_determinant(basis) == 4);
            for (int i : d.roots) CHECK(in_span(basis, roots[i]));
        }
        CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(10));
    }

    TEST_CASE("the standard member is stabilized by W_D8") {
        const auto& standard = d8_sublattice_orbit().front();
        std::mt19937_64 rng(5);
        std::vector<SignedPerm> ws = wd8_generators();
        for (int t = 0; t < 100; ++t) ws.push_back(random_wd8(rng));
        for (const auto& w : ws) {
            const auto perm = root_permutation(w);
            for (int i : standard.roots) CHECK(standard.members.test(perm[i]));
        }
    }

    TEST_CASE("Gram determinant survives W_D8 images of the bases") {
        std::mt19937_64 rng(6);
        for (const auto& d : d8_sublattice_orbit()) {
            const SignedPerm w = random_wd8(rng);
            std::vector<Root> basis;
            for (const auto& r : d.basis) basis.push_back(act_root(w, r));
            CHECK(gram_determinant(basis) == 4);
        }
    }
}
