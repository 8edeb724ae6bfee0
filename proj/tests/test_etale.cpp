#include "doctest.h"

#include "sixteen/errors.hpp"
#include "sixteen/etale/etale.hpp"
#include "sixteen/exact/factor.hpp"

#include <random>

using namespace sixteen;
using namespace sixteen::etale;
using weyl::SignedPerm;

namespace {

QPoly q(const std::vector<long>& c) {
    std::vector<Rational> r;
    for (long v : c) r.emplace_back(v);
    return QPoly(r, Rational(0));
}

QPoly linear_product(const std::vector<long>& roots) {
    QPoly acc = q({1});
    for (long a : roots) acc *= q({-a, 1});
    return acc;
}

std::vector<Rational> example_alphas() {
    std::vector<Rational> a;
    for (long v : {1, -1, 2, -2, 3, -3, 4, -4}) a.emplace_back(v);
    return a;
}

std::vector<SignedPerm> even_sign_group() {
    std::vector<SignedPerm> gens;
    for (int i = 1; i < 8; ++i) gens.push_back(SignedPerm::flips({0, i}));
    return weyl::subgroup_generate(gens, 256);
}

} // namespace

TEST_SUITE("omega orbits") {
    TEST_CASE("examples") {
        auto d = omega_orbits(std::vector<SignedPerm>{});
        CHECK(d.symbols.size() == 16);
        CHECK(d.lines.size() == 8);
        d = omega_orbits(std::vector<SignedPerm>{SignedPerm::minus_identity()});
        CHECK(d.symbols.size() == 8);
        for (const auto& o : d.symbols) CHECK(o.size() == 2);
        CHECK(d.lines.size() == 8);
        // The 16-cycle exists only as a permutation of Omega outside W_D8
        // (odd sign count); see the weyl tests.
        std::array<int, 8> p{1, 2, 3, 4, 5, 6, 7, 0}, s{1, 1, 1, -1, 1, 1, 1, 1};
        const SignedPerm odd = SignedPerm::make(p, s);
        d = omega_orbits(std::vector<weyl::Perm16>{weyl::omega_perm(odd)});
        CHECK(d.symbols.size() == 1);
        CHECK(d.lines.size() == 1);
    }

    TEST_CASE("the quotient map intertwines the two actions") {
        std::mt19937_64 rng(1);
        for (int t = 0; t < 200; ++t) {
            std::vector<SignedPerm> gens{weyl::random_wd8(rng)};
            if (t % 3 == 0) gens.push_back(weyl::random_wd8(rng));
            const auto d = omega_orbits(gens);
            std::set<std::vector<int>> images;
            for (const auto& o : d.symbols) {
                std::set<int> lines;
                for (int x : o) lines.insert(weyl::symbol_index(x));
                images.insert(std::vector<int>(lines.begin(), lines.end()));
            }
            CHECK(images == std::set<std::vector<int>>(d.lines.begin(), d.lines.end()));
            for (const auto& g : gens) {
                const auto p = weyl::omega_perm(g);
                for (int x = 0; x < 16; ++x)
                    CHECK(weyl::symbol_index(p[x]) == g.perm[weyl::symbol_index(x)]);
            }
        }
    }
}

TEST_SUITE("char_poly_mult") {
    TEST_CASE("split algebra gives elementary symmetric functions") {
        std::vector<Rational> a;
        for (long i = 1; i <= 8; ++i) a.emplace_back(i);
        CHECK(char_poly_mult(split_presentation(a)) == linear_product({1, 2, 3, 4, 5, 6, 7, 8}));
    }

    TEST_CASE("quadratic factor contributes its minimal polynomial") {
        EtalePresentation p = split_presentation({Rational(1), Rational(2), Rational(3), Rational(5), Rational(7),
                                                  Rational(11)});
        p.factors.insert(p.factors.begin(), EtaleFactor{q({-2, 0, 1}), q({0, 1})});
        CHECK(char_poly_mult(p) == q({-2, 0, 1}) * linear_product({1, 2, 3, 5, 7, 11}));
    }

    TEST_CASE("example octic") {
        const QPoly expected = q({-1, 0, 1}) * q({-4, 0, 1}) * q({-9, 0, 1}) * q({-16, 0, 1});
        CHECK(char_poly_mult(split_presentation(example_alphas())) == expected);
        const auto ints = integer_octic(expected);
        CHECK(ints == std::vector<BigInt>{576, 0, -820, 0, 273, 0, -30, 0, 1});
    }

    TEST_CASE("agrees with the multiplication-matrix characteristic polynomial") {
        std::mt19937_64 rng(2);
        std::uniform_int_distribution<long> c(-5, 5);
        const std::vector<QPoly> moduli{q({-1, -1, 0, 1}), q({-2, 0, 0, 0, 1}), q({1, 1, 1, 1, 1}), q({-2, 0, 1})};
        for (int t = 0; t < 100; ++t) {
            const QPoly& m = moduli[t % moduli.size()];
            std::vector<Rational> ac;
            for (int i = 0; i < m.degree(); ++i) {
                Rational x(c(rng), 1 + (t % 3));
                x.canonicalize();
                ac.push_back(x);
            }
            const QPoly alpha(ac, Rational(0));
            EtalePresentation p;
            p.factors.push_back({m, alpha});
            std::vector<Rational> rest;
            for (int i = m.degree(); i < 8; ++i) rest.emplace_back(c(rng));
            for (const auto& f : split_presentation(rest).factors) p.factors.push_back(f);
            QPoly expected = matrix_char_poly(multiplication_matrix(m, alpha));
            for (const auto& r : rest) expected *= QPoly(std::vector<Rational>{-r, 1}, Rational(0));
            const QPoly got = char_poly_mult(p);
            CHECK(got == expected);
            CHECK(got.degree() == 8);
        }
    }

    TEST_CASE("certificates") {
        EtalePresentation p = split_presentation({Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)});
        p.factors.push_back({q({-2, 0, 0, 1}), q({0, 1})});
        certify(p);
        for (const auto& f : p.factors) {
            CHECK(f.squarefree);
            REQUIRE(f.irreducible_mod.has_value());
        }
        // t^3 - 2 is irreducible mod 7 (2 is not a cube there)
        CHECK(*p.factors.back().irreducible_mod == 7);
    }
}

TEST_SUITE("norm") {
    TEST_CASE("examples") {
        auto r = norm_and_dagger_check(split_presentation(example_alphas()));
        CHECK(r.norm == 576);
        CHECK(r.is_square);

        auto a = example_alphas();
        a[0] *= 3;
        r = norm_and_dagger_check(split_presentation(a));
        CHECK(r.norm == 576 * 3);
        CHECK_FALSE(r.is_square);

        // scaling alpha on a degree-2 factor multiplies the norm by 3^2
        EtalePresentation p = split_presentation({Rational(1), Rational(2), Rational(3), Rational(6), Rational(5),
                                                  Rational(5)});
        p.factors.push_back({q({-2, 0, 1}), q({0, 1})});
        const Rational before = norm_and_dagger_check(p).norm;
        p.factors.back().alpha = q({0, 3});
        CHECK(norm_and_dagger_check(p).norm == before * 9);

        a = example_alphas();
        a[4] = 0;
        CHECK_THROWS_AS(norm_and_dagger_check(split_presentation(a)), ZeroNorm);
    }
}

TEST_SUITE("frobenius") {
    const std::vector<BigInt> example{576, 0, -820, 0, 273, 0, -30, 0, 1};

    TEST_CASE("example octic at 101 against the quadratic residue table") {
        const auto& F = exact::FqField::get(101, 1);
        int nonresidues = 0;
        for (long a : {1, -1, 2, -2, 3, -3, 4, -4}) nonresidues += !exact::is_square(exact::Fq(F, a));
        CHECK(nonresidues == 4);
        std::vector<int> expected(nonresidues, 2);
        expected.insert(expected.end(), 16 - 2 * nonresidues, 1);
        CHECK(frobenius_cycle_type(example, 101) == expected);
    }

    TEST_CASE("bad primes") {
        CHECK_THROWS_AS(frobenius_cycle_type(example, 3), BadPrime);
        CHECK_THROWS_AS(frobenius_cycle_type(example, 5), BadPrime); // 4 = -1
        CHECK_THROWS_AS(frobenius_cycle_type(example, 7), BadPrime); // 4 = -3
        std::vector<BigInt> lead = example;
        lead[8] = 11;
        CHECK_THROWS_AS(frobenius_cycle_type(lead, 11), BadPrime);
    }

    TEST_CASE("split base: parts are 1 or 2 and pair up under the sign involution") {
        const auto f = integer_octic(linear_product({1, 4, 9, 16, 25, 36, 49, 64}));
        for (std::uint64_t p = 11; p < 400; ++p) {
            if (!exact::is_prime(p)) continue;
            try {
                const auto t = frobenius_cycle_type(f, p);
                int total = 0;
                for (int x : t) {
                    CHECK((x == 1 || x == 2));
                    total += x;
                }
                CHECK(total == 16);
            } catch (const BadPrime&) {
            }
        }
    }

    TEST_CASE("parity: the square norm forces an even number of 2-cycles") {
        int good = 0;
        for (std::uint64_t p = 11; p < 2000; ++p) {
            if (!exact::is_prime(p)) continue;
            try {
                const auto t = frobenius_cycle_type(example, p);
                ++good;
                CHECK(std::count(t.begin(), t.end(), 2) % 2 == 0);
            } catch (const BadPrime&) {
            }
        }
        CHECK(good > 100);
    }

    TEST_CASE("chebotarev sample on the example lands in the even sign group") {
        const auto allowed = cycle_types(even_sign_group());
        CHECK(allowed.size() == 5); // 0, 2, 4, 6 or 8 two-cycles
        const auto report = chebotarev_sample(example, 5, 400, allowed);
        int good = 0;
        for (const auto& e : report) {
            if (!e.good) continue;
            ++good;
            CHECK(e.realized);
        }
        CHECK(good >= 50);
        // a group that is too small misses some classes
        const auto tiny = cycle_types({SignedPerm::identity()});
        int missed = 0;
        for (const auto& e : chebotarev_sample(example, 5, 400, tiny)) missed += e.good && !e.realized;
        CHECK(missed > 0);
    }
}
