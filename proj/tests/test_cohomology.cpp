#include "doctest.h"

#include "sixteen/cohomology/search.hpp"
#include "sixteen/errors.hpp"

#include <random>

using namespace sixteen;
using namespace sixteen::cohomology;
using weyl::SignedPerm;

namespace {

FinAbGroup G(std::vector<long> f) { return FinAbGroup::from_factors(std::move(f)); }

IntegralRep rep_of(const std::vector<SignedPerm>& gens) {
    return rep_from_subgroup(weyl::subgroup_generate(gens, 64));
}

SignedPerm transposition(int i, int j) {
    SignedPerm t;
    std::swap(t.perm[i], t.perm[j]);
    return t;
}

// H^1 from the full system over all ordered pairs with one unknown vector per
// element. Only feasible for tiny groups; independent of the generator-based
// assembly used by h1().
FinAbGroup h1_all_pairs(const IntegralRep& rep) {
    const std::size_t n = rep.order(), r = rep.rank(), cols = n * r;
    IntMatrix sys(n * n * r, cols);
    std::size_t row = 0;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            const std::size_t gh = rep.table[g][h];
            for (std::size_t i = 0; i < r; ++i, ++row) {
                sys(row, gh * r + i) += 1;
                sys(row, g * r + i) -= 1;
                for (std::size_t l = 0; l < r; ++l) sys(row, h * r + l) -= rep.matrices[g](i, l);
            }
        }
    const IntMatrix z1 = exact::integer_kernel(sys);
    IntMatrix coords(z1.cols(), r);
    for (std::size_t v = 0; v < r; ++v) {
        std::vector<BigInt> target(cols), c;
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t i = 0; i < r; ++i) target[g * r + i] = rep.matrices[g](i, v) - (i == v ? 1 : 0);
        REQUIRE(exact::solve_integer(z1, target, c));
        for (std::size_t i = 0; i < z1.cols(); ++i) coords(i, v) = c[i];
    }
    return cokernel(coords);
}

// Random unimodular matrix with its inverse.
std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n) {
    IntMatrix p = IntMatrix::identity(n), q = IntMatrix::identity(n);
    std::uniform_int_distribution<int> idx(0, static_cast<int>(n) - 1), k(-2, 2);
    for (int step = 0; step < 30; ++step) {
        const int i = idx(rng), j = idx(rng), c = k(rng);
        if (i == j || c == 0) continue;
        p.add_col(i, j, c);  // p <- p E, E = I + c e_j e_i^T
        q.add_row(j, i, -c); // q <- E^{-1} q
    }
    return {p, q};
}

} // namespace

TEST_SUITE("integral representation") {
    TEST_CASE("E8 basis and Gram matrix") {
        CHECK(exact::determinant(e8_gram()) == 1);
        for (const auto& r : weyl::e8_roots()) CHECK_NOTHROW(e8_coordinates(r));
    }

    TEST_CASE("examples") {
        const auto trivial = rep_of({});
        REQUIRE(trivial.order() == 1);
        CHECK(trivial.matrices[0] == IntMatrix::identity(8));

        const auto minus = rep_of({SignedPerm::minus_identity()});
        REQUIRE(minus.order() == 2);
        CHECK(minus.matrices[1] == IntMatrix::identity(8) - IntMatrix::identity(8) - IntMatrix::identity(8));

        const auto t = rep_of({transposition(0, 1)});
        const IntMatrix& m = t.matrices[1];
        CHECK(abs(exact::determinant(m)) == 1);
        CHECK(m.transpose() * e8_gram() * m == e8_gram());
    }

    TEST_CASE("matrices preserve the form and follow the table") {
        std::mt19937_64 rng(1);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<SignedPerm> gens{weyl::random_wd8(rng)};
            std::vector<SignedPerm> group;
            try {
                group = weyl::subgroup_generate(gens, 64);
            } catch (const CapExceeded&) {
                continue;
            }
            const auto rep = rep_from_subgroup(group);
            for (std::size_t a = 0; a < rep.order(); ++a) {
                CHECK(rep.matrices[a].transpose() * e8_gram() * rep.matrices[a] == e8_gram());
                for (std::size_t b = 0; b < rep.order(); ++b)
                    CHECK(rep.matrices[a] * rep.matrices[b] == rep.matrices[rep.table[a][b]]);
            }
        }
    }

    TEST_CASE("non-closed input") {
        CHECK_THROWS_AS(rep_from_subgroup({SignedPerm::identity(), transposition(0, 1), transposition(1, 2)}),
                        NotClosed);
    }
}

TEST_SUITE("h1") {
    TEST_CASE("examples") {
        CHECK(h1(rep_of({})).trivial());
        // cyclic formula: N = 1 + (-1) = 0, so ker N = Z^8 and im(sigma-1) = 2Z^8
        CHECK(h1(rep_of({SignedPerm::minus_identity()})) == G({2, 2, 2, 2, 2, 2, 2, 2}));
        CHECK(h1_cyclic_oracle(rep_of({SignedPerm::minus_identity()}).matrices[1]) == G({2, 2, 2, 2, 2, 2, 2, 2}));
    }

    TEST_CASE("cap") {
        std::vector<SignedPerm> gens{SignedPerm::flips({0, 1}), SignedPerm::flips({2, 3}), SignedPerm::flips({4, 5}),
                                     SignedPerm::flips({6, 7}), SignedPerm::flips({0, 2}), SignedPerm::flips({0, 4})};
        const auto group = weyl::subgroup_generate(gens, 200);
        CHECK(group.size() == 64);
        CHECK_NOTHROW(h1(rep_from_subgroup(group)));
        CHECK_THROWS_AS(h1(rep_from_subgroup(group), 32), CapExceeded);
    }

    TEST_CASE("agrees with the cyclic oracle on 50 random cyclic subgroups") {
        std::mt19937_64 rng(50);
        int done = 0;
        while (done < 50) {
            const SignedPerm w = weyl::random_wd8(rng);
            if (w.order() > 64) continue;
            const auto rep = rep_of({w});
            CHECK(h1(rep) == h1_cyclic_oracle(rep.matrices[1]));
            ++done;
        }
    }

    TEST_CASE("agrees with the all-pairs system on small groups") {
        std::mt19937_64 rng(7);
        std::vector<std::vector<SignedPerm>> cases{
            {SignedPerm::minus_identity()},
            {SignedPerm::flips({0, 1}), SignedPerm::flips({2, 3})},
            {transposition(0, 1), SignedPerm::flips({2, 3})},
            {SignedPerm::flips({0, 1, 2, 3}), transposition(4, 5)},
        };
        while (cases.size() < 12) {
            const SignedPerm w = weyl::random_wd8(rng);
            const int o = w.order();
            if (o % 4 == 0) {
                SignedPerm x;
                for (int i = 0; i < o / 4; ++i) x = x * w;
                cases.push_back({x});
            }
        }
        for (const auto& gens : cases) {
            const auto rep = rep_of(gens);
            REQUIRE(rep.order() <= 4);
            CHECK(h1(rep) == h1_all_pairs(rep));
        }
    }

    TEST_CASE("invariant under unimodular change of basis") {
        std::mt19937_64 rng(20);
        int done = 0;
        while (done < 20) {
            std::vector<SignedPerm> gens{weyl::random_wd8(rng), SignedPerm::flips({0, 1, 2, 3})};
            std::vector<SignedPerm> group;
            try {
                group = weyl::subgroup_generate(gens, 64);
            } catch (const CapExceeded&) {
                continue;
            }
            auto rep = rep_from_subgroup(group);
            const auto [p, q] = random_unimodular(rng, 8);
            REQUIRE(p * q == IntMatrix::identity(8));
            IntegralRep conj = rep;
            for (auto& m : conj.matrices) m = q * m * p;
            CHECK(h1(rep) == h1(conj));
            ++done;
        }
    }

    TEST_CASE("exponent divides |G| and conjugate subgroups agree") {
        std::mt19937_64 rng(3);
        int done = 0;
        while (done < 40) {
            std::vector<SignedPerm> gens{weyl::random_wd8(rng)};
            if (done % 2) gens.push_back(SignedPerm::minus_identity());
            std::vector<SignedPerm> group;
            try {
                group = weyl::subgroup_generate(gens, 64);
            } catch (const CapExceeded&) {
                continue;
            }
            const FinAbGroup h = h1(rep_from_subgroup(group));
            for (long d : h.factors) CHECK(static_cast<long>(group.size()) % d == 0);
            const SignedPerm c = weyl::random_wd8(rng);
            std::vector<SignedPerm> conj_gens;
            for (const auto& g : gens) conj_gens.push_back(c * g * c.inverse());
            CHECK(h1(rep_of(conj_gens)) == h);
            ++done;
        }
    }
}

TEST_SUITE("search") {
    TEST_CASE("target list") {
        CHECK(brauer_targets(5).size() == 1);
        CHECK(brauer_targets(4).size() == 3);
        CHECK(brauer_targets(2).size() == 11);
        const auto d1 = brauer_targets(1);
        CHECK(d1.size() == 17);
        for (const auto& t : d1) CHECK(4 % t.exponent() == 0);
    }

    TEST_CASE("small targets") {
        SearchBudget budget;
        budget.candidates = 2000;
        CHECK(brauer_target_search(G({}), budget, 0).generators.empty());
        const auto w = brauer_target_search(G({2, 2, 2, 2, 2, 2, 2, 2}), budget, 0);
        CHECK(h1(rep_of(w.generators)) == G({2, 2, 2, 2, 2, 2, 2, 2}));
        const auto z4 = brauer_target_search(G({4}), budget, 0);
        CHECK(h1(rep_of(z4.generators)) == G({4}));
        CHECK(z4.order <= 64);
    }

    TEST_CASE("witness json round trip") {
        Witness w{G({2, 4}), {SignedPerm::minus_identity(), transposition(2, 5)}, 4};
        const auto back = witnesses_from_json(witnesses_to_json({w}));
        REQUIRE(back.size() == 1);
        CHECK(back[0].target == w.target);
        CHECK(back[0].generators == w.generators);
        CHECK(back[0].order == 4);
        CHECK_THROWS_AS(witnesses_from_json("[{\"target\": [2]}]"), ParseError);
    }
}

TEST_SUITE("blowdown") {
    TEST_CASE("trivial group, degree 2: complement is E7") {
        const auto b = blowdown_search({SignedPerm::identity()}, 2);
        REQUIRE(b.classes.size() == 1);
        CHECK(b.h1.trivial());
        CHECK(b.complement.cols() == 7);
        // E7 has discriminant 2
        CHECK(exact::determinant(b.complement.transpose() * e8_gram() * b.complement) == 2);
    }

    TEST_CASE("-I fixes no root") {
        CHECK_THROWS_AS(blowdown_search(weyl::subgroup_generate({SignedPerm::minus_identity()}, 64), 2), NotFound);
    }

    TEST_CASE("returned data is consistent") {
        std::mt19937_64 rng(4);
        int checked = 0;
        for (int trial = 0; trial < 200 && checked < 15; ++trial) {
            SignedPerm w = weyl::random_wd8(rng);
            const int o = w.order();
            if (o % 2) continue;
            SignedPerm x;
            for (int i = 0; i < o / 2; ++i) x = x * w;
            const auto group = weyl::subgroup_generate({x}, 64);
            for (int d = 2; d <= 4; ++d) {
                try {
                    const auto b = blowdown_search(group, d);
                    REQUIRE(b.classes.size() == static_cast<std::size_t>(d - 1));
                    for (std::size_t i = 0; i < b.classes.size(); ++i) {
                        for (const auto& g : group) CHECK(weyl::act_root(g, b.classes[i]) == b.classes[i]);
                        for (std::size_t j = i + 1; j < b.classes.size(); ++j)
                            CHECK(weyl::exceptional_pairing(b.classes[i], b.classes[j]) == 0);
                    }
                    CHECK(h1(restrict_rep(rep_from_subgroup(group), b.complement)) == b.h1);
                    ++checked;
                } catch (const NotFound&) {
                }
            }
        }
        CHECK(checked >= 15);
    }
}
