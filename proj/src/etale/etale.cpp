#include "sixteen/etale/etale.hpp"

#include "sixteen/errors.hpp"
#include "sixteen/exact/factor.hpp"
#include "sixteen/exact/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace sixteen::etale {

using exact::Fq;
using exact::FqField;
using exact::FqPoly;

namespace {

OrbitData orbits_of(const std::vector<weyl::Perm16>& gens) {
    OrbitData d;
    std::array<int, 16> comp;
    comp.fill(-1);
    for (int start = 0; start < 16; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> orbit{start};
        comp[start] = static_cast<int>(d.symbols.size());
        for (std::size_t h = 0; h < orbit.size(); ++h)
            for (const auto& g : gens) {
                const int y = g[orbit[h]];
                if (comp[y] < 0) comp[y] = comp[start], orbit.push_back(y);
            }
        std::sort(orbit.begin(), orbit.end());
        d.symbols.push_back(std::move(orbit));
    }
    std::array<int, 8> line_comp;
    line_comp.fill(-1);
    for (int i = 0; i < 8; ++i) {
        if (line_comp[i] >= 0) continue;
        std::vector<int> orbit{i};
        line_comp[i] = static_cast<int>(d.lines.size());
        for (std::size_t h = 0; h < orbit.size(); ++h)
            for (const auto& g : gens) {
                const int y = weyl::symbol_index(g[weyl::symbol(orbit[h], 1)]);
                if (line_comp[y] < 0) line_comp[y] = line_comp[i], orbit.push_back(y);
            }
        std::sort(orbit.begin(), orbit.end());
        d.lines.push_back(std::move(orbit));
    }
    return d;
}

QPoly monic_modulus(const QPoly& m) {
    if (m.degree() < 1) throw Error("factor modulus must have degree >= 1");
    return m.monic();
}

// Integer polynomial proportional to a rational one (denominators cleared).
std::vector<BigInt> clear_denominators(const QPoly& f) {
    BigInt l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> out;
    for (const auto& c : f.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
    return out;
}

} // namespace

OrbitData omega_orbits(const std::vector<weyl::SignedPerm>& gens) {
    std::vector<weyl::Perm16> p;
    for (const auto& g : gens) p.push_back(weyl::omega_perm(g));
    return orbits_of(p);
}

OrbitData omega_orbits(const std::vector<weyl::Perm16>& gens) {
    for (const auto& g : gens)
        for (int s = 0; s < 16; ++s)
            if (g[s ^ 1] != (g[s] ^ 1)) throw Error("permutation does not commute with the sign involution");
    return orbits_of(gens);
}

int EtalePresentation::degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.modulus.degree();
    return d;
}

EtalePresentation split_presentation(const std::vector<Rational>& alphas) {
    EtalePresentation p;
    for (const auto& a : alphas)
        p.factors.push_back({QPoly(std::vector<Rational>{0, 1}, Rational(0)), QPoly::constant(a), true, std::nullopt});
    return p;
}

void certify(EtalePresentation& pres, std::uint64_t prime_bound) {
    for (auto& f : pres.factors) {
        const QPoly m = monic_modulus(f.modulus);
        f.squarefree = exact::gcd(m, m.derivative()).degree() == 0;
        f.irreducible_mod.reset();
        const auto ints = clear_denominators(m);
        for (std::uint64_t p = 5; p < prime_bound; ++p) {
            if (!exact::is_prime(p) || mpz_divisible_ui_p(ints.back().get_mpz_t(), p)) continue;
            if (exact::is_irreducible(exact::reduce_mod_p(ints, FqField::get(p, 1)))) {
                f.irreducible_mod = p;
                break;
            }
        }
    }
}

QPoly char_poly_mult(const EtalePresentation& pres) {
    if (pres.degree() != 8) throw Error("etale algebra must have degree 8");
    QPoly acc = QPoly::constant(Rational(1));
    for (const auto& f : pres.factors) {
        const QPoly m = monic_modulus(f.modulus);
        const QPoly a = f.alpha % m;
        const int d = m.degree();
        if (a.degree() <= 0) {
            const QPoly lin(std::vector<Rational>{-a.coeff(0), 1}, Rational(0));
            for (int i = 0; i < d; ++i) acc *= lin;
            continue;
        }
        std::vector<Rational> xs, ys;
        for (int x = 0; x <= d; ++x) {
            const QPoly g = QPoly::constant(Rational(x)) - a;
            xs.emplace_back(x);
            ys.push_back(exact::resultant(m, g));
        }
        acc *= exact::interpolate(xs, ys);
    }
    return acc;
}

std::vector<std::vector<Rational>> multiplication_matrix(const QPoly& modulus, const QPoly& alpha) {
    const QPoly m = monic_modulus(modulus);
    const int d = m.degree();
    std::vector<std::vector<Rational>> out(d, std::vector<Rational>(d, Rational(0)));
    for (int j = 0; j < d; ++j) {
        const QPoly col = (alpha * QPoly::monomial(Rational(1), j)) % m;
        for (int i = 0; i < d; ++i) out[i][j] = col.coeff(i);
    }
    return out;
}

QPoly matrix_char_poly(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t l = 0; l < n; ++l) next[i][j] += a[i][l] * mk[l][j];
                if (i == j) next[i][j] += c[n - k + 1];
            }
        mk = std::move(next);
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return QPoly(c, Rational(0));
}

NormCheck norm_and_dagger_check(const EtalePresentation& pres) {
    Rational n = 1;
    for (const auto& f : pres.factors) {
        const QPoly m = monic_modulus(f.modulus);
        const QPoly a = f.alpha % m;
        if (a.is_zero()) throw ZeroNorm("alpha vanishes on a factor");
        const Rational r = exact::resultant(m, a);
        if (sgn(r) == 0) throw ZeroNorm("alpha is a zero divisor");
        n *= r;
    }
    return {n, exact::is_rational_square(n)};
}

std::vector<BigInt> integer_octic(const QPoly& f) {
    if (f.degree() != 8) throw Error("octic must have degree 8");
    return clear_denominators(f);
}

std::vector<int> frobenius_cycle_type(const std::vector<BigInt>& f, std::uint64_t p) {
    if (f.size() != 9) throw Error("octic needs 9 coefficients");
    if (p < 3 || !exact::is_prime(p)) throw BadPrime(std::to_string(p) + " is not an odd prime");
    if (mpz_divisible_ui_p(f[8].get_mpz_t(), p)) throw BadPrime("p divides the leading coefficient");
    const FqPoly g = exact::reduce_mod_p(f, FqField::get(p, 1)).compose_square();
    if (!exact::is_squarefree(g)) throw BadPrime("f(z^2) is not squarefree mod " + std::to_string(p));
    std::vector<int> t;
    for (const auto& fac : exact::factor_univariate_fq(g)) t.push_back(fac.poly.degree());
    std::sort(t.rbegin(), t.rend());
    return t;
}

std::set<std::vector<int>> cycle_types(const std::vector<weyl::SignedPerm>& group) {
    std::set<std::vector<int>> out;
    for (const auto& g : group) out.insert(weyl::cycle_type(weyl::omega_perm(g)));
    return out;
}

std::vector<ChebotarevEntry> chebotarev_sample(const std::vector<BigInt>& f, std::uint64_t lo, std::uint64_t hi,
                                               const std::set<std::vector<int>>& allowed) {
    std::vector<ChebotarevEntry> out;
    for (std::uint64_t p = std::max<std::uint64_t>(lo, 5); p < hi; ++p) {
        if (!exact::is_prime(p)) continue;
        ChebotarevEntry e{p, {}, false, false};
        try {
            e.type = frobenius_cycle_type(f, p);
            e.good = true;
            e.realized = allowed.count(e.type) > 0;
        } catch (const BadPrime&) {
        }
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace sixteen::etale
