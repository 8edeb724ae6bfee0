#include "sixteen/exact/factor.hpp"

#include "sixteen/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace sixteen::exact {

FqPoly reduce_mod_p(const std::vector<BigInt>& coeffs, const FqField& field) {
    const Fq zero(field, 0);
    std::vector<Fq> c;
    c.reserve(coeffs.size());
    const BigInt p = static_cast<unsigned long>(field.characteristic());
    for (const auto& a : coeffs) {
        BigInt r = a % p;
        if (sgn(r) < 0) r += p;
        c.emplace_back(field, static_cast<std::int64_t>(r.get_si()));
    }
    return FqPoly(std::move(c), zero);
}

FqPoly embed(const FqPoly& f, const FqField& target) {
    const Fq zero(target, 0);
    const FqField& source = f.zero().field();
    if (&source == &target) return f;
    if (source.characteristic() != target.characteristic())
        throw Error("embedding between fields of different characteristic");
    std::vector<Fq> c;
    for (const auto& a : f.coeffs()) {
        if (!a.in_prime_field()) throw Error("only prime-field coefficients can be embedded");
        c.emplace_back(target, static_cast<std::int64_t>(a.prime_value()));
    }
    return FqPoly(std::move(c), zero);
}

namespace {

bool less_poly(const FqPoly& a, const FqPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

// Coefficientwise p-th root of a polynomial whose exponents are all divisible by p.
FqPoly pth_root(const FqPoly& f) {
    const FqField& F = f.zero().field();
    const std::uint64_t p = F.characteristic();
    BigInt e = F.order() / static_cast<unsigned long>(p); // a -> a^{q/p} inverts Frobenius
    std::vector<Fq> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i).pow(e));
    return FqPoly(std::move(c), f.zero());
}

FqPoly one_poly(const FqPoly& like) { return FqPoly::constant(like.one()); }

FqPoly x_poly(const FqPoly& like) { return FqPoly::x(like.zero()); }

std::vector<std::pair<FqPoly, int>> distinct_degree(FqPoly f) {
    std::vector<std::pair<FqPoly, int>> out;
    const BigInt& q = f.zero().field().order();
    const FqPoly x = x_poly(f);
    FqPoly h = x;
    for (int i = 1; f.degree() >= 2 * i; ++i) {
        h = powmod(h, q, f);
        FqPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

void equal_degree(const FqPoly& g, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const FqField& F = g.zero().field();
    BigInt e = 1;
    for (int i = 0; i < d; ++i) e *= F.order();
    e = (e - 1) / 2;
    for (;;) {
        std::vector<Fq> c;
        for (int i = 0; i < g.degree(); ++i) c.push_back(Fq::random(F, rng));
        FqPoly a(std::move(c), g.zero());
        if (a.degree() < 1) continue;
        FqPoly b = powmod(a, e, g) - one_poly(g);
        FqPoly u = gcd(g, b);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree(u, d, rng, out);
            equal_degree(g / u, d, rng, out);
            return;
        }
    }
}

std::vector<Fq> linear_roots(const FqPoly& g, std::mt19937_64& rng) {
    std::vector<FqPoly> lin;
    if (g.degree() > 0) equal_degree(g.monic(), 1, rng, lin);
    std::vector<Fq> roots;
    for (const auto& l : lin) roots.push_back(-l.coeff(0));
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

std::vector<Factor> squarefree_decomposition(const FqPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree decomposition of zero");
    std::vector<Factor> out;
    if (f.degree() == 0) return out;
    const std::uint64_t p = f.zero().field().characteristic();
    FqPoly g = f.monic();
    FqPoly c = gcd(g, g.derivative());
    FqPoly w = g / c;
    int i = 1;
    while (w.degree() > 0) {
        FqPoly y = gcd(w, c);
        FqPoly fac = w / y;
        if (fac.degree() > 0) out.push_back({fac.monic(), i});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& part : squarefree_decomposition(pth_root(c))) {
            part.multiplicity *= static_cast<int>(p);
            out.push_back(part);
        }
    }
    return out;
}

bool is_squarefree(const FqPoly& f) {
    if (f.is_zero()) return false;
    auto parts = squarefree_decomposition(f);
    return std::all_of(parts.begin(), parts.end(), [](const Factor& x) { return x.multiplicity == 1; });
}

bool is_perfect_square_up_to_unit(const FqPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("square test of zero polynomial");
    auto parts = squarefree_decomposition(f);
    return std::all_of(parts.begin(), parts.end(), [](const Factor& x) { return x.multiplicity % 2 == 0; });
}

std::vector<Factor> factor_univariate_fq(const FqPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw ZeroPolynomial("factorisation of zero polynomial");
    if (f.zero().field().characteristic() == 2) throw Error("characteristic 2 is not supported");
    std::mt19937_64 rng(seed);
    std::vector<Factor> out;
    for (const auto& part : squarefree_decomposition(f)) {
        for (const auto& [g, d] : distinct_degree(part.poly)) {
            std::vector<FqPoly> pieces;
            equal_degree(g, d, rng, pieces);
            for (auto& piece : pieces) out.push_back({piece, part.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (less_poly(a.poly, b.poly)) return true;
        if (less_poly(b.poly, a.poly)) return false;
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

bool is_irreducible(const FqPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("irreducibility of zero polynomial");
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const FqPoly g = f.monic();
    const BigInt& q = g.zero().field().order();
    const FqPoly x = x_poly(g);
    auto frob_power = [&](int times) {
        FqPoly h = x;
        for (int i = 0; i < times; ++i) h = powmod(h, q, g);
        return h;
    };
    if (!(frob_power(n) - x).is_zero()) return false;
    for (int r = 2; r <= n; ++r) {
        bool prime = true;
        for (int s = 2; s * s <= r; ++s)
            if (r % s == 0) prime = false;
        if (!prime || n % r != 0) continue;
        if (gcd(g, frob_power(n / r) - x).degree() > 0) return false;
    }
    return true;
}

std::vector<Fq> roots_in(const FqPoly& f, const FqField& ext, std::uint64_t seed) {
    if (f.is_zero()) throw ZeroPolynomial("roots of zero polynomial");
    FqPoly g = embed(f, ext).monic();
    if (g.degree() < 1) return {};
    const FqPoly x = x_poly(g);
    FqPoly split = gcd(g, powmod(x, ext.order(), g) - x);
    std::mt19937_64 rng(seed);
    return linear_roots(split, rng);
}

int splitting_degree(const FqPoly& f) {
    int k = 1;
    for (const auto& fac : factor_univariate_fq(f)) k = std::lcm(k, fac.poly.degree());
    return k;
}

bool is_square(const Fq& a) {
    if (a.is_zero()) return true;
    const BigInt e = (a.field().order() - 1) / 2;
    return a.pow(e).is_one();
}

Fq sqrt_in_fq(const Fq& a) {
    const FqField& F = a.field();
    if (a.is_zero()) return a;
    if (!is_square(a)) throw NotASquare(a.to_string());
    // Tonelli-Shanks with q - 1 = 2^s t
    BigInt t = F.order() - 1;
    int s = 0;
    while (mpz_even_p(t.get_mpz_t())) {
        t /= 2;
        ++s;
    }
    // deterministic non-residue: scan elements in counter order
    Fq z;
    {
        std::vector<std::uint64_t> c(F.degree(), 0);
        for (;;) {
            int i = 0;
            while (i < F.degree() && ++c[i] == F.characteristic()) c[i++] = 0;
            Fq cand = Fq::from_coords(F, c);
            if (!is_square(cand)) {
                z = cand;
                break;
            }
        }
    }
    Fq c = z.pow(t);
    Fq x = a.pow(BigInt((t + 1) / 2));
    Fq b = a.pow(t);
    int m = s;
    while (!b.is_one()) {
        int i = 0;
        Fq b2 = b;
        while (!b2.is_one()) {
            b2 *= b2;
            ++i;
        }
        Fq w = c;
        for (int j = 0; j < m - i - 1; ++j) w *= w;
        x *= w;
        c = w * w;
        b *= c;
        m = i;
    }
    Fq neg = -x;
    return neg < x ? neg : x;
}

} // namespace sixteen::exact
