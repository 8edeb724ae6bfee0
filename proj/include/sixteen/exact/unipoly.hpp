#pragma once

#include "sixteen/errors.hpp"
#include "sixteen/exact/fq.hpp"
#include "sixteen/exact/rational.hpp"

#include <sstream>
#include <tuple>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

namespace sixteen::exact {

/// Dense univariate polynomial over a field F (Rational or Fq). Coefficient
/// i multiplies z^i; the stored vector never has a zero leading entry. A
/// prototype zero is carried along so that field contexts survive even for
/// the zero polynomial.
template <class F>
class UniPoly {
public:
    explicit UniPoly(F zero) : zero_(std::move(zero)) {}
    UniPoly(std::vector<F> coeffs, F zero) : c_(std::move(coeffs)), zero_(std::move(zero)) { normalize(); }

    static UniPoly from_ints(const std::vector<std::int64_t>& coeffs, const F& proto) {
        std::vector<F> c;
        c.reserve(coeffs.size());
        for (auto v : coeffs) c.push_back(from_int_like(proto, v));
        return UniPoly(std::move(c), zero_like(proto));
    }
    static UniPoly constant(const F& a) { return UniPoly(std::vector<F>{a}, zero_like(a)); }
    static UniPoly monomial(const F& a, int degree) {
        std::vector<F> c(degree + 1, zero_like(a));
        c[degree] = a;
        return UniPoly(std::move(c), zero_like(a));
    }
    static UniPoly x(const F& proto) { return monomial(one_like(proto), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }
    const F& zero() const { return zero_; }
    F one() const { return one_like(zero_); }
    F coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : zero_; }
    const F& lead() const {
        if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
        return c_.back();
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        const F inv = F(one() / lead());
        return *this * inv;
    }

    F eval(const F& x) const {
        F acc = zero_;
        for (int i = degree(); i >= 0; --i) acc = F(acc * x + c_[i]);
        return acc;
    }

    UniPoly derivative() const {
        std::vector<F> d;
        for (int i = 1; i <= degree(); ++i) d.push_back(F(c_[i] * from_int_like(zero_, i)));
        return UniPoly(std::move(d), zero_);
    }

    /// f(z) -> f(z^2).
    UniPoly compose_square() const {
        std::vector<F> d(c_.empty() ? 0 : 2 * c_.size() - 1, zero_);
        for (std::size_t i = 0; i < c_.size(); ++i) d[2 * i] = c_[i];
        return UniPoly(std::move(d), zero_);
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& a : r.c_) a = F(-a);
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F(c_[i] + o.c_[i]);
        normalize();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F(c_[i] - o.c_[i]);
        normalize();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly(a.zero_);
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (exact::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = F(r[i + j] + a.c_[i] * b.c_[j]);
        }
        return UniPoly(std::move(r), a.zero_);
    }
    friend UniPoly operator*(UniPoly a, const F& s) {
        for (auto& x : a.c_) x = F(x * s);
        a.normalize();
        return a;
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws ZeroPolynomial for a zero divisor.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw ZeroPolynomial("division by zero polynomial");
        UniPoly q(a.zero_), r = a;
        if (a.degree() < b.degree()) return {q, r};
        const F lead_inv = F(b.one() / b.lead());
        q.c_.assign(a.degree() - b.degree() + 1, a.zero_);
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const int shift = r.degree() - b.degree();
            const F t = F(r.lead() * lead_inv);
            q.c_[shift] = t;
            for (int j = 0; j <= b.degree(); ++j) r.c_[shift + j] = F(r.c_[shift + j] - t * b.c_[j]);
            r.normalize();
        }
        q.normalize();
        return {q, r};
    }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

    std::string to_string(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            if (is_zero_coeff(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << coeff_string(c_[i]);
            if (i > 0) os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
        }
        return os.str();
    }

private:
    static bool is_zero_coeff(const F& a) { return exact::is_zero(a); }
    static std::string coeff_string(const F& a) {
        if constexpr (std::is_same_v<F, Rational>) return a.get_str();
        else return a.to_string();
    }
    void normalize() {
        while (!c_.empty() && exact::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
    F zero_;
};

using QPoly = UniPoly<Rational>;
using FqPoly = UniPoly<Fq>;

/// Monic gcd (zero when both inputs are zero).
template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero()) {
        UniPoly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd: returns (g, s, t) with s a + t b = g and g monic.
template <class F>
std::tuple<UniPoly<F>, UniPoly<F>, UniPoly<F>> xgcd(UniPoly<F> a, UniPoly<F> b) {
    const F z = a.zero();
    UniPoly<F> s0 = UniPoly<F>::constant(one_like(z)), s1(z), t0(z), t1 = UniPoly<F>::constant(one_like(z));
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        UniPoly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1), s1 = std::move(s2);
        t0 = std::move(t1), t1 = std::move(t2);
    }
    if (a.is_zero()) return {a, s0, t0};
    const F inv = F(one_like(z) / a.lead());
    return {a * inv, s0 * inv, t0 * inv};
}

/// base^e mod m.
template <class F>
UniPoly<F> powmod(const UniPoly<F>& base, const BigInt& e, const UniPoly<F>& m) {
    UniPoly<F> acc = UniPoly<F>::constant(one_like(base.zero())) % m;
    const UniPoly<F> b = base % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (sgn(e) == 0) return acc;
    for (std::size_t i = bits; i-- > 0;) {
        acc = (acc * acc) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * b) % m;
    }
    return acc;
}

/// Substitute the polynomial x into f, reducing modulo m.
template <class F>
UniPoly<F> compose_mod(const UniPoly<F>& f, const UniPoly<F>& x, const UniPoly<F>& m) {
    UniPoly<F> acc(f.zero());
    for (int i = f.degree(); i >= 0; --i) acc = (acc * x + UniPoly<F>::constant(f.coeff(i))) % m;
    return acc;
}

/// Polynomial of degree < n through the points (xs[i], ys[i]) with distinct
/// xs (Newton divided differences).
template <class F>
UniPoly<F> interpolate(const std::vector<F>& xs, std::vector<F> ys) {
    const std::size_t n = xs.size();
    const F z = zero_like(ys.at(0));
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
    UniPoly<F> acc(z);
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * UniPoly<F>(std::vector<F>{z - xs[i], one_like(z)}, z) + UniPoly<F>::constant(ys[i]);
    }
    return acc;
}

/// Lift an integer polynomial to F_p.
FqPoly reduce_mod_p(const std::vector<BigInt>& coeffs, const FqField& field);

/// Map a polynomial over the prime field into an extension field.
FqPoly embed(const FqPoly& f, const FqField& target);

} // namespace sixteen::exact
