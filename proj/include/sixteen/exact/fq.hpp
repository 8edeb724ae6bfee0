#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sixteen::exact {

using BigInt = mpz_class;

bool is_prime(std::uint64_t n);

/// Finite field F_{p^k}, realised as F_p[t]/(m(t)) with m the smallest monic
/// irreducible polynomial of degree k in the order described by
/// `modulus()`. Instances are interned: `get` returns the same object for the
/// same (p, k) for the lifetime of the process.
class FqField {
public:
    static const FqField& get(std::uint64_t p, int k);

    std::uint64_t characteristic() const { return p_; }
    int degree() const { return k_; }
    /// Coefficients of the monic modulus, constant term first (size k + 1).
    /// The modulus is the first irreducible polynomial met when counting
    /// n = 0, 1, 2, ... and reading the digits of n in base p as
    /// (m_0, m_1, ..., m_{k-1}), m_0 least significant.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    const BigInt& order() const { return order_; }

    FqField(const FqField&) = delete;
    FqField& operator=(const FqField&) = delete;

private:
    FqField(std::uint64_t p, int k);

    std::uint64_t p_;
    int k_;
    std::vector<std::uint64_t> modulus_;
    BigInt order_;
};

/// Element of an FqField. Coordinates are on the power basis 1, t, ..., t^{k-1}.
class Fq {
public:
    Fq() = default;
    Fq(const FqField& field, std::int64_t value);
    static Fq from_coords(const FqField& field, std::vector<std::uint64_t> coords);
    static Fq generator(const FqField& field); // the class of t
    template <class Rng>
    static Fq random(const FqField& field, Rng& rng) {
        std::uniform_int_distribution<std::uint64_t> dist(0, field.characteristic() - 1);
        std::vector<std::uint64_t> c(field.degree());
        for (auto& x : c) x = dist(rng);
        return from_coords(field, std::move(c));
    }

    const FqField& field() const { return *field_; }
    bool has_field() const { return field_ != nullptr; }
    const std::vector<std::uint64_t>& coords() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the element lies in the prime field.
    bool in_prime_field() const;
    /// Least nonnegative representative; requires in_prime_field().
    std::uint64_t prime_value() const;

    Fq operator-() const;
    Fq& operator+=(const Fq& o);
    Fq& operator-=(const Fq& o);
    Fq& operator*=(const Fq& o);
    Fq& operator/=(const Fq& o);
    friend Fq operator+(Fq a, const Fq& b) { return a += b; }
    friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
    friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
    friend Fq operator/(Fq a, const Fq& b) { return a /= b; }

    Fq inverse() const;
    Fq pow(const BigInt& e) const;
    Fq pow(std::uint64_t e) const { return pow(BigInt(static_cast<unsigned long>(e))); }
    Fq frobenius() const;

    friend bool operator==(const Fq& a, const Fq& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
    /// Lexicographic on coordinates, constant coordinate first.
    friend std::strong_ordering operator<=>(const Fq& a, const Fq& b) { return a.c_ <=> b.c_; }

    std::string to_string() const;

private:
    const FqField* field_ = nullptr;
    std::vector<std::uint64_t> c_;
};

// Field-generic helpers used by the polynomial and matrix templates.
inline Fq zero_like(const Fq& a) { return Fq(a.field(), 0); }
inline Fq one_like(const Fq& a) { return Fq(a.field(), 1); }
inline bool is_zero(const Fq& a) { return a.is_zero(); }
inline Fq from_int_like(const Fq& a, std::int64_t v) { return Fq(a.field(), v); }

} // namespace sixteen::exact
