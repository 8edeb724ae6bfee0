#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sixteen::exact {

inline constexpr int kMaxVars = 8;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> exp{};

    int degree() const {
        int d = 0;
        for (auto e : exp) d += e;
        return d;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (exp[i] > o.exp[i]) return false;
        return true;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(a.exp[i] + b.exp[i]);
        return r;
    }
    /// a / b, assuming b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (exp[i] && o.exp[i]) return false;
        return true;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded reverse lexicographic comparison.
std::strong_ordering grevlex(const Monomial& a, const Monomial& b);

/// Multivariate polynomial over a prime field F_p, terms kept in strictly
/// decreasing grevlex order with nonzero coefficients.
class MPoly {
public:
    struct Term {
        Monomial mono;
        std::uint64_t coeff;
    };

    MPoly(int nvars, std::uint64_t p) : nvars_(nvars), p_(p) {}

    static MPoly variable(int nvars, std::uint64_t p, int index);
    static MPoly constant(int nvars, std::uint64_t p, std::int64_t c);
    static MPoly from_terms(int nvars, std::uint64_t p, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    std::uint64_t characteristic() const { return p_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Term& leading() const { return terms_.front(); }
    int total_degree() const;
    bool is_homogeneous() const;
    /// Coefficient of a monomial (0 when absent).
    std::uint64_t coeff(const Monomial& m) const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly scaled(std::uint64_t c) const;
    MPoly times_term(const Monomial& m, std::uint64_t c) const;
    MPoly monic() const;
    MPoly derivative(int var) const;
    friend bool operator==(const MPoly& a, const MPoly& b);

    /// Evaluate with values of any ring type T; `lift` maps a coefficient in
    /// [0, p) to T.
    template <class T, class Lift>
    T eval(const std::vector<T>& values, Lift lift) const {
        T acc = lift(0);
        for (const auto& t : terms_) {
            T v = lift(t.coeff);
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < t.mono.exp[i]; ++e) v = v * values[i];
            acc = acc + v;
        }
        return acc;
    }

    std::string to_string(const std::string& var = "x") const;

private:
    void add_in_place(const MPoly& b, std::uint64_t scale);

    int nvars_;
    std::uint64_t p_;
    std::vector<Term> terms_;
};

/// Reduced Groebner basis in grevlex order (Buchberger with the coprime and
/// chain criteria).
std::vector<MPoly> groebner_basis(const std::vector<MPoly>& gens);

/// Normal form of f with respect to a Groebner basis.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis);

/// True iff the homogeneous ideal has no zeros in projective space over the
/// algebraic closure, i.e. it contains a power of every variable.
bool groebner_projective_empty(const std::vector<MPoly>& forms);

struct HilbertData {
    int dimension;              // projective dimension; -1 for the empty set
    std::optional<long> degree; // set when dimension <= 0
};

HilbertData hilbert_data_zero_dim(const std::vector<MPoly>& forms);

/// Number of degree-d monomials outside the monomial ideal spanned by `leads`.
long hilbert_function(const std::vector<Monomial>& leads, int nvars, int d);

} // namespace sixteen::exact
