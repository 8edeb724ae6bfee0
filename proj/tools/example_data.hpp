#pragma once

#include "sixteen/exact/mpoly.hpp"
#include "sixteen/geometry/geometry.hpp"

#include <cstdint>
#include <vector>

// Published values for the worked example over F_101.
namespace sixteen::example {

inline constexpr std::uint64_t kPrime = 101;

// b = z0^4 + 86 z0^2 z1^2 + 24 z1^4 and c = -z0 z1^3, index = exponent of z0.
inline const std::vector<std::int64_t> kB{24, 0, 86, 0, 1};
inline const std::vector<std::int64_t> kC{0, -1, 0, 0, 0};

// Displayed matrix of linear forms: entry (r, c) = sum_i kForms[r][c][i] x_i.
inline constexpr int kForms[5][5][4] = {
    {{-1, 0, 0, 0}, {0, -51, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
    {{0, -51, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
    {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -51}},
    {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 86, 0, 1}, {51, 0, -51, 0}},
    {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -51}, {51, 0, -51, 0}, {0, 24, 0, 0}},
};

inline exact::MPoly monomial(std::int64_t c, std::vector<int> exps) {
    exact::Monomial m;
    for (int i = 0; i < 4; ++i) m.exp[i] = static_cast<std::uint8_t>(exps[i]);
    const auto p = static_cast<std::int64_t>(kPrime);
    return exact::MPoly::from_terms(4, kPrime, {{m, static_cast<std::uint64_t>(((c % p) + p) % p)}});
}

// The cubic as printed.
inline exact::MPoly printed_g() {
    return monomial(25, {2, 1, 0, 0}) + monomial(51, {1, 1, 1, 0}) + monomial(44, {0, 3, 0, 0}) +
           monomial(24, {0, 2, 0, 1}) + monomial(25, {0, 1, 2, 0}) + monomial(29, {0, 1, 0, 2}) +
           monomial(25, {0, 0, 0, 3});
}

// The quadric as printed: x0 x2 - x1^2.
inline exact::MPoly printed_q() { return monomial(1, {1, 0, 1, 0}) + monomial(-1, {0, 2, 0, 0}); }

// q(x0, 2 x1, x2, x3).
inline exact::MPoly double_x1(const exact::MPoly& q) {
    std::vector<exact::MPoly::Term> terms;
    for (auto t : q.terms()) {
        for (int e = 0; e < t.mono.exp[1]; ++e) t.coeff = t.coeff * 2 % kPrime;
        terms.push_back(t);
    }
    return exact::MPoly::from_terms(4, kPrime, terms);
}

inline bool tensor_matches(const geometry::BlockTensor& t) {
    const auto& F = exact::FqField::get(kPrime, 1);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c)
            for (int i = 0; i < 4; ++i)
                if (t.slices[i][r][c] != exact::Fq(F, kForms[r][c][i])) return false;
    return true;
}

} // namespace sixteen::example
