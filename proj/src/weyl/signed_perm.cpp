#include "sixteen/weyl/signed_perm.hpp"

#include "sixteen/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace sixteen::weyl {

Perm16 perm16_identity() {
    Perm16 p;
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm16 compose(const Perm16& a, const Perm16& b) {
    Perm16 r;
    for (int i = 0; i < 16; ++i) r[i] = a[b[i]];
    return r;
}

Perm16 inverse(const Perm16& a) {
    Perm16 r;
    for (int i = 0; i < 16; ++i) r[a[i]] = static_cast<std::uint8_t>(i);
    return r;
}

std::uint64_t pack(const Perm16& a) {
    std::uint64_t k = 0;
    for (int i = 0; i < 16; ++i) k |= static_cast<std::uint64_t>(a[i]) << (4 * i);
    return k;
}

std::vector<int> cycle_type(const Perm16& a) {
    std::array<bool, 16> seen{};
    std::vector<int> t;
    for (int i = 0; i < 16; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = a[j]) seen[j] = true, ++len;
        t.push_back(len);
    }
    std::sort(t.rbegin(), t.rend());
    return t;
}

SignedPerm SignedPerm::minus_identity() {
    SignedPerm w;
    w.signs.fill(-1);
    return w;
}

SignedPerm SignedPerm::flips(const std::vector<int>& coords) {
    SignedPerm w;
    for (int c : coords) w.signs[c] = static_cast<std::int8_t>(-w.signs[c]);
    return w;
}

SignedPerm SignedPerm::make(const std::array<int, 8>& perm, const std::array<int, 8>& signs) {
    SignedPerm w;
    std::array<bool, 8> hit{};
    for (int i = 0; i < 8; ++i) {
        if (perm[i] < 0 || perm[i] > 7 || hit[perm[i]]) throw ParseError("not a permutation of 8 symbols");
        hit[perm[i]] = true;
        if (signs[i] != 1 && signs[i] != -1) throw ParseError("signs must be +1 or -1");
        w.perm[i] = static_cast<std::uint8_t>(perm[i]);
        w.signs[i] = static_cast<std::int8_t>(signs[i]);
    }
    return w;
}

bool SignedPerm::is_identity() const { return *this == SignedPerm{}; }

bool SignedPerm::in_wd8() const { return sign_changes() % 2 == 0; }

int SignedPerm::sign_changes() const {
    return static_cast<int>(std::count(signs.begin(), signs.end(), -1));
}

SignedPerm SignedPerm::inverse() const {
    // w: e_i -> s(p(i)) e_{p(i)}; inverse sends e_{p(i)} -> s(p(i)) e_i.
    SignedPerm r;
    for (int i = 0; i < 8; ++i) {
        r.perm[perm[i]] = static_cast<std::uint8_t>(i);
        r.signs[i] = signs[perm[i]];
    }
    return r;
}

SignedPerm operator*(const SignedPerm& v, const SignedPerm& w) {
    SignedPerm r;
    for (int i = 0; i < 8; ++i) {
        const int j = w.perm[i];
        const int k = v.perm[j];
        r.perm[i] = static_cast<std::uint8_t>(k);
        r.signs[k] = static_cast<std::int8_t>(v.signs[k] * w.signs[j]);
    }
    return r;
}

int SignedPerm::order() const {
    SignedPerm x = *this;
    int n = 1;
    while (!x.is_identity()) x = x * *this, ++n;
    return n;
}

std::string SignedPerm::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < 8; ++i) os << (i ? "," : "") << int(perm[i]);
    os << "|";
    for (int i = 0; i < 8; ++i) os << (signs[i] > 0 ? '+' : '-');
    os << ']';
    return os.str();
}

Root act_root(const SignedPerm& w, const Root& r) {
    Root out;
    for (int i = 0; i < 8; ++i) out.c[w.perm[i]] = static_cast<std::int8_t>(w.signs[w.perm[i]] * r.c[i]);
    return out;
}

Perm16 omega_perm(const SignedPerm& w) {
    Perm16 p;
    for (int i = 0; i < 8; ++i)
        for (int s : {1, -1}) p[symbol(i, s)] = static_cast<std::uint8_t>(symbol(w.perm[i], s * w.signs[w.perm[i]]));
    return p;
}

SignedPerm from_omega(const Perm16& p) {
    std::array<int, 8> perm{}, signs{};
    for (int i = 0; i < 8; ++i) {
        const int img = p[symbol(i, 1)];
        if (p[symbol(i, -1)] != (img ^ 1)) throw Error("permutation does not commute with the sign involution");
        perm[i] = symbol_index(img);
        signs[perm[i]] = symbol_sign(img);
    }
    return SignedPerm::make(perm, signs);
}

std::array<std::uint8_t, 240> root_permutation(const SignedPerm& w) {
    const auto& roots = e8_roots();
    std::array<std::uint8_t, 240> out;
    for (int i = 0; i < 240; ++i) out[i] = static_cast<std::uint8_t>(root_index(act_root(w, roots[i])));
    return out;
}

std::vector<SignedPerm> subgroup_generate(const std::vector<SignedPerm>& gens, std::size_t cap) {
    std::vector<SignedPerm> elems{SignedPerm::identity()};
    std::unordered_set<std::uint64_t> seen{pack(omega_perm(elems[0]))};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            const SignedPerm x = g * elems[head];
            if (!seen.insert(pack(omega_perm(x))).second) continue;
            if (elems.size() >= cap) throw CapExceeded("subgroup exceeds " + std::to_string(cap) + " elements");
            elems.push_back(x);
        }
    }
    return elems;
}

SignedPerm random_wd8(std::mt19937_64& rng) {
    SignedPerm w;
    std::array<int, 8> p;
    std::iota(p.begin(), p.end(), 0);
    for (int i = 7; i > 0; --i) std::swap(p[i], p[std::uniform_int_distribution<int>(0, i)(rng)]);
    int parity = 1;
    for (int i = 0; i < 8; ++i) {
        w.perm[i] = static_cast<std::uint8_t>(p[i]);
        if (i < 7) {
            w.signs[i] = rng() & 1 ? -1 : 1;
            parity *= w.signs[i];
        }
    }
    w.signs[7] = static_cast<std::int8_t>(parity);
    return w;
}

std::vector<SignedPerm> wd8_generators() {
    std::vector<SignedPerm> g;
    for (int i = 0; i < 7; ++i) {
        SignedPerm t;
        std::swap(t.perm[i], t.perm[i + 1]);
        g.push_back(t);
    }
    g.push_back(SignedPerm::flips({0, 1}));
    return g;
}

std::uint64_t StabilizerChain::order() const {
    std::uint64_t n = 1;
    for (auto l : orbit_lengths) n *= l;
    return n;
}

namespace {

struct Level {
    int point;
    std::array<std::optional<Perm16>, 16> transversal; // u with u(point) = x
    std::vector<int> orbit;
};

} // namespace

StabilizerChain schreier_sims(const std::vector<Perm16>& gens, const std::vector<int>& base_preference) {
    const Perm16 id = perm16_identity();
    std::vector<Perm16> strong;
    std::vector<int> base;
    auto first_moved = [&](const Perm16& g) {
        for (int x : base_preference)
            if (g[x] != x) return x;
        throw Error("base preference does not cover the moved points");
    };
    auto fixes_base = [&](const Perm16& g, std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i)
            if (g[base[i]] != base[i]) return false;
        return true;
    };
    auto add_strong = [&](const Perm16& g) {
        if (fixes_base(g, base.size())) base.push_back(first_moved(g));
        strong.push_back(g);
    };
    for (const auto& g : gens)
        if (g != id) add_strong(g);

    std::vector<Level> levels;
    auto build_levels = [&] {
        levels.clear();
        for (std::size_t i = 0; i < base.size(); ++i) {
            Level l;
            l.point = base[i];
            l.transversal[l.point] = id;
            l.orbit = {l.point};
            std::vector<const Perm16*> s;
            for (const auto& g : strong)
                if (fixes_base(g, i)) s.push_back(&g);
            for (std::size_t h = 0; h < l.orbit.size(); ++h) {
                const int x = l.orbit[h];
                for (const Perm16* g : s) {
                    const int y = (*g)[x];
                    if (l.transversal[y]) continue;
                    l.transversal[y] = compose(*g, *l.transversal[x]);
                    l.orbit.push_back(y);
                }
            }
            levels.push_back(std::move(l));
        }
    };
    // Returns the nontrivial residue of h sifted from level `from`, if any.
    auto sift = [&](Perm16 h, std::size_t from) -> std::optional<Perm16> {
        for (std::size_t k = from; k < levels.size(); ++k) {
            const int x = h[levels[k].point];
            if (!levels[k].transversal[x]) return h;
            h = compose(inverse(*levels[k].transversal[x]), h);
        }
        if (h != id) return h;
        return std::nullopt;
    };

    for (bool changed = true; changed;) {
        changed = false;
        build_levels();
        for (std::size_t i = 0; i < levels.size() && !changed; ++i) {
            const Level& l = levels[i];
            for (int x : l.orbit) {
                for (const auto& g : strong) {
                    if (!fixes_base(g, i)) continue;
                    const Perm16 schreier =
                        compose(inverse(*l.transversal[g[x]]), compose(g, *l.transversal[x]));
                    if (auto r = sift(schreier, i + 1)) {
                        add_strong(*r);
                        changed = true;
                        break;
                    }
                }
                if (changed) break;
            }
        }
    }

    StabilizerChain chain;
    chain.base = base;
    for (const auto& l : levels) chain.orbit_lengths.push_back(l.orbit.size());
    return chain;
}

std::uint64_t wd8_order_check() {
    std::vector<Perm16> gens;
    for (const auto& g : wd8_generators()) gens.push_back(omega_perm(g));
    std::vector<int> pref(16);
    std::iota(pref.begin(), pref.end(), 0);
    return schreier_sims(gens, pref).order();
}

} // namespace sixteen::weyl
