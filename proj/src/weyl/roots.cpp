#include "sixteen/weyl/roots.hpp"

#include "sixteen/errors.hpp"
#include "sixteen/exact/intmatrix.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace sixteen::weyl {

Root Root::from_doubled(const std::array<int, 8>& doubled) {
    Root r;
    for (int i = 0; i < 8; ++i) r.c[i] = static_cast<std::int8_t>(doubled[i]);
    return r;
}

Root Root::unit_sum(int i, int si, int j, int sj) {
    Root r;
    r.c[i] = static_cast<std::int8_t>(r.c[i] + 2 * si);
    r.c[j] = static_cast<std::int8_t>(r.c[j] + 2 * sj);
    return r;
}

Root Root::operator-() const {
    Root r;
    for (int i = 0; i < 8; ++i) r.c[i] = static_cast<std::int8_t>(-c[i]);
    return r;
}

Root operator+(const Root& a, const Root& b) {
    Root r;
    for (int i = 0; i < 8; ++i) r.c[i] = static_cast<std::int8_t>(a.c[i] + b.c[i]);
    return r;
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

std::string Root::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < 8; ++i) {
        if (i) os << ',';
        if (c[i] % 2) os << int(c[i]) << "/2";
        else os << int(c[i]) / 2;
    }
    os << ')';
    return os.str();
}

int dot(const Root& a, const Root& b) {
    int s = 0;
    for (int i = 0; i < 8; ++i) s += a.c[i] * b.c[i];
    return s / 4;
}

namespace {

std::uint64_t key(const Root& r) {
    std::uint64_t k = 0;
    for (int i = 0; i < 8; ++i) k = (k << 8) | static_cast<std::uint8_t>(r.c[i]);
    return k;
}

struct RootTable {
    std::vector<Root> roots;
    std::unordered_map<std::uint64_t, int> index;

    RootTable() {
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) roots.push_back(Root::unit_sum(i, si, j, sj));
        for (int mask = 0; mask < 256; ++mask) {
            if (__builtin_popcount(mask) % 2) continue;
            Root r;
            for (int i = 0; i < 8; ++i) r.c[i] = (mask >> i) & 1 ? -1 : 1;
            roots.push_back(r);
        }
        std::sort(roots.begin(), roots.end());
        for (int i = 0; i < static_cast<int>(roots.size()); ++i) index.emplace(key(roots[i]), i);
    }
};

const RootTable& table() {
    static const RootTable t;
    return t;
}

} // namespace

const std::vector<Root>& e8_roots() { return table().roots; }

int root_index(const Root& r) {
    const auto& idx = table().index;
    auto it = idx.find(key(r));
    return it == idx.end() ? -1 : it->second;
}

const std::array<Root, 8>& e8_simple_roots() {
    static const std::array<Root, 8> s = [] {
        std::array<Root, 8> a;
        a[0] = Root::from_doubled({1, -1, -1, -1, -1, -1, -1, 1});
        a[1] = Root::unit_sum(0, 1, 1, 1);
        for (int k = 2; k < 8; ++k) a[k] = Root::unit_sum(k - 2, -1, k - 1, 1);
        return a;
    }();
    return s;
}

Root reflect(const Root& v, const Root& root) {
    // s(v) = v - (v.a) a; with doubled coordinates (v.a) = (V.A)/4.
    int vv = 0;
    for (int i = 0; i < 8; ++i) vv += v.c[i] * root.c[i];
    const int k = vv / 4;
    Root r;
    for (int i = 0; i < 8; ++i) r.c[i] = static_cast<std::int8_t>(v.c[i] - k * root.c[i]);
    return r;
}

std::vector<Root> simple_system(const std::vector<Root>& roots) {
    // rho = (3^0, ..., 3^7) pairs to a nonzero value with every root
    auto height = [](const Root& r) {
        long h = 0, w = 1;
        for (int i = 0; i < 8; ++i, w *= 3) h += w * r.c[i];
        return h;
    };
    std::vector<Root> pos;
    for (const auto& r : roots)
        if (height(r) > 0) pos.push_back(r);
    std::vector<Root> simple;
    for (const auto& r : pos) {
        bool decomposable = false;
        for (const auto& a : pos) {
            const Root b = r - a;
            if (height(b) > 0 && std::find(pos.begin(), pos.end(), b) != pos.end()) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(r);
    }
    return simple;
}

long gram_determinant(const std::vector<Root>& basis) {
    exact::IntMatrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = dot(basis[i], basis[j]);
    return exact::determinant(g).get_si();
}

const std::vector<D8Sublattice>& d8_sublattice_orbit() {
    static const std::vector<D8Sublattice> orbit = [] {
        const auto& roots = e8_roots();
        const auto& simple = e8_simple_roots();
        std::array<std::array<int, 240>, 8> refl;
        for (int s = 0; s < 8; ++s)
            for (int i = 0; i < 240; ++i) refl[s][i] = root_index(reflect(roots[i], simple[s]));

        RootSet start;
        for (int i = 0; i < 240; ++i)
            if (roots[i].integral()) start.set(i);
        std::vector<RootSet> seen{start};
        std::unordered_map<std::string, int> where{{start.to_string(), 0}};
        std::deque<int> queue{0};
        while (!queue.empty()) {
            const RootSet cur = seen[queue.front()];
            queue.pop_front();
            for (int s = 0; s < 8; ++s) {
                RootSet next;
                for (int i = 0; i < 240; ++i)
                    if (cur.test(i)) next.set(refl[s][i]);
                auto [it, fresh] = where.emplace(next.to_string(), static_cast<int>(seen.size()));
                if (!fresh) continue;
                seen.push_back(next);
                queue.push_back(it->second);
            }
        }

        std::vector<D8Sublattice> out;
        for (const auto& set : seen) {
            D8Sublattice d;
            d.members = set;
            std::vector<Root> rs;
            for (int i = 0; i < 240; ++i)
                if (set.test(i)) {
                    d.roots.push_back(i);
                    rs.push_back(roots[i]);
                }
            auto simple_d8 = simple_system(rs);
            if (simple_d8.size() != 8) throw Error("D8 orbit member without 8 simple roots");
            std::copy(simple_d8.begin(), simple_d8.end(), d.basis.begin());
            out.push_back(std::move(d));
        }
        return out;
    }();
    return orbit;
}

} // namespace sixteen::weyl
