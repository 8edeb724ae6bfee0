#include "sixteen/cohomology/search.hpp"

#include "sixteen/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace sixteen::cohomology {

using weyl::Root;
using weyl::SignedPerm;

std::vector<FinAbGroup> brauer_targets(int degree) {
    auto g = [](int fours, int twos) {
        std::vector<long> f(twos, 2);
        f.insert(f.end(), fours, 4);
        return FinAbGroup::from_factors(f);
    };
    std::vector<FinAbGroup> t{g(0, 0)};
    if (degree >= 5) return t;
    t.push_back(g(0, 1));
    t.push_back(g(0, 2));
    if (degree >= 3) return t;
    for (int s = 3; s <= 6; ++s) t.push_back(g(0, s));
    for (int u = 0; u <= 2; ++u) t.push_back(g(1, u));
    t.push_back(g(2, 0));
    if (degree == 2) return t;
    for (int s = 7; s <= 8; ++s) t.push_back(g(0, s));
    for (int u = 3; u <= 4; ++u) t.push_back(g(1, u));
    for (int u = 1; u <= 2; ++u) t.push_back(g(2, u));
    std::sort(t.begin(), t.end());
    return t;
}

namespace {

SignedPerm power(const SignedPerm& w, int e) {
    SignedPerm r;
    for (int i = 0; i < e; ++i) r = r * w;
    return r;
}

// Elements of small 2-power order, mixing pure sign changes with powers of
// random elements.
SignedPerm small_order_element(std::mt19937_64& rng) {
    const int kind = static_cast<int>(rng() % 10);
    if (kind < 3) {
        std::vector<int> coords;
        for (int i = 0; i < 8; ++i)
            if (rng() & 1) coords.push_back(i);
        if (coords.size() % 2) coords.pop_back();
        return SignedPerm::flips(coords);
    }
    for (;;) {
        const SignedPerm w = weyl::random_wd8(rng);
        const int o = w.order();
        const int q = kind < 6 ? 2 : (kind < 9 ? 4 : 8);
        if (o % q == 0) return power(w, o / q);
        if (o % 2 == 0) return power(w, o / 2);
    }
}

std::vector<std::pair<std::vector<int>, int>> fingerprint(const std::vector<SignedPerm>& group) {
    const auto& roots = weyl::e8_roots();
    std::vector<std::pair<std::vector<int>, int>> fp;
    for (const auto& g : group) {
        int fixed = 0;
        for (const auto& r : roots) fixed += weyl::act_root(g, r) == r;
        fp.emplace_back(weyl::cycle_type(weyl::omega_perm(g)), fixed);
    }
    std::sort(fp.begin(), fp.end());
    return fp;
}

} // namespace

std::vector<std::optional<Witness>> brauer_search(const std::vector<FinAbGroup>& targets, const SearchBudget& budget,
                                                  std::uint64_t seed, std::size_t good_order, SearchStats* stats) {
    std::vector<std::optional<Witness>> found(targets.size());
    SearchStats local;
    auto done = [&] {
        return std::all_of(found.begin(), found.end(),
                           [&](const auto& w) { return w && w->order <= good_order; });
    };
    auto record = [&](const FinAbGroup& h, const std::vector<SignedPerm>& gens, std::size_t order) {
        for (std::size_t i = 0; i < targets.size(); ++i) {
            if (!(targets[i] == h)) continue;
            if (!found[i] || order < found[i]->order) found[i] = Witness{h, gens, order};
        }
    };
    record(FinAbGroup{}, {}, 1);

    std::mt19937_64 rng(seed);
    std::set<std::vector<std::pair<std::vector<int>, int>>> seen;
    std::uniform_int_distribution<int> ngens(1, budget.max_generators);
    while (!done() && local.candidates < budget.candidates) {
        ++local.candidates;
        std::vector<SignedPerm> gens;
        const int k = ngens(rng);
        for (int i = 0; i < k; ++i) gens.push_back(small_order_element(rng));
        std::vector<SignedPerm> group;
        try {
            group = weyl::subgroup_generate(gens, budget.cap);
        } catch (const CapExceeded&) {
            continue;
        }
        if (!seen.insert(fingerprint(group)).second) {
            ++local.duplicates;
            continue;
        }
        ++local.h1_evaluations;
        record(h1(rep_from_subgroup(group), budget.cap), gens, group.size());
    }
    if (stats) *stats = local;
    return found;
}

Witness brauer_target_search(const FinAbGroup& target, const SearchBudget& budget, std::uint64_t seed) {
    auto found = brauer_search({target}, budget, seed, budget.cap);
    if (!found[0]) throw NotFound("no subgroup with H^1 = " + target.to_string() + " within budget");
    return *found[0];
}

IntMatrix orthogonal_complement(const std::vector<Root>& roots) {
    const IntMatrix& g = e8_gram();
    IntMatrix m(roots.size(), 8);
    for (std::size_t j = 0; j < roots.size(); ++j) {
        const auto c = e8_coordinates(roots[j]);
        for (int col = 0; col < 8; ++col) {
            BigInt v = 0;
            for (int i = 0; i < 8; ++i) v += c[i] * g(i, col);
            m(j, col) = v;
        }
    }
    if (roots.empty()) return IntMatrix::identity(8);
    return exact::integer_kernel(m);
}

Blowdown blowdown_search(const std::vector<SignedPerm>& group, int degree, const std::optional<FinAbGroup>& target) {
    if (degree < 2 || degree > 4) throw Error("blow-down degree must be 2, 3 or 4");
    const auto& roots = weyl::e8_roots();
    std::vector<Root> fixed;
    for (const auto& r : roots)
        if (std::all_of(group.begin(), group.end(), [&](const SignedPerm& g) { return weyl::act_root(g, r) == r; }))
            fixed.push_back(r);
    const std::size_t need = static_cast<std::size_t>(degree - 1);
    const IntegralRep rep = rep_from_subgroup(group);

    std::vector<Root> chosen;
    std::optional<Blowdown> result;
    std::function<bool(std::size_t)> extend = [&](std::size_t start) {
        if (chosen.size() == need) {
            Blowdown b;
            b.classes = chosen;
            b.complement = orthogonal_complement(chosen);
            b.h1 = h1(restrict_rep(rep, b.complement), std::max<std::size_t>(64, group.size()));
            if (target && !(b.h1 == *target)) return false;
            result = std::move(b);
            return true;
        }
        for (std::size_t i = start; i < fixed.size(); ++i) {
            // exceptional classes are disjoint iff their pairing is 0
            if (std::any_of(chosen.begin(), chosen.end(),
                            [&](const Root& c) { return weyl::exceptional_pairing(c, fixed[i]) != 0; }))
                continue;
            chosen.push_back(fixed[i]);
            if (extend(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!extend(0)) throw NotFound("no G-fixed set of " + std::to_string(need) + " disjoint exceptional classes" +
                                   (target ? " with H^1 = " + target->to_string() : std::string()));
    return *result;
}

BlowdownWitness blowdown_target_search(const FinAbGroup& target, int degree, const SearchBudget& budget,
                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::vector<std::pair<std::vector<int>, int>>> seen;
    std::uniform_int_distribution<int> ngens(1, budget.max_generators);
    for (std::size_t c = 0; c < budget.candidates; ++c) {
        std::vector<SignedPerm> gens;
        const int k = ngens(rng);
        for (int i = 0; i < k; ++i) gens.push_back(small_order_element(rng));
        std::vector<SignedPerm> group;
        try {
            group = weyl::subgroup_generate(gens, budget.cap);
        } catch (const CapExceeded&) {
            continue;
        }
        if (!seen.insert(fingerprint(group)).second) continue;
        try {
            return {gens, group.size(), blowdown_search(group, degree, target)};
        } catch (const NotFound&) {
        }
    }
    throw NotFound("no blow-down to degree " + std::to_string(degree) + " with H^1 = " + target.to_string());
}

std::string witnesses_to_json(const std::vector<Witness>& ws) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& w : ws) {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : w.generators) {
            std::vector<int> perm, signs;
            for (int i = 0; i < 8; ++i) perm.push_back(g.perm[i] + 1), signs.push_back(g.signs[i]);
            gens.push_back({perm, signs});
        }
        arr.push_back({{"target", w.target.factors}, {"generators", gens}, {"order", w.order}});
    }
    return arr.dump(2);
}

std::vector<Witness> witnesses_from_json(const std::string& text) {
    std::vector<Witness> out;
    try {
        const auto arr = nlohmann::json::parse(text);
        for (const auto& e : arr) {
            Witness w;
            w.target = FinAbGroup::from_factors(e.at("target").get<std::vector<long>>());
            for (const auto& g : e.at("generators")) {
                auto perm = g.at(0).get<std::array<int, 8>>();
                for (auto& x : perm) --x;
                w.generators.push_back(SignedPerm::make(perm, g.at(1).get<std::array<int, 8>>()));
            }
            w.order = e.at("order").get<std::size_t>();
            out.push_back(std::move(w));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("witness file: ") + ex.what());
    }
    return out;
}

} // namespace sixteen::cohomology
