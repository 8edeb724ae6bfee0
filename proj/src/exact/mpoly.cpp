#include "sixteen/exact/mpoly.hpp"

#include "sixteen/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace sixteen::exact {

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) { return grevlex(a, b) == std::strong_ordering::greater; }

} // namespace

std::strong_ordering grevlex(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (int i = kMaxVars - 1; i >= 0; --i) {
        if (a.exp[i] != b.exp[i]) return b.exp[i] <=> a.exp[i];
    }
    return std::strong_ordering::equal;
}

MPoly MPoly::variable(int nvars, std::uint64_t p, int index) {
    MPoly r(nvars, p);
    Monomial m;
    m.exp[index] = 1;
    r.terms_.push_back({m, 1});
    return r;
}

MPoly MPoly::constant(int nvars, std::uint64_t p, std::int64_t c) {
    MPoly r(nvars, p);
    std::int64_t v = c % static_cast<std::int64_t>(p);
    if (v < 0) v += static_cast<std::int64_t>(p);
    if (v != 0) r.terms_.push_back({Monomial{}, static_cast<std::uint64_t>(v)});
    return r;
}

MPoly MPoly::from_terms(int nvars, std::uint64_t p, std::vector<Term> terms) {
    MPoly r(nvars, p);
    for (auto& t : terms) {
        MPoly single(nvars, p);
        t.coeff %= p;
        if (t.coeff) single.terms_.push_back(t);
        r = r + single;
    }
    return r;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().mono.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

std::uint64_t MPoly::coeff(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return 0;
}

void MPoly::add_in_place(const MPoly& b, std::uint64_t scale) {
    if (scale % p_ == 0 || b.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < terms_.size() && grevlex_greater(terms_[i].mono, b.terms_[j].mono))) {
            out.push_back(terms_[i++]);
        } else if (i == terms_.size() || grevlex_greater(b.terms_[j].mono, terms_[i].mono)) {
            out.push_back({b.terms_[j].mono, b.terms_[j].coeff * scale % p_});
            ++j;
        } else {
            const std::uint64_t c = (terms_[i].coeff + b.terms_[j].coeff * scale) % p_;
            if (c) out.push_back({terms_[i].mono, c});
            ++i, ++j;
        }
    }
    terms_ = std::move(out);
}

MPoly MPoly::operator-() const { return scaled(p_ - 1); }

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    r.add_in_place(b, 1);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    r.add_in_place(b, a.p_ - 1);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.nvars_, a.p_);
    for (const auto& t : b.terms_) r.add_in_place(a.times_term(t.mono, 1), t.coeff);
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

MPoly MPoly::scaled(std::uint64_t c) const {
    MPoly r(nvars_, p_);
    c %= p_;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = t.coeff * c % p_;
    return r;
}

MPoly MPoly::times_term(const Monomial& m, std::uint64_t c) const {
    MPoly r = scaled(c);
    for (auto& t : r.terms_) t.mono = t.mono * m; // order is preserved by multiplication
    return r;
}

MPoly MPoly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(inv_mod(terms_.front().coeff, p_));
}

MPoly MPoly::derivative(int var) const {
    MPoly r(nvars_, p_);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono.exp[var] == 0) continue;
        Term d = t;
        d.coeff = t.coeff * (t.mono.exp[var] % p_) % p_;
        d.mono.exp[var] -= 1;
        if (d.coeff) out.push_back(d);
    }
    return from_terms(nvars_, p_, std::move(out));
}

std::string MPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        if (k) os << " + ";
        bool constant = t.mono.degree() == 0;
        if (t.coeff != 1 || constant) os << t.coeff;
        bool first = t.coeff == 1;
        for (int i = 0; i < nvars_; ++i) {
            if (!t.mono.exp[i]) continue;
            os << (first ? "" : "*") << var << i;
            if (t.mono.exp[i] > 1) os << '^' << int(t.mono.exp[i]);
            first = false;
        }
    }
    return os.str();
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis) {
    const std::uint64_t p = f.characteristic();
    MPoly rest = f;
    std::vector<MPoly::Term> remainder;
    while (!rest.is_zero()) {
        const MPoly::Term lt = rest.leading();
        const MPoly* div = nullptr;
        for (const auto& g : basis)
            if (g.leading().mono.divides(lt.mono)) {
                div = &g;
                break;
            }
        if (div) {
            const std::uint64_t c = lt.coeff * inv_mod(div->leading().coeff, p) % p;
            rest = rest - div->times_term(lt.mono / div->leading().mono, c);
        } else {
            remainder.push_back(lt);
            rest = rest - MPoly::from_terms(f.nvars(), p, {lt});
        }
    }
    MPoly out = MPoly::from_terms(f.nvars(), p, {});
    // remainder terms are produced in decreasing order already
    for (const auto& t : remainder) out = out + MPoly::from_terms(f.nvars(), p, {t});
    return out;
}

std::vector<MPoly> groebner_basis(const std::vector<MPoly>& gens) {
    std::vector<MPoly> g;
    for (const auto& f : gens)
        if (!f.is_zero()) g.push_back(f.monic());
    if (g.empty()) return g;

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    // processed[i][j] marks pairs whose S-polynomial is known to reduce to zero
    std::vector<std::vector<bool>> done;
    auto add_element = [&](const MPoly& f) {
        const std::size_t k = g.size();
        g.push_back(f);
        for (auto& row : done) row.resize(k + 1, false);
        done.emplace_back(k + 1, false);
        for (std::size_t i = 0; i < k; ++i)
            pairs.push_back({i, k, Monomial::lcm(g[i].leading().mono, g[k].leading().mono)});
    };
    {
        std::vector<MPoly> init;
        init.swap(g);
        for (const auto& f : init) add_element(f);
    }

    while (!pairs.empty()) {
        // normal selection strategy: smallest lcm first
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            return grevlex(a.lcm, b.lcm) == std::strong_ordering::less;
        });
        const Pair pr = *it;
        pairs.erase(it);
        auto mark = [&](std::size_t a, std::size_t b) { done[a][b] = done[b][a] = true; };
        const Monomial& li = g[pr.i].leading().mono;
        const Monomial& lj = g[pr.j].leading().mono;
        if (li.coprime(lj)) {
            mark(pr.i, pr.j);
            continue;
        }
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (g[k].leading().mono.divides(pr.lcm) && done[pr.i][k] && done[pr.j][k]) chain = true;
        }
        if (chain) {
            mark(pr.i, pr.j);
            continue;
        }
        const MPoly s = g[pr.i].times_term(pr.lcm / li, 1) - g[pr.j].times_term(pr.lcm / lj, 1);
        MPoly r = normal_form(s, g);
        mark(pr.i, pr.j);
        if (!r.is_zero()) add_element(r.monic());
    }

    // minimise then interreduce
    std::vector<MPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& mi = g[i].leading().mono;
            const auto& mj = g[j].leading().mono;
            if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<MPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const MPoly lead = MPoly::from_terms(minimal[i].nvars(), minimal[i].characteristic(), {minimal[i].leading()});
        const MPoly tail = minimal[i] - lead;
        reduced.push_back((lead + normal_form(tail, others)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const MPoly& a, const MPoly& b) {
        return grevlex(a.leading().mono, b.leading().mono) == std::strong_ordering::less;
    });
    return reduced;
}

namespace {

std::vector<Monomial> leading_monomials(const std::vector<MPoly>& forms) {
    for (const auto& f : forms)
        if (!f.is_homogeneous()) throw Error("expected homogeneous generators");
    std::vector<Monomial> leads;
    for (const auto& g : groebner_basis(forms)) leads.push_back(g.leading().mono);
    return leads;
}

int variable_count(const std::vector<MPoly>& forms) {
    if (forms.empty()) throw Error("empty generator list");
    return forms.front().nvars();
}

} // namespace

bool groebner_projective_empty(const std::vector<MPoly>& forms) {
    const int n = variable_count(forms);
    const auto leads = leading_monomials(forms);
    for (int v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& m : leads) {
            bool pure = m.exp[v] > 0;
            for (int w = 0; w < kMaxVars && pure; ++w)
                if (w != v && m.exp[w]) pure = false;
            if (pure) found = true;
        }
        if (!found) return false;
    }
    return true;
}

long hilbert_function(const std::vector<Monomial>& leads, int nvars, int d) {
    long count = 0;
    Monomial m;
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            m.exp[var] = static_cast<std::uint8_t>(left);
            for (const auto& l : leads)
                if (l.divides(m)) return;
            ++count;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m.exp[var] = static_cast<std::uint8_t>(e);
            rec(var + 1, left - e);
        }
        m.exp[var] = 0;
    };
    rec(0, d);
    return count;
}

HilbertData hilbert_data_zero_dim(const std::vector<MPoly>& forms) {
    const int n = variable_count(forms);
    const auto leads = leading_monomials(forms);
    // Krull dimension of k[x]/in(I): largest variable subset carrying no
    // leading monomial.
    int krull = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool free = true;
        for (const auto& l : leads) {
            bool inside = true;
            for (int v = 0; v < n && inside; ++v)
                if (l.exp[v] && !(mask & (1u << v))) inside = false;
            if (inside) {
                free = false;
                break;
            }
        }
        if (free) krull = std::max(krull, __builtin_popcount(mask));
    }
    HilbertData out{krull - 1, std::nullopt};
    if (krull == 0) {
        out.degree = 0;
    } else if (krull == 1) {
        // Hilbert function of a one-dimensional monomial quotient is constant
        // beyond the sum of the largest exponents.
        int bound = 0;
        for (int v = 0; v < n; ++v) {
            int e = 0;
            for (const auto& l : leads) e = std::max<int>(e, l.exp[v]);
            bound += e;
        }
        const long h1 = hilbert_function(leads, n, bound + 1);
        const long h2 = hilbert_function(leads, n, bound + 2);
        if (h1 != h2) throw Error("Hilbert function did not stabilise");
        out.degree = h1;
    }
    return out;
}

} // namespace sixteen::exact
