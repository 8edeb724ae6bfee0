#include "sixteen/cohomology/h1.hpp"

#include "sixteen/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace sixteen::cohomology {

using weyl::Root;
using weyl::SignedPerm;

FinAbGroup FinAbGroup::from_factors(std::vector<long> f) {
    f.erase(std::remove(f.begin(), f.end(), 1L), f.end());
    std::sort(f.begin(), f.end());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 2) throw Error("invariant factors must be >= 2");
        if (i && f[i] % f[i - 1]) throw Error("invariant factors must form a divisibility chain");
    }
    return FinAbGroup{std::move(f)};
}

long FinAbGroup::order() const {
    long n = 1;
    for (long d : factors) n *= d;
    return n;
}

long FinAbGroup::exponent() const { return factors.empty() ? 1 : factors.back(); }

std::string FinAbGroup::to_string() const {
    if (factors.empty()) return "0";
    std::map<long, int> count;
    for (long d : factors) ++count[d];
    std::ostringstream os;
    bool first = true;
    for (auto it = count.rbegin(); it != count.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        if (it->second == 1) os << "Z/" << it->first;
        else os << "(Z/" << it->first << ")^" << it->second;
    }
    return os.str();
}

const IntMatrix& e8_basis_doubled() {
    static const IntMatrix b = [] {
        IntMatrix m(8, 8);
        const auto& s = weyl::e8_simple_roots();
        for (int j = 0; j < 8; ++j)
            for (int i = 0; i < 8; ++i) m(i, j) = s[j].c[i];
        return m;
    }();
    return b;
}

const IntMatrix& e8_gram() {
    static const IntMatrix g = [] {
        IntMatrix m(8, 8);
        const auto& s = weyl::e8_simple_roots();
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m(i, j) = weyl::dot(s[i], s[j]);
        return m;
    }();
    return g;
}

namespace {

using LMat = std::vector<std::vector<long>>;

LMat lmat(std::size_t r, std::size_t c) { return LMat(r, std::vector<long>(c, 0)); }

LMat to_long(const IntMatrix& m) {
    LMat out = lmat(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).fits_slong_p()) throw Error("matrix entry too large");
            out[i][j] = m(i, j).get_si();
        }
    return out;
}

IntMatrix to_int(const LMat& m, std::size_t cols) {
    IntMatrix out(m.size(), cols);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m[i][j];
    return out;
}

// Inverse of the simple-root Gram matrix; integral since det = 1.
const LMat& gram_inverse() {
    static const LMat inv = [] {
        const IntMatrix& g = e8_gram();
        LMat out = lmat(8, 8);
        for (int j = 0; j < 8; ++j) {
            std::vector<BigInt> e(8, 0), x;
            e[j] = 1;
            if (!exact::solve_integer(g, e, x)) throw Error("E8 Gram matrix is not unimodular");
            for (int i = 0; i < 8; ++i) out[i][j] = x[i].get_si();
        }
        return out;
    }();
    return inv;
}

IntMatrix matrix_of(const SignedPerm& w) {
    // M = G^{-1} (b_i . w b_j): coordinates of w(b_j) on the simple roots.
    const auto& s = weyl::e8_simple_roots();
    const LMat& ginv = gram_inverse();
    long p[8][8];
    for (int j = 0; j < 8; ++j) {
        const Root wb = weyl::act_root(w, s[j]);
        for (int i = 0; i < 8; ++i) p[i][j] = weyl::dot(s[i], wb);
    }
    IntMatrix m(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            long v = 0;
            for (int k = 0; k < 8; ++k) v += ginv[i][k] * p[k][j];
            m(i, j) = v;
        }
    return m;
}

constexpr std::uint64_t kPrime = 2305843009213693951ULL; // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}

std::uint64_t reduce(long v) {
    long m = v % static_cast<long>(kPrime);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(kPrime) : m);
}

// Picks rows independent modulo a large prime; with overwhelming probability
// they span the rational row space. Callers verify the kernel exactly.
class RowSelector {
public:
    explicit RowSelector(std::size_t cols) : cols_(cols) {}

    bool offer(const std::vector<long>& row) {
        std::vector<std::uint64_t> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = reduce(row[j]);
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const std::size_t pc = pivot_[k];
            if (!r[pc]) continue;
            const std::uint64_t f = r[pc];
            for (std::size_t j = 0; j < cols_; ++j)
                r[j] = (r[j] + kPrime - mulmod(f, basis_[k][j])) % kPrime;
        }
        std::size_t pc = 0;
        while (pc < cols_ && !r[pc]) ++pc;
        if (pc == cols_) return false;
        const std::uint64_t inv = powmod(r[pc], kPrime - 2);
        for (auto& x : r) x = mulmod(x, inv);
        // keep the basis reduced at the new pivot column
        for (auto& b : basis_) {
            if (!b[pc]) continue;
            const std::uint64_t f = b[pc];
            for (std::size_t j = 0; j < cols_; ++j) b[j] = (b[j] + kPrime - mulmod(f, r[j])) % kPrime;
        }
        basis_.push_back(std::move(r));
        pivot_.push_back(pc);
        rows_.push_back(row);
        return true;
    }
    bool full() const { return basis_.size() == cols_; }
    const std::vector<std::vector<long>>& rows() const { return rows_; }

private:
    std::size_t cols_;
    std::vector<std::vector<std::uint64_t>> basis_;
    std::vector<std::size_t> pivot_;
    std::vector<std::vector<long>> rows_;
};

} // namespace

std::vector<BigInt> e8_coordinates(const Root& r) {
    std::vector<BigInt> t(8), out;
    for (int i = 0; i < 8; ++i) t[i] = r.c[i];
    if (!exact::solve_integer(e8_basis_doubled(), t, out)) throw Error("vector is not in the E8 lattice");
    return out;
}

IntegralRep rep_from_subgroup(const std::vector<SignedPerm>& group) {
    IntegralRep rep;
    rep.elements = group;
    const std::size_t n = group.size();
    if (n == 0 || !group[0].is_identity()) throw NotClosed("subgroup must list the identity first");
    std::unordered_map<std::uint64_t, int> index;
    std::vector<weyl::Perm16> om(n);
    for (std::size_t i = 0; i < n; ++i) {
        om[i] = weyl::omega_perm(group[i]);
        if (!index.emplace(weyl::pack(om[i]), static_cast<int>(i)).second) throw NotClosed("repeated element");
    }
    rep.table.assign(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto it = index.find(weyl::pack(weyl::compose(om[a], om[b])));
            if (it == index.end()) throw NotClosed("product " + group[a].to_string() + " * " + group[b].to_string());
            rep.table[a][b] = it->second;
        }
    for (const auto& g : group) rep.matrices.push_back(matrix_of(g));
    return rep;
}

IntegralRep restrict_rep(const IntegralRep& rep, const IntMatrix& basis) {
    IntegralRep out;
    out.elements = rep.elements;
    out.table = rep.table;
    const std::size_t r = basis.cols();
    for (const auto& m : rep.matrices) {
        const IntMatrix image = m * basis;
        IntMatrix x(r, r);
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<BigInt> col(image.rows()), c;
            for (std::size_t i = 0; i < image.rows(); ++i) col[i] = image(i, j);
            if (!exact::solve_integer(basis, col, c)) throw NotClosed("sublattice is not stable");
            for (std::size_t i = 0; i < r; ++i) x(i, j) = c[i];
        }
        out.matrices.push_back(std::move(x));
    }
    return out;
}

FinAbGroup cokernel(const IntMatrix& m) {
    const auto d = exact::invariant_factors(m);
    std::vector<long> f;
    std::size_t nonzero = 0;
    for (const auto& x : d) {
        if (sgn(x) == 0) continue;
        ++nonzero;
        if (x != 1) f.push_back(x.get_si());
    }
    if (nonzero < m.rows()) throw Error("cokernel is infinite");
    return FinAbGroup::from_factors(std::move(f));
}

FinAbGroup h1(const IntegralRep& rep, std::size_t cap) {
    const std::size_t n = rep.order();
    if (n > cap) throw CapExceeded("group of order " + std::to_string(n) + " exceeds " + std::to_string(cap));
    const std::size_t r = rep.rank();
    if (n <= 1 || r == 0) return {};

    std::vector<LMat> M;
    for (const auto& m : rep.matrices) M.push_back(to_long(m));

    // greedy generating set
    std::vector<int> gens;
    std::vector<char> reached(n, 0);
    reached[0] = 1;
    for (std::size_t a = 1; a < n; ++a) {
        if (reached[a]) continue;
        gens.push_back(static_cast<int>(a));
        std::fill(reached.begin(), reached.end(), 0);
        std::vector<int> queue{0};
        reached[0] = 1;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (int s : gens) {
                const int x = rep.table[s][queue[h]];
                if (!reached[x]) reached[x] = 1, queue.push_back(x);
            }
    }
    const std::size_t m = gens.size(), cols = m * r;

    // f(g) = A_g x along a Cayley spanning tree, with x = (f(s_1), ..., f(s_m))
    std::vector<LMat> A(n);
    A[0] = lmat(r, cols);
    std::vector<int> queue{0};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const int g = queue[h];
        for (std::size_t k = 0; k < m; ++k) {
            const int x = rep.table[gens[k]][g];
            if (!A[x].empty()) continue;
            LMat a = lmat(r, cols);
            const LMat& ms = M[gens[k]];
            for (std::size_t i = 0; i < r; ++i) {
                a[i][k * r + i] += 1;
                for (std::size_t l = 0; l < r; ++l) {
                    if (!ms[i][l]) continue;
                    for (std::size_t c = 0; c < cols; ++c) a[i][c] += ms[i][l] * A[g][l][c];
                }
            }
            A[x] = std::move(a);
            queue.push_back(x);
        }
    }

    // f(s h) = f(s) + M_s f(h) for generators s and all h determines Z^1:
    // by induction on word length it implies the identity for all pairs.
    std::vector<std::vector<long>> rows;
    for (std::size_t k = 0; k < m; ++k) {
        const int s = gens[k];
        const LMat& ms = M[s];
        for (std::size_t h = 0; h < n; ++h) {
            const LMat& ash = A[rep.table[s][h]];
            for (std::size_t i = 0; i < r; ++i) {
                std::vector<long> row = ash[i];
                row[k * r + i] -= 1;
                for (std::size_t l = 0; l < r; ++l) {
                    if (!ms[i][l]) continue;
                    for (std::size_t c = 0; c < cols; ++c) row[c] -= ms[i][l] * A[h][l][c];
                }
                if (std::any_of(row.begin(), row.end(), [](long v) { return v != 0; })) rows.push_back(std::move(row));
            }
        }
    }

    RowSelector sel(cols);
    for (const auto& row : rows) {
        sel.offer(row);
        if (sel.full()) break;
    }
    IntMatrix kernel;
    for (;;) {
        const auto& chosen = sel.rows();
        kernel = chosen.empty() ? IntMatrix::identity(cols) : exact::integer_kernel(to_int(chosen, cols));
        // exact verification against every equation
        bool ok = true;
        for (const auto& row : rows) {
            for (std::size_t j = 0; j < kernel.cols() && ok; ++j) {
                BigInt acc = 0;
                for (std::size_t c = 0; c < cols; ++c)
                    if (row[c]) acc += row[c] * kernel(c, j);
                if (sgn(acc) != 0) {
                    ok = false;
                    if (!sel.offer(row)) throw Error("row selection failed to detect an independent equation");
                }
            }
            if (!ok) break;
        }
        if (ok) break;
    }

    // coboundaries: x = ((M_s - I) v)_s for v in Z^r
    const std::size_t k = kernel.cols();
    IntMatrix coords(k, r);
    for (std::size_t v = 0; v < r; ++v) {
        std::vector<BigInt> target(cols), c;
        for (std::size_t g = 0; g < m; ++g)
            for (std::size_t i = 0; i < r; ++i) target[g * r + i] = M[gens[g]][i][v] - (i == v ? 1 : 0);
        if (!exact::solve_integer(kernel, target, c)) throw Error("coboundary outside the cocycle lattice");
        for (std::size_t i = 0; i < k; ++i) coords(i, v) = c[i];
    }
    return cokernel(coords);
}

FinAbGroup h1_cyclic_oracle(const IntMatrix& sigma) {
    const std::size_t r = sigma.rows();
    const IntMatrix id = IntMatrix::identity(r);
    IntMatrix norm = id, power = sigma;
    int order = 1;
    while (!(power == id)) {
        norm = norm + power;
        power = power * sigma;
        if (++order > 10000) throw Error("matrix of infinite or huge order");
    }
    const IntMatrix kn = exact::integer_kernel(norm);
    if (kn.cols() == 0) return {};
    const IntMatrix image = sigma - id;
    IntMatrix coords(kn.cols(), r);
    for (std::size_t v = 0; v < r; ++v) {
        std::vector<BigInt> col(r), c;
        for (std::size_t i = 0; i < r; ++i) col[i] = image(i, v);
        if (!exact::solve_integer(kn, col, c)) throw Error("image of sigma - 1 not in ker N");
        for (std::size_t i = 0; i < kn.cols(); ++i) coords(i, v) = c[i];
    }
    return cokernel(coords);
}

} // namespace sixteen::cohomology
