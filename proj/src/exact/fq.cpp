#include "sixteen/exact/fq.hpp"

#include "sixteen/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace sixteen::exact {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Raw = std::vector<std::uint64_t>; // constant term first, over F_p

void trim(Raw& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw DivisionFailure("element not invertible mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

Raw raw_mul(const Raw& a, const Raw& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Raw r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

// Remainder of a modulo b (b nonzero).
Raw raw_mod(Raw a, const Raw& b, std::uint64_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() > db) {
        const std::uint64_t t = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + (p - t) * b[j]) % p;
        trim(a);
    }
    return a;
}

Raw raw_sub(Raw a, const Raw& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Raw raw_gcd(Raw a, Raw b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Raw r = raw_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: m of degree k is irreducible iff gcd(x^{p^i} - x, m) = 1 for i <= k/2.
bool raw_irreducible(const Raw& m, std::uint64_t p) {
    const int k = static_cast<int>(m.size()) - 1;
    if (k <= 1) return k == 1;
    if (m[0] == 0) return false;
    const Raw x{0, 1};
    Raw h = x;
    for (int i = 1; i <= k / 2; ++i) {
        // h <- h^p mod m
        Raw acc{1}, base = h;
        std::uint64_t e = p;
        while (e > 0) {
            if (e & 1) acc = raw_mod(raw_mul(acc, base, p), m, p);
            base = raw_mod(raw_mul(base, base, p), m, p);
            e >>= 1;
        }
        h = acc;
        Raw g = raw_gcd(m, raw_sub(h, x, p), p);
        if (g.size() > 1) return false;
    }
    return true;
}

} // namespace

FqField::FqField(std::uint64_t p, int k) : p_(p), k_(k) {
    order_ = 1;
    for (int i = 0; i < k; ++i) order_ *= static_cast<unsigned long>(p);
    if (k == 1) {
        modulus_ = {0, 1};
        return;
    }
    Raw m(k + 1, 0);
    m[k] = 1;
    for (;;) {
        if (raw_irreducible(m, p)) break;
        // increment (m_0, ..., m_{k-1}) as a base-p counter
        int i = 0;
        while (i < k && ++m[i] == p) m[i++] = 0;
        if (i == k) throw Error("no irreducible polynomial found");
    }
    modulus_ = m;
}

const FqField& FqField::get(std::uint64_t p, int k) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, int>, std::unique_ptr<FqField>> registry;
    if (k < 1) throw Error("extension degree must be positive");
    if (p < 3 || p >= (1ULL << 31) || !is_prime(p)) throw Error("unsupported characteristic " + std::to_string(p));
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, k}];
    if (!slot) slot.reset(new FqField(p, k));
    return *slot;
}

Fq::Fq(const FqField& field, std::int64_t value) : field_(&field), c_(field.degree(), 0) {
    const auto p = static_cast<std::int64_t>(field.characteristic());
    std::int64_t v = value % p;
    if (v < 0) v += p;
    c_[0] = static_cast<std::uint64_t>(v);
}

Fq Fq::from_coords(const FqField& field, std::vector<std::uint64_t> coords) {
    Fq r;
    r.field_ = &field;
    coords.resize(field.degree(), 0);
    for (auto& x : coords) x %= field.characteristic();
    r.c_ = std::move(coords);
    return r;
}

Fq Fq::generator(const FqField& field) {
    if (field.degree() == 1) return Fq(field, 0); // t = 0 in F_p[t]/(t)
    std::vector<std::uint64_t> c(field.degree(), 0);
    c[1] = 1;
    return from_coords(field, std::move(c));
}

bool Fq::is_zero() const {
    for (auto x : c_)
        if (x != 0) return false;
    return true;
}

bool Fq::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Fq::in_prime_field() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::uint64_t Fq::prime_value() const {
    if (!in_prime_field()) throw Error("element is not in the prime field");
    return c_[0];
}

Fq Fq::operator-() const {
    Fq r = *this;
    const auto p = field_->characteristic();
    for (auto& x : r.c_) x = x == 0 ? 0 : p - x;
    return r;
}

Fq& Fq::operator+=(const Fq& o) {
    const auto p = field_->characteristic();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
        if (c_[i] >= p) c_[i] -= p;
    }
    return *this;
}

Fq& Fq::operator-=(const Fq& o) {
    const auto p = field_->characteristic();
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
    return *this;
}

Fq& Fq::operator*=(const Fq& o) {
    const auto p = field_->characteristic();
    const int k = field_->degree();
    if (k == 1) {
        c_[0] = c_[0] * o.c_[0] % p;
        return *this;
    }
    std::vector<std::uint64_t> prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % p;
    }
    const auto& m = field_->modulus();
    for (int i = 2 * k - 2; i >= k; --i) {
        const std::uint64_t t = prod[i];
        if (t == 0) continue;
        for (int j = 0; j < k; ++j) prod[i - k + j] = (prod[i - k + j] + (p - t) * m[j]) % p;
        prod[i] = 0;
    }
    prod.resize(k);
    c_ = std::move(prod);
    return *this;
}

Fq Fq::inverse() const {
    if (is_zero()) throw DivisionFailure("inverse of zero in F_q");
    const auto p = field_->characteristic();
    if (field_->degree() == 1) return Fq(*field_, static_cast<std::int64_t>(inv_mod(c_[0], p)));
    // extended Euclid on (modulus, a)
    Raw r0 = field_->modulus(), r1 = c_;
    trim(r1);
    Raw s0{}, s1{1};
    while (!r1.empty()) {
        // q, r = divmod(r0, r1)
        Raw a = r0;
        Raw q(a.size() >= r1.size() ? a.size() - r1.size() + 1 : 1, 0);
        const std::uint64_t lead_inv = inv_mod(r1.back(), p);
        while (a.size() >= r1.size() && !a.empty()) {
            const std::uint64_t t = a.back() * lead_inv % p;
            const std::size_t shift = a.size() - r1.size();
            q[shift] = t;
            for (std::size_t j = 0; j < r1.size(); ++j) a[shift + j] = (a[shift + j] + (p - t) * r1[j]) % p;
            trim(a);
        }
        trim(q);
        Raw s2 = raw_sub(s0, raw_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(a);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant
    const std::uint64_t c = inv_mod(r0[0], p);
    for (auto& x : s0) x = x * c % p;
    return from_coords(*field_, raw_mod(s0, field_->modulus(), p));
}

Fq& Fq::operator/=(const Fq& o) { return *this *= o.inverse(); }

Fq Fq::pow(const BigInt& e) const {
    if (sgn(e) < 0) return inverse().pow(BigInt(-e));
    Fq acc(*field_, 1);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc *= acc;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc *= *this;
    }
    return acc;
}

Fq Fq::frobenius() const { return pow(field_->characteristic()); }

std::string Fq::to_string() const {
    if (field_->degree() == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << ']';
    return os.str();
}

} // namespace sixteen::exact
