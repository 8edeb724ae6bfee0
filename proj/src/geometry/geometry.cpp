#include "sixteen/geometry/geometry.hpp"

#include "sixteen/errors.hpp"
#include "sixteen/etale/etale.hpp"
#include "sixteen/exact/factor.hpp"
#include "sixteen/exact/linalg.hpp"

#include <json.hpp>

#include <random>

namespace sixteen::geometry {

using exact::FqPoly;

namespace {

const FqField& prime_field(std::uint64_t p) { return FqField::get(p, 1); }

Fq lift(const Fq& a, const FqField& E) {
    if (&a.field() == &E) return a;
    return Fq(E, static_cast<std::int64_t>(a.prime_value()));
}

Fq mod_p(const exact::BigInt& v, const FqField& F) {
    exact::BigInt r = v % static_cast<unsigned long>(F.characteristic());
    if (r < 0) r += static_cast<unsigned long>(F.characteristic());
    return Fq(F, r.get_si());
}

Sym3 zero3(const FqField& F) {
    Sym3 m;
    for (auto& row : m) row.fill(Fq(F, 0));
    return m;
}

Sym5 zero5(const FqField& F) {
    Sym5 m;
    for (auto& row : m) row.fill(Fq(F, 0));
    return m;
}

MPoly form_from(const Fq& c, int nvars, std::uint64_t p, std::initializer_list<int> vars) {
    exact::Monomial m;
    for (int v : vars) ++m.exp[v];
    return MPoly::from_terms(nvars, p, {{m, c.prime_value()}});
}

Fq bilinear(const Sym5& a, const Point5& u, const Point5& v) {
    const FqField& E = u[0].field();
    Fq acc(E, 0);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (a[i][j].is_zero()) continue;
            acc += u[i] * lift(a[i][j], E) * v[j];
        }
    return acc;
}

} // namespace

BinaryOctic BinaryOctic::from_ints(std::uint64_t p, const std::vector<std::int64_t>& coeffs) {
    if (coeffs.size() != 9) throw Error("octic needs 9 coefficients");
    BinaryOctic o;
    o.p = p;
    for (int i = 0; i < 9; ++i) o.f[i] = Fq(prime_field(p), coeffs[i]);
    return o;
}

FqPoly BinaryOctic::dehomogenized() const {
    return FqPoly(std::vector<Fq>(f.begin(), f.end()), Fq(prime_field(p), 0));
}

bool is_admissible(const BinaryOctic& f) {
    if (f.f[0].is_zero() || f.f[8].is_zero()) return false;
    if (!exact::is_square(f.f[0]) || !exact::is_square(f.f[8])) return false;
    return exact::is_squarefree(f.dehomogenized());
}

QuarticPair decompose_octic(const BinaryOctic& o) {
    const FqField& F = prime_field(o.p);
    const auto& f = o.f;
    if (f[8].is_zero()) throw NotASquare("f(1,0) = 0");
    if (f[0].is_zero()) throw NotASquare("f(0,1) = 0");
    QuarticPair r;
    auto& b = r.b;
    b[4] = exact::sqrt_in_fq(f[8]);
    const Fq two_b4 = Fq(F, 2) * b[4];
    b[3] = f[7] / two_b4;
    b[2] = (f[6] - b[3] * b[3]) / two_b4;
    b[1] = Fq(F, 0);
    b[0] = exact::sqrt_in_fq(f[0]);

    std::array<Fq, 9> rest;
    rest.fill(Fq(F, 0));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) rest[i + j] += b[i] * b[j];
    for (int i = 0; i < 9; ++i) rest[i] -= f[i];
    for (int i : {0, 6, 7, 8})
        if (!rest[i].is_zero()) throw DivisionFailure("b^2 - f is not divisible by z0 z1^3");
    for (int j = 0; j < 5; ++j) r.c[j] = rest[j + 1];
    return r;
}

BinaryOctic expand(std::uint64_t p, const QuarticPair& pair) {
    BinaryOctic o;
    o.p = p;
    o.f.fill(Fq(prime_field(p), 0));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) o.f[i + j] += pair.b[i] * pair.b[j];
    for (int j = 0; j < 5; ++j) o.f[j + 1] -= pair.c[j];
    return o;
}

Sym3 veronese(const Quartic& q) {
    const FqField& F = q[0].field();
    const Fq half = Fq(F, 2).inverse();
    Sym3 m = zero3(F);
    m[0][0] = q[4];
    m[0][1] = m[1][0] = q[3] * half;
    m[1][1] = q[2];
    m[1][2] = m[2][1] = q[1] * half;
    m[2][2] = q[0];
    return m;
}

Sym3 BlockTensor::block(int i) const {
    Sym3 m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = slices[i][r + 2][c + 2];
    return m;
}

BlockTensor build_tensor(std::uint64_t p, const Sym3& a, const Sym3& b, const Sym3& c, const Sym3& d) {
    const FqField& F = prime_field(p);
    BlockTensor t;
    t.p = p;
    const std::array<const Sym3*, 4> blocks{&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i) {
        t.slices[i] = zero5(F);
        for (int r = 0; r < 3; ++r)
            for (int col = 0; col < 3; ++col) t.slices[i][r + 2][col + 2] = (*blocks[i])[r][col];
    }
    const Fq minus_half = -Fq(F, 2).inverse();
    t.slices[0][0][0] = Fq(F, -1);
    t.slices[1][0][1] = t.slices[1][1][0] = minus_half;
    t.slices[2][1][1] = Fq(F, -1);
    return t;
}

BlockTensor build_tensor(std::uint64_t p, const QuarticPair& pair) {
    const FqField& F = prime_field(p);
    Quartic z0z1cubed;
    z0z1cubed.fill(Fq(F, 0));
    z0z1cubed[1] = Fq(F, 1);
    Sym3 conic = zero3(F);
    conic[1][1] = Fq(F, 1);
    conic[0][2] = conic[2][0] = -Fq(F, 2).inverse();
    return build_tensor(p, veronese(z0z1cubed), veronese(pair.b), veronese(pair.c), conic);
}

Sym5 contract(const BlockTensor& t, const std::array<Fq, 4>& x) {
    const FqField& E = x[0].field();
    Sym5 m = zero5(E);
    for (int i = 0; i < 4; ++i)
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c)
                if (!t.slices[i][r][c].is_zero()) m[r][c] += x[i] * lift(t.slices[i][r][c], E);
    return m;
}

std::vector<MPoly> web_quadrics(const BlockTensor& t) {
    std::vector<MPoly> out;
    const FqField& F = prime_field(t.p);
    for (const auto& a : t.slices) {
        MPoly q(5, t.p);
        for (int i = 0; i < 5; ++i)
            for (int j = i; j < 5; ++j) {
                if (a[i][j].is_zero()) continue;
                const Fq c = i == j ? a[i][j] : Fq(F, 2) * a[i][j];
                q = q + form_from(c, 5, t.p, {i, j});
            }
        out.push_back(std::move(q));
    }
    return out;
}

PointSet16 sixteen_points(const BinaryOctic& f, const Quartic& b, int max_degree) {
    const FqPoly fz = f.dehomogenized();
    if (fz.degree() != 8) throw DegenerateRoots("f(1,0) = 0");
    const int k = exact::splitting_degree(fz.compose_square());
    if (k > max_degree) throw Error("splitting field degree " + std::to_string(k) + " exceeds " +
                                    std::to_string(max_degree));
    const FqField& E = FqField::get(f.p, k);
    PointSet16 s;
    s.field = &E;
    s.alphas = exact::roots_in(fz, E);
    if (s.alphas.size() != 8) throw DegenerateRoots("f(z,1) has a repeated root");
    for (const auto& a : s.alphas) {
        if (a.is_zero()) throw DegenerateRoots("zero root");
        s.roots.push_back(exact::sqrt_in_fq(a));
    }
    for (int i = 0; i < 8; ++i) {
        const Fq& a = s.alphas[i];
        Fq ba(E, 0);
        for (int j = 4; j >= 0; --j) ba = ba * a + lift(b[j], E);
        for (int sgn : {1, -1}) {
            const Fq r = sgn > 0 ? s.roots[i] : -s.roots[i];
            s.points[2 * i + (sgn < 0)] = {r, ba / r, a * a, a, Fq(E, 1)};
        }
    }
    return s;
}

int vandermonde_corank(const std::vector<Point5>& points) {
    if (points.empty()) return 0;
    const FqField& E = points[0][0].field();
    exact::Matrix<Fq> m(points.size(), 15, Fq(E, 0));
    for (std::size_t r = 0; r < points.size(); ++r) {
        int col = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i; j < 5; ++j) m(r, col++) = points[r][i] * points[r][j];
    }
    return static_cast<int>(points.size() - exact::rank(m));
}

int vandermonde_corank(const PointSet16& pts) {
    return vandermonde_corank(std::vector<Point5>(pts.points.begin(), pts.points.end()));
}

CurveModel curve_model(const BlockTensor& t) {
    const std::uint64_t p = t.p;
    const FqField& F = prime_field(p);
    CurveModel m{form_from(Fq(F, 4), 4, p, {0, 2}) - form_from(Fq(F, 1), 4, p, {1, 1}), MPoly(4, p)};
    std::array<std::array<MPoly, 3>, 3> e{{{MPoly(4, p), MPoly(4, p), MPoly(4, p)},
                                           {MPoly(4, p), MPoly(4, p), MPoly(4, p)},
                                           {MPoly(4, p), MPoly(4, p), MPoly(4, p)}}};
    for (int i = 0; i < 4; ++i) {
        const Sym3 blk = t.block(i);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                if (!blk[r][c].is_zero()) e[r][c] = e[r][c] + form_from(blk[r][c], 4, p, {i});
    }
    m.g = e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
          e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
    return m;
}

bool nonsingularity_check(const CurveModel& m) {
    if (m.q.is_zero() || m.g.is_zero()) return false;
    std::vector<MPoly> forms{m.q, m.g};
    for (int j = 0; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) {
            MPoly minor = m.q.derivative(j) * m.g.derivative(k) - m.q.derivative(k) * m.g.derivative(j);
            if (!minor.is_zero()) forms.push_back(std::move(minor));
        }
    return exact::groebner_projective_empty(forms);
}

std::array<Fq, 4> psi_contract_secant(const BlockTensor& t, const PointSet16& pts, int a, int b) {
    if (a == b) throw NotProportional("secant needs two distinct points");
    const Point5& P = pts.points.at(a);
    const Point5& Q = pts.points.at(b);
    std::array<Fq, 4> l;
    for (int i = 0; i < 4; ++i) {
        if (!bilinear(t.slices[i], P, P).is_zero() || !bilinear(t.slices[i], Q, Q).is_zero())
            throw NotProportional("an endpoint is off the web quadric " + std::to_string(i));
        l[i] = bilinear(t.slices[i], P, Q);
    }
    int lead = 0;
    while (lead < 4 && l[lead].is_zero()) ++lead;
    if (lead == 4) throw NotProportional("every web quadric contains the secant");
    const Fq inv = l[lead].inverse();
    for (auto& x : l) x *= inv;
    return l;
}

bool BundleCheck::good() const {
    return admissible && on_quadrics && nonsingular && hilbert.dimension == 0 && hilbert.degree == 16;
}

Bundle make_bundle(const BinaryOctic& f, int max_degree) {
    Bundle b;
    b.octic = f;
    b.pair = decompose_octic(f);
    b.tensor = build_tensor(f.p, b.pair);
    b.points = sixteen_points(f, b.pair.b, max_degree);
    b.model = curve_model(b.tensor);
    return b;
}

BundleCheck check_bundle(const Bundle& b) {
    BundleCheck c;
    c.admissible = is_admissible(b.octic);
    const auto web = web_quadrics(b.tensor);
    const FqField& E = *b.points.field;
    auto lift_coeff = [&](std::uint64_t v) { return Fq(E, static_cast<std::int64_t>(v)); };
    c.on_quadrics = true;
    for (const auto& q : web)
        for (const auto& pt : b.points.points)
            c.on_quadrics = c.on_quadrics && q.eval(std::vector<Fq>(pt.begin(), pt.end()), lift_coeff).is_zero();
    c.nonsingular = nonsingularity_check(b.model);
    c.hilbert = exact::hilbert_data_zero_dim(web);
    return c;
}

Bundle sample_good_input(std::uint64_t seed, std::uint64_t p, const SampleConstraints& sc, std::size_t* trials_used) {
    if (p <= 3) throw Error("sampling needs p > 3");
    const FqField& F = prime_field(p);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coeff(0, static_cast<std::int64_t>(p) - 1);
    std::uniform_int_distribution<std::int64_t> unit(1, static_cast<std::int64_t>(p) - 1);
    for (std::size_t trial = 1; trial <= sc.max_trials; ++trial) {
        BinaryOctic f;
        f.p = p;
        for (auto& x : f.f) x = Fq(F, coeff(rng));
        auto square = [&] {
            const std::int64_t r = unit(rng);
            return Fq(F, r * r % static_cast<std::int64_t>(p));
        };
        f.f[0] = sc.f0 ? Fq(F, static_cast<std::int64_t>(*sc.f0)) : square();
        f.f[8] = sc.f8 ? Fq(F, static_cast<std::int64_t>(*sc.f8)) : square();
        if (!is_admissible(f)) continue;
        if (exact::splitting_degree(f.dehomogenized().compose_square()) > sc.max_extension_degree) continue;
        try {
            Bundle b = make_bundle(f, sc.max_extension_degree);
            if (!check_bundle(b).good()) continue;
            if (trials_used) *trials_used = trial;
            return b;
        } catch (const Error&) {
        }
    }
    throw BudgetExhausted("no good octic over F_" + std::to_string(p) + " in " + std::to_string(sc.max_trials) +
                          " trials");
}

BinaryOctic example_octic(std::uint64_t p) {
    return BinaryOctic::from_ints(p, {576, 0, -820, 0, 273, 0, -30, 0, 1});
}

namespace {

std::vector<std::uint64_t> ints_of(const Quartic& q) {
    std::vector<std::uint64_t> v;
    for (const auto& x : q) v.push_back(x.prime_value());
    return v;
}

} // namespace

std::string bundle_to_json(const Bundle& b) {
    nlohmann::json j;
    j["p"] = b.octic.p;
    std::vector<std::uint64_t> f;
    for (const auto& x : b.octic.f) f.push_back(x.prime_value());
    j["f"] = f;
    j["b"] = ints_of(b.pair.b);
    j["c"] = ints_of(b.pair.c);
    nlohmann::json slices = nlohmann::json::array();
    for (const auto& a : b.tensor.slices) {
        std::vector<std::uint64_t> packed;
        for (int r = 0; r < 5; ++r)
            for (int c = r; c < 5; ++c) packed.push_back(a[r][c].prime_value());
        slices.push_back(packed);
    }
    j["slices"] = slices;
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& pt : b.points.points) {
        std::vector<std::string> coords;
        for (const auto& x : pt) coords.push_back(x.to_string());
        pts.push_back(coords);
    }
    j["points"] = pts;
    return j.dump(2);
}

Bundle bundle_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        const auto p = j.at("p").get<std::uint64_t>();
        const auto f = j.at("f").get<std::vector<std::int64_t>>();
        Bundle b = make_bundle(BinaryOctic::from_ints(p, f));
        const auto expected = nlohmann::json::parse(bundle_to_json(b));
        for (const char* key : {"b", "c", "slices", "points"})
            if (j.at(key) != expected.at(key)) throw ParseError(std::string("bundle field '") + key + "' is inconsistent");
        return b;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("bundle: ") + ex.what());
    }
}

std::vector<exact::BigInt> integer_octic_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        auto integer = [](const nlohmann::json& v) {
            return v.is_string() ? exact::BigInt(v.get<std::string>()) : exact::BigInt(v.get<long>());
        };
        std::vector<exact::BigInt> out;
        if (j.is_array() || j.contains("f")) {
            for (const auto& v : j.is_array() ? j : j.at("f")) out.push_back(integer(v));
            if (out.size() != 9) throw ParseError("octic file: expected 9 coefficients");
            return out;
        }
        auto rational = [](const nlohmann::json& v) {
            return v.is_string() ? exact::parse_rational(v.get<std::string>()) : exact::Rational(v.get<long>());
        };
        auto poly = [&](const nlohmann::json& arr) {
            std::vector<exact::Rational> c;
            for (const auto& v : arr) c.push_back(rational(v));
            return exact::QPoly(c, exact::Rational(0));
        };
        etale::EtalePresentation pres;
        for (const auto& fac : j.at("factors")) pres.factors.push_back({poly(fac.at("modulus")), poly(fac.at("alpha")), false, std::nullopt});
        return etale::integer_octic(etale::char_poly_mult(pres));
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("octic file: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("octic file: ") + ex.what());
    }
}

BinaryOctic octic_from_json(const std::string& text, std::uint64_t default_p) {
    std::uint64_t p = default_p;
    try {
        const auto j = nlohmann::json::parse(text);
        if (j.is_object()) p = j.value("p", default_p);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("octic file: ") + ex.what());
    }
    const auto ints = integer_octic_from_json(text);
    BinaryOctic o;
    o.p = p;
    for (int i = 0; i < 9; ++i) o.f[i] = mod_p(ints[i], prime_field(p));
    return o;
}

} // namespace sixteen::geometry
