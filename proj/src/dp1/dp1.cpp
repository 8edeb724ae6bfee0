#include "sixteen/dp1/dp1.hpp"

#include "sixteen/errors.hpp"
#include "sixteen/etale/etale.hpp"
#include "sixteen/exact/factor.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <set>

namespace sixteen::dp1 {

using exact::FqField;
using exact::FqPoly;
using Vec = std::vector<Fq>;

Secant make_secant(int x, int y) {
    if (x == y || x < 0 || y < 0 || x > 15 || y > 15) throw Error("secant needs two distinct symbols");
    return x < y ? Secant{x, y} : Secant{y, x};
}

Secant Secant::eta() const { return make_secant(a ^ 1, b ^ 1); }

Secant Secant::image(const weyl::Perm16& g) const { return make_secant(g[a], g[b]); }

std::vector<Secant> enumerate_secants() {
    std::vector<Secant> out;
    for (int a = 0; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b) out.push_back({a, b});
    return out;
}

FqMatrix to_matrix(const geometry::Sym5& s) {
    FqMatrix m(5, 5, Fq(s[0][0].field(), 0));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m(i, j) = s[i][j];
    return m;
}

QuadricData quadric_rank_kernel(const FqMatrix& q) {
    QuadricData d{q, 0, exact::kernel(q)};
    d.rank = static_cast<int>(q.cols() - d.kernel.size());
    return d;
}

namespace {

Fq form(const FqMatrix& q, const Vec& v, const Vec& w) {
    Fq acc = q.zero();
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) acc += v[i] * q(i, j) * w[j];
    return acc;
}

Vec to_vec(const Point5& p) { return Vec(p.begin(), p.end()); }

Fq random_element(const FqField& E, std::mt19937_64& rng) { return Fq::random(E, rng); }

} // namespace

bool isotropic_check(const FqMatrix& q, const std::vector<Vec>& basis) {
    for (const auto& v : basis)
        for (const auto& w : basis)
            if (!form(q, v, w).is_zero()) return false;
    return true;
}

int span_dimension(const std::vector<Vec>& vs) {
    if (vs.empty()) return 0;
    FqMatrix m(vs.size(), vs[0].size(), exact::zero_like(vs[0][0]));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs[i].size(); ++j) m(i, j) = vs[i][j];
    return static_cast<int>(exact::rank(m));
}

bool same_family(const FqMatrix& q, const std::vector<Vec>& v, const std::vector<Vec>& w) {
    if (exact::rank(q) != 4) throw Error("family comparison needs a rank-4 quadric");
    for (const auto* s : {&v, &w})
        if (span_dimension(*s) != 3 || !isotropic_check(q, *s))
            throw NotMaximal("subspace is not a 3-dimensional isotropic subspace");
    std::vector<Vec> both = v;
    both.insert(both.end(), w.begin(), w.end());
    const int meet = 6 - span_dimension(both);
    return (3 - meet) % 2 == 0;
}

TauReport tau_family_samples(const geometry::BlockTensor& t, const Secant& l, const geometry::PointSet16& pts,
                             int trials, std::uint64_t seed) {
    if (l.type() != 112) throw Error("tau is sampled for type-112 secants only");
    const FqField& E = *pts.field;
    const auto lambda = geometry::psi_contract_secant(t, pts, l.a, l.b);
    const Secant m = l.eta();
    std::mt19937_64 rng(seed);
    TauReport rep;
    const Fq two(E, 2);
    for (int trial = 0; trial < trials; ++trial) {
        Fq u = random_element(E, rng), v = random_element(E, rng), w = random_element(E, rng);
        // the quadric A(x) contains the secant iff lambda . x = 0
        if (!lambda[3].is_zero()) {
            w = -(lambda[0] * u * u + lambda[1] * two * u * v + lambda[2] * v * v) / lambda[3];
        } else if (!lambda[0].is_zero()) {
            v = Fq(E, 1);
            const Fq disc = lambda[1] * lambda[1] - lambda[0] * lambda[2];
            if (!exact::is_square(disc)) continue;
            u = (-lambda[1] + exact::sqrt_in_fq(disc)) / lambda[0];
        } else if (!lambda[1].is_zero()) {
            v = Fq(E, 1);
            u = -lambda[2] / (two * lambda[1]);
        } else {
            u = Fq(E, 0);
        }
        const std::array<Fq, 4> x{u * u, two * u * v, v * v, w};
        if (std::all_of(x.begin(), x.end(), [](const Fq& c) { return c.is_zero(); })) continue;
        const FqMatrix a = to_matrix(geometry::contract(t, x));
        const auto qd = quadric_rank_kernel(a);
        if (qd.rank != 4) continue;
        const std::vector<Vec> V{to_vec(pts.points[l.a]), to_vec(pts.points[l.b]), qd.kernel[0]};
        const std::vector<Vec> W{to_vec(pts.points[m.a]), to_vec(pts.points[m.b]), qd.kernel[0]};
        if (span_dimension(V) != 3 || span_dimension(W) != 3) continue;
        if (!isotropic_check(a, V) || !isotropic_check(a, W)) continue;
        const bool same = same_family(a, V, W);
        std::vector<Vec> both = V;
        both.insert(both.end(), W.begin(), W.end());
        rep.samples.push_back({x, same, 6 - span_dimension(both)});
        rep.tau.push_back({x, false});
        rep.tau_eta.push_back({x, !same});
    }
    if (rep.samples.empty()) throw NoSamples("no point of the cone qualified in " + std::to_string(trials) + " trials");
    const bool first = rep.samples[0].same;
    if (std::all_of(rep.samples.begin(), rep.samples.end(), [&](const TauSample& s) { return s.same == first; }))
        rep.constant = first;
    return rep;
}

PlaneSextic plane_sextic(const std::array<Fq, 4>& plane, const geometry::CurveModel& m, std::uint64_t seed) {
    const FqField* E = &plane[0].field();
    std::array<Fq, 4> h = plane;
    if (E->degree() == 1 && E->characteristic() < 7) {
        E = &FqField::get(E->characteristic(), 2);
        for (auto& c : h) c = Fq(*E, static_cast<std::int64_t>(c.prime_value()));
    }
    const Fq zero(*E, 0);
    FqMatrix row(1, 4, zero);
    for (int i = 0; i < 4; ++i) row(0, i) = h[i];
    const auto basis = exact::kernel(row);
    if (basis.size() != 3) throw DegenerateRestriction("the plane vector is zero");

    std::mt19937_64 rng(seed);
    auto lift = [&](std::uint64_t c) { return FqPoly::constant(Fq(*E, static_cast<std::int64_t>(c))); };
    for (int attempt = 0; attempt < 20; ++attempt) {
        FqMatrix r(3, 3, zero);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = random_element(*E, rng);
        if (exact::determinant(r).is_zero()) continue;
        // columns of n span the plane; parameters (t, 1, w)
        std::array<std::array<Fq, 3>, 4> n;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 3; ++j) {
                n[i][j] = zero;
                for (int k = 0; k < 3; ++k) n[i][j] += basis[k][i] * r(k, j);
            }
        std::vector<Fq> ts;
        while (ts.size() < 7) {
            const Fq c = random_element(*E, rng);
            if (std::find(ts.begin(), ts.end(), c) == ts.end()) ts.push_back(c);
        }
        std::vector<Fq> values;
        bool q_vanishes = true, g_vanishes = true;
        for (const auto& tv : ts) {
            std::vector<FqPoly> x;
            for (int i = 0; i < 4; ++i) x.emplace_back(std::vector<Fq>{n[i][0] * tv + n[i][1], n[i][2]}, zero);
            const FqPoly qw = m.q.eval(x, lift), gw = m.g.eval(x, lift);
            q_vanishes = q_vanishes && qw.is_zero();
            g_vanishes = g_vanishes && gw.is_zero();
            values.push_back(exact::resultant_formal(qw, gw, 2, 3));
        }
        if (q_vanishes || g_vanishes) throw DegenerateRestriction("q or g vanishes on the plane");
        FqPoly s = exact::interpolate(ts, values);
        if (s.is_zero()) continue; // projection centre on the curve
        return {s, 6 - s.degree()};
    }
    throw DegenerateRestriction("no usable projection of the plane section");
}

bool tritangency_test(const std::array<Fq, 4>& plane, const geometry::CurveModel& m, std::uint64_t seed) {
    for (std::uint64_t k = 0; k < 2; ++k) {
        const auto s = plane_sextic(plane, m, seed * 2 + k);
        if (s.at_infinity % 2 != 0) return false;
        if (s.poly.degree() > 0 && !exact::is_perfect_square_up_to_unit(s.poly)) return false;
    }
    return true;
}

weyl::Root secant_root(const Secant& l) {
    if (l.type() != 112) throw Error("type-8 secants have no root");
    return weyl::Root::unit_sum(weyl::symbol_index(l.a), weyl::symbol_sign(l.a), weyl::symbol_index(l.b),
                                weyl::symbol_sign(l.b));
}

std::map<Secant, weyl::Root> secant_root_bijection() {
    std::map<Secant, weyl::Root> out;
    for (const auto& l : enumerate_secants())
        if (l.type() == 112) out.emplace(l, secant_root(l));
    return out;
}

namespace {

template <class Map>
std::vector<int> orbit_sizes(int n, Map image) {
    std::vector<bool> seen(n, false);
    std::vector<int> sizes;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (int x = s; !seen[x]; x = image(x)) seen[x] = true, ++len;
        sizes.push_back(len);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace

EquivarianceReport frobenius_equivariance_check(const geometry::Bundle& b) {
    EquivarianceReport r;
    const auto& pts = b.points;
    auto fail = [&](std::string why) {
        r.pass = false;
        r.detail = std::move(why);
        return r;
    };

    std::array<int, 8> perm{}, signs{};
    for (int i = 0; i < 8; ++i) {
        const Fq a = pts.alphas[i].frobenius();
        const auto it = std::find(pts.alphas.begin(), pts.alphas.end(), a);
        if (it == pts.alphas.end()) return fail("alpha^p is not a root");
        perm[i] = static_cast<int>(it - pts.alphas.begin());
        const Fq s = pts.roots[i].frobenius();
        if (s == pts.roots[perm[i]]) signs[perm[i]] = 1;
        else if (s == -pts.roots[perm[i]]) signs[perm[i]] = -1;
        else return fail("r^p is not a signed root");
    }
    r.from_field = weyl::SignedPerm::make(perm, signs);
    r.even_signs = r.from_field.in_wd8();

    for (int x = 0; x < 16; ++x) {
        Point5 img;
        for (int c = 0; c < 5; ++c) img[c] = pts.points[x][c].frobenius();
        const auto it = std::find(pts.points.begin(), pts.points.end(), img);
        if (it == pts.points.end()) return fail("Frobenius does not permute the points");
        r.from_points[x] = static_cast<std::uint8_t>(it - pts.points.begin());
    }
    r.cycle_type = weyl::cycle_type(r.from_points);

    std::vector<exact::BigInt> f;
    for (const auto& c : b.octic.f) f.emplace_back(static_cast<unsigned long>(c.prime_value()));
    try {
        r.factor_type = etale::frobenius_cycle_type(f, b.octic.p);
    } catch (const BadPrime& e) {
        return fail(e.what());
    }

    const auto secants = enumerate_secants();
    std::vector<Secant> big;
    for (const auto& l : secants)
        if (l.type() == 112) big.push_back(l);
    bool roots_match = true;
    for (const auto& l : big)
        roots_match = roots_match &&
                      secant_root(l.image(r.from_points)) == weyl::act_root(r.from_field, secant_root(l));
    r.secant_orbits = orbit_sizes(static_cast<int>(big.size()), [&](int k) {
        return static_cast<int>(std::lower_bound(big.begin(), big.end(), big[k].image(r.from_points)) - big.begin());
    });
    std::vector<weyl::Root> integral;
    for (const auto& root : weyl::e8_roots())
        if (root.integral()) integral.push_back(root);
    r.root_orbits = orbit_sizes(static_cast<int>(integral.size()), [&](int k) {
        const auto img = weyl::act_root(r.from_field, integral[k]);
        return static_cast<int>(std::lower_bound(integral.begin(), integral.end(), img) - integral.begin());
    });

    if (weyl::omega_perm(r.from_field) != r.from_points) return fail("field and point Frobenius differ");
    if (r.cycle_type != r.factor_type) return fail("cycle type differs from the factorisation of f(z^2)");
    if (!roots_match) return fail("secant and root actions differ");
    if (r.secant_orbits != r.root_orbits) return fail("orbit sizes differ");
    if (!r.even_signs) return fail("odd number of sign changes");
    r.pass = true;
    return r;
}

SecantReport secant_report(const geometry::Bundle& b, std::uint64_t seed) {
    SecantReport rep;
    std::map<Secant, std::array<Fq, 4>> planes;
    for (const auto& l : enumerate_secants()) {
        (l.type() == 8 ? rep.type8 : rep.type112)++;
        planes.emplace(l, geometry::psi_contract_secant(b.tensor, b.points, l.a, l.b));
    }
    rep.eta_invariant = true;
    for (const auto& [l, h] : planes)
        if (l.type() == 112) rep.eta_invariant = rep.eta_invariant && planes.at(l.eta()) == h;
    std::vector<std::array<Fq, 4>> distinct;
    for (const auto& [l, h] : planes)
        if (std::find(distinct.begin(), distinct.end(), h) == distinct.end()) distinct.push_back(h);
    rep.planes = static_cast<int>(distinct.size());
    for (std::size_t i = 0; i < distinct.size(); ++i)
        rep.tritangent_pass += tritangency_test(distinct[i], b.model, seed + i);
    rep.equivariance = frobenius_equivariance_check(b);
    return rep;
}

std::string SecantReport::to_json() const {
    nlohmann::json j;
    j["secant_types"] = {type8, type112};
    j["planes"] = planes;
    j["tritangent_pass"] = tritangent_pass;
    j["equivariance"] = equivariance.pass ? "pass" : "fail";
    j["orbit_sizes"] = {{"secants", equivariance.secant_orbits}, {"roots", equivariance.root_orbits}};
    return j.dump(2);
}

} // namespace sixteen::dp1
