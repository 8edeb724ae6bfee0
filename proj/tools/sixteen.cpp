// sixteen: command-line front end for the library.
//
// Every command prints one JSON document on stdout and diagnostics on
// stderr. Exit status is 0 when every check passed, 1 when a check failed
// and 2 on bad input.

#include "example_data.hpp"

#include "sixteen/cohomology/search.hpp"
#include "sixteen/dp1/dp1.hpp"
#include "sixteen/errors.hpp"
#include "sixteen/etale/etale.hpp"
#include "sixteen/exact/factor.hpp"
#include "sixteen/weyl/roots.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sixteen;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::uint64_t prime = 101;
    std::uint64_t seed = 0;
    std::size_t budget = 100000;
    std::size_t cap = 64;         // subgroup order for h1 and searches
    std::size_t group_cap = 4096; // intended group for chebotarev
    std::string out;
    bool inject_fault = false;
    std::string input;
    std::string generators;
    std::string target;
    int primes = 60;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text << '\n';
}

void check_prime(std::uint64_t p) {
    if (p <= 3 || !exact::is_prime(p)) throw UsageError("--prime must be a prime > 3");
}

std::vector<std::int64_t> ints(const geometry::Quartic& q) {
    std::vector<std::int64_t> v;
    for (const auto& x : q) v.push_back(static_cast<std::int64_t>(x.prime_value()));
    return v;
}

std::vector<std::int64_t> ints(const geometry::BinaryOctic& f) {
    std::vector<std::int64_t> v;
    for (const auto& x : f.f) v.push_back(static_cast<std::int64_t>(x.prime_value()));
    return v;
}

geometry::Quartic quartic(std::uint64_t p, const std::vector<std::int64_t>& c) {
    geometry::Quartic q;
    for (int i = 0; i < 5; ++i) q[i] = exact::Fq(exact::FqField::get(p, 1), c[i]);
    return q;
}

// Ordered list of named checks. A fatal failure stops the run.
struct Stages {
    json list = json::array();
    std::string failed;

    bool add(const std::string& name, bool pass, json detail = json::object()) {
        json e;
        e["stage"] = name;
        e["pass"] = pass;
        if (!detail.empty()) e["detail"] = std::move(detail);
        list.push_back(std::move(e));
        if (!pass && failed.empty()) failed = name;
        return pass;
    }

    json report(json head) const {
        head["stages"] = list;
        head["failed_stage"] = failed.empty() ? json(nullptr) : json(failed);
        head["pass"] = failed.empty();
        return head;
    }
};

int emit(const json& j) {
    std::cout << j.dump(2) << '\n';
    return j.value("pass", false) ? 0 : 1;
}

json perm_json(const weyl::SignedPerm& g) {
    std::vector<int> perm, signs;
    for (int i = 0; i < 8; ++i) perm.push_back(g.perm[i] + 1), signs.push_back(g.signs[i]);
    return json::array({perm, signs});
}

std::vector<weyl::SignedPerm> parse_generators(const json& arr) {
    std::vector<weyl::SignedPerm> gens;
    for (const auto& g : arr) {
        auto perm = g.at(0).get<std::array<int, 8>>();
        for (auto& x : perm) --x;
        gens.push_back(weyl::SignedPerm::make(perm, g.at(1).get<std::array<int, 8>>()));
    }
    return gens;
}

std::vector<weyl::SignedPerm> generators_from_file(const std::string& path) {
    try {
        const auto j = json::parse(read_file(path));
        return parse_generators(j.is_object() ? j.at("generators") : j);
    } catch (const json::exception& ex) {
        throw ParseError(std::string("generators file: ") + ex.what());
    }
}

std::vector<long> parse_target(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) out.push_back(std::stol(part));
    return out;
}

// Stages shared by every bundle: geometry of the points, planes, equivariance.
void bundle_stages(Stages& st, const geometry::Bundle& b, std::uint64_t seed) {
    const auto check = geometry::check_bundle(b);
    st.add("nonsingular", check.nonsingular);
    const int corank = geometry::vandermonde_corank(b.points);
    json hd = {check.hilbert.dimension, check.hilbert.degree ? json(*check.hilbert.degree) : json(nullptr)};
    st.add("points", check.on_quadrics && corank == 5 && check.hilbert.dimension == 0 && check.hilbert.degree == 16,
           {{"on_quadrics", check.on_quadrics}, {"corank", corank}, {"hilbert", hd},
            {"extension_degree", b.points.field->degree()}});
    const auto rep = dp1::secant_report(b, seed);
    st.add("secants", rep.type8 == 8 && rep.type112 == 112, {{"types", {rep.type8, rep.type112}}});
    st.add("planes", rep.planes == 64 && rep.eta_invariant, {{"planes", rep.planes}, {"expected", 64}, {"eta_invariant", rep.eta_invariant}});
    st.add("tritangency", rep.tritangent_pass == rep.planes, {{"passed", rep.tritangent_pass}, {"planes", rep.planes}});
    const auto& eq = rep.equivariance;
    st.add("equivariance", eq.pass && eq.even_signs,
           {{"cycle_type", eq.cycle_type}, {"factor_type", eq.factor_type}, {"even_signs", eq.even_signs},
            {"secant_orbits", eq.secant_orbits}, {"root_orbits", eq.root_orbits}, {"detail", eq.detail}});
}

int cmd_verify_example(const RunConfig& cfg) {
    check_prime(cfg.prime);
    Stages st;
    json head;
    head["command"] = "verify-example";
    head["prime"] = cfg.prime;
    if (cfg.prime == example::kPrime) {
        head["mode"] = "example";
        const auto octic = geometry::example_octic();
        auto pair = geometry::decompose_octic(octic);
        st.add("decompose", pair.b == quartic(101, example::kB) && pair.c == quartic(101, example::kC),
               {{"b", ints(pair.b)}, {"c", ints(pair.c)}});
        if (cfg.inject_fault) pair.b[2] += exact::Fq(pair.b[2].field(), 1);
        const auto tensor = geometry::build_tensor(101, pair);
        if (!st.add("tensor", example::tensor_matches(tensor))) return emit(st.report(head));
        const auto model = geometry::curve_model(tensor);
        const bool g_ok = model.g == example::printed_g();
        // The printed quadric is ours after x1 -> 2 x1, up to the factor 4.
        const bool q_ok = example::double_x1(model.q) == example::printed_q().scaled(4);
        if (!st.add("curve", g_ok && q_ok, {{"q", model.q.to_string()}, {"g", model.g.to_string()},
                                            {"g_matches_printed", g_ok}, {"q_matches_printed_after_x1_rescaling", q_ok}}))
            return emit(st.report(head));
        bundle_stages(st, geometry::make_bundle(octic), cfg.seed);
    } else {
        head["mode"] = "sampled";
        head["seed"] = cfg.seed;
        std::size_t trials = 0;
        geometry::SampleConstraints sc;
        sc.max_trials = cfg.budget < sc.max_trials ? cfg.budget : sc.max_trials;
        const auto b = geometry::sample_good_input(cfg.seed, cfg.prime, sc, &trials);
        head["trials"] = trials;
        head["f"] = ints(b.octic);
        auto pair = geometry::decompose_octic(b.octic);
        const auto back = geometry::expand(cfg.prime, pair);
        st.add("decompose", back.f == b.octic.f && pair.b[1].is_zero(), {{"b", ints(pair.b)}, {"c", ints(pair.c)}});
        if (cfg.inject_fault) pair.b[2] += exact::Fq(pair.b[2].field(), 1);
        // The tensor rebuilt from the pair must cut out the sixteen points.
        const auto tensor = geometry::build_tensor(cfg.prime, pair);
        bool on = true;
        const auto& E = *b.points.field;
        for (const auto& q : geometry::web_quadrics(tensor))
            for (const auto& pt : b.points.points)
                on = on && q.eval(std::vector<exact::Fq>(pt.begin(), pt.end()),
                                  [&](std::uint64_t c) { return exact::Fq(E, static_cast<std::int64_t>(c)); })
                               .is_zero();
        if (!st.add("tensor", on && tensor.slices == b.tensor.slices)) return emit(st.report(head));
        st.add("curve", !b.model.g.is_zero() && !b.model.q.is_zero(), {{"q", b.model.q.to_string()}, {"g", b.model.g.to_string()}});
        bundle_stages(st, b, cfg.seed);
    }
    return emit(st.report(head));
}

int cmd_h1(const RunConfig& cfg) {
    if (cfg.input.empty()) throw UsageError("h1 needs a generators file");
    json j;
    try {
        j = json::parse(read_file(cfg.input));
    } catch (const json::exception& ex) {
        throw ParseError(std::string("generators file: ") + ex.what());
    }
    auto compute = [&](const std::vector<weyl::SignedPerm>& gens) {
        const auto group = weyl::subgroup_generate(gens.empty() ? std::vector{weyl::SignedPerm::identity()} : gens, cfg.cap);
        const auto h = cohomology::h1(cohomology::rep_from_subgroup(group), cfg.cap);
        json e;
        e["order"] = group.size();
        e["h1"] = h.factors;
        return std::pair{e, h};
    };
    json out;
    out["command"] = "h1";
    // A witness store: array of {target, generators, order}.
    if (j.is_array() && !j.empty() && j[0].is_object()) {
        const auto want = parse_target(cfg.target);
        json rows = json::array();
        bool pass = true, any = false;
        for (const auto& w : j) {
            const auto target = cohomology::FinAbGroup::from_factors(w.at("target").get<std::vector<long>>());
            if (!cfg.target.empty() && target != cohomology::FinAbGroup::from_factors(want)) continue;
            auto [e, h] = compute(parse_generators(w.at("generators")));
            e["target"] = target.factors;
            e["match"] = h == target;
            pass = pass && h == target;
            any = true;
            rows.push_back(e);
        }
        out["witnesses"] = rows;
        out["pass"] = pass && any;
        return emit(out);
    }
    auto [e, h] = compute(parse_generators(j.is_object() ? j.at("generators") : j));
    out["order"] = e["order"];
    out["h1"] = e["h1"];
    out["pass"] = true;
    return emit(out);
}

int cmd_brauer_table(const RunConfig& cfg) {
    const std::string store = cfg.out.empty() ? "witnesses.json" : cfg.out;
    const auto targets = cohomology::brauer_targets(1);
    std::vector<std::optional<cohomology::Witness>> found(targets.size());
    std::vector<bool> cached(targets.size(), false);
    if (std::ifstream probe(store); probe) {
        for (const auto& w : cohomology::witnesses_from_json(read_file(store))) {
            for (std::size_t i = 0; i < targets.size(); ++i) {
                if (targets[i] != w.target || found[i]) continue;
                // a stale or tampered entry is searched again
                const auto group = weyl::subgroup_generate(
                    w.generators.empty() ? std::vector{weyl::SignedPerm::identity()} : w.generators, cfg.cap);
                if (cohomology::h1(cohomology::rep_from_subgroup(group), cfg.cap) == w.target) {
                    found[i] = w;
                    cached[i] = true;
                }
            }
        }
    }
    std::vector<cohomology::FinAbGroup> missing;
    for (std::size_t i = 0; i < targets.size(); ++i)
        if (!found[i]) missing.push_back(targets[i]);
    cohomology::SearchStats stats;
    const auto t0 = std::chrono::steady_clock::now();
    if (!missing.empty()) {
        cohomology::SearchBudget budget;
        budget.candidates = cfg.budget;
        budget.cap = cfg.cap;
        const auto res = cohomology::brauer_search(missing, budget, cfg.seed, 8, &stats);
        for (std::size_t k = 0, i = 0; i < targets.size(); ++i)
            if (!cached[i]) found[i] = res[k++];
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "brauer-table: searched " << missing.size() << " targets, " << stats.candidates << " candidates, " << secs
              << " s\n";

    std::vector<cohomology::Witness> keep;
    json rows = json::array();
    bool all = true;
    std::size_t largest = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        json r;
        r["target"] = targets[i].factors;
        r["group"] = targets[i].to_string();
        if (found[i]) {
            r["found"] = true;
            r["order"] = found[i]->order;
            r["cached"] = cached[i];
            json gens = json::array();
            for (const auto& g : found[i]->generators) gens.push_back(perm_json(g));
            r["generators"] = gens;
            keep.push_back(*found[i]);
            largest = std::max(largest, found[i]->order);
        } else {
            r["found"] = false;
            r["error"] = "NotFound";
            all = false;
        }
        rows.push_back(r);
    }
    write_file(store, cohomology::witnesses_to_json(keep));
    json out;
    out["command"] = "brauer-table";
    out["degree"] = 1;
    out["targets"] = rows;
    out["largest_witness_order"] = largest;
    out["searched"] = missing.size();
    out["pass"] = all;
    return emit(out);
}

geometry::Bundle bundle_from_input(const RunConfig& cfg, json& head) {
    if (cfg.input.empty()) {
        std::size_t trials = 0;
        geometry::SampleConstraints sc;
        sc.max_trials = cfg.budget < sc.max_trials ? cfg.budget : sc.max_trials;
        auto b = geometry::sample_good_input(cfg.seed, cfg.prime, sc, &trials);
        head["input"] = "sampled";
        head["trials"] = trials;
        return b;
    }
    const std::string text = read_file(cfg.input);
    if (json::parse(text, nullptr, false).contains("slices")) {
        head["input"] = "bundle";
        return geometry::bundle_from_json(text);
    }
    const auto f = geometry::octic_from_json(text, cfg.prime);
    check_prime(f.p);
    const std::string where = " over F_" + std::to_string(f.p);
    if (f.f[8].is_zero()) throw Error("rejected octic: f(1,0) = 0" + where);
    if (f.f[0].is_zero() || !exact::is_square(f.f[0])) throw NotASquare("rejected octic: f(0,1) is not a nonzero square" + where);
    if (!exact::is_square(f.f[8])) throw NotASquare("rejected octic: f(1,0) is not a square" + where);
    if (!geometry::is_admissible(f)) throw Error("rejected octic: f(z,1) is not squarefree" + where);
    head["input"] = "octic";
    return geometry::make_bundle(f);
}

int cmd_construct(const RunConfig& cfg) {
    check_prime(cfg.prime);
    json head;
    head["command"] = "construct";
    head["prime"] = cfg.prime;
    head["seed"] = cfg.seed;
    const auto b = bundle_from_input(cfg, head);
    head["prime"] = b.octic.p;
    head["f"] = ints(b.octic);
    Stages st;
    st.add("admissible", geometry::is_admissible(b.octic));
    bundle_stages(st, b, cfg.seed);
    const std::string bj = geometry::bundle_to_json(b);
    if (!cfg.out.empty()) write_file(cfg.out, bj);
    head["bundle"] = json::parse(bj);
    return emit(st.report(head));
}

int cmd_secants(const RunConfig& cfg) {
    check_prime(cfg.prime);
    json head;
    head["command"] = "secants";
    const auto b = bundle_from_input(cfg, head);
    const auto rep = dp1::secant_report(b, cfg.seed);
    head["prime"] = b.octic.p;
    head["report"] = json::parse(rep.to_json());
    head["eta_invariant"] = rep.eta_invariant;
    head["pass"] = rep.planes == 64 && rep.tritangent_pass == rep.planes && rep.eta_invariant && rep.equivariance.pass;
    return emit(head);
}

int cmd_chebotarev(const RunConfig& cfg) {
    if (cfg.input.empty() || cfg.generators.empty()) throw UsageError("chebotarev needs an octic file and --generators");
    const auto f = geometry::integer_octic_from_json(read_file(cfg.input));
    const auto gens = generators_from_file(cfg.generators);
    const auto group = weyl::subgroup_generate(gens.empty() ? std::vector{weyl::SignedPerm::identity()} : gens, cfg.group_cap);
    const auto allowed = etale::cycle_types(group);
    std::uint64_t hi = 5;
    for (int n = 0; n < cfg.primes; ++hi) n += exact::is_prime(hi);
    const auto entries = etale::chebotarev_sample(f, 5, hi, allowed);
    json rows = json::array();
    int good = 0;
    bool all = true;
    for (const auto& e : entries) {
        json r;
        r["prime"] = e.prime;
        r["type"] = e.type;
        r["good"] = e.good;
        r["realized"] = e.realized;
        rows.push_back(r);
        if (!e.good) {
            std::cerr << "chebotarev: skipping bad prime " << e.prime << '\n';
            continue;
        }
        ++good;
        all = all && e.realized;
    }
    json allowed_json = json::array();
    for (const auto& t : allowed) allowed_json.push_back(t);
    json out;
    out["command"] = "chebotarev";
    out["group_order"] = group.size();
    out["allowed_types"] = allowed_json;
    out["primes"] = rows;
    out["good_primes"] = good;
    out["pass"] = all && good > 0;
    return emit(out);
}

int cmd_roots(const RunConfig&) {
    const auto& roots = weyl::e8_roots();
    std::size_t integral = 0;
    for (const auto& r : roots) integral += r.integral();
    const std::size_t orbit = weyl::d8_sublattice_orbit().size();
    const std::uint64_t order = weyl::wd8_order_check();
    json out;
    out["command"] = "roots";
    out["e8_roots"] = roots.size();
    out["integral_roots"] = integral;
    out["d8_sublattices"] = orbit;
    out["wd8_order"] = order;
    out["pass"] = roots.size() == 240 && integral == 112 && orbit == 135 && order == 5160960;
    return emit(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sixteen: del Pezzo surfaces of degree one from sixteen points in P^4"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--prime", cfg.prime, "prime p > 3");
        sub->add_option("--seed", cfg.seed, "seed for every randomized stage");
        sub->add_option("--budget", cfg.budget, "candidate or trial budget");
        sub->add_option("--out", cfg.out, "output file");
    };
    auto* verify = app.add_subcommand("verify-example", "reproduce the worked example (or a sampled bundle)");
    common(verify);
    verify->add_flag("--inject-fault", cfg.inject_fault, "corrupt one coefficient of b (testing only)");
    auto* h1 = app.add_subcommand("h1", "H^1 of a subgroup of W(D8) on the E8 lattice");
    h1->add_option("file", cfg.input, "generators or witness file")->required();
    h1->add_option("--target", cfg.target, "select witnesses by invariant factors, e.g. 4,4,2,2");
    h1->add_option("--cap", cfg.cap, "largest group order");
    auto* table = app.add_subcommand("brauer-table", "witnesses for the degree-one Brauer targets");
    common(table);
    table->add_option("--cap", cfg.cap, "largest group order");
    auto* construct = app.add_subcommand("construct", "bundle and reports from an octic file, or a sampled octic");
    common(construct);
    construct->add_option("file", cfg.input, "octic or etale presentation file");
    auto* secants = app.add_subcommand("secants", "secant, plane and equivariance report");
    common(secants);
    secants->add_option("file", cfg.input, "bundle or octic file");
    auto* cheb = app.add_subcommand("chebotarev", "Frobenius cycle types against an intended group");
    common(cheb);
    cheb->add_option("file", cfg.input, "integer octic or etale presentation file")->required();
    cheb->add_option("--generators", cfg.generators, "generators of the intended group")->required();
    cheb->add_option("--primes", cfg.primes, "number of primes from 5 on");
    cheb->add_option("--cap", cfg.group_cap, "largest group order");
    auto* roots = app.add_subcommand("roots", "lattice counts");

    CLI11_PARSE(app, argc, argv);
    try {
        if (verify->parsed()) return cmd_verify_example(cfg);
        if (h1->parsed()) return cmd_h1(cfg);
        if (table->parsed()) return cmd_brauer_table(cfg);
        if (construct->parsed()) return cmd_construct(cfg);
        if (secants->parsed()) return cmd_secants(cfg);
        if (cheb->parsed()) return cmd_chebotarev(cfg);
        if (roots->parsed()) return cmd_roots(cfg);
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        std::cout << json{{"pass", false}, {"error", ex.what()}}.dump(2) << '\n';
        return 2;
    }
    return 2;
}
