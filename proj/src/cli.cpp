#include "cliffdkp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "cliffdkp/error.hpp"
#include "cliffdkp/expr_parser.hpp"
#include "cliffdkp/field_calculus.hpp"
#include "cliffdkp/subspaces.hpp"
#include "cliffdkp/verify.hpp"

namespace cliffdkp::cli {

namespace {

using json = nlohmann::ordered_json;

struct Result {
    std::string name;
    bool pass = true;
    std::string detail;
    std::uint64_t run = 1;
    std::uint64_t failed = 0;
};

struct Report {
    std::string command;
    json params = json::object();
    std::vector<Result> results;

    void add(std::string name, bool pass, std::string detail) {
        results.push_back({std::move(name), pass, std::move(detail), 1, pass ? 0u : 1u});
    }
    bool pass() const {
        for (const auto& r : results)
            if (!r.pass)
                return false;
        return true;
    }
};

void emit(const Report& rep, const std::string& format, std::ostream& out) {
    std::uint64_t run = 0, failed = 0;
    for (const auto& r : rep.results) {
        run += r.run;
        failed += r.failed;
    }
    if (format == "json") {
        json j;
        j["command"] = rep.command;
        j["params"] = rep.params;
        j["results"] = json::array();
        for (const auto& r : rep.results)
            j["results"].push_back({{"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
        j["pass"] = rep.pass();
        j["checks_run"] = run;
        j["checks_failed"] = failed;
        out << j.dump(2) << "\n";
        return;
    }
    out << rep.command;
    for (const auto& [k, v] : rep.params.items())
        out << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    out << "\n";
    for (const auto& r : rep.results)
        out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    out << (rep.pass() ? "pass" : "FAIL") << " (" << run << " checks, " << failed << " failed)\n";
}

struct Options {
    int n = 3;
    int p = 0;
    int mu = 1;
    int nu = 0;
    std::uint64_t seed = 42;
    std::string suite = "all";
    std::string metric = "identity";
    std::string lambda = "identity";
    std::string H, G, F, K;
    std::string format = "text";
};

void check_np(const Options& o, bool with_p) {
    if (o.n < 1 || o.n > kMaxDim)
        throw std::invalid_argument("--n must lie in 1.." + std::to_string(kMaxDim));
    if (with_p && (o.p < 0 || o.p > o.n))
        throw std::invalid_argument("--p must lie in 0..n");
}

FrameMap frame_option(const Options& o) {
    try {
        return FrameMap(parse_matrix(o.lambda, o.n));
    } catch (const MetricError&) {
        throw std::invalid_argument("--lambda is singular");
    }
}

FieldPoly expr_option(const std::string& flag, const std::string& text, const Options& o) {
    try {
        return parse_expr(text, o.n, o.p);
    } catch (const Error& e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
}

Report do_verify(const Options& o) {
    check_np(o, false);
    VerifyOptions v;
    v.n = o.n;
    v.seed = o.seed;
    if (o.metric != "identity") {
        v.metric = parse_matrix(o.metric, o.n);
        try {
            Metric check(*v.metric);
        } catch (const MetricError& e) {
            throw std::invalid_argument(std::string("--metric: ") + e.what());
        }
    }
    if (o.lambda != "identity")
        v.lambda = frame_option(o).lambda();
    Report rep;
    rep.command = "verify";
    rep.params = {{"n", o.n}, {"suite", o.suite}, {"seed", o.seed}, {"metric", o.metric}, {"lambda", o.lambda}};
    for (auto& c : run_suite(o.suite, v))
        rep.results.push_back({c.name, c.pass(), c.detail, c.run, c.failed});
    return rep;
}

Report do_derive(const Options& o) {
    check_np(o, true);
    const FrameMap L = frame_option(o);
    const FieldPoly H = expr_option("--H", o.H, o);
    Report rep;
    rep.command = "derive-dwh";
    rep.params = {{"n", o.n}, {"p", o.p}, {"lambda", o.lambda}, {"H", H.str()}};
    const DwhEquationSet eqs = dwh_derive(H, o.p, L);
    const auto expect = dwh_closed_form(H, o.p, L);
    for (std::size_t i = 0; i < eqs.normalized.size(); ++i) {
        const auto& e = eqs.normalized[i];
        rep.add(e.label, i < expect.size() && e == expect[i], e.str());
    }
    return rep;
}

Report do_bracket(const Options& o) {
    check_np(o, true);
    if (o.mu < 1 || o.mu > o.n)
        throw std::invalid_argument("--mu must lie in 1..n");
    const int nu = o.nu ? o.nu : o.mu;
    if (nu < 1 || nu > o.n)
        throw std::invalid_argument("--nu must lie in 1..n");
    const FrameMap L = frame_option(o);
    const FieldPoly G = expr_option("--G", o.G, o);
    const FieldPoly F = expr_option("--F", o.F, o);
    Report rep;
    rep.command = "bracket";
    rep.params = {{"n", o.n}, {"p", o.p}, {"mu", o.mu}, {"lambda", o.lambda}, {"G", G.str()}, {"F", F.str()}};
    const FieldPoly b = bracket(G, F, o.mu, o.p, L);
    rep.add("bracket", true, b.str());
    rep.add("closed_form", b == bracket_closed_form(G, F, o.mu, o.p, L), bracket_closed_form(G, F, o.mu, o.p, L).str());
    rep.add("antisymmetry", (b + bracket(F, G, o.mu, o.p, L)).is_zero(), "{G,F} + {F,G}");
    if (!o.K.empty()) {
        const FieldPoly K = expr_option("--K", o.K, o);
        rep.params["K"] = K.str();
        rep.params["nu"] = nu;
        const FieldPoly lz = check_leibniz(G, F, K, o.mu, o.p, L);
        rep.add("leibniz", lz.is_zero(), "residual " + lz.str());
        const FieldPoly jc = check_jacobi_sym(G, F, K, o.mu, nu, o.p, L);
        rep.add("jacobi_symmetrized", jc.is_zero(), "residual " + jc.str());
    }
    return rep;
}

Report do_dims(const Options& o) {
    check_np(o, false);
    Report rep;
    rep.command = "dims";
    rep.params = {{"n", o.n}};
    for (int p = 0; p <= o.n; ++p) {
        const auto d = dim_zp(o.n, p);
        rep.add("p=" + std::to_string(p), zp_basis(o.n, p).size() == d, std::to_string(d));
    }
    return rep;
}

Report do_oracle(const Options& o) {
    check_np(o, false);
    if (o.n > 4)
        throw std::invalid_argument("oracle-check supports n <= 4");
    VerifyOptions v;
    v.n = o.n;
    v.seed = o.seed;
    Report rep;
    rep.command = "oracle-check";
    rep.params = {{"n", o.n}, {"seed", o.seed}};
    for (auto& c : run_suite("core", v))
        if (c.name == "core.oracle_homomorphism")
            rep.results.push_back({c.name, c.pass(), c.detail, c.run, c.failed});
    return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact projector-basis Clifford algebra, DKP generators and field-equation tools", "cliffdkp"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* s) {
        s->add_option("--n", o.n, "dimension n")->capture_default_str();
        s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    };
    auto* verify = app.add_subcommand("verify", "run identity suites");
    common(verify);
    verify->add_option("--suite", o.suite, "core|dkp|subspaces|bracket|all")
        ->check(CLI::IsMember({"core", "dkp", "subspaces", "bracket", "all"}))
        ->capture_default_str();
    verify->add_option("--seed", o.seed, "random seed")->capture_default_str();
    verify->add_option("--metric", o.metric, "identity or rows \"a,b;c,d\"")->capture_default_str();
    verify->add_option("--lambda", o.lambda, "identity or rows \"a,b;c,d\"")->capture_default_str();

    auto* derive = app.add_subcommand("derive-dwh", "derive the field equations for a Hamiltonian");
    common(derive);
    derive->add_option("--p", o.p, "rank")->capture_default_str();
    derive->add_option("--lambda", o.lambda, "frame map")->capture_default_str();
    derive->add_option("--H", o.H, "Hamiltonian")->required();

    auto* br = app.add_subcommand("bracket", "evaluate the bracket {G,F}_mu");
    common(br);
    br->add_option("--p", o.p, "rank")->capture_default_str();
    br->add_option("--mu", o.mu, "frame index, 1-based")->capture_default_str();
    br->add_option("--nu", o.nu, "second frame index for the Jacobi check (default: mu)");
    br->add_option("--lambda", o.lambda, "frame map")->capture_default_str();
    br->add_option("--G", o.G, "first argument")->required();
    br->add_option("--F", o.F, "second argument")->required();
    br->add_option("--K", o.K, "third argument: adds Leibniz and Jacobi checks");

    auto* dims = app.add_subcommand("dims", "tabulate dim Z_(p)");
    common(dims);

    auto* oracle = app.add_subcommand("oracle-check", "compare products with the Fock representation");
    common(oracle);
    oracle->add_option("--seed", o.seed, "random seed")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Report rep;
    try {
        if (verify->parsed())
            rep = do_verify(o);
        else if (derive->parsed())
            rep = do_derive(o);
        else if (br->parsed())
            rep = do_bracket(o);
        else if (dims->parsed())
            rep = do_dims(o);
        else
            rep = do_oracle(o);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    emit(rep, o.format, out);
    return rep.pass() ? 0 : 1;
}

}  // namespace cliffdkp::cli
