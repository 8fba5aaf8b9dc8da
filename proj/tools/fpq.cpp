// Command-line front end: quiver file parsing, brick/spectral searches,
// closed-form evaluation, verification suites, and certificate rechecking.
// All machine output is JSON on stdout (or --out PATH, written atomically).
// Exit codes: 0 success, 1 input error, 2 verification failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fpq/brick.hpp"
#include "fpq/builders.hpp"
#include "fpq/dsl.hpp"
#include "fpq/ext.hpp"
#include "fpq/loops.hpp"
#include "fpq/report.hpp"
#include "fpq/spectral.hpp"
#include "fpq/verify.hpp"

namespace {

using fpq::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;

struct Output {
    std::string path;  // empty = stdout

    void emit(const Json& j) const {
        std::string text = j.dump(2) + "\n";
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::string tmp = path + ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f) throw std::runtime_error("cannot write " + tmp);
            f << text;
        }
        if (std::rename(tmp.c_str(), path.c_str()) != 0)
            throw std::runtime_error("cannot move " + tmp + " to " + path);
    }
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::vector<int> parse_cap(const std::string& s) {
    std::vector<int> cap;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ','))
        cap.push_back(std::stoi(part));
    return cap;
}

std::vector<fpq::Rat> parse_rats(const std::string& s) {
    std::vector<fpq::Rat> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        fpq::Rat r(part);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

fpq::EnumOptions enum_options() {
    fpq::EnumOptions opt;
    if (const char* t = std::getenv("FPQ_THREADS"))
        opt.threads = std::max(0, std::atoi(t));
    return opt;
}

fpq::PrimeField pick_field(const fpq::QuiverFile& qf, long long flag_p) {
    if (flag_p > 0) return fpq::PrimeField{flag_p};
    if (qf.field && !qf.field->rational) return fpq::PrimeField{qf.field->p};
    return fpq::PrimeField{2};
}

Json suite_json(const fpq::SuiteResult& r) {
    Json j;
    j["suite"] = r.suite;
    j["pass"] = r.pass;
    j["seconds"] = r.seconds;
    j["checks"] = r.notes;
    j["failures"] = r.failures;
    return j;
}

int cmd_check(const std::string& file, const Output& out) {
    fpq::QuiverFile qf = fpq::parse_quiver(slurp(file));
    fpq::BoundQuiver bq = qf.elaborate();
    int max_len = std::max(8, qf.nilpotency.value_or(2) + 1);
    fpq::AdmissibilityReport adm = fpq::check_admissible(bq, max_len);

    Json j = fpq::report_header("check");
    j["inputs"] = {{"file", file}};
    Json res;
    res["admissible"] = adm.admissible;
    if (adm.nilpotency_bound) res["nilpotency_bound"] = *adm.nilpotency_bound;
    if (adm.algebra_dim) res["algebra_dim"] = *adm.algebra_dim;
    if (!adm.message.empty()) res["message"] = adm.message;

    bool loops_ok = true;
    if (adm.admissible) {
        fpq::PathAlgebra pa = fpq::PathAlgebra::build(bq, max_len);
        fpq::LoopCommutativityReport lc = fpq::check_loop_commutativity(pa);
        loops_ok = lc.ok;
        res["loop_commutativity"] = lc.ok;
        res["loop_violations"] = lc.violations;
    }
    j["results"] = std::move(res);
    out.emit(j);
    return (adm.admissible && loops_ok) ? kExitOk : kExitInput;
}

int cmd_bricks(const std::string& file, const std::string& cap_s, long long p,
               const Output& out) {
    fpq::QuiverFile qf = fpq::parse_quiver(slurp(file));
    fpq::BoundQuiver bq = qf.elaborate();
    std::vector<int> cap = parse_cap(cap_s);
    if ((int)cap.size() != bq.q.num_vertices)
        throw std::invalid_argument("--cap length must match the vertex count");
    fpq::PrimeField f = pick_field(qf, p);
    fpq::BrickList bl = fpq::enumerate_bricks(bq, cap, f, enum_options());

    Json j = fpq::report_header("bricks");
    j["inputs"] = {{"file", file}, {"cap", cap}, {"field", f.p}};
    j["results"] = {{"bricks", bl.bricks.size()}, {"exhaustive", bl.exhaustive}};
    j["certificate"] = fpq::brick_list_certificate(bl);
    out.emit(j);
    return kExitOk;
}

int cmd_fpdim(const std::string& file, const std::string& cap_s, int max_set,
              double tol, long long p, const Output& out) {
    fpq::QuiverFile qf = fpq::parse_quiver(slurp(file));
    fpq::BoundQuiver bq = qf.elaborate();
    std::vector<int> cap = parse_cap(cap_s);
    if ((int)cap.size() != bq.q.num_vertices)
        throw std::invalid_argument("--cap length must match the vertex count");
    fpq::PrimeField f = pick_field(qf, p);
    fpq::FpEstimate est =
        fpq::fpdim_search(bq, cap, max_set, f, tol, enum_options());

    Json j = fpq::report_header("fpdim");
    j["inputs"] = {{"file", file},
                   {"cap", cap},
                   {"max_set", max_set},
                   {"tol", tol},
                   {"field", f.p}};
    Json res;
    res["best"] = est.best;
    res["method"] = est.method;
    res["exhaustive"] = est.bricks.exhaustive;
    if (est.predicted) {
        res["predicted"] = *est.predicted;
        res["predicted_from"] = est.predicted_from;
    }
    j["results"] = std::move(res);
    j["certificate"] = fpq::fpdim_certificate(est);
    out.emit(j);
    return kExitOk;
}

int cmd_loopcheck(const std::string& file, const std::string& cap_s, long long p,
                  const Output& out) {
    fpq::QuiverFile qf = fpq::parse_quiver(slurp(file));
    fpq::BoundQuiver bq = qf.elaborate();
    std::vector<int> cap = cap_s.empty()
                               ? std::vector<int>(bq.q.num_vertices, 1)
                               : parse_cap(cap_s);
    if ((int)cap.size() != bq.q.num_vertices)
        throw std::invalid_argument("--cap length must match the vertex count");
    fpq::PrimeField f = pick_field(qf, p);
    fpq::LoopExtensionReport rep =
        fpq::loop_extension_report(bq, cap, f, enum_options());

    Json j = fpq::report_header("loopcheck");
    j["inputs"] = {{"file", file}, {"cap", cap}, {"field", f.p}};
    Json res;
    res["ok"] = rep.ok;
    res["exhaustive"] = rep.exhaustive;
    res["failures"] = rep.failures;
    res["bricks_extended"] = rep.bricks_extended;
    res["bricks_reduced"] = rep.bricks_reduced;
    res["pairs_checked"] = rep.pairs_checked;
    Json table = Json::array();
    for (auto [loops, self_ext] : rep.self_ext_table)
        table.push_back({{"loops", loops}, {"self_ext", self_ext}});
    res["self_ext_table"] = std::move(table);
    j["results"] = std::move(res);
    out.emit(j);
    return rep.ok ? kExitOk : kExitVerify;
}

fpq::FactoredPoly parse_factors(const std::string& s) {
    fpq::FactoredPoly f;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        auto colon = part.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--factors expects ROOT:MULT pairs");
        f.factors.push_back({std::stod(part.substr(0, colon)),
                             std::stoi(part.substr(colon + 1))});
    }
    return f;
}

int cmd_formula(const std::string& kind, long long nmax, int s,
                const std::string& factors, const Output& out) {
    Json j = fpq::report_header("formula");
    double value = 0;
    if (kind == "case2") {
        value = fpq::thm63_case2(nmax);
        j["inputs"] = {{"kind", kind}, {"nmax", nmax}};
    } else if (kind == "case3") {
        value = fpq::thm63_case3(nmax, s);
        j["inputs"] = {{"kind", kind}, {"nmax", nmax}, {"s", s}};
    } else if (kind == "root") {
        value = fpq::lemma61_root(parse_factors(factors));
        j["inputs"] = {{"kind", kind}, {"factors", factors}};
    } else {
        throw std::invalid_argument("formula kind must be case2, case3 or root");
    }
    j["results"] = {{"value", value}};
    out.emit(j);
    return kExitOk;
}

int cmd_polyext(int r, const std::string& lambda_s, const std::string& mu_s,
                const Output& out) {
    auto lambda = parse_rats(lambda_s);
    auto mu = parse_rats(mu_s);
    if ((int)lambda.size() != r || (int)mu.size() != r)
        throw std::invalid_argument("--lambda and --mu must list exactly r scalars");
    fpq::RationalField q;
    int e = fpq::poly_ext1(q, lambda, mu);
    Json j = fpq::report_header("polyext");
    j["inputs"] = {{"r", r}, {"lambda", lambda_s}, {"mu", mu_s}};
    j["results"] = {{"ext1", e}};
    out.emit(j);
    return kExitOk;
}

int cmd_verify(const std::string& suite, const Output& out) {
    fpq::SuiteResult r = fpq::run_suite(suite);
    Json j = fpq::report_header("verify");
    j["inputs"] = {{"suite", suite}};
    j["results"] = suite_json(r);
    out.emit(j);
    return r.pass ? kExitOk : kExitVerify;
}

int cmd_recheck(const std::string& file, const Output& out) {
    Json report = Json::parse(slurp(file));
    fpq::RecheckResult r = fpq::recheck_certificate(report);
    Json j = fpq::report_header("recheck");
    j["inputs"] = {{"file", file}};
    j["results"] = {{"ok", r.ok}, {"checks", r.checks}, {"failures", r.failures}};
    out.emit(j);
    return r.ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact brick-set and spectral-radius toolkit for bound quiver algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --out appear after the subcommand

    std::string out_path;
    app.add_option("--out", out_path, "write the JSON report to PATH atomically");

    std::string file, cap, lambda_s, mu_s, factors, suite, kind;
    long long p = 0, nmax = 1;
    int max_set = 3, r = 1, s = 1;
    double tol = 1e-9;

    auto* c_check = app.add_subcommand("check", "admissibility and loop checks");
    c_check->add_option("file", file)->required();

    auto* c_bricks = app.add_subcommand("bricks", "enumerate bricks under a cap");
    c_bricks->add_option("file", file)->required();
    c_bricks->add_option("--cap", cap, "comma-separated dimension cap")->required();
    c_bricks->add_option("--field", p, "prime field characteristic");

    auto* c_fpdim = app.add_subcommand("fpdim", "maximize the spectral radius over brick sets");
    c_fpdim->add_option("file", file)->required();
    c_fpdim->add_option("--cap", cap)->required();
    c_fpdim->add_option("--max-set", max_set, "largest brick-set size");
    c_fpdim->add_option("--tol", tol, "spectral tolerance");
    c_fpdim->add_option("--field", p, "prime field characteristic");

    auto* c_loop = app.add_subcommand("loopcheck", "loop-extension cross checks");
    c_loop->add_option("file", file)->required();
    c_loop->add_option("--cap", cap);
    c_loop->add_option("--field", p);

    auto* c_formula = app.add_subcommand("formula", "closed forms and root isolation");
    c_formula->add_option("kind", kind, "case2 | case3 | root")->required();
    c_formula->add_option("--nmax", nmax);
    c_formula->add_option("--s", s);
    c_formula->add_option("--factors", factors, "ROOT:MULT,ROOT:MULT,...");

    auto* c_polyext = app.add_subcommand("polyext", "extension count for scalar tuples");
    c_polyext->add_option("--r", r)->required();
    c_polyext->add_option("--lambda", lambda_s)->required();
    c_polyext->add_option("--mu", mu_s)->required();

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("suite", suite,
                         "thm4.1 | ex4.3 | cor5.2 | lemma5.3 | lemma6.1 | ex6.2 | "
                         "ex6.4 | thm3.3 | lemma7.x")
        ->required();

    auto* c_recheck = app.add_subcommand("recheck", "recompute a report certificate");
    c_recheck->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);
    Output out{out_path};

    try {
        if (c_check->parsed()) return cmd_check(file, out);
        if (c_bricks->parsed()) return cmd_bricks(file, cap, p, out);
        if (c_fpdim->parsed()) return cmd_fpdim(file, cap, max_set, tol, p, out);
        if (c_loop->parsed()) return cmd_loopcheck(file, cap, p, out);
        if (c_formula->parsed()) return cmd_formula(kind, nmax, s, factors, out);
        if (c_polyext->parsed()) return cmd_polyext(r, lambda_s, mu_s, out);
        if (c_verify->parsed()) return cmd_verify(suite, out);
        if (c_recheck->parsed()) return cmd_recheck(file, out);
    } catch (const fpq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
