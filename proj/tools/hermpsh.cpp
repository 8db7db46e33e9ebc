#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hermpsh/counterexample.hpp"
#include "hermpsh/decompose.hpp"
#include "hermpsh/foliation.hpp"
#include "hermpsh/format.hpp"
#include "hermpsh/levi.hpp"
#include "hermpsh/parser.hpp"
#include "hermpsh/report.hpp"

using namespace hermpsh;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kHypothesis = 3 };

struct Common {
    std::string expression;
    std::string file;
    std::string vars;
    std::uint64_t seed = 42;
    std::size_t samples = 200;
    double tol = 1e-9;
    bool json = false;
    bool allow_pluriharmonic = false;
    bool timings = false;
};

struct Args {
    Common common;
    std::size_t l = 0;
    std::string point;
    std::string direction;
    std::string basis;
    std::string map;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Common& c, bool takes_input) {
    if (takes_input) {
        cmd->add_option("expression", c.expression, "Hermitian polynomial");
        cmd->add_option("--file", c.file, "Read the expression from a UTF-8 file");
        cmd->add_option("--vars", c.vars, "Comma separated variable names, in term order");
        cmd->add_flag("--allow-pluriharmonic", c.allow_pluriharmonic,
                      "Replace a non-real pluriharmonic part by its real part");
    }
    cmd->add_option("--seed", c.seed, "Sampling seed");
    cmd->add_option("--samples", c.samples, "Number of psh sample points");
    cmd->add_option("--tol", c.tol, "Eigenvalue tolerance");
    cmd->add_flag("--json", c.json, "Emit a JSON report");
    cmd->add_flag("--timings", c.timings, "Include wall-clock timings in the report");
}

std::string read_input(const Common& c) {
    if (!c.file.empty() && !c.expression.empty()) throw UsageError("give either an expression or --file, not both");
    if (!c.file.empty()) {
        std::ifstream in(c.file, std::ios::binary);
        if (!in) throw UsageError("cannot read " + c.file);
        std::ostringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
        return text;
    }
    if (c.expression.empty()) throw UsageError("missing expression");
    return c.expression;
}

std::vector<std::string> variables(const Common& c) {
    if (c.vars.empty()) throw UsageError("--vars is required");
    return split_list(c.vars, ',');
}

struct Input {
    std::string text;
    std::vector<std::string> vars;
    HermPoly p;
};

Input load(const Common& c, Report& report) {
    Input in{read_input(c), variables(c), HermPoly(1)};
    in.p = parse_expression(in.text, in.vars, ParseOptions{c.allow_pluriharmonic});
    report.input["expression"] = in.text;
    report.input["digest"] = input_digest(in.text);
    report.input["variables"] = in.vars;
    report.input["canonical"] = format_poly(in.p, in.vars);
    return in;
}

std::vector<GaussianRational> parse_vector(const std::string& text) {
    std::vector<GaussianRational> out;
    for (const auto& item : split_list(text, ',')) out.push_back(parse_scalar(item));
    return out;
}

ComplexPoint to_complex(const std::vector<GaussianRational>& v) {
    ComplexPoint out;
    for (const auto& x : v) out.push_back(x.to_complex());
    return out;
}

json complex_array(const ComplexPoint& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(json::array({x.real(), x.imag()}));
    return out;
}

std::string index_text(const MultiIndex& m) {
    std::ostringstream ss;
    ss << m;
    return ss.str();
}

json profile_json(const HomogeneityProfile& prof, const std::vector<std::string>& vars) {
    json out;
    out["total_degree"] = prof.total_degree ? json(*prof.total_degree) : json(nullptr);
    json sep = json::object();
    for (std::size_t j = 0; j < prof.dim; ++j)
        sep[vars[j]] = prof.separate_degree[j] ? json(*prof.separate_degree[j]) : json(nullptr);
    out["separate_degree"] = sep;
    json half = json::object();
    for (std::size_t j : prof.separate_variables()) half[vars[j]] = *prof.half_degree(j);
    out["separately_homogeneous"] = half;
    return out;
}

std::vector<std::string> tail(const std::vector<std::string>& vars, std::size_t from) {
    return {vars.begin() + static_cast<std::ptrdiff_t>(from), vars.end()};
}

json poly_list(const std::vector<HoloPoly>& polys, const std::vector<std::string>& vars) {
    json out = json::array();
    for (const auto& f : polys) out.push_back(format_poly(f, vars));
    return out;
}

void cmd_analyze(const Args& a, Report& r) {
    const Input in = load(a.common, r);
    r.seed = a.common.seed;
    r.input["samples"] = a.common.samples;
    r.input["tol"] = a.common.tol;
    const HomogeneityProfile prof = profile(in.p);
    r.result["terms"] = in.p.terms().size();
    r.result["profile"] = profile_json(prof, in.vars);
    r.result["has_pluriharmonic_terms"] = has_pluriharmonic_terms(in.p);
    if (prof.half_total()) {
        const DiagonalCheck diag = diagonal_nonneg_check(in.p);
        r.checks.push_back({"diagonal_nonnegative", diag.passed,
                            diag.passed ? "all diagonal coefficients real and nonnegative"
                                        : "offending alpha=" + index_text(*diag.offending)});
    }
    const PshVerdict psh = psh_sample_test(in.p, a.common.samples, a.common.seed, a.common.tol);
    std::ostringstream detail;
    detail << "samples=" << psh.samples << " min_eigenvalue=" << psh.min_eigenvalue;
    r.checks.push_back({"psh_sampling", psh.passed, detail.str()});
    r.result["min_eigenvalue"] = psh.min_eigenvalue;
    if (psh.witness) {
        json w;
        w["point"] = complex_array(psh.witness->point);
        w["direction"] = complex_array(psh.witness->direction);
        w["eigenvalue"] = psh.witness->eigenvalue;
        r.result["witness"] = w;
    }
}

void cmd_levi(const Args& a, Report& r) {
    const Input in = load(a.common, r);
    const std::size_t n = in.vars.size();
    if (a.point.empty()) {
        if (!a.direction.empty()) throw UsageError("--direction needs --point");
        const PolyMatrix h = hessian(in.p);
        json rows = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < n; ++j) row.push_back(format_poly(h(i, j), in.vars));
            rows.push_back(row);
        }
        r.result["hessian"] = rows;
        return;
    }
    const auto point = parse_vector(a.point);
    if (point.size() != n) throw UsageError("--point needs " + std::to_string(n) + " entries");
    r.input["point"] = a.point;
    if (a.direction.empty()) {
        const double lambda = min_eigenvalue(evaluate(hessian(in.p), to_complex(point)));
        r.result["min_eigenvalue"] = lambda;
        r.checks.push_back({"hessian_psd_at_point", lambda >= -a.common.tol, ""});
        return;
    }
    const auto direction = parse_vector(a.direction);
    if (direction.size() != n) throw UsageError("--direction needs " + std::to_string(n) + " entries");
    r.input["direction"] = a.direction;
    const GaussianRational exact = levi_form_exact(in.p, point, direction);
    r.result["levi_form"] = exact.str();
    r.result["levi_form_numeric"] = levi_form(in.p, to_complex(point), to_complex(direction));
    r.checks.push_back({"levi_form_nonnegative", sgn(exact.re()) >= 0, ""});
}

void cmd_decompose_single(const Args& a, Report& r) {
    const Input in = load(a.common, r);
    try {
        const SingleDecomposition d = decompose_single(in.p);
        r.result["s"] = format_poly(d.s, {"tau"});
        r.result["h"] = format_poly(d.h, in.vars);
        r.checks.push_back({"composition_identity", d.verified, "s(h(z)) == P"});
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotDecomposable) throw;
        r.checks.push_back({"decomposable", false, e.what()});
    }
}

void cmd_decompose_separate(const Args& a, Report& r) {
    const Input in = load(a.common, r);
    r.input["l"] = a.l;
    const SeparateDecomposition d = decompose_separate(in.p, a.l);
    const std::size_t n = in.vars.size();
    r.result["q"] = format_poly(d.q, tail(in.vars, a.l));
    r.result["k"] = d.block.half_total;
    r.result["D"] = d.block.block_sum;
    r.result["d"] = d.block.block_gcd;
    r.result["exponent_divisor"] = d.block.exponent_divisor();
    json mb = json::object();
    for (const auto& [beta, m] : d.m_beta) mb[index_text(beta)] = m;
    r.result["m_beta"] = mb;
    r.result["coordinate_change"] = poly_list(d.coordinate_change(n), in.vars);
    r.result["monomial_map"] = poly_list(d.monomial_map(n), in.vars);
    r.checks.push_back({"composition_identity", d.verified, "P(Phi(z)) == Q(mu z'), both constructions of Q agree"});
}

void cmd_decompose_full(const Args& a, Report& r) {
    const Input in = load(a.common, r);
    const FullDecomposition d = decompose_full(in.p);
    r.result["s"] = format_poly(d.s, {"tau"});
    r.result["exponents"] = d.exponents;
    r.result["monomial"] = format_poly(monomial_of(d.exponents), in.vars);
    r.checks.push_back({"composition_identity", d.verified, "s(z^e) == P"});
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == m) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

void determinant_checks(const HermPoly& p, const std::vector<HoloPoly>& g, Report& r) {
    const std::size_t n = p.dim();
    std::size_t checked = 0, failed = 0;
    for (const auto& rows : combinations(n, g.size()))
        for (std::size_t col = 0; col < n; ++col) {
            const DeterminantCheck c = determinant_identity_check(p, g, rows, col);
            checked += c.checked;
            failed += c.failures.size();
        }
    r.checks.push_back({"determinant_identity", failed == 0,
                        "checked=" + std::to_string(checked) + " failures=" + std::to_string(failed)});
}

void cmd_foliation_build(const Args& a, Report& r) {
    const Input in = load(a.common, r);
    r.input["l"] = a.l;
    const FoliationMap f = build_foliation_map(profile(in.p), a.l);
    r.result["components"] = poly_list(f.components, in.vars);
    json fields = json::array();
    for (const auto& w : f.null_fields) fields.push_back(poly_list(w, in.vars));
    r.result["null_fields"] = fields;
    r.checks.push_back({"jacobian_kernel", fields_in_jacobian_kernel(f), "G' W == 0 for every field"});
}

void cmd_foliation_verify(const Args& a, Report& r) {
    const Input in = load(a.common, r);
    if (!a.map.empty()) {
        r.input["map"] = a.map;
        std::vector<HoloPoly> g;
        for (const auto& item : split_list(a.map, ';')) g.push_back(parse_holomorphic(item, in.vars));
        determinant_checks(in.p, g, r);
        return;
    }
    if (a.l == 0) throw UsageError("give --l or --map");
    r.input["l"] = a.l;
    const FoliationMap f = build_foliation_map(profile(in.p), a.l);
    r.result["components"] = poly_list(f.components, in.vars);
    r.checks.push_back({"jacobian_kernel", fields_in_jacobian_kernel(f), ""});
    const NullDirectionCheck null = verify_levi_null_directions(in.p, f);
    json residuals = json::array();
    for (const auto& res : null.residuals) residuals.push_back(format_poly(res, in.vars));
    r.result["levi_residuals"] = residuals;
    r.checks.push_back({"levi_null_directions", null.passed, "L(P; z, W(z)) == 0 for every field"});
    determinant_checks(in.p, f.components, r);
}

void cmd_hyperplane(const Args& a, Report& r) {
    const Input in = load(a.common, r);
    if (a.basis.empty()) throw UsageError("--basis is required");
    r.input["basis"] = a.basis;
    std::vector<std::vector<GaussianRational>> basis;
    for (const auto& row : split_list(a.basis, ';')) {
        basis.push_back(parse_vector(row));
        if (basis.back().size() != in.vars.size())
            throw UsageError("each basis vector needs " + std::to_string(in.vars.size()) + " entries");
    }
    r.checks.push_back({"pluriharmonic_along_subspace", pluriharmonic_along_subspace(in.p, basis),
                        "dimension " + std::to_string(basis.size())});
}

void cmd_counterexample(const Args& a, Report& r) {
    r.seed = a.common.seed;
    r.input["samples"] = a.common.samples;
    r.input["tol"] = a.common.tol;
    const CounterexampleFixture fx = counterexample_fixture();
    const CounterexampleReport rep =
        verify_counterexample(fx, CounterexampleOptions{a.common.samples, a.common.seed, a.common.tol});
    r.input["expression"] = format_poly(fx.p, fx.variables);
    r.input["variables"] = fx.variables;
    r.checks = rep.checks;
    r.result["g"] = poly_list(fx.g, fx.variables);
    r.result["obstruction_parts"] = poly_list(rep.obstruction_parts, tail(fx.variables, 1));
    r.result["span_dimension"] = rep.span_dimension;
    r.result["confirmed"] = rep.confirmed;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError:
        case ErrorCode::NotRealValued:
        case ErrorCode::UnknownVariable:
        case ErrorCode::InvalidArgument: return kUsage;
        case ErrorCode::NotDecomposable: return kFail;
        default: return kHypothesis;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of Hermitian polynomials on C^n", "hermpsh"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Args args;
    std::function<void(const Args&, Report&)> action;
    std::string command;
    auto bind = [&](CLI::App* cmd, const std::string& name, bool takes_input, auto fn) {
        add_common(cmd, args.common, takes_input);
        cmd->callback([&, name, fn] {
            command = name;
            action = fn;
        });
    };

    auto* analyze = app.add_subcommand("analyze", "Homogeneity profile and psh checks");
    bind(analyze, "analyze", true, cmd_analyze);

    auto* levi = app.add_subcommand("levi", "Print the complex Hessian or evaluate the Levi form");
    levi->add_option("--point", args.point, "Comma separated point coordinates");
    levi->add_option("--direction", args.direction, "Comma separated direction");
    bind(levi, "levi", true, cmd_levi);

    auto* decompose = app.add_subcommand("decompose", "Decomposition procedures");
    decompose->require_subcommand(1);
    bind(decompose->add_subcommand("single", "P = s(h(z))"), "decompose single", true, cmd_decompose_single);
    auto* separate = decompose->add_subcommand("separate", "P(Phi(z)) = Q(mu z')");
    separate->add_option("--l", args.l, "Size of the leading separately homogeneous block")->required();
    bind(separate, "decompose separate", true, cmd_decompose_separate);
    bind(decompose->add_subcommand("full", "P = s(z^e)"), "decompose full", true, cmd_decompose_full);

    auto* foliation = app.add_subcommand("foliation", "Foliation maps");
    foliation->require_subcommand(1);
    auto* build = foliation->add_subcommand("build", "Construct G from the profile");
    build->add_option("--l", args.l, "Block size")->required();
    bind(build, "foliation build", true, cmd_foliation_build);
    auto* verify = foliation->add_subcommand("verify", "Check the Levi null directions and determinant identity");
    auto* l_opt = verify->add_option("--l", args.l, "Block size for the constructed G");
    auto* map_opt = verify->add_option("--map", args.map, "Explicit G components separated by ';'");
    l_opt->excludes(map_opt);
    bind(verify, "foliation verify", true, cmd_foliation_verify);

    auto* hyper = app.add_subcommand("hyperplane-test", "Pluriharmonicity along a linear subspace");
    hyper->add_option("--basis", args.basis, "Basis vectors 'a,b;c,d'")->required();
    bind(hyper, "hyperplane-test", true, cmd_hyperplane);

    bind(app.add_subcommand("verify-counterexample", "Machine check of the C^3 counterexample"),
         "verify-counterexample", false, cmd_counterexample);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    Report report;
    report.command = command;
    const auto start = std::chrono::steady_clock::now();
    try {
        action(args, report);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    if (args.common.timings) {
        const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
        report.timings = json{{"total_ms", ms.count()}};
    }
    std::cout << (args.common.json ? report.dump() : report.text());
    return report.all_passed() ? kPass : kFail;
}
