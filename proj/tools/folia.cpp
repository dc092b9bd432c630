// Command-line front end: folia verify|modular|bott <file> | builtin <name> [flags]
#include "folia/io.hpp"
#include "folia/parse.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace folia;

namespace {

enum Exit { Ok = 0, Failed = 1, BadInput = 2, Missing = 3 };

struct Args {
    std::vector<std::string> target;
    std::optional<int> n;
    std::optional<std::string> field;
    std::optional<int> degree_bound;
    std::vector<std::string> points;
    std::optional<std::string> witness;
    std::optional<int> exactness_degree;
    bool json = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_builtin(const Args& a) { return a.target.size() == 2 && a.target[0] == "builtin"; }

void check_target(const Args& a) {
    if (a.target.size() == 1 || is_builtin(a)) return;
    throw CLI::ValidationError("target", "expected <file> or 'builtin <name>'");
}

PresentationFile load(const Args& a) {
    if (is_builtin(a)) return builtin_presentation(a.target[1], a.n, a.field);
    return parse_presentation(read_file(a.target[0]));
}

RegularPresentation load_regular(const Args& a) {
    if (is_builtin(a)) return builtin_regular(a.target[1], a.n);
    return parse_regular(read_file(a.target[0]));
}

std::optional<int> env_degree_bound() {
    const char* s = std::getenv("FOLIA_DEGREE_BOUND");
    if (!s || !*s) return std::nullopt;
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("FOLIA_DEGREE_BOUND is not an integer: ") + s);
    }
}

void print_failures(const Json& checks) {
    for (const auto& [name, c] : checks.items()) {
        std::cout << "  " << name << ": " << ((c.contains("pass") ? c["pass"] : c["exact"]).get<bool>() ? "pass" : "FAIL");
        if (c.contains("checked")) std::cout << " (" << c["checked"].get<int>() << " checked)";
        std::cout << "\n";
        if (c.contains("failures"))
            for (const auto& f : c["failures"])
                std::cout << "    " << f["where"].get<std::string>() << ": " << f["residual"].get<std::string>() << "\n";
        for (const char* key : {"unchecked", "unchecked_blocks"})
            if (c.contains(key))
                for (const auto& u : c[key]) std::cout << "    unchecked: " << u.get<std::string>() << "\n";
        if (c.contains("slices"))
            for (const auto& s : c["slices"])
                std::cout << "    level " << s["level"] << " degree " << s["degree"] << ": ker " << s["kernel_dim"]
                          << ", im " << s["image_dim"] << (s["exact"].get<bool>() ? "" : "  NOT EXACT") << "\n";
    }
}

int run_verify(const Args& a) {
    PresentationFile f = load(a);
    Json r = verify_json(f, VerifyOptions{a.exactness_degree});
    if (a.json) {
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << f.name << "\n";
        print_failures(r["structure_checks"]);
        std::cout << (r["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
    return r["pass"].get<bool>() ? Ok : Failed;
}

int run_modular(const Args& a) {
    PresentationFile f = load(a);
    std::vector<std::vector<Rational>> pts;
    for (const auto& p : a.points) pts.push_back(parse_point(p, f.algebroid.vars()->size()));
    std::optional<int> bound = a.degree_bound ? a.degree_bound : env_degree_bound();
    Json r = modular_json(f, report_options(f, bound, a.witness, pts));
    if (a.json) {
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << f.name << "\n";
        print_failures(r["structure_checks"]);
        std::cout << "theta:\n";
        for (const auto& [k, v] : r["theta"].items()) std::cout << "  " << k << " -> " << v.get<std::string>() << "\n";
        std::cout << "closedness: " << (r["closedness"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
        const Json& ex = r["exactness"];
        std::cout << "exactness: " << ex["verdict"].get<std::string>();
        if (!ex["witness"].is_null()) std::cout << ", g = " << ex["witness"].get<std::string>();
        if (!ex["obstruction_point"].is_null())
            std::cout << ", obstructed at " << ex["obstruction_point"].dump() << " along "
                      << ex["obstruction_basis"].get<std::string>();
        std::cout << " (degree bound " << ex["degree_bound"] << ")\n";
        if (r.contains("witness_check")) {
            const Json& w = r["witness_check"];
            std::cout << "witness " << w["witness"].get<std::string>() << ": "
                      << (w["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
            for (const auto& [k, v] : w["residuals"].items())
                if (v.get<std::string>() != "0") std::cout << "  residual " << k << ": " << v.get<std::string>() << "\n";
        }
        std::cout << "unimodular: " << r["unimodular"].get<std::string>() << "\n";
    }
    return r["pass"].get<bool>() ? Ok : Failed;
}

int run_bott(const Args& a) {
    RegularPresentation p = load_regular(a);
    std::optional<RatLogExpr> extra;
    if (a.witness) extra = parse_ratlog(*a.witness, p.vars);
    Json r = bott_json(p, extra);
    if (a.json) {
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << p.name << "\n";
        std::cout << "annihilator consistent: " << (r["annihilator_consistent"].get<bool>() ? "yes" : "NO") << "\n";
        std::cout << "flat: " << (r["flat"].get<bool>() ? "yes" : "NO") << "\n";
        std::cout << "theta:\n";
        for (const auto& [k, v] : r["theta"].items()) std::cout << "  " << k << " -> " << v.get<std::string>() << "\n";
        for (const auto& w : r["witness_checks"]) {
            std::cout << "witness " << w["witness"].get<std::string>() << ": " << (w["pass"].get<bool>() ? "pass" : "FAIL")
                      << "\n";
            for (const auto& [k, v] : w["residuals"].items())
                if (v.get<std::string>() != "0") std::cout << "  residual " << k << ": " << v.get<std::string>() << "\n";
        }
        if (r.contains("invariant"))
            std::cout << "invariant " << r["invariant"]["factor"].get<std::string>() << ": "
                      << (r["invariant"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
    return r["pass"].get<bool>() ? Ok : Failed;
}

int run_builtin(const Args& a) {
    if (a.target.size() != 1) throw CLI::ValidationError("name", "expected one builtin name");
    const std::string& name = a.target[0];
    auto regs = builtin_regular_names();
    if (std::find(regs.begin(), regs.end(), name) != regs.end())
        std::cout << write_regular(builtin_regular(name, a.n));
    else
        std::cout << write_presentation(builtin_presentation(name, a.n, a.field));
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modular classes of singular foliations presented by Lie n-algebroids"};
    app.require_subcommand(1);
    Args a;

    std::string names;
    for (const auto& n : builtin_names()) names += " " + n;
    std::string reg_names;
    for (const auto& n : builtin_regular_names()) reg_names += " " + n;

    auto common = [&](CLI::App* c) {
        c->add_option("target", a.target, "<file> or 'builtin <name>'")->required()->expected(1, 2);
        c->add_option("--n", a.n, "size parameter of the builtin");
        c->add_option("--field", a.field, "components of the single-vf field");
        c->add_flag("--json", a.json, "print the JSON report");
    };
    auto* verify = app.add_subcommand("verify", "check the algebroid axioms; builtins:" + names);
    common(verify);
    verify->add_option("--exactness-degree", a.exactness_degree, "check sliced exactness up to this degree");
    auto* modular = app.add_subcommand("modular", "modular class report; builtins:" + names);
    common(modular);
    modular->add_option("--degree-bound", a.degree_bound, "degree bound of the exactness search (default 6)");
    modular->add_option("--obstruction-point", a.points, "point for the obstruction test, e.g. \"0, 0\"");
    modular->add_option("--witness", a.witness, "candidate g with theta = dg, e.g. \"ln(x1^2 + x2^2)\"");
    auto* bott = app.add_subcommand("bott", "Bott connection report; builtins:" + reg_names);
    common(bott);
    bott->add_option("--witness", a.witness, "extra candidate witness");
    auto* builtin = app.add_subcommand("builtin", "print a builtin in the file format");
    builtin->add_option("name", a.target, "builtin name")->required();
    builtin->add_option("--n", a.n, "size parameter");
    builtin->add_option("--field", a.field, "components of the single-vf field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : BadInput;
    }

    try {
        if (*builtin) return run_builtin(a);
        check_target(a);
        if (*verify) return run_verify(a);
        if (*modular) return run_modular(a);
        return run_bott(a);
    } catch (const PresentationError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return BadInput;
    } catch (const ParseError& e) {
        std::cerr << "parse error at column " << e.column() << ": " << e.what() << "\n";
        return BadInput;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return BadInput;
    } catch (const MissingBracket& e) {
        std::cerr << "missing bracket: " << e.what() << "\n";
        return Missing;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Failed;
    }
}
