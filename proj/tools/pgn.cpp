// Command-line surface: construct templates, verify them against the full
// inequality battery, sweep parameter grids, and render figure-style SVGs.
//
// Exit codes: 0 success, 1 verification failure, 2 precondition violation,
// 3 I/O or parse error.

#include <CLI11.hpp>

#include "pgn/json_io.hpp"
#include "pgn/svg_render.hpp"
#include "pgn/sweep.hpp"
#include "pgn/verify.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace pgn;

struct ConstructArgs {
    std::string kind = "sim";
    int n = 2;
    std::string t, s, mu, nu, eta;
};

struct Built {
    Template tpl;
    Expectation expect = Expectation::None;
    std::optional<DimensionBounds> bounds;
};

Built build_from_args(const ConstructArgs& a) {
    Built out;
    if (a.kind == "trivial") {
        out.tpl = trivial_template(a.n);
        return out;
    }
    bool dual = a.kind == "dual" || a.kind == "dual-ext";
    bool extended = a.kind == "sim-ext" || a.kind == "dual-ext";
    if (a.kind != "sim" && a.kind != "dual" && !extended)
        throw std::invalid_argument("unknown kind: " + a.kind);
    if (!dual) {
        if (a.t.empty()) throw std::invalid_argument("--t required for simultaneous kinds");
        Rational t = Rational::parse(a.t);
        QuadExt mu = resolve_second_parameter(false, a.n, t,
                                              a.mu.empty() ? std::string("mu0") : a.mu);
        if (extended) {
            SimParams p = sim_params(a.n, QuadExt(t), mu);
            QuadExt eta = resolve_eta(false, p.sigma, a.eta.empty() ? "sigma" : a.eta);
            out.tpl = build_simultaneous_extended(a.n, QuadExt(t), mu, eta);
        } else {
            out.tpl = build_simultaneous(a.n, QuadExt(t), mu);
            out.expect = Expectation::Simultaneous;
            out.bounds = sim_dimension_bounds(a.n, QuadExt(t), mu);
        }
    } else {
        if (a.s.empty()) throw std::invalid_argument("--s required for dual kinds");
        Rational s = Rational::parse(a.s);
        QuadExt nu = resolve_second_parameter(true, a.n, s,
                                              a.nu.empty() ? std::string("nu0") : a.nu);
        if (extended) {
            DualParams p = dual_params(a.n, QuadExt(s), nu);
            QuadExt eta = resolve_eta(true, p.gamma, a.eta.empty() ? "gamma" : a.eta);
            out.tpl = build_dual_extended(a.n, QuadExt(s), nu, eta);
        } else {
            out.tpl = build_dual(a.n, QuadExt(s), nu);
            out.expect = Expectation::Dual;
            out.bounds = dual_dimension_bounds(a.n, QuadExt(s), nu);
        }
    }
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::vector<int> parse_n_list(const std::string& spec) {
    std::vector<int> ns;
    auto range = spec.find("..");
    if (range != std::string::npos) {
        int a = std::stoi(spec.substr(0, range));
        int b = std::stoi(spec.substr(range + 2));
        for (int n = a; n <= b; ++n) ns.push_back(n);
        return ns;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) ns.push_back(std::stoi(item));
    return ns;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact self-similar template toolkit"};
    app.require_subcommand(1);

    ConstructArgs cargs;
    std::string out_path, in_file, format = "csv", n_spec = "2", grid_spec = "9";
    std::string rule, eta_rule;
    bool as_json = false;
    int periods = 2;
    double width = 900, height = 540;

    auto add_construct_flags = [&](CLI::App* cmd) {
        cmd->add_option("--kind", cargs.kind, "sim | dual | sim-ext | dual-ext | trivial");
        cmd->add_option("--n", cargs.n, "dimension parameter, >= 2");
        cmd->add_option("--t", cargs.t, "rational t in (0,1), simultaneous kinds");
        cmd->add_option("--s", cargs.s, "rational s in (-n,0), dual kinds");
        cmd->add_option("--mu", cargs.mu, "rational, or mu0 | -t/n | interpolate k/m");
        cmd->add_option("--nu", cargs.nu, "rational, or nu0 | -s/n | interpolate k/m");
        cmd->add_option("--eta", cargs.eta,
                        "extended kinds: rational, or sigma | gamma | interpolate k/m");
    };

    auto* construct = app.add_subcommand("construct", "build a template and print its JSON");
    add_construct_flags(construct);
    construct->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run the full check battery");
    add_construct_flags(verify);
    verify->add_option("--file", in_file, "template JSON file, or - for stdin");
    verify->add_flag("--json", as_json, "emit the report as JSON");
    verify->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "tabulate a parameter grid");
    sweep->add_option("--kind", cargs.kind, "sim | dual");
    sweep->add_option("--n", n_spec, "e.g. 2..5 or 2,3");
    sweep->add_option("--grid", grid_spec,
                      "count of equispaced points, or comma list of rationals");
    sweep->add_option("--rule", rule, "mu0 | nu0 | -t/n | -s/n | interpolate k/m | rational");
    sweep->add_option("--eta-rule", eta_rule, "optional eta rule for extended builders");
    sweep->add_option("--format", format, "csv | json");
    sweep->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* render = app.add_subcommand("render", "emit a figure-style SVG sketch");
    add_construct_flags(render);
    render->add_option("--file", in_file, "template JSON file, or - for stdin");
    render->add_option("--periods", periods, "periods to draw (default 2)");
    render->add_option("--width", width, "canvas width");
    render->add_option("--height", height, "canvas height");
    render->add_option("-o,--output", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    if (construct->parsed()) {
        Built b = build_from_args(cargs);
        write_output(out_path, dump_template(b.tpl));
        return 0;
    }
    if (verify->parsed()) {
        Built b;
        if (!in_file.empty()) {
            b.tpl = template_from_json(Json::parse(read_input(in_file)), false);
        } else {
            b = build_from_args(cargs);
        }
        auto rep = run_verify(b.tpl, b.expect, b.bounds);
        write_output(out_path, as_json ? rep.json().dump(2) + "\n" : rep.text());
        return rep.pass ? 0 : 1;
    }
    if (sweep->parsed()) {
        SweepSpec spec;
        spec.dual = cargs.kind == "dual";
        if (cargs.kind != "sim" && cargs.kind != "dual")
            throw std::invalid_argument("sweep kind must be sim or dual");
        spec.ns = parse_n_list(n_spec);
        if (grid_spec.find('/') != std::string::npos || grid_spec.find(',') != std::string::npos ||
            grid_spec.find('.') != std::string::npos || grid_spec.find('-') != std::string::npos) {
            std::stringstream ss(grid_spec);
            std::string item;
            while (std::getline(ss, item, ',')) spec.explicit_grid.push_back(Rational::parse(item));
        } else {
            spec.grid_count = std::stoi(grid_spec);
        }
        if (!rule.empty()) spec.rule = rule;
        else spec.rule = spec.dual ? "nu0" : "mu0";
        spec.eta_rule = eta_rule;
        spec.csv = format != "json";
        write_output(out_path, run_sweep(spec));
        return 0;
    }
    if (render->parsed()) {
        Template tpl;
        if (!in_file.empty()) tpl = template_from_json(Json::parse(read_input(in_file)));
        else tpl = build_from_args(cargs).tpl;
        RenderOptions opts;
        opts.periods = periods;
        opts.width = width;
        opts.height = height;
        write_output(out_path, render_svg(tpl, opts));
        return 0;
    }
    return 3;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
