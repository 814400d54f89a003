// tropideal: command-line front end. Every subcommand reads JSON (inline, from a
// file, or "-" for stdin) and writes JSON or text to stdout.
//
// Exit codes: 0 success, 2 invalid input, 3 enumeration cap exceeded,
// 64 unknown or missing subcommand.

#include "tropideal/errors.hpp"
#include "tropideal/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace tropideal;
using io::json;

namespace {

struct RunConfig {
    std::uint64_t cap = 5'000'000;
    std::uint64_t seed = 1;
    std::string format = "json";
    bool verbose = false;
};

std::string read_source(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw InputError("cannot read '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load(const std::string& arg) { return io::parse_text(read_source(arg)); }

std::string format_poly(const TropPoly& f) {
    if (f.empty()) return "inf";
    std::string out;
    for (const auto& [u, c] : f.terms()) {
        if (!out.empty()) out += " (+) ";
        const std::string mon = monomial_label(u);
        if (c != 0)
            out += format_rational(c) + (mon == "1" ? "" : "*" + mon);
        else
            out += mon == "1" ? "0" : mon;
    }
    return out;
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
    if (cfg.format == "text" && !text.empty())
        std::cout << text;
    else
        std::cout << j.dump(2) << '\n';
}

void emit(const RunConfig& cfg, const json& j) { emit(cfg, j, ""); }

std::string complex_text(const PolyComplex& c) {
    std::ostringstream os;
    for (const auto& s : c.strata) {
        os << "stratum {";
        for (std::size_t i = 0; i < s.sigma.size(); ++i) os << (i ? "," : "") << s.sigma[i];
        os << "}: " << s.cells.size() << " cells\n";
        for (const auto& cell : s.cells) {
            os << "  cell dim " << cell.dim << " [" << cell.label << "]\n";
            std::istringstream rows(format_cell(cell, s.coords));
            for (std::string line; std::getline(rows, line);) os << "    " << line << '\n';
        }
    }
    return os.str();
}

VMatroid matroid_from_any(const json& j) {
    if (j.is_object() && j.contains("bases")) return VMatroid::from(io::ordmatroid_from_json(j));
    return io::vmatroid_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("TROPIDEAL_CAP")) {
        try {
            cfg.cap = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: TROPIDEAL_CAP must be a positive integer\n";
            return 2;
        }
    }

    CLI::App app{"Exact computations with tropical ideals", "tropideal"};
    app.add_option("--cap", cfg.cap, "Enumeration cap (default 5000000, or TROPIDEAL_CAP)");
    app.add_option("--seed", cfg.seed, "Seed for randomized choices");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--verbose", cfg.verbose, "Emit full fingerprints");
    app.require_subcommand(1);
    app.fallthrough();

    std::map<std::string, std::function<void()>> run;
    std::string matroid_src, ideal_src, poly_src, input_src, point_src, weight_src, left_src, right_src, stratum_src;
    int degree = 0;
    int n = 2;
    long random_box = 0;
    std::string presentation = "projective";

    auto* cmd = app.add_subcommand("check-matroid", "Check the valuated basis exchange axiom");
    cmd->add_option("--matroid", matroid_src, "VMatroid or OrdMatroid JSON")->required();
    run["check-matroid"] = [&] {
        const VMatroid m = matroid_from_any(load(matroid_src));
        const auto v = check_valuated_exchange(m);
        json out = {{"valid", !v}};
        if (v) out["violation"] = io::to_json(*v);
        emit(cfg, out, v ? "violation\n" : "ok\n");
    };

    cmd = app.add_subcommand("circuits", "List the circuits of a valuated matroid");
    cmd->add_option("--matroid", matroid_src, "VMatroid or OrdMatroid JSON")->required();
    run["circuits"] = [&] {
        const VMatroid m = matroid_from_any(load(matroid_src));
        json list = json::array();
        std::string text;
        for (const auto& h : circuits(m)) {
            list.push_back(io::to_json(h));
            for (std::size_t i = 0; i < h.size(); ++i)
                text += (i ? " " : "") + m.ground()[i] + ":" + format_scalar(h[i]);
            text += '\n';
        }
        emit(cfg, {{"ground", m.ground()}, {"circuits", list}}, text);
    };

    cmd = app.add_subcommand("tropicalize", "Tropicalize a homogeneous ideal over Q");
    cmd->add_option("--input", input_src, "ClassicalInput JSON")->required();
    cmd->add_option("--degree", degree, "Truncation degree D")->required();
    run["tropicalize"] = [&] { emit(cfg, io::to_json(tropicalize(io::classical_from_json(load(input_src)), degree))); };

    cmd = app.add_subcommand("point-ideal", "Homogeneous tropical ideal of a point");
    cmd->add_option("--point", point_src, "JSON array of coordinates (\"inf\" allowed)")->required();
    cmd->add_option("--degree", degree, "Truncation degree D")->required();
    run["point-ideal"] = [&] { emit(cfg, io::to_json(point_ideal(io::weight_from_json(load(point_src)), degree))); };

    cmd = app.add_subcommand("nonrealizable", "The non-realizable tropical ideal");
    cmd->add_option("--n", n, "Number of variables minus one (>= 2)")->required();
    cmd->add_option("--degree", degree, "Truncation degree D")->required();
    run["nonrealizable"] = [&] { emit(cfg, io::to_json(nonrealizable_ideal(n, degree))); };

    cmd = app.add_subcommand("compatibility", "Check compatibility of consecutive layers");
    cmd->add_option("--ideal", ideal_src, "TruncIdeal JSON")->required();
    run["compatibility"] = [&] {
        const auto v = check_compatibility(io::ideal_from_json(load(ideal_src)));
        json out = {{"compatible", !v}};
        if (v) out["violation"] = io::to_json(*v);
        emit(cfg, out, v ? "violation\n" : "ok\n");
    };

    cmd = app.add_subcommand("hilbert", "Hilbert function value");
    cmd->add_option("--ideal", ideal_src, "TruncIdeal JSON")->required();
    cmd->add_option("--degree", degree, "Degree d <= D")->required();
    run["hilbert"] = [&] { emit(cfg, hilbert(io::ideal_from_json(load(ideal_src)), degree)); };

    cmd = app.add_subcommand("contains", "Membership of a homogeneous polynomial");
    cmd->add_option("--ideal", ideal_src, "TruncIdeal JSON")->required();
    cmd->add_option("--poly", poly_src, "TropPoly JSON")->required();
    run["contains"] = [&] {
        emit(cfg, contains(io::ideal_from_json(load(ideal_src)), io::poly_from_json(load(poly_src))));
    };

    cmd = app.add_subcommand("initial", "Initial ideal at a weight");
    cmd->add_option("--ideal", ideal_src, "TruncIdeal JSON")->required();
    auto* wopt = cmd->add_option("--weight", weight_src, "JSON array of weights (\"inf\" allowed)");
    cmd->add_option("--random-weight", random_box, "Draw an integer weight in [-B, B] from --seed")
        ->excludes(wopt)
        ->check(CLI::PositiveNumber);
    run["initial"] = [&] {
        const TruncIdeal ideal = io::ideal_from_json(load(ideal_src));
        Weight w;
        if (random_box > 0) {
            std::mt19937_64 rng(cfg.seed);
            std::uniform_int_distribution<long> dist(-random_box, random_box);
            for (int i = 0; i < ideal.num_vars(); ++i) w.emplace_back(dist(rng));
        } else if (!weight_src.empty()) {
            w = io::weight_from_json(load(weight_src));
        } else {
            throw InputError("initial needs --weight or --random-weight");
        }
        const TruncIdeal in = initial_ideal(ideal, w);
        bool monomial = true;
        for (const auto& m : in.layers()) monomial = monomial && m.valuation().size() == 1;
        emit(cfg, {{"weight", io::to_json(w)}, {"monomial", monomial}, {"ideal", io::to_json(in)}});
    };

    cmd = app.add_subcommand("groebner-complex", "Groebner complex of the truncation");
    cmd->add_option("--ideal", ideal_src, "TruncIdeal JSON")->required();
    cmd->add_option("--stratum", stratum_src, "JSON array sigma; default all proper strata");
    run["groebner-complex"] = [&] {
        const TruncIdeal ideal = io::ideal_from_json(load(ideal_src));
        GroebnerComplex gc{ideal.num_vars(), ideal.degree_bound(), {}};
        if (stratum_src.empty()) {
            gc = groebner_complex(ideal);
        } else {
            const json s = load(stratum_src);
            if (!s.is_array()) throw ParseError("--stratum: expected a JSON array");
            gc.strata.push_back(groebner_stratum(ideal, s.get<std::vector<int>>()));
        }
        PolyComplex flat{gc.ambient, {}};
        for (const auto& s : gc.strata) {
            Stratum st{s.sigma, s.coords, {}};
            for (const auto& c : s.cells) st.cells.push_back(c.cell);
            flat.strata.push_back(std::move(st));
        }
        emit(cfg, io::to_json(gc, cfg.verbose), complex_text(flat));
    };

    cmd = app.add_subcommand("variety", "Tropical variety of the truncation");
    cmd->add_option("--ideal", ideal_src, "TruncIdeal JSON")->required();
    cmd->add_option("--presentation", presentation, "projective or affine")
        ->check(CLI::IsMember({"projective", "affine"}));
    run["variety"] = [&] {
        const auto v = variety(io::ideal_from_json(load(ideal_src)),
                               presentation == "affine" ? Presentation::Affine : Presentation::Projective);
        json out = io::to_json(v);
        out["presentation"] = presentation;
        emit(cfg, out, complex_text(v));
    };

    cmd = app.add_subcommand("tropical-basis", "A tropical basis of the truncation");
    cmd->add_option("--ideal", ideal_src, "TruncIdeal JSON")->required();
    run["tropical-basis"] = [&] {
        json list = json::array();
        std::string text;
        for (const auto& g : tropical_basis(io::ideal_from_json(load(ideal_src)))) {
            list.push_back(io::to_json(g));
            text += format_poly(g) + '\n';
        }
        emit(cfg, {{"basis", list}}, text);
    };

    cmd = app.add_subcommand("nullstellensatz", "Unit or nonempty-variety certificate");
    cmd->add_option("--ideal", ideal_src, "TruncIdeal JSON")->required();
    run["nullstellensatz"] = [&] { emit(cfg, io::to_json(nullstellensatz(io::ideal_from_json(load(ideal_src))))); };

    cmd = app.add_subcommand("factor-univariate", "Roots and factorization of a univariate polynomial");
    cmd->add_option("--poly", poly_src, "TropPoly JSON with vars = 1")->required();
    run["factor-univariate"] = [&] {
        const TropPoly f = io::poly_from_json(load(poly_src));
        const auto fac = factor_univariate(f);
        json out = io::to_json(fac);
        out["least_coefficients"] = io::to_json(least_coefficients(f));
        std::string text;
        for (const auto& r : fac.roots) text += format_rational(r.root) + " " + std::to_string(r.multiplicity) + '\n';
        emit(cfg, out, text);
    };

    cmd = app.add_subcommand("compare", "Compare two truncated ideals layer by layer");
    cmd->add_option("--left", left_src, "TruncIdeal JSON")->required();
    cmd->add_option("--right", right_src, "TruncIdeal JSON")->required();
    run["compare"] = [&] {
        const auto rep = compare(io::ideal_from_json(load(left_src)), io::ideal_from_json(load(right_src)));
        emit(cfg, io::to_json(rep), to_string(rep.overall) + '\n');
    };

    const bool have_subcommand = [&] {
        for (int i = 1; i < argc; ++i)
            if (run.count(argv[i])) return true;
        return false;
    }();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (!have_subcommand) {
            std::cerr << app.help();
            return 64;
        }
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        set_enumeration_cap(cfg.cap);
        run.at(app.get_subcommands().front()->get_name())();
    } catch (const SizeError& e) {
        std::cerr << "size error: " << e.what() << '\n';
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const InvariantError& e) {
        std::cerr << "invariant violated: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
