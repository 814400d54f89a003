#include "tropideal/json_io.hpp"

#include "tropideal/errors.hpp"

#include <algorithm>

namespace tropideal::io {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

int int_from(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<int>();
}

const json& array_from(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    return j;
}

std::vector<int> ints_from(const json& j, const std::string& where) {
    std::vector<int> out;
    for (std::size_t i = 0; i < array_from(j, where).size(); ++i)
        out.push_back(int_from(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::string> strings_from(const json& j, const std::string& where) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < array_from(j, where).size(); ++i) {
        if (!j[i].is_string()) throw ParseError(where + "[" + std::to_string(i) + "]: expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

json mask_json(Mask m) { return mask_indices(m); }

Mask mask_from(const json& j, int ground, const std::string& where) {
    Mask m = 0;
    for (int i : ints_from(j, where)) {
        if (i < 0 || i >= ground) throw ParseError(where + ": index " + std::to_string(i) + " outside the ground set");
        if (m & bit(i)) throw ParseError(where + ": repeated index " + std::to_string(i));
        m |= bit(i);
    }
    return m;
}

json rows_json(const MatrixQ& rows) {
    json out = json::array();
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        json r = json::array();
        for (Eigen::Index j = 0; j < rows.cols(); ++j) r.push_back(format_rational(rows(i, j)));
        out.push_back(r);
    }
    return out;
}

MatrixQ rows_from(const json& j, int m, const std::string& where) {
    array_from(j, where);
    MatrixQ out(static_cast<Eigen::Index>(j.size()), m + 1);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != static_cast<std::size_t>(m + 1))
            throw ParseError(w + ": expected " + std::to_string(m + 1) + " entries");
        for (int c = 0; c <= m; ++c)
            out(static_cast<Eigen::Index>(i), c) = rational_from_json(j[i][static_cast<std::size_t>(c)], w);
    }
    return out;
}

json vector_json(const VectorQ& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(format_rational(v(i)));
    return out;
}

}  // namespace

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

json to_json(const TropScalar& s) { return format_scalar(s); }

TropScalar scalar_from_json(const json& j, const std::string& where) {
    if (j.is_string() && j.get<std::string>() == "inf") return TropScalar::infinity();
    return TropScalar(rational_from_json(j, where));
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw ParseError(where + ": expected a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

// --- polynomials ------------------------------------------------------------------

json to_json(const TropPoly& f) {
    json terms = json::array();
    for (const auto& [u, c] : f.terms()) terms.push_back({{"exp", u}, {"coeff", format_rational(c)}});
    return {{"vars", f.num_vars()}, {"terms", terms}};
}

TropPoly poly_from_json(const json& j) {
    const int nv = int_from(field(j, "vars", "polynomial"), "polynomial.vars");
    if (nv < 1) throw ParseError("polynomial.vars: must be positive");
    TropPoly f(nv);
    const json& terms = array_from(field(j, "terms", "polynomial"), "polynomial.terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string w = "polynomial.terms[" + std::to_string(i) + "]";
        Monomial u = ints_from(field(terms[i], "exp", w), w + ".exp");
        if (static_cast<int>(u.size()) != nv) throw ParseError(w + ".exp: length differs from vars");
        if (std::any_of(u.begin(), u.end(), [](int e) { return e < 0; }))
            throw ParseError(w + ".exp: negative exponent");
        const json& c = field(terms[i], "coeff", w);
        if (c.is_string() && c.get<std::string>() == "inf")
            throw ParseError(w + ".coeff: infinite coefficients are encoded by omitting the term");
        f.add_term(u, rational_from_json(c, w + ".coeff"));
    }
    return f;
}

json to_json(const Weight& w) {
    json out = json::array();
    for (const auto& x : w) out.push_back(format_scalar(x));
    return out;
}

Weight weight_from_json(const json& j) {
    Weight w;
    for (std::size_t i = 0; i < array_from(j, "weight").size(); ++i)
        w.push_back(scalar_from_json(j[i], "weight[" + std::to_string(i) + "]"));
    return w;
}

// --- matroids ---------------------------------------------------------------------

json to_json(const VMatroid& m) {
    std::vector<Mask> bases = m.bases();
    std::sort(bases.begin(), bases.end(), mask_lex_less);
    json val = json::array();
    for (Mask b : bases) val.push_back({{"set", mask_json(b)}, {"val", format_rational(m.valuation().at(b))}});
    return {{"ground", m.ground()}, {"rank", m.rank()}, {"valuation", val}};
}

VMatroid vmatroid_from_json(const json& j) {
    auto ground = strings_from(field(j, "ground", "matroid"), "matroid.ground");
    if (ground.size() > static_cast<std::size_t>(kMaxGround))
        throw SizeError("ground sets larger than " + std::to_string(kMaxGround) + " elements are not supported");
    const int rank = int_from(field(j, "rank", "matroid"), "matroid.rank");
    const json& val = array_from(field(j, "valuation", "matroid"), "matroid.valuation");
    std::map<Mask, Rational> p;
    for (std::size_t i = 0; i < val.size(); ++i) {
        const std::string w = "matroid.valuation[" + std::to_string(i) + "]";
        const Mask s = mask_from(field(val[i], "set", w), static_cast<int>(ground.size()), w + ".set");
        const TropScalar v = scalar_from_json(field(val[i], "val", w), w + ".val");
        if (v.is_inf()) continue;
        if (!p.emplace(s, v.value()).second) throw ParseError(w + ": repeated set");
    }
    return VMatroid(std::move(ground), rank, std::move(p));
}

json to_json(const OrdMatroid& m) {
    json bases = json::array();
    for (Mask b : m.bases()) bases.push_back(mask_json(b));
    return {{"ground", m.ground()}, {"rank", m.rank()}, {"bases", bases}};
}

OrdMatroid ordmatroid_from_json(const json& j) {
    auto ground = strings_from(field(j, "ground", "matroid"), "matroid.ground");
    if (ground.size() > static_cast<std::size_t>(kMaxGround))
        throw SizeError("ground sets larger than " + std::to_string(kMaxGround) + " elements are not supported");
    const int rank = int_from(field(j, "rank", "matroid"), "matroid.rank");
    const json& b = array_from(field(j, "bases", "matroid"), "matroid.bases");
    std::vector<Mask> bases;
    for (std::size_t i = 0; i < b.size(); ++i)
        bases.push_back(mask_from(b[i], static_cast<int>(ground.size()), "matroid.bases[" + std::to_string(i) + "]"));
    return OrdMatroid(std::move(ground), rank, std::move(bases));
}

// --- ideals -----------------------------------------------------------------------

json to_json(const TruncIdeal& ideal) {
    json layers = json::array();
    for (const auto& m : ideal.layers()) layers.push_back(to_json(m));
    return {{"vars", ideal.num_vars()},
            {"degree_bound", ideal.degree_bound()},
            {"mode", ideal.mode() == CoefficientMode::Boolean ? "boolean" : "rational"},
            {"layers", layers}};
}

TruncIdeal ideal_from_json(const json& j) {
    const int nv = int_from(field(j, "vars", "ideal"), "ideal.vars");
    const int d = int_from(field(j, "degree_bound", "ideal"), "ideal.degree_bound");
    CoefficientMode mode = CoefficientMode::Rational;
    if (j.contains("mode")) {
        const json& mj = j["mode"];
        if (mj == "boolean")
            mode = CoefficientMode::Boolean;
        else if (mj != "rational")
            throw ParseError("ideal.mode: expected \"rational\" or \"boolean\"");
    }
    const json& l = array_from(field(j, "layers", "ideal"), "ideal.layers");
    if (d < 0 || l.size() != static_cast<std::size_t>(d) + 1)
        throw ParseError("ideal.layers: expected degree_bound + 1 layers");
    std::vector<VMatroid> layers;
    for (std::size_t i = 0; i < l.size(); ++i) {
        try {
            layers.push_back(vmatroid_from_json(l[i]));
        } catch (const ParseError& e) {
            throw ParseError("ideal.layers[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return TruncIdeal(nv, mode, std::move(layers));
}

json to_json(const ClassicalPoly& g) {
    json terms = json::array();
    for (const auto& [u, c] : g.terms) terms.push_back({{"exp", u}, {"coeff", format_rational(c)}});
    return {{"vars", g.num_vars}, {"terms", terms}};
}

json to_json(const ClassicalInput& input) {
    json gens = json::array();
    for (const auto& g : input.generators) gens.push_back(to_json(g));
    json val = {{"type", input.valuation.kind == ValuationKind::PAdic ? "padic" : "trivial"}};
    if (input.valuation.kind == ValuationKind::PAdic) val["p"] = input.valuation.prime;
    return {{"vars", input.num_vars}, {"generators", gens}, {"valuation", val}};
}

ClassicalInput classical_from_json(const json& j) {
    ClassicalInput in;
    const json& gens = array_from(field(j, "generators", "input"), "input.generators");
    if (j.contains("vars"))
        in.num_vars = int_from(j["vars"], "input.vars");
    else if (!gens.empty())
        in.num_vars = int_from(field(gens[0], "vars", "input.generators[0]"), "input.generators[0].vars");
    else
        throw ParseError("input: 'vars' is required when there are no generators");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string w = "input.generators[" + std::to_string(i) + "]";
        ClassicalPoly g;
        g.num_vars = gens[i].contains("vars") ? int_from(gens[i]["vars"], w + ".vars") : in.num_vars;
        if (g.num_vars != in.num_vars) throw ParseError(w + ".vars: differs from input.vars");
        const json& terms = array_from(field(gens[i], "terms", w), w + ".terms");
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string tw = w + ".terms[" + std::to_string(t) + "]";
            Monomial u = ints_from(field(terms[t], "exp", tw), tw + ".exp");
            if (static_cast<int>(u.size()) != g.num_vars) throw ParseError(tw + ".exp: length differs from vars");
            if (std::any_of(u.begin(), u.end(), [](int e) { return e < 0; }))
                throw ParseError(tw + ".exp: negative exponent");
            const Rational c = rational_from_json(field(terms[t], "coeff", tw), tw + ".coeff");
            g.terms[u] += c;
            if (g.terms[u] == 0) g.terms.erase(u);
        }
        in.generators.push_back(std::move(g));
    }
    if (j.contains("valuation")) {
        const json& v = j["valuation"];
        const json& type = field(v, "type", "input.valuation");
        if (type == "padic") {
            in.valuation.kind = ValuationKind::PAdic;
            in.valuation.prime = int_from(field(v, "p", "input.valuation"), "input.valuation.p");
        } else if (type != "trivial") {
            throw ParseError("input.valuation.type: expected \"trivial\" or \"padic\"");
        }
    }
    return in;
}

// --- complexes --------------------------------------------------------------------

json to_json(const Cell& c) {
    return {{"eq", rows_json(c.eq)},
            {"ineq", rows_json(c.ineq)},
            {"label", c.label},
            {"dim", c.dim},
            {"witness", vector_json(c.witness)}};
}

Cell cell_from_json(const json& j, int m) {
    Cell c;
    c.eq = rows_from(field(j, "eq", "cell"), m, "cell.eq");
    c.ineq = rows_from(field(j, "ineq", "cell"), m, "cell.ineq");
    const json& label = field(j, "label", "cell");
    if (!label.is_string()) throw ParseError("cell.label: expected a string");
    c.label = label.get<std::string>();
    c.dim = int_from(field(j, "dim", "cell"), "cell.dim");
    if (j.contains("witness")) {
        const json& w = array_from(j["witness"], "cell.witness");
        if (w.size() != static_cast<std::size_t>(m)) throw ParseError("cell.witness: wrong length");
        c.witness = VectorQ(m);
        for (int i = 0; i < m; ++i) c.witness(i) = rational_from_json(w[static_cast<std::size_t>(i)], "cell.witness");
    } else {
        const auto ri = relative_interior(c.eq, c.ineq, m);
        if (!ri) throw InputError("cell is empty");
        c.witness = ri->point;
    }
    return c;
}

json to_json(const PolyComplex& c) {
    json strata = json::array();
    for (const auto& s : c.strata) {
        json cells = json::array();
        for (const auto& cell : s.cells) cells.push_back(to_json(cell));
        strata.push_back({{"sigma", s.sigma}, {"coords", s.coords}, {"cells", cells}});
    }
    return {{"ambient", c.ambient}, {"strata", strata}};
}

PolyComplex complex_from_json(const json& j) {
    PolyComplex out;
    out.ambient = int_from(field(j, "ambient", "complex"), "complex.ambient");
    const json& strata = array_from(field(j, "strata", "complex"), "complex.strata");
    for (std::size_t i = 0; i < strata.size(); ++i) {
        const std::string w = "complex.strata[" + std::to_string(i) + "]";
        Stratum s;
        s.sigma = ints_from(field(strata[i], "sigma", w), w + ".sigma");
        s.coords = strata[i].contains("coords") ? ints_from(strata[i]["coords"], w + ".coords")
                                                : finite_coords(out.ambient, s.sigma);
        const json& cells = array_from(field(strata[i], "cells", w), w + ".cells");
        for (const auto& c : cells) s.cells.push_back(cell_from_json(c, static_cast<int>(s.coords.size())));
        out.strata.push_back(std::move(s));
    }
    return out;
}

json to_json(const GroebnerComplex& c, bool verbose) {
    json strata = json::array();
    for (const auto& s : c.strata) {
        json cells = json::array();
        for (const auto& g : s.cells) {
            json cell = to_json(g.cell);
            json fp = {{"digest", g.fingerprint.digest}, {"monomial", g.fingerprint.is_monomial()}};
            if (verbose) {
                json per_degree = json::array();
                for (const auto& bases : g.fingerprint.bases) {
                    json b = json::array();
                    for (Mask m : bases) b.push_back(mask_json(m));
                    per_degree.push_back(b);
                }
                fp["bases"] = per_degree;
            }
            cell["fingerprint"] = fp;
            cell["in_variety"] = g.in_variety;
            cells.push_back(cell);
        }
        strata.push_back({{"sigma", s.sigma},
                          {"coords", s.coords},
                          {"fingerprint_classes", s.fingerprint_classes()},
                          {"cells", cells}});
    }
    return {{"ambient", c.ambient}, {"degree_bound", c.degree_bound}, {"strata", strata}};
}

json to_json(const Certificate& c) {
    json out = {{"kind", to_string(c.kind)}};
    if (c.degree) out["degree"] = *c.degree;
    if (c.witness) {
        json cell = to_json(c.witness->cell);
        cell["sigma"] = c.witness->sigma;
        cell["coords"] = c.witness->coords;
        out["witness_cell"] = cell;
    }
    return out;
}

json to_json(const CompareReport& r) {
    json per = json::array();
    for (auto c : r.per_degree) per.push_back(to_string(c));
    return {{"result", to_string(r.overall)},
            {"per_degree", per},
            {"hilbert_left", r.hilbert_left},
            {"hilbert_right", r.hilbert_right},
            {"equal_through_degree", r.equal_through}};
}

json to_json(const UnivariateFactorization& f) {
    json roots = json::array();
    for (const auto& r : f.roots) roots.push_back({{"root", format_rational(r.root)}, {"multiplicity", r.multiplicity}});
    return {{"leading", format_rational(f.leading)}, {"x_power", f.x_power}, {"roots", roots}};
}

json to_json(const CompatibilityViolation& v) {
    return {{"degree", v.degree}, {"variable", v.variable}, {"U", mask_json(v.u_set)}, {"V", mask_json(v.v_set)}};
}

json to_json(const ExchangeViolation& v) {
    return {{"A", mask_json(v.a_set)}, {"B", mask_json(v.b_set)}, {"element", v.element}};
}

}  // namespace tropideal::io
