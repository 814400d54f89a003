#include "tropideal/polyhedra.hpp"

#include "tropideal/errors.hpp"
#include "tropideal/linalg.hpp"
#include "tropideal/lp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace tropideal {

const Stratum* PolyComplex::find(const std::vector<int>& sigma) const {
    for (const auto& s : strata)
        if (s.sigma == sigma) return &s;
    return nullptr;
}

std::vector<int> finite_coords(int n, const std::vector<int>& sigma) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (std::find(sigma.begin(), sigma.end(), i) == sigma.end()) out.push_back(i);
    return out;
}

namespace {

using Row = std::vector<Rational>;

Row primitive(Row r, bool equality) {
    Integer l = lcm_of_denominators(r.data(), r.data() + r.size());
    Integer g = 0;
    for (auto& x : r) {
        x *= l;
        g = gcd(g, numerator(x));
    }
    const std::size_t m = r.size() - 1;
    int sign = 1;
    if (equality) {
        for (std::size_t j = 0; j < m; ++j)
            if (r[j] != 0) {
                sign = r[j] < 0 ? -1 : 1;
                break;
            }
    }
    if (g != 0)
        for (auto& x : r) x = x * sign / Rational(g);
    return r;
}

MatrixQ to_matrix(const std::vector<Row>& rows, Eigen::Index cols) {
    MatrixQ out(static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (Eigen::Index j = 0; j < cols; ++j) out(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
    return out;
}

MatrixQ vstack(const MatrixQ& a, const MatrixQ& b, Eigen::Index cols) {
    MatrixQ out(a.rows() + b.rows(), cols);
    if (a.rows() > 0) out.topRows(a.rows()) = a;
    if (b.rows() > 0) out.bottomRows(b.rows()) = b;
    return out;
}

bool lex_less(const VectorQ& a, const VectorQ& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

MatrixQ canonical_rows(const MatrixQ& rows, bool equality) {
    const Eigen::Index cols = rows.cols();
    std::set<Row> seen;
    std::vector<Row> out;
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        Row r(rows.row(i).begin(), rows.row(i).end());
        bool zero = true;
        for (Eigen::Index j = 0; j + 1 < cols; ++j) zero = zero && r[static_cast<std::size_t>(j)] == 0;
        const Rational& b = r.back();
        if (zero && (equality ? b == 0 : b >= 0)) continue;
        r = primitive(std::move(r), equality);
        if (seen.insert(r).second) out.push_back(std::move(r));
    }
    return to_matrix(out, cols);
}

std::optional<Interior> relative_interior(const MatrixQ& eq, const MatrixQ& ineq, int m) {
    MatrixQ e = eq.rows() > 0 ? eq : MatrixQ(0, m + 1);
    std::vector<Eigen::Index> active;
    for (Eigen::Index i = 0; i < ineq.rows(); ++i) active.push_back(i);
    while (true) {
        const auto param = linalg::solve_affine(e.leftCols(m), e.col(m));
        if (!param) return std::nullopt;
        const Eigen::Index k = param->basis.cols();
        std::vector<Eigen::Index> live;
        std::vector<Row> a_rows;
        std::vector<Rational> b_vals;
        for (Eigen::Index i : active) {
            const auto a = ineq.row(i).head(m);
            const Rational rhs = ineq(i, m) - (a * param->origin)(0);
            Row reduced(static_cast<std::size_t>(k));
            bool zero = true;
            for (Eigen::Index j = 0; j < k; ++j) {
                reduced[static_cast<std::size_t>(j)] = (a * param->basis.col(j))(0);
                zero = zero && reduced[static_cast<std::size_t>(j)] == 0;
            }
            if (zero) {
                if (rhs < 0) return std::nullopt;
                continue;
            }
            live.push_back(i);
            a_rows.push_back(std::move(reduced));
            b_vals.push_back(rhs);
        }
        if (live.empty()) return Interior{static_cast<int>(k), param->origin};
        const MatrixQ a = to_matrix(a_rows, k);
        VectorQ b(static_cast<Eigen::Index>(b_vals.size()));
        for (std::size_t i = 0; i < b_vals.size(); ++i) b(static_cast<Eigen::Index>(i)) = b_vals[i];
        const auto res = lp::max_slack(a, b);
        if (res.slack < 0) return std::nullopt;
        if (res.slack > 0) return Interior{static_cast<int>(k), param->origin + param->basis * res.point};
        MatrixQ add(static_cast<Eigen::Index>(res.implied.size()), m + 1);
        std::set<Eigen::Index> implied_rows;
        for (std::size_t t = 0; t < res.implied.size(); ++t) {
            const Eigen::Index row = live[static_cast<std::size_t>(res.implied[t])];
            add.row(static_cast<Eigen::Index>(t)) = ineq.row(row);
            implied_rows.insert(row);
        }
        e = vstack(e, add, m + 1);
        active.clear();
        for (Eigen::Index i : live)
            if (!implied_rows.count(i)) active.push_back(i);
    }
}

std::optional<VectorQ> strict_point(const MatrixQ& eq, const MatrixQ& ineq, int m) {
    const MatrixQ e = eq.rows() > 0 ? eq : MatrixQ(0, m + 1);
    const auto param = linalg::solve_affine(e.leftCols(m), e.col(m));
    if (!param) return std::nullopt;
    if (ineq.rows() == 0) return param->origin;
    const MatrixQ a = ineq.leftCols(m) * param->basis;
    const VectorQ b = ineq.col(m) - ineq.leftCols(m) * param->origin;
    const auto res = lp::max_slack(a, b);
    if (res.slack <= 0) return std::nullopt;
    return VectorQ(param->origin + param->basis * res.point);
}

int feasible_dim(const MatrixQ& eq, const MatrixQ& ineq, int m) {
    const auto ri = relative_interior(eq, ineq, m);
    return ri ? ri->dim : -1;
}

bool contains_point(const Cell& c, const VectorQ& w) {
    const Eigen::Index m = w.size();
    for (Eigen::Index i = 0; i < c.eq.rows(); ++i)
        if ((c.eq.row(i).head(m) * w)(0) != c.eq(i, m)) return false;
    for (Eigen::Index i = 0; i < c.ineq.rows(); ++i)
        if ((c.ineq.row(i).head(m) * w)(0) > c.ineq(i, m)) return false;
    return true;
}

bool in_relative_interior(const Cell& c, const VectorQ& w) {
    const Eigen::Index m = w.size();
    for (Eigen::Index i = 0; i < c.eq.rows(); ++i)
        if ((c.eq.row(i).head(m) * w)(0) != c.eq(i, m)) return false;
    for (Eigen::Index i = 0; i < c.ineq.rows(); ++i)
        if ((c.ineq.row(i).head(m) * w)(0) >= c.ineq(i, m)) return false;
    return true;
}

VectorQ sample_interior(const Cell& c, std::mt19937_64& rng) {
    const Eigen::Index m = c.witness.size();
    const MatrixQ e = c.eq.rows() > 0 ? c.eq : MatrixQ(0, m + 1);
    const auto param = linalg::solve_affine(e.leftCols(m), e.col(m));
    if (!param) throw InvariantError("sample_interior: cell has inconsistent equalities");
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> frac(1, 999);
    VectorQ dir = VectorQ::Zero(m);
    for (Eigen::Index j = 0; j < param->basis.cols(); ++j) dir += Rational(coef(rng)) * param->basis.col(j);
    std::optional<Rational> step_max;
    for (Eigen::Index i = 0; i < c.ineq.rows(); ++i) {
        const Rational ad = (c.ineq.row(i).head(m) * dir)(0);
        if (ad <= 0) continue;
        const Rational room = (c.ineq(i, m) - (c.ineq.row(i).head(m) * c.witness)(0)) / ad;
        if (!step_max || room < *step_max) step_max = room;
    }
    const Rational step = step_max ? *step_max * Rational(frac(rng), 1000) : Rational(frac(rng), 100);
    return c.witness + step * dir;
}

Weight embed(const VectorQ& w, const std::vector<int>& coords, int n) {
    if (static_cast<std::size_t>(w.size()) != coords.size()) throw DimensionError("embed: coordinate count mismatch");
    Weight out(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < coords.size(); ++j)
        out[static_cast<std::size_t>(coords[j])] = TropScalar(w(static_cast<Eigen::Index>(j)));
    return out;
}

std::string tie_label(const std::vector<Monomial>& ties) {
    if (ties.empty()) return "inf";
    std::string out;
    for (const auto& u : ties) {
        if (!out.empty()) out += " + ";
        out += monomial_label(u);
    }
    return out;
}

// --- normal complex ---------------------------------------------------------------

namespace {

struct Term {
    Monomial full;
    std::vector<int> u;  // restricted to the finite coordinates
    Rational a;
};

Rational value_at(const Term& t, const VectorQ& w) {
    Rational v = t.a;
    for (std::size_t j = 0; j < t.u.size(); ++j)
        if (t.u[j] != 0) v += t.u[j] * w(static_cast<Eigen::Index>(j));
    return v;
}

/// Row for value(s) <= value(x).
Row row_le(const Term& s, const Term& x) {
    Row r(s.u.size() + 1);
    for (std::size_t j = 0; j < s.u.size(); ++j) r[j] = s.u[j] - x.u[j];
    r.back() = x.a - s.a;
    return r;
}

/// Indices of the terms attaining the minimum at w.
std::vector<int> minimizers(const std::vector<Term>& terms, const std::vector<int>& among, const VectorQ& w) {
    std::vector<int> out;
    std::optional<Rational> best;
    for (int i : among) {
        const Rational v = value_at(terms[static_cast<std::size_t>(i)], w);
        if (!best || v < *best) {
            best = v;
            out.assign(1, i);
        } else if (v == *best) {
            out.push_back(i);
        }
    }
    return out;
}

int lexmin(const std::vector<Term>& terms, const std::vector<int>& among) {
    return *std::min_element(among.begin(), among.end(), [&](int a, int b) {
        return terms[static_cast<std::size_t>(a)].u < terms[static_cast<std::size_t>(b)].u;
    });
}

struct FaceSystem {
    MatrixQ eq;
    MatrixQ ineq;
};

FaceSystem face_system(const std::vector<Term>& terms, const std::vector<int>& vertices, const std::vector<int>& face,
                       int m) {
    std::vector<Row> eq;
    std::vector<Row> ineq;
    const Term& base = terms[static_cast<std::size_t>(face.front())];
    for (std::size_t i = 1; i < face.size(); ++i) eq.push_back(row_le(terms[static_cast<std::size_t>(face[i])], base));
    for (int v : vertices)
        if (!std::binary_search(face.begin(), face.end(), v))
            ineq.push_back(row_le(base, terms[static_cast<std::size_t>(v)]));
    return {canonical_rows(to_matrix(eq, m + 1), true), canonical_rows(to_matrix(ineq, m + 1), false)};
}

std::vector<int> lower_vertices(const std::vector<Term>& terms, int m) {
    std::vector<int> all(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<int> vertices{lexmin(terms, minimizers(terms, all, VectorQ::Zero(m)))};
    for (std::size_t x = 0; x < terms.size(); ++x) {
        while (std::find(vertices.begin(), vertices.end(), static_cast<int>(x)) == vertices.end()) {
            // some w where x is strictly below every known vertex
            std::vector<Row> rows;
            for (int v : vertices) rows.push_back(row_le(terms[x], terms[static_cast<std::size_t>(v)]));
            const auto w = strict_point(MatrixQ(0, m + 1), to_matrix(rows, m + 1), m);
            if (!w) break;
            vertices.push_back(lexmin(terms, minimizers(terms, all, *w)));
        }
    }
    std::sort(vertices.begin(), vertices.end());
    return vertices;
}

bool label_order(const Cell& a, const Cell& b) {
    if (a.label != b.label) return a.label < b.label;
    if (a.dim != b.dim) return a.dim < b.dim;
    return lex_less(a.witness, b.witness);
}

}  // namespace

PolyComplex normal_complex(const TropPoly& f, const std::vector<int>& sigma) {
    const int n = f.num_vars();
    for (int i : sigma)
        if (i < 0 || i >= n) throw InputError("stratum index out of range");
    const auto coords = finite_coords(n, sigma);
    const int m = static_cast<int>(coords.size());
    PolyComplex out{n, {Stratum{sigma, coords, {}}}};
    auto& cells = out.strata.front().cells;
    if (f.empty()) {
        cells.push_back(Cell{MatrixQ(0, m + 1), MatrixQ(0, m + 1), "inf", m, VectorQ::Zero(m)});
        return out;
    }
    std::vector<Term> terms;
    for (const auto& [u, a] : f.terms()) {
        if (touches(u, sigma)) throw PreconditionError("normal_complex: term divisible by a variable of the stratum");
        std::vector<int> r;
        for (int j : coords) r.push_back(u[static_cast<std::size_t>(j)]);
        terms.push_back(Term{u, std::move(r), a});
    }
    const auto vertices = lower_vertices(terms, m);
    std::vector<int> all(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) all[i] = static_cast<int>(i);

    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    auto visit = [&](const std::vector<int>& generators) {
        const auto sys = face_system(terms, vertices, generators, m);
        const auto ri = relative_interior(sys.eq, sys.ineq, m);
        if (!ri) return;
        auto face = minimizers(terms, vertices, ri->point);
        std::sort(face.begin(), face.end());
        if (!seen.insert(face).second) return;
        const auto closed = face_system(terms, vertices, face, m);
        std::vector<Monomial> ties;
        for (int i : minimizers(terms, all, ri->point)) ties.push_back(terms[static_cast<std::size_t>(i)].full);
        std::sort(ties.begin(), ties.end(), GrlexBefore{});
        cells.push_back(Cell{closed.eq, closed.ineq, tie_label(ties), ri->dim, ri->point});
        queue.push_back(face);
    };
    for (int v : vertices) visit({v});
    while (!queue.empty()) {
        const auto face = queue.front();
        queue.pop_front();
        for (int v : vertices) {
            if (std::binary_search(face.begin(), face.end(), v)) continue;
            auto bigger = face;
            bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
            visit(bigger);
        }
    }
    std::sort(cells.begin(), cells.end(), label_order);
    return out;
}

// --- refinement ---------------------------------------------------------------------

std::vector<Cell> refine_cells(const std::vector<Cell>& a, const std::vector<Cell>& b, int m) {
    std::vector<Cell> out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            const MatrixQ eq = canonical_rows(vstack(x.eq, y.eq, m + 1), true);
            const MatrixQ ineq = canonical_rows(vstack(x.ineq, y.ineq, m + 1), false);
            const auto p = strict_point(eq, ineq, m);
            if (!p) continue;
            const int dim = m - linalg::rank(eq.leftCols(m));
            out.push_back(Cell{eq, ineq, x.label + " | " + y.label, dim, *p});
        }
    }
    return out;
}

PolyComplex refine(const std::vector<PolyComplex>& complexes) {
    if (complexes.empty()) throw InputError("refine needs at least one complex");
    PolyComplex out = complexes.front();
    for (std::size_t k = 1; k < complexes.size(); ++k) {
        const auto& other = complexes[k];
        if (other.ambient != out.ambient || other.strata.size() != out.strata.size())
            throw InputError("refine: complexes live on different strata");
        for (std::size_t s = 0; s < out.strata.size(); ++s) {
            auto& mine = out.strata[s];
            const auto& theirs = other.strata[s];
            if (mine.sigma != theirs.sigma || mine.coords != theirs.coords)
                throw InputError("refine: complexes live on different strata");
            mine.cells = refine_cells(mine.cells, theirs.cells, static_cast<int>(mine.coords.size()));
            std::sort(mine.cells.begin(), mine.cells.end(), label_order);
        }
    }
    return out;
}

PolyComplex quotient_lineality(const PolyComplex& c, Normalize which) {
    PolyComplex out{c.ambient, {}};
    for (const auto& s : c.strata) {
        const int m = static_cast<int>(s.coords.size());
        if (m == 0) continue;
        const int k = which == Normalize::LastFinite ? m - 1 : 0;
        Stratum q{s.sigma, {}, {}};
        for (int j = 0; j < m; ++j)
            if (j != k) q.coords.push_back(s.coords[static_cast<std::size_t>(j)]);
        auto drop = [&](const MatrixQ& rows) {
            MatrixQ r(rows.rows(), m);
            for (Eigen::Index i = 0; i < rows.rows(); ++i) {
                Rational sum = 0;
                for (int j = 0; j < m; ++j) sum += rows(i, j);
                if (sum != 0) throw InvariantError("quotient_lineality: cell is not invariant under R.1");
                Eigen::Index col = 0;
                for (int j = 0; j <= m; ++j)
                    if (j != k) r(i, col++) = rows(i, j);
            }
            return r;
        };
        for (const auto& cell : s.cells) {
            Cell n;
            n.eq = canonical_rows(drop(cell.eq), true);
            n.ineq = canonical_rows(drop(cell.ineq), false);
            n.label = cell.label;
            n.dim = cell.dim - 1;
            n.witness = VectorQ(m - 1);
            Eigen::Index col = 0;
            for (int j = 0; j < m; ++j)
                if (j != k) n.witness(col++) = cell.witness(j) - cell.witness(k);
            q.cells.push_back(std::move(n));
        }
        out.strata.push_back(std::move(q));
    }
    return out;
}

std::string format_cell(const Cell& c, const std::vector<int>& coords) {
    std::ostringstream os;
    const auto m = static_cast<Eigen::Index>(coords.size());
    auto write = [&](const MatrixQ& rows, const char* rel) {
        for (Eigen::Index i = 0; i < rows.rows(); ++i) {
            bool first = true;
            for (Eigen::Index j = 0; j < m; ++j) {
                if (rows(i, j) == 0) continue;
                os << (first ? "" : " + ") << format_rational(rows(i, j)) << "*w" << coords[static_cast<std::size_t>(j)];
                first = false;
            }
            if (first) os << "0";
            os << ' ' << rel << ' ' << format_rational(rows(i, m)) << '\n';
        }
    };
    write(c.eq, "=");
    write(c.ineq, "<=");
    return os.str();
}

}  // namespace tropideal
