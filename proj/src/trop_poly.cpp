#include "tropideal/trop_poly.hpp"

#include "tropideal/errors.hpp"

#include <algorithm>

namespace tropideal {

// --- TropScalar -----------------------------------------------------------------

const Rational& TropScalar::value() const {
    if (!value_) throw PreconditionError("value() of tropical infinity");
    return *value_;
}

std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b) {
    if (a.is_inf() || b.is_inf()) return a.is_inf() <=> b.is_inf();  // inf is largest
    if (*a.value_ < *b.value_) return std::strong_ordering::less;
    if (*b.value_ < *a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

TropScalar oplus(const TropScalar& a, const TropScalar& b) { return a <= b ? a : b; }

TropScalar otimes(const TropScalar& a, const TropScalar& b) {
    if (a.is_inf() || b.is_inf()) return TropScalar::infinity();
    return TropScalar(a.value() + b.value());
}

std::string format_scalar(const TropScalar& s) { return s.is_inf() ? "inf" : format_rational(s.value()); }

TropScalar parse_scalar(std::string_view text) {
    if (text == "inf") return TropScalar::infinity();
    return TropScalar(parse_rational(text));
}

// --- monomials ------------------------------------------------------------------

int degree(const Monomial& u) {
    int d = 0;
    for (int e : u) d += e;
    return d;
}

bool GrlexBefore::operator()(const Monomial& a, const Monomial& b) const {
    const int da = degree(a);
    const int db = degree(b);
    if (da != db) return da < db;
    return b < a;
}

namespace {

void fill_monomials(int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
    const int n = static_cast<int>(cur.size());
    if (var == n - 1) {
        cur[static_cast<std::size_t>(var)] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[static_cast<std::size_t>(var)] = e;
        fill_monomials(var + 1, remaining - e, cur, out);
    }
    cur[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int num_vars, int d) {
    if (num_vars < 1) throw InputError("need at least one variable");
    if (d < 0) return {};
    std::vector<Monomial> out;
    Monomial cur(static_cast<std::size_t>(num_vars), 0);
    fill_monomials(0, d, cur, out);
    return out;
}

std::vector<Monomial> monomials_up_to_degree(int num_vars, int d) {
    std::vector<Monomial> out;
    for (int k = 0; k <= d; ++k) {
        auto layer = monomials_of_degree(num_vars, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::string monomial_label(const Monomial& u) {
    std::string s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i);
        if (u[i] > 1) s += '^' + std::to_string(u[i]);
    }
    return s.empty() ? "1" : s;
}

bool divides(const Monomial& v, const Monomial& u) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (v[i] > u[i]) return false;
    return true;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

bool touches(const Monomial& u, const std::vector<int>& sigma) {
    return std::any_of(sigma.begin(), sigma.end(),
                       [&](int i) { return u[static_cast<std::size_t>(i)] > 0; });
}

TropScalar dot(const Weight& w, const Monomial& u) {
    if (w.size() != u.size())
        throw DimensionError("weight has " + std::to_string(w.size()) + " coordinates, monomial has " +
                             std::to_string(u.size()));
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (w[i].is_inf()) return TropScalar::infinity();
        s += w[i].value() * u[i];
    }
    return TropScalar(s);
}

std::vector<int> infinite_coords(const Weight& w) {
    std::vector<int> sigma;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i].is_inf()) sigma.push_back(static_cast<int>(i));
    return sigma;
}

// --- TropPoly -------------------------------------------------------------------

TropPoly::TropPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1) throw InputError("a polynomial needs at least one variable");
}

TropPoly& TropPoly::add_term(const Monomial& u, const TropScalar& c) {
    if (static_cast<int>(u.size()) != num_vars_)
        throw DimensionError("exponent vector of length " + std::to_string(u.size()) + " in a polynomial in " +
                             std::to_string(num_vars_) + " variables");
    for (int e : u)
        if (e < 0) throw InputError("negative exponent");
    if (c.is_inf()) return *this;
    auto it = terms_.find(u);
    if (it == terms_.end())
        terms_.emplace(u, c.value());
    else if (c.value() < it->second)
        it->second = c.value();
    return *this;
}

TropScalar TropPoly::coefficient(const Monomial& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? TropScalar::infinity() : TropScalar(it->second);
}

std::vector<Monomial> TropPoly::support() const {
    std::vector<Monomial> s;
    s.reserve(terms_.size());
    for (const auto& [u, c] : terms_) s.push_back(u);
    return s;
}

int TropPoly::degree() const {
    if (terms_.empty()) throw DegenerateError("degree of the infinity polynomial");
    return tropideal::degree(terms_.rbegin()->first);
}

bool TropPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return tropideal::degree(terms_.begin()->first) == tropideal::degree(terms_.rbegin()->first);
}

TropPoly oplus(const TropPoly& f, const TropPoly& g) {
    if (f.num_vars() != g.num_vars()) throw DimensionError("tropical sum of polynomials in different rings");
    TropPoly h = f;
    for (const auto& [u, c] : g.terms()) h.add_term(u, c);
    return h;
}

TropPoly otimes(const TropPoly& f, const TropPoly& g) {
    if (f.num_vars() != g.num_vars()) throw DimensionError("tropical product of polynomials in different rings");
    TropPoly h(f.num_vars());
    for (const auto& [u, a] : f.terms())
        for (const auto& [v, b] : g.terms()) h.add_term(multiply(u, v), TropScalar(a + b));
    return h;
}

TropPoly otimes(const TropScalar& a, const TropPoly& f) {
    TropPoly h(f.num_vars());
    if (a.is_inf()) return h;
    for (const auto& [u, c] : f.terms()) h.add_term(u, TropScalar(a.value() + c));
    return h;
}

TropPoly shift(const TropPoly& f, const Monomial& u) {
    TropPoly h(f.num_vars());
    for (const auto& [v, c] : f.terms()) h.add_term(multiply(u, v), TropScalar(c));
    return h;
}

TropScalar eval(const TropPoly& f, const Weight& w) {
    if (static_cast<int>(w.size()) != f.num_vars())
        throw DimensionError("weight length " + std::to_string(w.size()) + " does not match " +
                             std::to_string(f.num_vars()) + " variables");
    TropScalar best = TropScalar::infinity();
    for (const auto& [u, c] : f.terms()) best = oplus(best, otimes(TropScalar(c), dot(w, u)));
    return best;
}

std::vector<Monomial> initial_form(const TropPoly& f, const Weight& w) {
    const TropScalar m = eval(f, w);
    std::vector<Monomial> out;
    if (m.is_inf()) return out;
    for (const auto& [u, c] : f.terms())
        if (otimes(TropScalar(c), dot(w, u)) == m) out.push_back(u);
    return out;
}

bool min_twice(const TropPoly& f, const Weight& w) {
    if (eval(f, w).is_inf()) return true;
    return initial_form(f, w).size() >= 2;
}

TropPoly homogenize(const TropPoly& f) {
    if (f.empty()) throw DegenerateError("cannot homogenize the infinity polynomial");
    const int d = f.degree();
    TropPoly h(f.num_vars() + 1);
    for (const auto& [u, c] : f.terms()) {
        Monomial v;
        v.reserve(u.size() + 1);
        v.push_back(d - tropideal::degree(u));
        v.insert(v.end(), u.begin(), u.end());
        h.add_term(v, TropScalar(c));
    }
    return h;
}

TropPoly dehomogenize(const TropPoly& f) {
    if (f.num_vars() < 2) throw DimensionError("dehomogenize needs at least two variables");
    TropPoly h(f.num_vars() - 1);
    for (const auto& [u, c] : f.terms()) h.add_term(Monomial(u.begin() + 1, u.end()), TropScalar(c));
    return h;
}

TropPoly strip_sigma(const TropPoly& f, const std::vector<int>& sigma) {
    for (int i : sigma)
        if (i < 0 || i >= f.num_vars()) throw DimensionError("stratum index " + std::to_string(i) + " out of range");
    TropPoly h(f.num_vars());
    for (const auto& [u, c] : f.terms())
        if (!touches(u, sigma)) h.add_term(u, TropScalar(c));
    return h;
}

// --- univariate -----------------------------------------------------------------

namespace {

void require_univariate(const TropPoly& f) {
    if (f.num_vars() != 1) throw DimensionError("expected a univariate polynomial");
    if (f.empty()) throw DegenerateError("univariate operation on the infinity polynomial");
}

// Finite coefficients b_j indexed by exponent, ascending.
std::vector<std::pair<int, Rational>> points_of(const TropPoly& f) {
    std::vector<std::pair<int, Rational>> pts;
    for (const auto& [u, c] : f.terms()) pts.emplace_back(u[0], c);
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return pts;
}

// Lower convex hull of the points (j, b_j), left to right.
std::vector<std::pair<int, Rational>> lower_hull(const std::vector<std::pair<int, Rational>>& pts) {
    std::vector<std::pair<int, Rational>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // drop b unless it lies strictly below the segment a-p
            const Rational lhs = (b.second - a.second) * (p.first - a.first);
            const Rational rhs = (p.second - a.second) * (b.first - a.first);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

}  // namespace

TropPoly least_coefficients(const TropPoly& f) {
    require_univariate(f);
    const auto pts = points_of(f);
    const int top = pts.back().first;
    std::vector<TropScalar> b(static_cast<std::size_t>(top) + 1);
    for (const auto& [j, c] : pts) b[static_cast<std::size_t>(j)] = TropScalar(c);
    TropPoly g(1);
    for (int j = 0; j <= top; ++j) {
        TropScalar c = b[static_cast<std::size_t>(j)];
        for (const auto& [i, bi] : pts) {
            if (i >= j) break;
            for (const auto& [k, bk] : pts) {
                if (k <= j) continue;
                c = oplus(c, TropScalar((bi * (k - j) + bk * (j - i)) / Rational(k - i)));
            }
        }
        g.add_term(Monomial{j}, c);
    }
    return g;
}

std::vector<TropicalRoot> tropical_roots(const TropPoly& f) { return factor_univariate(f).roots; }

UnivariateFactorization factor_univariate(const TropPoly& f) {
    require_univariate(f);
    const auto hull = lower_hull(points_of(f));
    UnivariateFactorization fac;
    fac.leading = hull.back().second;
    fac.x_power = hull.front().first;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const auto& [i, bi] = hull[s];
        const auto& [k, bk] = hull[s + 1];
        // b_i + i w = b_k + k w
        fac.roots.push_back({(bi - bk) / Rational(k - i), k - i});
    }
    std::sort(fac.roots.begin(), fac.roots.end(),
              [](const TropicalRoot& a, const TropicalRoot& b) { return a.root < b.root; });
    return fac;
}

TropPoly expand(const UnivariateFactorization& fac) {
    TropPoly g(1);
    g.add_term(Monomial{fac.x_power}, TropScalar(fac.leading));
    for (const auto& r : fac.roots) {
        TropPoly lin(1);
        lin.add_term(Monomial{1}, TropScalar::zero());
        lin.add_term(Monomial{0}, TropScalar(r.root));
        for (int m = 0; m < r.multiplicity; ++m) g = otimes(g, lin);
    }
    return g;
}

}  // namespace tropideal
