#include "tropideal/tropical_ideal.hpp"

#include "tropideal/errors.hpp"
#include "tropideal/linalg.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace tropideal {

namespace {

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

std::map<Monomial, int> index_of(const std::vector<Monomial>& mons) {
    std::map<Monomial, int> idx;
    for (std::size_t i = 0; i < mons.size(); ++i) idx.emplace(mons[i], static_cast<int>(i));
    return idx;
}

/// Same valuated matroid with its ground listed in `order`.
VMatroid relabel(const VMatroid& m, const std::vector<std::string>& order) {
    std::map<std::string, int> target;
    for (std::size_t i = 0; i < order.size(); ++i) target[order[i]] = static_cast<int>(i);
    std::vector<int> to;
    for (const auto& l : m.ground()) {
        auto it = target.find(l);
        if (it == target.end()) throw InputError("relabel: label '" + l + "' missing from target order");
        to.push_back(it->second);
    }
    std::map<Mask, Rational> val;
    for (const auto& [b, v] : m.valuation()) {
        Mask nb = 0;
        for (int e : mask_indices(b)) nb |= bit(to[static_cast<std::size_t>(e)]);
        val.emplace(nb, v);
    }
    return VMatroid(order, m.rank(), std::move(val));
}

Mask sigma_mask(const std::vector<Monomial>& mons, const std::vector<int>& sigma) {
    Mask a = 0;
    for (std::size_t i = 0; i < mons.size(); ++i)
        if (touches(mons[i], sigma)) a |= bit(static_cast<int>(i));
    return a;
}

}  // namespace

std::vector<std::string> monomial_labels(int num_vars, int d) {
    std::vector<std::string> out;
    for (const auto& u : monomials_of_degree(num_vars, d)) out.push_back(monomial_label(u));
    return out;
}

TruncIdeal::TruncIdeal(int num_vars, CoefficientMode mode, std::vector<VMatroid> layers)
    : num_vars_(num_vars), mode_(mode), layers_(std::move(layers)) {
    if (num_vars_ < 1) throw InputError("a tropical ideal needs at least one variable");
    if (layers_.empty()) throw InputError("a truncated ideal needs layers 0..D");
    for (std::size_t d = 0; d < layers_.size(); ++d) {
        if (layers_[d].ground() != monomial_labels(num_vars_, static_cast<int>(d)))
            throw InputError("layer " + std::to_string(d) + " is not on the canonical list of degree-" +
                             std::to_string(d) + " monomials");
        if (mode_ == CoefficientMode::Boolean && !layers_[d].is_trivially_valued())
            throw InputError("layer " + std::to_string(d) + " has nonzero values in Boolean mode");
    }
}

const VMatroid& TruncIdeal::layer(int d) const {
    if (d < 0 || d > degree_bound())
        throw PreconditionError("degree " + std::to_string(d) + " outside the truncation 0.." +
                                std::to_string(degree_bound()));
    return layers_[static_cast<std::size_t>(d)];
}

// --- classical input --------------------------------------------------------------

bool ClassicalPoly::is_homogeneous() const {
    if (terms.empty()) return true;
    const int d = tropideal::degree(terms.begin()->first);
    return std::all_of(terms.begin(), terms.end(), [d](const auto& t) { return tropideal::degree(t.first) == d; });
}

int ClassicalPoly::degree() const {
    if (terms.empty()) throw DegenerateError("degree of the zero polynomial");
    int d = 0;
    for (const auto& [u, c] : terms) d = std::max(d, tropideal::degree(u));
    return d;
}

TropScalar ClassicalValuation::operator()(const Rational& q) const {
    if (q == 0) return TropScalar::infinity();
    if (kind == ValuationKind::Trivial) return TropScalar::zero();
    return TropScalar(Rational(padic_valuation(q, prime)));
}

namespace {

void validate(const ClassicalInput& input) {
    if (input.valuation.kind == ValuationKind::PAdic && !is_prime(input.valuation.prime))
        throw InputError("p-adic valuation needs a prime, got " + std::to_string(input.valuation.prime));
    for (const auto& g : input.generators) {
        if (g.num_vars != input.num_vars) throw DimensionError("generator variable count mismatch");
        if (!g.is_homogeneous()) throw InputError("generators must be homogeneous");
    }
}

}  // namespace

MatrixQ macaulay_matrix(const ClassicalInput& input, int d) {
    validate(input);
    const auto mons = monomials_of_degree(input.num_vars, d);
    const auto idx = index_of(mons);
    std::vector<std::vector<std::pair<int, Rational>>> rows;
    for (const auto& g : input.generators) {
        if (g.terms.empty()) continue;
        const int e = g.degree();
        if (e > d) continue;
        for (const auto& u : monomials_of_degree(input.num_vars, d - e)) {
            std::vector<std::pair<int, Rational>> row;
            for (const auto& [v, c] : g.terms) row.emplace_back(idx.at(multiply(u, v)), c);
            rows.push_back(std::move(row));
        }
    }
    MatrixQ a = MatrixQ::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(mons.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, c] : rows[i]) a(static_cast<Eigen::Index>(i), j) = c;
    return a;
}

VMatroid tropicalize_subspace(const MatrixQ& rows, const std::vector<std::string>& labels,
                              const ClassicalValuation& val) {
    if (rows.cols() != static_cast<Eigen::Index>(labels.size()))
        throw DimensionError("subspace columns do not match the labels");
    const MatrixQ k = linalg::kernel_rows(rows);
    const int r = static_cast<int>(k.rows());
    const int n = static_cast<int>(labels.size());
    // Row scaling only shifts every basis value by the same constant.
    MatrixZ kz(k.rows(), k.cols());
    for (Eigen::Index i = 0; i < k.rows(); ++i) {
        std::vector<Rational> row(k.row(i).begin(), k.row(i).end());
        const Integer l = lcm_of_denominators(row.data(), row.data() + row.size());
        for (Eigen::Index j = 0; j < k.cols(); ++j) kz(i, j) = numerator(k(i, j) * l);
    }
    std::map<Mask, Rational> valuation;
    MatrixZ sub(r, r);
    for_each_subset(n, r, [&](Mask b) {
        const auto cols = mask_indices(b);
        for (int j = 0; j < r; ++j) sub.col(j) = kz.col(cols[static_cast<std::size_t>(j)]);
        const Integer det = linalg::bareiss_determinant(sub);
        if (det == 0) return;
        valuation.emplace(b, val(Rational(det)).value());
    }, "tropicalize: " + std::to_string(r) + "-subsets of " + std::to_string(n) + " monomials");
    return VMatroid(labels, r, std::move(valuation));
}

TruncIdeal tropicalize(const ClassicalInput& input, int degree_bound) {
    validate(input);
    if (degree_bound < 0) throw InputError("degree bound must be non-negative");
    std::vector<VMatroid> layers;
    for (int d = 0; d <= degree_bound; ++d)
        layers.push_back(tropicalize_subspace(macaulay_matrix(input, d), monomial_labels(input.num_vars, d),
                                              input.valuation));
    const bool trivial = input.valuation.kind == ValuationKind::Trivial;
    return TruncIdeal(input.num_vars, trivial ? CoefficientMode::Boolean : CoefficientMode::Rational,
                      std::move(layers));
}

TruncIdeal point_ideal(const Weight& a, int degree_bound) {
    if (a.empty()) throw InputError("point needs at least one coordinate");
    if (std::all_of(a.begin(), a.end(), [](const TropScalar& x) { return x.is_inf(); }))
        throw InputError("the all-infinity point has no ideal");
    if (degree_bound < 0) throw InputError("degree bound must be non-negative");
    const int nv = static_cast<int>(a.size());
    std::vector<VMatroid> layers;
    for (int d = 0; d <= degree_bound; ++d) {
        const auto mons = monomials_of_degree(nv, d);
        std::map<Mask, Rational> val;
        for (std::size_t i = 0; i < mons.size(); ++i) {
            const TropScalar au = dot(a, mons[i]);
            if (au.is_finite()) val.emplace(bit(static_cast<int>(i)), au.value());
        }
        layers.emplace_back(monomial_labels(nv, d), 1, std::move(val));
    }
    const bool boolean = std::all_of(a.begin(), a.end(), [](const TropScalar& x) { return x.is_inf() || x.value() == 0; });
    return TruncIdeal(nv, boolean ? CoefficientMode::Boolean : CoefficientMode::Rational, std::move(layers));
}

TruncIdeal nonrealizable_ideal(int n, int degree_bound) {
    if (n < 2) throw InputError("the non-realizable family needs n >= 2");
    if (degree_bound < 0) throw InputError("degree bound must be non-negative");
    const int nv = n + 1;
    std::vector<VMatroid> layers;
    for (int d = 0; d <= degree_bound; ++d) {
        const auto mons = monomials_of_degree(nv, d);
        // (mask of Mon_d divisible by x^v, allowed count) for every x^v of degree 1..d
        std::vector<std::pair<Mask, int>> limits;
        for (int k = 1; k <= d; ++k) {
            for (const auto& v : monomials_of_degree(nv, k)) {
                Mask m = 0;
                for (std::size_t i = 0; i < mons.size(); ++i)
                    if (divides(v, mons[i])) m |= bit(static_cast<int>(i));
                limits.emplace_back(m, d - k + 1);
            }
        }
        std::map<Mask, Rational> val;
        for_each_subset(static_cast<int>(mons.size()), d + 1, [&](Mask b) {
            for (const auto& [m, cap] : limits)
                if (popcount(b & m) > cap) return;
            val.emplace(b, Rational(0));
        }, "nonrealizable_ideal degree " + std::to_string(d));
        layers.emplace_back(monomial_labels(nv, d), d + 1, std::move(val));
    }
    return TruncIdeal(nv, CoefficientMode::Boolean, std::move(layers));
}

std::optional<CompatibilityViolation> check_compatibility(const TruncIdeal& ideal) {
    const int nv = ideal.num_vars();
    for (int d = 0; d < ideal.degree_bound(); ++d) {
        const VMatroid& lo = ideal.layer(d);
        const VMatroid& hi = ideal.layer(d + 1);
        if (hi.rank() == 0) continue;
        const Mask lo_full = full_mask(lo.size());
        std::unordered_set<Mask> us_seen;
        std::vector<Mask> us;
        for (const auto& [b, v] : lo.valuation())
            for (int e : mask_indices(lo_full & ~b))
                if (us_seen.insert(b | bit(e)).second) us.push_back(b | bit(e));
        std::unordered_set<Mask> vs_seen;
        std::vector<Mask> vs;
        for (const auto& [b, v] : hi.valuation())
            for (int e : mask_indices(b))
                if (vs_seen.insert(b & ~bit(e)).second) vs.push_back(b & ~bit(e));
        std::sort(us.begin(), us.end(), mask_lex_less);
        std::sort(vs.begin(), vs.end(), mask_lex_less);
        require_within_cap(static_cast<std::uint64_t>(us.size()) * vs.size() * static_cast<std::uint64_t>(nv),
                           "check_compatibility degree " + std::to_string(d));

        std::unordered_map<Mask, const Rational*> lo_val;
        std::unordered_map<Mask, const Rational*> hi_val;
        for (const auto& [b, v] : lo.valuation()) lo_val.emplace(b, &v);
        for (const auto& [b, v] : hi.valuation()) hi_val.emplace(b, &v);
        const auto lo_mons = monomials_of_degree(nv, d);
        const auto hi_idx = index_of(monomials_of_degree(nv, d + 1));

        for (int i = 0; i < nv; ++i) {
            Monomial xi(static_cast<std::size_t>(nv), 0);
            xi[static_cast<std::size_t>(i)] = 1;
            std::vector<int> shifted(lo_mons.size());
            for (std::size_t j = 0; j < lo_mons.size(); ++j) shifted[j] = hi_idx.at(multiply(xi, lo_mons[j]));
            for (Mask u : us) {
                const auto u_elems = mask_indices(u);
                for (Mask v : vs) {
                    std::optional<Rational> best;
                    int hits = 0;
                    for (int j : u_elems) {
                        const Mask m = bit(shifted[static_cast<std::size_t>(j)]);
                        if (v & m) continue;
                        auto a = lo_val.find(u & ~bit(j));
                        if (a == lo_val.end()) continue;
                        auto b = hi_val.find(v | m);
                        if (b == hi_val.end()) continue;
                        const Rational term = *a->second + *b->second;
                        if (!best || term < *best) {
                            best = term;
                            hits = 1;
                        } else if (term == *best) {
                            ++hits;
                        }
                    }
                    if (best && hits == 1) return CompatibilityViolation{d, i, u, v};
                }
            }
        }
    }
    return std::nullopt;
}

int hilbert(const TruncIdeal& ideal, int d) { return ideal.layer(d).rank(); }

VVector coefficient_vector(const TropPoly& f, int d) {
    const auto mons = monomials_of_degree(f.num_vars(), d);
    const auto idx = index_of(mons);
    VVector v(mons.size());
    for (const auto& [u, c] : f.terms()) {
        auto it = idx.find(u);
        if (it == idx.end()) throw InputError("polynomial has a term outside degree " + std::to_string(d));
        v[static_cast<std::size_t>(it->second)] = TropScalar(c);
    }
    return v;
}

TropPoly polynomial_of(const VVector& v, int num_vars, int d) {
    const auto mons = monomials_of_degree(num_vars, d);
    if (mons.size() != v.size()) throw DimensionError("vector length does not match Mon_d");
    TropPoly f(num_vars);
    for (std::size_t i = 0; i < v.size(); ++i) f.add_term(mons[i], v[i]);
    return f;
}

bool contains(const TruncIdeal& ideal, const TropPoly& f) {
    if (f.num_vars() != ideal.num_vars()) throw DimensionError("polynomial and ideal variable counts differ");
    if (f.empty()) return true;
    if (!f.is_homogeneous()) throw InputError("membership needs a homogeneous polynomial");
    const int d = f.degree();
    return is_vector(ideal.layer(d), coefficient_vector(f, d));
}

TruncIdeal initial_ideal(const TruncIdeal& ideal, const Weight& w) {
    if (static_cast<int>(w.size()) != ideal.num_vars())
        throw DimensionError("weight length " + std::to_string(w.size()) + " does not match " +
                             std::to_string(ideal.num_vars()) + " variables");
    const auto sigma = infinite_coords(w);
    if (static_cast<int>(sigma.size()) == ideal.num_vars())
        throw InputError("initial ideal needs a weight with a finite coordinate");
    std::vector<VMatroid> layers;
    for (int d = 0; d <= ideal.degree_bound(); ++d) {
        const VMatroid& m = ideal.layer(d);
        const auto mons = monomials_of_degree(ideal.num_vars(), d);
        const Mask a = sigma_mask(mons, sigma);
        const VMatroid c = contract(m, a);
        std::vector<Rational> what;
        std::vector<std::string> sigma_labels;
        for (std::size_t i = 0; i < mons.size(); ++i) {
            if (a & bit(static_cast<int>(i)))
                sigma_labels.push_back(m.ground()[i]);
            else
                what.push_back(dot(w, mons[i]).value());
        }
        const OrdMatroid in = coloop_extension(initial_matroid(c, what), sigma_labels);
        layers.push_back(VMatroid::from(reorder(in, m.ground())));
    }
    return TruncIdeal(ideal.num_vars(), CoefficientMode::Boolean, std::move(layers));
}

TruncIdeal boolean_image(const TruncIdeal& ideal) {
    std::vector<VMatroid> layers;
    for (const auto& m : ideal.layers()) layers.push_back(VMatroid::from(underlying(m)));
    return TruncIdeal(ideal.num_vars(), CoefficientMode::Boolean, std::move(layers));
}

bool layer_contained(const VMatroid& a, const VMatroid& b) {
    if (a.ground() != b.ground()) throw InputError("layers live on different ground sets");
    for (const auto& h : circuits(a))
        if (!is_vector(b, h)) return false;
    return true;
}

std::string to_string(Comparison c) {
    switch (c) {
        case Comparison::Equal: return "equal";
        case Comparison::StrictSubset: return "strict-subset";
        case Comparison::StrictSuperset: return "strict-superset";
        case Comparison::Incomparable: return "incomparable";
    }
    return "incomparable";
}

CompareReport compare(const TruncIdeal& left, const TruncIdeal& right) {
    if (left.num_vars() != right.num_vars() || left.degree_bound() != right.degree_bound())
        throw InputError("compare needs ideals with the same variables and degree bound");
    CompareReport rep;
    bool subset = true;
    bool superset = true;
    bool equal_so_far = true;
    for (int d = 0; d <= left.degree_bound(); ++d) {
        const VMatroid& a = left.layer(d);
        const VMatroid& b = right.layer(d);
        const bool ab = layer_contained(a, b);
        const bool ba = layer_contained(b, a);
        rep.hilbert_left.push_back(a.rank());
        rep.hilbert_right.push_back(b.rank());
        if ((ab || ba) && !(ab && ba) && a.rank() == b.rank())
            throw InvariantError("degree " + std::to_string(d) +
                                 ": a strict inclusion of layers with equal Hilbert value");
        Comparison c = Comparison::Incomparable;
        if (ab && ba)
            c = Comparison::Equal;
        else if (ab)
            c = Comparison::StrictSubset;
        else if (ba)
            c = Comparison::StrictSuperset;
        rep.per_degree.push_back(c);
        subset = subset && ab;
        superset = superset && ba;
        equal_so_far = equal_so_far && c == Comparison::Equal;
        if (equal_so_far) rep.equal_through = d;
    }
    if (subset && superset)
        rep.overall = Comparison::Equal;
    else if (subset)
        rep.overall = Comparison::StrictSubset;
    else if (superset)
        rep.overall = Comparison::StrictSuperset;
    else
        rep.overall = Comparison::Incomparable;
    return rep;
}

// --- affine ideals ------------------------------------------------------------------

namespace {

std::vector<std::string> affine_labels(int num_vars, int d) {
    std::vector<std::string> out;
    for (const auto& u : monomials_up_to_degree(num_vars, d)) out.push_back(monomial_label(u));
    return out;
}

}  // namespace

AffineIdeal affine_point_ideal(const std::vector<Rational>& a, int degree_bound) {
    if (a.empty()) throw InputError("point needs at least one coordinate");
    if (degree_bound < 0) throw InputError("degree bound must be non-negative");
    const int nv = static_cast<int>(a.size());
    const Weight w(a.begin(), a.end());
    AffineIdeal out{nv, {}};
    for (int d = 0; d <= degree_bound; ++d) {
        const auto mons = monomials_up_to_degree(nv, d);
        std::map<Mask, Rational> val;
        for (std::size_t i = 0; i < mons.size(); ++i) val.emplace(bit(static_cast<int>(i)), dot(w, mons[i]).value());
        out.layers.emplace_back(affine_labels(nv, d), 1, std::move(val));
    }
    return out;
}

AffineIdeal affine_unit_ideal(int num_vars, int degree_bound) {
    if (num_vars < 1) throw InputError("affine ideal needs at least one variable");
    AffineIdeal out{num_vars, {}};
    for (int d = 0; d <= degree_bound; ++d)
        out.layers.emplace_back(affine_labels(num_vars, d), 0, std::map<Mask, Rational>{{Mask{0}, Rational(0)}});
    return out;
}

TruncIdeal homogenize_ideal(const AffineIdeal& ideal) {
    if (ideal.layers.empty()) throw InputError("affine ideal has no layers");
    const int nv = ideal.num_vars + 1;
    std::vector<VMatroid> layers;
    bool boolean = true;
    for (std::size_t d = 0; d < ideal.layers.size(); ++d) {
        const VMatroid& m = ideal.layers[d];
        const auto mons = monomials_up_to_degree(ideal.num_vars, static_cast<int>(d));
        if (m.ground() != affine_labels(ideal.num_vars, static_cast<int>(d)))
            throw InputError("affine layer " + std::to_string(d) + " is not on Mon_{<=d}");
        std::vector<std::string> hom;
        for (const auto& u : mons) {
            Monomial h{static_cast<int>(d) - degree(u)};
            h.insert(h.end(), u.begin(), u.end());
            hom.push_back(monomial_label(h));
        }
        const VMatroid renamed(hom, m.rank(), m.valuation());
        layers.push_back(relabel(renamed, monomial_labels(nv, static_cast<int>(d))));
        boolean = boolean && m.is_trivially_valued();
    }
    return TruncIdeal(nv, boolean ? CoefficientMode::Boolean : CoefficientMode::Rational, std::move(layers));
}

}  // namespace tropideal
