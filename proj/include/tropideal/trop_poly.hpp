#pragma once

#include "tropideal/monomial.hpp"

#include <map>
#include <vector>

namespace tropideal {

/// Tropical polynomial: a finite map from exponent vectors to finite coefficients.
/// Absent monomials have coefficient infinity; the empty map is the polynomial infinity.
class TropPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexBefore>;

    explicit TropPoly(int num_vars = 1);

    int num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds c (.) x^u by tropical sum, i.e. keeps the smaller coefficient.
    /// Infinite c is a no-op.
    TropPoly& add_term(const Monomial& u, const TropScalar& c);

    TropScalar coefficient(const Monomial& u) const;
    std::vector<Monomial> support() const;

    /// Max degree of the support; requires nonempty.
    int degree() const;
    bool is_homogeneous() const;

    friend bool operator==(const TropPoly& a, const TropPoly& b) = default;

private:
    int num_vars_;
    TermMap terms_;
};

TropPoly oplus(const TropPoly& f, const TropPoly& g);
TropPoly otimes(const TropPoly& f, const TropPoly& g);
/// Scalar times polynomial.
TropPoly otimes(const TropScalar& a, const TropPoly& f);
/// Monomial times polynomial.
TropPoly shift(const TropPoly& f, const Monomial& u);

/// min over the support of a_u + w.u (infinity * 0 = 0). Infinity for the empty polynomial.
TropScalar eval(const TropPoly& f, const Weight& w);

/// Monomials attaining eval(f, w); empty when eval(f, w) is infinity.
std::vector<Monomial> initial_form(const TropPoly& f, const Weight& w);

/// w lies on the tropical hypersurface V(f).
bool min_twice(const TropPoly& f, const Weight& w);

/// Adds a new first variable x0 so every term has the top degree.
TropPoly homogenize(const TropPoly& f);
/// Substitutes x0 = 0 (the tropical unit) and drops the first variable.
TropPoly dehomogenize(const TropPoly& f);

/// Removes every term divisible by some x_i with i in sigma.
TropPoly strip_sigma(const TropPoly& f, const std::vector<int>& sigma);

// --- univariate --------------------------------------------------------------

/// Smallest coefficients defining the same function on R-bar.
TropPoly least_coefficients(const TropPoly& f);

struct TropicalRoot {
    Rational root;
    int multiplicity;
    friend bool operator==(const TropicalRoot&, const TropicalRoot&) = default;
};

/// f = leading (.) x^x_power (.) prod (x (+) root)^multiplicity as functions.
struct UnivariateFactorization {
    Rational leading;
    int x_power = 0;
    std::vector<TropicalRoot> roots;  // ascending
};

/// Finite points of V(f) with multiplicities, ascending.
std::vector<TropicalRoot> tropical_roots(const TropPoly& f);
UnivariateFactorization factor_univariate(const TropPoly& f);
TropPoly expand(const UnivariateFactorization& fac);

}  // namespace tropideal
