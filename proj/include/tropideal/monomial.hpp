#pragma once

#include "tropideal/trop_scalar.hpp"

#include <string>
#include <vector>

namespace tropideal {

/// Exponent vector of a monomial.
using Monomial = std::vector<int>;

int degree(const Monomial& u);

/// Canonical graded lexicographic order: lower degree first; within a degree,
/// the lexicographically larger exponent vector first (x0^d, x0^{d-1}x1, ...).
struct GrlexBefore {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of degree d in `num_vars` variables, in canonical order.
std::vector<Monomial> monomials_of_degree(int num_vars, int d);

/// All monomials of degree <= d in canonical order.
std::vector<Monomial> monomials_up_to_degree(int num_vars, int d);

/// "x0^2*x1", "1" for the constant monomial.
std::string monomial_label(const Monomial& u);

bool divides(const Monomial& v, const Monomial& u);

Monomial multiply(const Monomial& a, const Monomial& b);

/// True if some variable in `sigma` divides u.
bool touches(const Monomial& u, const std::vector<int>& sigma);

/// Weight coordinates in R-bar, one per variable.
using Weight = std::vector<TropScalar>;

/// w . u with the convention infinity * 0 = 0 (only variables with positive
/// exponent contribute). Throws DimensionError on length mismatch.
TropScalar dot(const Weight& w, const Monomial& u);

/// sigma(w) = indices with infinite coordinate.
std::vector<int> infinite_coords(const Weight& w);

}  // namespace tropideal
