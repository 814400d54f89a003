#pragma once

// Builders shared by the unit tests and the acceptance runner.

#include "tropideal/errors.hpp"
#include "tropideal/groebner.hpp"

#include <random>
#include <utility>
#include <vector>

namespace tropideal::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline TropPoly poly(int num_vars, const std::vector<std::pair<Monomial, TropScalar>>& terms) {
    TropPoly f(num_vars);
    for (const auto& [u, c] : terms) f.add_term(u, c);
    return f;
}

inline ClassicalPoly cpoly(int num_vars, const std::vector<std::pair<Monomial, long>>& terms) {
    ClassicalPoly g;
    g.num_vars = num_vars;
    for (const auto& [u, c] : terms)
        if (c != 0) g.terms[u] += Rational(c);
    return g;
}

inline ClassicalPoly cmul(const ClassicalPoly& a, const ClassicalPoly& b) {
    ClassicalPoly p;
    p.num_vars = a.num_vars;
    for (const auto& [u, c] : a.terms)
        for (const auto& [v, e] : b.terms) p.terms[multiply(u, v)] += c * e;
    for (auto it = p.terms.begin(); it != p.terms.end();) it = it->second == 0 ? p.terms.erase(it) : std::next(it);
    return p;
}

inline ClassicalInput classical(int num_vars, std::vector<ClassicalPoly> gens,
                                ClassicalValuation val = {}) {
    return ClassicalInput{num_vars, std::move(gens), val};
}

inline Monomial var(int num_vars, int i, int power = 1) {
    Monomial u(static_cast<std::size_t>(num_vars), 0);
    u[static_cast<std::size_t>(i)] = power;
    return u;
}

inline TropScalar inf() { return TropScalar::infinity(); }

/// (x + y + z)(xy + xz + yz) and (x + y)(x + z)(y + z).
inline ClassicalInput same_variety_left() {
    const Monomial x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    return classical(3, {cmul(cpoly(3, {{x, 1}, {y, 1}, {z, 1}}),
                              cpoly(3, {{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}}))});
}

inline ClassicalInput same_variety_right() {
    const Monomial x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    return classical(3, {cmul(cmul(cpoly(3, {{x, 1}, {y, 1}}), cpoly(3, {{x, 1}, {z, 1}})),
                              cpoly(3, {{y, 1}, {z, 1}}))});
}

/// The degree-4 polynomial separating the two ideals above.
inline TropPoly separating_quartic() {
    TropPoly f(3);
    for (const Monomial& u : std::vector<Monomial>{
             {3, 1, 0}, {3, 0, 1}, {1, 3, 0}, {0, 3, 1}, {1, 0, 3}, {0, 1, 3}, {1, 2, 1}, {1, 1, 2}, {0, 2, 2}})
        f.add_term(u, TropScalar(0L));
    return f;
}

/// <x - z - w, y - z - lambda w> in variables x, y, z, w.
inline ClassicalInput line_pair(long lambda) {
    return classical(4, {cpoly(4, {{{1, 0, 0, 0}, 1}, {{0, 0, 1, 0}, -1}, {{0, 0, 0, 1}, -1}}),
                         cpoly(4, {{{0, 1, 0, 0}, 1}, {{0, 0, 1, 0}, -1}, {{0, 0, 0, 1}, -lambda}})});
}

/// {x^n, y z^{n-1}, z^{n-k} w^k for k = 2..n} as a mask over Mon_n of 4 variables.
Mask line_pair_set(int n);

/// Random small ideal: linear or principal, 3 variables, trivial or 5-adic valuation.
ClassicalInput random_small_ideal(std::mt19937_64& rng, bool linear, bool padic);

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return Rational(num(rng)) / Rational(den(rng));
}

}  // namespace tropideal::testing
