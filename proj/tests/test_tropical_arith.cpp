#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace tropideal;
using namespace tropideal::testing;

namespace {

TropPoly random_univariate(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::bernoulli_distribution keep(0.7);
    TropPoly f(1);
    const int d = deg(rng);
    for (int j = 0; j <= d; ++j)
        if (j == d || keep(rng)) f.add_term({j}, random_rational(rng, 20, 3));
    return f;
}

TropScalar random_scalar(std::mt19937_64& rng) {
    if (rng() % 6 == 0) return inf();
    return random_rational(rng, 30, 5);
}

bool same_function(const TropPoly& f, const TropPoly& g, std::mt19937_64& rng, int samples) {
    for (int i = 0; i < samples; ++i) {
        const Weight w{random_rational(rng, 50, 7)};
        if (eval(f, w) != eval(g, w)) return false;
    }
    return eval(f, {inf()}) == eval(g, {inf()});
}

}  // namespace

TEST_CASE("scalar semiring laws") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const TropScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK(oplus(a, oplus(b, c)) == oplus(oplus(a, b), c));
        CHECK(oplus(a, b) == oplus(b, a));
        CHECK(oplus(a, a) == a);
        CHECK(otimes(a, otimes(b, c)) == otimes(otimes(a, b), c));
        CHECK(otimes(a, oplus(b, c)) == oplus(otimes(a, b), otimes(a, c)));
        CHECK(oplus(a, inf()) == a);
        CHECK(otimes(a, TropScalar::zero()) == a);
        CHECK(otimes(a, inf()) == inf());
    }
}

TEST_CASE("scalar text form") {
    CHECK(format_scalar(q("6/4")) == "3/2");
    CHECK(format_scalar(q("-4/2")) == "-2");
    CHECK(format_scalar(inf()) == "inf");
    CHECK(parse_scalar("inf").is_inf());
    CHECK(parse_scalar("-7/21") == TropScalar(q("-1/3")));
    CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
}

TEST_CASE("dot uses infinity times zero equal to zero") {
    CHECK(dot({inf(), TropScalar(3L)}, {0, 1}) == TropScalar(3L));
    CHECK(dot({inf(), TropScalar(3L)}, {1, 1}).is_inf());
    CHECK_THROWS_AS(dot({TropScalar(1L)}, {1, 1}), DimensionError);
}

TEST_CASE("eval") {
    const TropPoly f = poly(1, {{{2}, 0L}, {{0}, 0L}});
    CHECK(eval(f, {TropScalar(1L)}) == TropScalar(0L));
    CHECK(eval(TropPoly(2), {TropScalar(5L), inf()}).is_inf());
    CHECK(eval(poly(2, {{{1, 0}, 0L}, {{0, 1}, 0L}}), {inf(), TropScalar(3L)}) == TropScalar(3L));
    CHECK_THROWS_AS(eval(f, {TropScalar(1L), TropScalar(2L)}), DimensionError);
}

TEST_CASE("initial form") {
    const TropPoly f = poly(1, {{{2}, 0L}, {{0}, 0L}});
    CHECK(initial_form(f, {TropScalar(1L)}) == std::vector<Monomial>{{0}});
    const TropPoly xyz = poly(3, {{{1, 0, 0}, 0L}, {{0, 1, 0}, 0L}, {{0, 0, 1}, 0L}});
    CHECK(initial_form(xyz, {0L, 0L, 0L}).size() == 3);
    const TropPoly xy = poly(2, {{{1, 0}, 0L}, {{0, 1}, 0L}});
    CHECK(initial_form(xy, {inf(), TropScalar(0L)}) == std::vector<Monomial>{{0, 1}});
    CHECK(initial_form(TropPoly(2), {0L, 0L}).empty());
}

TEST_CASE("initial form properties") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        TropPoly f(2), g(2);
        for (const auto& u : monomials_up_to_degree(2, 2)) {
            if (rng() % 2) f.add_term(u, Rational(static_cast<long>(rng() % 5)));
            if (rng() % 2) g.add_term(u, Rational(static_cast<long>(rng() % 5)));
        }
        if (f.empty() || g.empty()) continue;
        const Weight w{Rational(static_cast<long>(rng() % 3)), Rational(static_cast<long>(rng() % 3))};
        // x0 (.) f shifts every initial term
        const auto shifted = initial_form(shift(f, {1, 0}), w);
        std::vector<Monomial> expect;
        for (auto u : initial_form(f, w)) expect.push_back(multiply(u, {1, 0}));
        std::sort(expect.begin(), expect.end(), GrlexBefore{});
        auto got = shifted;
        std::sort(got.begin(), got.end(), GrlexBefore{});
        CHECK(got == expect);
        // a (.) f (+) b (.) g with balanced minima
        const Rational a = eval(g, w).value();
        const Rational b = eval(f, w).value();
        const TropPoly h = oplus(otimes(TropScalar(a), f), otimes(TropScalar(b), g));
        std::vector<Monomial> uni = initial_form(f, w);
        for (const auto& u : initial_form(g, w))
            if (std::find(uni.begin(), uni.end(), u) == uni.end()) uni.push_back(u);
        std::sort(uni.begin(), uni.end(), GrlexBefore{});
        auto hs = initial_form(h, w);
        std::sort(hs.begin(), hs.end(), GrlexBefore{});
        CHECK(hs == uni);
    }
}

TEST_CASE("min_twice") {
    const TropPoly f = poly(2, {{{1, 0}, 0L}, {{0, 1}, 0L}, {{0, 0}, 0L}});
    CHECK(min_twice(f, {0L, 0L}));
    CHECK_FALSE(min_twice(f, {1L, 2L}));
    CHECK(min_twice(TropPoly(2), {1L, 2L}));
}

TEST_CASE("homogenize and dehomogenize") {
    const TropPoly f = poly(1, {{{2}, 0L}, {{0}, 0L}});
    CHECK(homogenize(f) == poly(2, {{{0, 2}, 0L}, {{2, 0}, 0L}}));
    const TropPoly g = poly(2, {{{1, 0}, 0L}, {{0, 1}, 0L}, {{0, 0}, 0L}});
    CHECK(homogenize(g) == poly(3, {{{0, 1, 0}, 0L}, {{0, 0, 1}, 0L}, {{1, 0, 0}, 0L}}));
    const TropPoly h = poly(1, {{{2}, 1L}, {{1}, 0L}});
    CHECK(homogenize(h) == poly(2, {{{0, 2}, 1L}, {{1, 1}, 0L}}));
    CHECK_THROWS_AS(homogenize(TropPoly(2)), DegenerateError);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        TropPoly r(2);
        for (const auto& u : monomials_up_to_degree(2, 3))
            if (rng() % 3 == 0) r.add_term(u, random_rational(rng, 9, 4));
        if (r.empty()) continue;
        const TropPoly hr = homogenize(r);
        CHECK(hr.is_homogeneous());
        CHECK(dehomogenize(hr) == r);
    }
}

TEST_CASE("strip_sigma") {
    const TropPoly xyz = poly(3, {{{1, 0, 0}, 0L}, {{0, 1, 0}, 0L}, {{0, 0, 1}, 0L}});
    CHECK(strip_sigma(xyz, {0}) == poly(3, {{{0, 1, 0}, 0L}, {{0, 0, 1}, 0L}}));
    const TropPoly f = poly(2, {{{1, 1}, 0L}, {{0, 2}, 0L}});
    CHECK(strip_sigma(f, {0}) == poly(2, {{{0, 2}, 0L}}));
    CHECK(strip_sigma(poly(2, {{{2, 0}, 0L}}), {0}).empty());
}

TEST_CASE("least coefficients examples") {
    const TropPoly f = poly(1, {{{2}, 0L}, {{1}, 7L}, {{0}, 1L}});
    CHECK(least_coefficients(f) == poly(1, {{{2}, 0L}, {{1}, q("1/2")}, {{0}, 1L}}));
    const TropPoly g = poly(1, {{{1}, 0L}, {{0}, 0L}});
    CHECK(least_coefficients(g) == g);
    const TropPoly h = poly(1, {{{2}, 1L}, {{1}, 0L}, {{0}, 3L}});
    CHECK(least_coefficients(h) == h);
    CHECK_THROWS_AS(least_coefficients(TropPoly(1)), DegenerateError);
}

TEST_CASE("roots examples") {
    CHECK(tropical_roots(poly(1, {{{2}, 0L}, {{0}, 1L}})) == std::vector<TropicalRoot>{{q("1/2"), 2}});
    CHECK(tropical_roots(poly(1, {{{1}, 0L}, {{0}, 0L}})) == std::vector<TropicalRoot>{{q("0"), 1}});
    CHECK(tropical_roots(poly(1, {{{2}, 1L}, {{1}, 0L}, {{0}, 3L}})) ==
          std::vector<TropicalRoot>{{q("-1"), 1}, {q("3"), 1}});
    const auto fac = factor_univariate(poly(1, {{{3}, 0L}, {{1}, 2L}}));
    CHECK(fac.x_power == 1);
    CHECK(fac.roots == std::vector<TropicalRoot>{{q("1"), 2}});
}

TEST_CASE("least coefficients against the c_j formula and sampling") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const TropPoly f = random_univariate(rng, 6);
        const TropPoly g = least_coefficients(f);
        // c_j = min of b_j and every interpolation between support points around j
        std::map<int, Rational> b;
        for (const auto& [u, c] : f.terms()) b[u[0]] = c;
        const int lo = b.begin()->first, hi = b.rbegin()->first;
        for (int j = lo; j <= hi; ++j) {
            std::optional<Rational> c;
            if (b.count(j)) c = b[j];
            for (const auto& [i, bi] : b)
                for (const auto& [k, bk] : b) {
                    if (!(i < j && j < k)) continue;
                    const Rational v = (bi * (k - j) + bk * (j - i)) / Rational(k - i);
                    if (!c || v < *c) c = v;
                }
            CHECK(g.coefficient({j}) == TropScalar(*c));
        }
        CHECK(same_function(f, g, rng, 1000));
        CHECK(least_coefficients(g) == g);
        CHECK(otimes(g, f) == otimes(g, g));
        CHECK(expand(factor_univariate(f)) == g);
        int total = factor_univariate(f).x_power;
        for (const auto& r : tropical_roots(f)) total += r.multiplicity;
        CHECK(total == hi);
    }
}

TEST_CASE("roots against a breakpoint scan") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const TropPoly f = random_univariate(rng, 5);
        // V(f) in R: points where two terms tie at the minimum
        std::vector<Rational> expect;
        const std::vector<std::pair<Monomial, Rational>> t(f.terms().begin(), f.terms().end());
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t k = i + 1; k < t.size(); ++k) {
                const Rational w = (t[i].second - t[k].second) / Rational(t[k].first[0] - t[i].first[0]);
                if (min_twice(f, {TropScalar(w)}) && std::find(expect.begin(), expect.end(), w) == expect.end())
                    expect.push_back(w);
            }
        std::sort(expect.begin(), expect.end());
        std::vector<Rational> got;
        for (const auto& r : tropical_roots(f)) got.push_back(r.root);
        CHECK(got == expect);
    }
}
