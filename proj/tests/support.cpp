#include "support.hpp"

#include <algorithm>

namespace tropideal::testing {

Mask line_pair_set(int n) {
    const auto mons = monomials_of_degree(4, n);
    std::vector<Monomial> want{{n, 0, 0, 0}, {0, 1, n - 1, 0}};
    for (int k = 2; k <= n; ++k) want.push_back({0, 0, n - k, k});
    Mask out = 0;
    for (const auto& u : want) {
        const auto it = std::find(mons.begin(), mons.end(), u);
        out |= bit(static_cast<int>(it - mons.begin()));
    }
    return out;
}

ClassicalInput random_small_ideal(std::mt19937_64& rng, bool linear, bool padic) {
    std::uniform_int_distribution<long> coef(-6, 6);
    std::uniform_int_distribution<int> power(0, 2);
    auto scaled = [&](long c) {
        if (!padic) return c;
        for (int k = power(rng); k > 0; --k) c *= 5;
        return c;
    };
    ClassicalValuation val;
    if (padic) val = ClassicalValuation{ValuationKind::PAdic, 5};
    std::vector<ClassicalPoly> gens;
    const int degree = linear ? 1 : 2;
    const int count = linear ? 1 + static_cast<int>(rng() % 2) : 1;
    for (int g = 0; g < count; ++g) {
        ClassicalPoly p;
        do {
            std::vector<std::pair<Monomial, long>> terms;
            for (const auto& u : monomials_of_degree(3, degree)) terms.emplace_back(u, scaled(coef(rng)));
            p = cpoly(3, terms);
        } while (p.terms.size() < 2);
        gens.push_back(std::move(p));
    }
    return classical(3, std::move(gens), val);
}

}  // namespace tropideal::testing
