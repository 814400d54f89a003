// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace tropideal;
using namespace tropideal::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) note << "failed: ";
            else note << "; ";
            note << what;
            pass = false;
        }
    }
};

const Monomial X{1, 0, 0}, Y{0, 1, 0}, Z{0, 0, 1};

TropPoly xyz() { return poly(3, {{X, 0L}, {Y, 0L}, {Z, 0L}}); }

TruncIdeal unit_ideal(int n, int d) { return tropicalize(classical(n, {cpoly(n, {{Monomial(n, 0), 1}})}), d); }

std::vector<ClassicalInput> random_inputs() {
    std::mt19937_64 rng(20240601);
    std::vector<ClassicalInput> out;
    for (int i = 0; i < 10; ++i) out.push_back(random_small_ideal(rng, i % 2 == 0, (i / 2) % 2 == 1));
    return out;
}

Weight random_weight(std::mt19937_64& rng, int n, long box) {
    std::uniform_int_distribution<long> d(-box, box);
    Weight w;
    for (int i = 0; i < n; ++i) w.emplace_back(d(rng));
    return w;
}

/// Cellwise equality: a bijection between the cells of each stratum with equal
/// closed polyhedra, decided by Fourier-Motzkin.
bool same_cells(const PolyComplex& a, const PolyComplex& b, std::string* why) {
    auto nonempty = [](const PolyComplex& c) {
        std::vector<const Stratum*> out;
        for (const auto& s : c.strata)
            if (!s.cells.empty()) out.push_back(&s);
        return out;
    };
    const auto sa = nonempty(a), sb = nonempty(b);
    if (sa.size() != sb.size()) {
        *why = "different nonempty strata";
        return false;
    }
    for (const Stratum* s : sa) {
        const Stratum* t = b.find(s->sigma);
        if (!t || t->cells.size() != s->cells.size() || t->coords != s->coords) {
            *why = "stratum mismatch";
            return false;
        }
        const int m = static_cast<int>(s->coords.size());
        std::vector<bool> used(t->cells.size(), false);
        for (const auto& c : s->cells) {
            bool found = false;
            for (std::size_t j = 0; j < t->cells.size() && !found; ++j) {
                if (used[j] || t->cells[j].dim != c.dim) continue;
                if (oracle::cell_subset(c, t->cells[j], m) && oracle::cell_subset(t->cells[j], c, m)) {
                    used[j] = true;
                    found = true;
                }
            }
            if (!found) {
                *why = "unmatched cell of dimension " + std::to_string(c.dim);
                return false;
            }
        }
    }
    return true;
}

/// V(f) for a single polynomial, stratum by stratum, presented modulo R.1.
PolyComplex hypersurface(const TropPoly& f) {
    const int n = f.num_vars();
    PolyComplex out{n, {}};
    for (const auto& sigma : proper_strata(n)) {
        const PolyComplex nc = normal_complex(strip_sigma(f, sigma), sigma);
        Stratum s = nc.strata.front();
        std::vector<Cell> keep;
        for (auto& c : s.cells)
            if (min_twice(f, embed(c.witness, s.coords, n))) keep.push_back(std::move(c));
        s.cells = std::move(keep);
        out.strata.push_back(std::move(s));
    }
    return quotient_lineality(out);
}

// 1 -------------------------------------------------------------------------------
void nonrealizable_layers(Outcome& o) {
    const TruncIdeal ideal = nonrealizable_ideal(2, 4);
    for (int d = 0; d <= 4; ++d)
        o.expect(!check_valuated_exchange(ideal.layer(d)), "exchange fails in degree " + std::to_string(d));
    o.expect(!check_compatibility(ideal), "layers not compatible");
    const auto c1 = circuits(ideal.layer(1));
    o.expect(std::find(c1.begin(), c1.end(), VVector{0L, 0L, 0L}) != c1.end(), "x0 + x1 + x2 not a circuit of M_1");
    const auto mons = monomials_of_degree(3, 3);
    Mask s = 0;
    for (const Monomial& u : std::vector<Monomial>{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}})
        s |= bit(static_cast<int>(std::find(mons.begin(), mons.end(), u) - mons.begin()));
    o.expect(underlying(ideal.layer(3)).is_independent(s), "cubes and x0x1x2 dependent in M_3");
    o.note << "D=4, ranks";
    for (int d = 0; d <= 4; ++d) o.note << ' ' << hilbert(ideal, d);
}

// 2 -------------------------------------------------------------------------------
void standard_line(Outcome& o) {
    const TruncIdeal ideal = nonrealizable_ideal(2, 4);
    const GroebnerComplex gc = groebner_complex(ideal);
    const PolyComplex v = variety(gc, Presentation::Projective);
    std::string why;
    o.expect(same_cells(v, hypersurface(xyz()), &why), "variety differs from the line of U_{2,3}: " + why);
    const Stratum* top = v.find({});
    o.expect(top != nullptr, "no open stratum");
    if (top) {
        int rays = 0, vertices = 0;
        const std::vector<VectorQ> dirs{(VectorQ(2) << 1, 0).finished(), (VectorQ(2) << 0, 1).finished(),
                                        (VectorQ(2) << -1, -1).finished()};
        std::vector<int> hits(3, 0);
        for (const auto& c : top->cells) {
            if (c.dim == 0) {
                ++vertices;
                o.expect(c.witness == VectorQ::Zero(2), "vertex not at the origin");
            }
            if (c.dim == 1) {
                ++rays;
                for (int k = 0; k < 3; ++k) hits[static_cast<std::size_t>(k)] += in_relative_interior(c, dirs[static_cast<std::size_t>(k)]);
            }
        }
        o.expect(rays == 3 && vertices == 1, "expected 3 rays and 1 vertex");
        o.expect(hits == std::vector<int>{1, 1, 1}, "rays not along e0, e1, e2 mod 1");
    }
    int boundary = 0;
    for (const auto& s : v.strata) {
        if (s.sigma.size() == 1) {
            o.expect(s.cells.size() == 1 && s.cells.front().dim == 0, "boundary stratum is not one point");
            boundary += static_cast<int>(s.cells.size());
        }
        if (s.sigma.size() == 2) o.expect(s.cells.empty(), "corner stratum meets the variety");
    }
    const auto basis = tropical_basis(ideal, gc);
    o.expect(std::find(basis.begin(), basis.end(), xyz()) != basis.end(), "x0 + x1 + x2 missing from the basis");
    o.note << "D=4, 3 rays + vertex, " << boundary << " boundary points, basis size " << basis.size();
}

// 3 -------------------------------------------------------------------------------
void same_variety_pair(Outcome& o) {
    const TruncIdeal left = tropicalize(same_variety_left(), 4);
    const TruncIdeal right = tropicalize(same_variety_right(), 4);
    const CompareReport rep = compare(left, right);
    o.expect(rep.equal_through == 3, "equal through degree " + std::to_string(rep.equal_through));
    o.expect(rep.overall != Comparison::Equal, "ideals reported equal");
    o.expect(contains(right, separating_quartic()), "f not in I'");
    o.expect(!contains(left, separating_quartic()), "f in I");
    std::string why;
    o.expect(same_cells(variety(left, Presentation::Projective), variety(right, Presentation::Projective), &why),
             "varieties differ: " + why);
    o.expect(same_variety(left, right), "same_variety disagrees");
    o.note << "compare " << to_string(rep.overall) << ", equal through degree " << rep.equal_through;
}

// 4 -------------------------------------------------------------------------------
void groebner_polynomials(Outcome& o) {
    const TruncIdeal ideal = tropicalize(classical(4, {cpoly(4, {{{1, 0, 0, 0}, 1}, {{0, 1, 0, 0}, -1}}),
                                                       cpoly(4, {{{0, 0, 1, 0}, 1}, {{0, 0, 0, 1}, -1}})}),
                                         1);
    o.expect(groebner_poly(ideal, 1, {}) ==
                 poly(4, {{{1, 0, 1, 0}, 0L}, {{1, 0, 0, 1}, 0L}, {{0, 1, 1, 0}, 0L}, {{0, 1, 0, 1}, 0L}}),
             "F for the open stratum");
    o.expect(groebner_poly(ideal, 1, {0, 1}) == poly(4, {{{0, 0, 1, 0}, 0L}, {{0, 0, 0, 1}, 0L}}),
             "F for sigma = {0, 1}");
    const GroebnerStratum s = groebner_stratum(ideal, {});
    o.expect(s.fingerprint_classes() == 9, "fingerprint classes: " + std::to_string(s.fingerprint_classes()));
    o.note << s.cells.size() << " cells, " << s.fingerprint_classes() << " fingerprint classes";
}

// 5 -------------------------------------------------------------------------------
void line_pair_family(Outcome& o) {
    for (int n = 2; n <= 3; ++n) {
        for (long lambda = n - 1; lambda <= n + 1; ++lambda) {
            const TruncIdeal ideal = tropicalize(line_pair(lambda), n);
            const bool dependent = !underlying(ideal.layer(n)).is_independent(line_pair_set(n));
            o.expect(dependent == (lambda == n),
                     "n=" + std::to_string(n) + " lambda=" + std::to_string(lambda) + " dependence");
            for (int d = 0; d <= n; ++d)
                o.expect(hilbert(ideal, d) == d + 1, "H(" + std::to_string(d) + ") != d+1");
        }
    }
    o.note << "n=2,3 with lambda in {n-1,n,n+1}: dependent only at lambda=n";
}

// 6 -------------------------------------------------------------------------------
void hilbert_preservation(Outcome& o) {
    std::mt19937_64 rng(6);
    int checks = 0;
    for (const auto& in : random_inputs()) {
        const TruncIdeal ideal = tropicalize(in, 3);
        for (int d = 0; d <= 3; ++d, ++checks)
            o.expect(hilbert(ideal, d) == oracle::macaulay_corank(in, d), "Macaulay corank mismatch");
        for (int t = 0; t < 20; ++t) {
            const TruncIdeal init = initial_ideal(ideal, random_weight(rng, 3, 50));
            for (int d = 0; d <= 3; ++d, ++checks) o.expect(hilbert(init, d) == hilbert(ideal, d), "initial changes H");
        }
    }
    o.note << "10 ideals, " << checks << " Hilbert comparisons";
}

// 7 -------------------------------------------------------------------------------
void generic_monomial(Outcome& o) {
    std::mt19937_64 rng(7);
    std::vector<TruncIdeal> ideals;
    for (const auto& in : random_inputs()) ideals.push_back(tropicalize(in, 3));
    ideals.push_back(nonrealizable_ideal(2, 3));
    ideals.push_back(tropicalize(same_variety_left(), 3));
    ideals.push_back(point_ideal({0L, 2L, q("-1/3")}, 3));
    int worst = 100, full_cells = 0;
    for (const auto& ideal : ideals) {
        int monomial = 0;
        for (int t = 0; t < 100; ++t) {
            const TruncIdeal init = initial_ideal(ideal, random_weight(rng, 3, 1000000000L));
            bool unique = true;
            for (const auto& m : init.layers()) unique = unique && m.valuation().size() == 1;
            monomial += unique;
        }
        worst = std::min(worst, monomial);
        o.expect(monomial >= 95, "only " + std::to_string(monomial) + "/100 monomial");
        const GroebnerComplex gc = groebner_complex(ideal);
        for (const auto& s : gc.strata)
            for (const auto& c : s.cells)
                if (c.cell.dim == static_cast<int>(s.coords.size())) {
                    ++full_cells;
                    o.expect(c.fingerprint.is_monomial(), "full-dimensional cell with non-monomial fingerprint");
                }
    }
    o.note << ideals.size() << " ideals, worst " << worst << "/100 monomial, " << full_cells
           << " full-dimensional cells checked";
}

// 8 -------------------------------------------------------------------------------
void univariate(Outcome& o) {
    o.expect(least_coefficients(poly(1, {{{2}, 0L}, {{1}, 7L}, {{0}, 1L}})) ==
                 poly(1, {{{2}, 0L}, {{1}, q("1/2")}, {{0}, 1L}}),
             "least coefficients of x^2 + 7x + 1");
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        TropPoly f(1);
        const int d = static_cast<int>(rng() % 7);
        for (int j = 0; j <= d; ++j)
            if (j == d || rng() % 3) f.add_term({j}, random_rational(rng, 20, 4));
        const TropPoly g = least_coefficients(f);
        o.expect(otimes(g, f) == otimes(g, g), "g f != g^2");
        o.expect(expand(factor_univariate(f)) == g, "root expansion differs from least coefficients");
    }
    o.note << "200 random polynomials of degree <= 6";
}

// 9 -------------------------------------------------------------------------------
void nullstellensatz_checks(Outcome& o) {
    const Certificate u = nullstellensatz(unit_ideal(3, 2));
    o.expect(u.kind == CertificateKind::Unit && u.degree == 0, "unit ideal certificate");
    const std::vector<Weight> points{{0L, 0L, 0L}, {0L, 3L, q("-2/5")}, {1L, inf(), 4L}, {inf(), inf(), 0L}};
    for (const auto& a : points) {
        const Certificate c = nullstellensatz(point_ideal(a, 2));
        o.expect(c.kind == CertificateKind::Nonempty && c.witness.has_value(), "point ideal not nonempty");
        if (!c.witness) continue;
        o.expect(c.witness->sigma == infinite_coords(a), "witness in the wrong stratum");
        VectorQ p(static_cast<Eigen::Index>(c.witness->coords.size()));
        for (std::size_t j = 0; j < c.witness->coords.size(); ++j)
            p(static_cast<Eigen::Index>(j)) = a[static_cast<std::size_t>(c.witness->coords[j])].value();
        o.expect(contains_point(c.witness->cell, p), "witness cell misses the point");
    }
    std::vector<TruncIdeal> ideals{unit_ideal(3, 2), nonrealizable_ideal(2, 3), tropicalize(same_variety_left(), 3)};
    for (const auto& a : points) ideals.push_back(point_ideal(a, 2));
    for (const auto& in : random_inputs()) ideals.push_back(tropicalize(in, 2));
    int both = 0;
    for (const auto& ideal : ideals) {
        bool unit = false;
        for (const auto& m : ideal.layers()) unit = unit || m.rank() == 0;
        bool nonempty = false;
        for (const auto& s : variety(ideal, Presentation::Projective).strata) nonempty = nonempty || !s.cells.empty();
        both += unit && nonempty;
    }
    o.expect(both == 0, std::to_string(both) + " ideals with both branches");
    o.note << ideals.size() << " ideals, none with both branches";
}

// 10 ------------------------------------------------------------------------------
void ascending_chain(Outcome& o) {
    std::vector<std::pair<TruncIdeal, TruncIdeal>> pairs;
    {
        const Monomial x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
        const ClassicalPoly g1 = cpoly(3, {{x, 1}, {y, 2}, {z, -1}});
        const ClassicalPoly g2 = cpoly(3, {{x, 3}, {y, -1}});
        ClassicalPoly g3 = g2;
        for (const auto& [u, c] : g1.terms) g3.terms[u] += Rational(5) * c;
        pairs.emplace_back(tropicalize(classical(3, {g1, g2}), 3), tropicalize(classical(3, {g3, g1}), 3));
        const ClassicalValuation five{ValuationKind::PAdic, 5};
        const ClassicalPoly h = cpoly(3, {{{2, 0, 0}, 25}, {{1, 1, 0}, 3}, {{0, 0, 2}, -10}});
        ClassicalPoly h5 = h;
        for (auto& [u, c] : h5.terms) c *= Rational(-15);
        pairs.emplace_back(tropicalize(classical(3, {h}, five), 3), tropicalize(classical(3, {h5}, five), 3));
    }
    pairs.emplace_back(homogenize_ideal(affine_point_ideal({Rational(2), Rational(-1)}, 3)),
                       point_ideal({0L, 2L, -1L}, 3));
    pairs.emplace_back(nonrealizable_ideal(2, 3), nonrealizable_ideal(2, 3));
    int mutations = 0, detected = 0;
    for (const auto& [small, big] : pairs) {
        o.expect(compare(small, big).overall == Comparison::Equal, "constructed pair not equal");
        for (int d = 1; d <= big.degree_bound(); ++d) {
            const VMatroid& layer = big.layer(d);
            const auto bases = layer.bases();
            for (std::size_t k = 0; k < bases.size() && k < 12; ++k) {
                for (int kind = 0; kind < 2; ++kind) {
                    auto p = layer.valuation();
                    if (kind == 0)
                        p[bases[k]] += 1;
                    else
                        p.erase(bases[k]);
                    bool caught = false;
                    try {
                        const VMatroid mutated(layer.ground(), layer.rank(), p);
                        if (mutated == layer) continue;
                        ++mutations;
                        auto layers = big.layers();
                        layers[static_cast<std::size_t>(d)] = mutated;
                        const TruncIdeal changed(big.num_vars(), CoefficientMode::Rational, layers);
                        caught = check_valuated_exchange(mutated).has_value() ||
                                 compare(small, changed).overall != Comparison::Equal;
                    } catch (const InvariantError&) {
                        caught = true;
                    } catch (const InputError&) {
                        caught = true;
                        ++mutations;
                    }
                    detected += caught;
                }
            }
        }
    }
    o.expect(detected == mutations, std::to_string(mutations - detected) + " undetected mutations");
    o.note << pairs.size() << " equal pairs, " << detected << "/" << mutations << " mutations detected";
}

// 11 ------------------------------------------------------------------------------
constexpr std::size_t kPairBudget = 20000;

void elimination_axioms(Outcome& o) {
    std::mt19937_64 rng(11);
    std::vector<TruncIdeal> ideals{nonrealizable_ideal(2, 3), tropicalize(same_variety_left(), 3),
                                   tropicalize(same_variety_right(), 3), point_ideal({0L, 1L, q("5/2")}, 3),
                                   point_ideal({0L, inf(), 1L}, 3), tropicalize(line_pair(3), 3)};
    for (const auto& in : random_inputs()) ideals.push_back(tropicalize(in, 3));
    long layers = 0, pairs = 0, sampled = 0;
    for (const auto& ideal : ideals) {
        for (int d = 0; d <= ideal.degree_bound(); ++d) {
            const auto circ = circuits(ideal.layer(d));
            std::vector<VVector> vecs = circ;
            for (int t = 0; t < 40 && !circ.empty(); ++t) {
                VVector v(circ.front().size(), inf());
                for (int k = 0; k < 3; ++k) {
                    const auto& h = circ[rng() % circ.size()];
                    const TropScalar lambda(static_cast<long>(rng() % 4));
                    for (std::size_t e = 0; e < v.size(); ++e) v[e] = oplus(v[e], otimes(lambda, h[e]));
                }
                vecs.push_back(std::move(v));
            }
            std::string why;
            o.expect(oracle::circuit_elimination_holds(circ, &why, kPairBudget, rng()), "circuit elimination: " + why);
            o.expect(oracle::vector_elimination_holds(circ, vecs, &why, kPairBudget, rng()), "vector elimination: " + why);
            ++layers;
            const std::size_t c2 = circ.size() * circ.size(), v2 = vecs.size() * vecs.size() / 2;
            sampled += c2 > kPairBudget || v2 > kPairBudget;
            pairs += static_cast<long>(std::min(c2, kPairBudget) + std::min(v2, kPairBudget));
        }
    }
    o.note << layers << " layers, about " << pairs << " pairs, " << sampled << " layers sampled";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"non-realizable ideal layers", nonrealizable_layers},
        {"standard tropical line", standard_line},
        {"same variety, different ideals", same_variety_pair},
        {"Groebner polynomials", groebner_polynomials},
        {"infinite-family dependence", line_pair_family},
        {"Hilbert preservation and initial invariance", hilbert_preservation},
        {"generic monomialization", generic_monomial},
        {"univariate suite", univariate},
        {"Nullstellensatz certificates", nullstellensatz_checks},
        {"ascending-chain rigidity", ascending_chain},
        {"elimination axioms", elimination_axioms},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !o.pass;
        std::cout << "criterion " << std::setw(2) << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  "
                  << criteria[i].first << " (" << o.note.str() << ") [" << std::fixed << std::setprecision(1)
                  << secs << " s]" << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
