#include "tropideal/groebner.hpp"

#include "tropideal/errors.hpp"

#include <algorithm>
#include <cstdio>

namespace tropideal {

namespace {

Mask sigma_mask(const std::vector<Monomial>& mons, const std::vector<int>& sigma) {
    Mask a = 0;
    for (std::size_t i = 0; i < mons.size(); ++i)
        if (touches(mons[i], sigma)) a |= bit(static_cast<int>(i));
    return a;
}

void check_sigma(const std::vector<int>& sigma, int n) {
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] < 0 || sigma[i] >= n) throw InputError("stratum index out of range");
        if (i > 0 && sigma[i] <= sigma[i - 1]) throw InputError("stratum indices must be strictly increasing");
    }
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

TropPoly groebner_poly(const TruncIdeal& ideal, int d, const std::vector<int>& sigma) {
    check_sigma(sigma, ideal.num_vars());
    const VMatroid& m = ideal.layer(d);
    const auto mons = monomials_of_degree(ideal.num_vars(), d);
    const Mask a = sigma_mask(mons, sigma);
    std::vector<int> rest;
    for (int i = 0; i < static_cast<int>(mons.size()); ++i)
        if (!(a & bit(i))) rest.push_back(i);
    const VMatroid c = contract(m, a);
    if (c.valuation().empty()) throw DegenerateError("groebner_poly: contraction has no basis");
    TropPoly f(ideal.num_vars());
    for (const auto& [b, p] : c.valuation()) {
        Monomial e(static_cast<std::size_t>(ideal.num_vars()), 0);
        for (std::size_t j = 0; j < rest.size(); ++j)
            if (!(b & bit(static_cast<int>(j)))) e = multiply(e, mons[static_cast<std::size_t>(rest[j])]);
        f.add_term(e, p);
    }
    return f;
}

bool Fingerprint::has_loop() const {
    return std::any_of(loops.begin(), loops.end(), [](Mask l) { return l != 0; });
}

bool Fingerprint::is_monomial() const {
    return std::all_of(bases.begin(), bases.end(), [](const auto& b) { return b.size() == 1; });
}

Fingerprint fingerprint_at(const TruncIdeal& ideal, const Weight& w) {
    const TruncIdeal in = initial_ideal(ideal, w);
    Fingerprint fp;
    std::string text;
    for (int d = 0; d <= in.degree_bound(); ++d) {
        const OrdMatroid m = underlying(in.layer(d));
        fp.bases.push_back(m.bases());
        fp.loops.push_back(m.loops());
        text += std::to_string(d) + ':';
        for (Mask b : m.bases()) text += hex(b) + ',';
        text += ';';
    }
    fp.digest = hex(fnv1a(text));
    return fp;
}

std::size_t GroebnerStratum::fingerprint_classes() const {
    std::vector<std::string> digests;
    for (const auto& c : cells) digests.push_back(c.fingerprint.digest);
    std::sort(digests.begin(), digests.end());
    return static_cast<std::size_t>(std::unique(digests.begin(), digests.end()) - digests.begin());
}

const GroebnerStratum* GroebnerComplex::find(const std::vector<int>& sigma) const {
    for (const auto& s : strata)
        if (s.sigma == sigma) return &s;
    return nullptr;
}

std::vector<std::vector<int>> proper_strata(int num_vars) {
    if (num_vars > 20) throw SizeError("too many variables to enumerate strata");
    std::vector<std::vector<int>> out;
    for (int k = 0; k < num_vars; ++k)
        for_each_subset(num_vars, k, [&](Mask s) { out.push_back(mask_indices(s)); }, "strata");
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

GroebnerStratum groebner_stratum(const TruncIdeal& ideal, const std::vector<int>& sigma) {
    check_sigma(sigma, ideal.num_vars());
    const int n = ideal.num_vars();
    std::vector<Cell> cells;
    std::vector<int> coords;
    for (int d = 0; d <= ideal.degree_bound(); ++d) {
        const PolyComplex nc = normal_complex(groebner_poly(ideal, d, sigma), sigma);
        const Stratum& s = nc.strata.front();
        if (d == 0) {
            cells = s.cells;
            coords = s.coords;
            continue;
        }
        if (s.cells.size() == 1 && s.cells.front().eq.rows() == 0 && s.cells.front().ineq.rows() == 0) continue;
        cells = refine_cells(cells, s.cells, static_cast<int>(coords.size()));
    }
    GroebnerStratum out{sigma, coords, {}};
    for (auto& c : cells) {
        GroebnerCell g;
        g.fingerprint = fingerprint_at(ideal, embed(c.witness, coords, n));
        g.in_variety = !g.fingerprint.has_loop();
        c.label = g.fingerprint.digest;
        g.cell = std::move(c);
        out.cells.push_back(std::move(g));
    }
    return out;
}

GroebnerComplex groebner_complex(const TruncIdeal& ideal) {
    GroebnerComplex out{ideal.num_vars(), ideal.degree_bound(), {}};
    for (const auto& sigma : proper_strata(ideal.num_vars())) out.strata.push_back(groebner_stratum(ideal, sigma));
    return out;
}

PolyComplex variety(const GroebnerComplex& complex, Presentation presentation) {
    PolyComplex flat{complex.ambient, {}};
    for (const auto& s : complex.strata) {
        if (presentation == Presentation::Affine && std::find(s.sigma.begin(), s.sigma.end(), 0) != s.sigma.end())
            continue;
        Stratum st{s.sigma, s.coords, {}};
        for (const auto& c : s.cells)
            if (c.in_variety) st.cells.push_back(c.cell);
        flat.strata.push_back(std::move(st));
    }
    return quotient_lineality(flat, presentation == Presentation::Projective ? Normalize::LastFinite
                                                                             : Normalize::FirstFinite);
}

PolyComplex variety(const TruncIdeal& ideal, Presentation presentation) {
    return variety(groebner_complex(ideal), presentation);
}

bool same_variety(const TruncIdeal& a, const TruncIdeal& b) {
    if (a.num_vars() != b.num_vars()) throw InputError("same_variety: variable counts differ");
    const int n = a.num_vars();
    for (const auto& sigma : proper_strata(n)) {
        const auto ga = groebner_stratum(a, sigma);
        const auto gb = groebner_stratum(b, sigma);
        std::vector<Cell> ca;
        std::vector<Cell> cb;
        for (const auto& c : ga.cells) ca.push_back(c.cell);
        for (const auto& c : gb.cells) cb.push_back(c.cell);
        for (const auto& c : refine_cells(ca, cb, static_cast<int>(ga.coords.size()))) {
            const Weight w = embed(c.witness, ga.coords, n);
            if (fingerprint_at(a, w).has_loop() != fingerprint_at(b, w).has_loop()) return false;
        }
    }
    return true;
}

std::vector<TropPoly> tropical_basis(const TruncIdeal& ideal, const GroebnerComplex& complex) {
    std::vector<TropPoly> out;
    for (const auto& s : complex.strata) {
        for (const auto& c : s.cells) {
            if (c.in_variety) continue;
            const auto& fp = c.fingerprint;
            int d = 0;
            while (fp.loops[static_cast<std::size_t>(d)] == 0) ++d;
            const int u = mask_indices(fp.loops[static_cast<std::size_t>(d)]).front();
            const VMatroid& m = ideal.layer(d);
            const auto mons = monomials_of_degree(ideal.num_vars(), d);
            const Mask a = sigma_mask(mons, s.sigma);
            const Mask basis = (fp.bases[static_cast<std::size_t>(d)].front() & ~a) | lex_smallest_basis_of(m, a);
            TropPoly g = polynomial_of(fundamental_circuit(m, basis, u), ideal.num_vars(), d);
            if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<TropPoly> tropical_basis(const TruncIdeal& ideal) { return tropical_basis(ideal, groebner_complex(ideal)); }

std::string to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::Unit: return "unit";
        case CertificateKind::Nonempty: return "nonempty";
        case CertificateKind::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Certificate nullstellensatz(const TruncIdeal& ideal) {
    Certificate cert;
    for (int d = 0; d <= ideal.degree_bound(); ++d) {
        if (ideal.layer(d).rank() == 0) {
            cert.kind = CertificateKind::Unit;
            cert.degree = d;
            return cert;
        }
    }
    for (const auto& sigma : proper_strata(ideal.num_vars())) {
        const auto s = groebner_stratum(ideal, sigma);
        for (const auto& c : s.cells) {
            if (!c.in_variety) continue;
            cert.kind = CertificateKind::Nonempty;
            cert.witness = WitnessCell{s.sigma, s.coords, c.cell};
            return cert;
        }
    }
    return cert;
}

}  // namespace tropideal
