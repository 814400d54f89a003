#pragma once

#include "tropideal/polyhedra.hpp"
#include "tropideal/tropical_ideal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropideal {

/// F^sigma_d: one term per basis B of M_d / Mon^sigma_d with coefficient p(B) and the
/// product of the monomials outside Mon^sigma_d and B as exponent; equal exponents
/// merged by min. Uses all num_vars variables (exponent 0 on sigma).
TropPoly groebner_poly(const TruncIdeal& ideal, int d, const std::vector<int>& sigma);

/// Initial ideal of a truncation at one weight, reduced to its bases per degree.
struct Fingerprint {
    std::vector<std::vector<Mask>> bases;  // per degree, sorted
    std::vector<Mask> loops;               // per degree
    std::string digest;

    bool has_loop() const;
    /// Every layer has a single basis.
    bool is_monomial() const;
};

Fingerprint fingerprint_at(const TruncIdeal& ideal, const Weight& w);

struct GroebnerCell {
    Cell cell;
    Fingerprint fingerprint;
    bool in_variety = false;
};

struct GroebnerStratum {
    std::vector<int> sigma;
    std::vector<int> coords;
    std::vector<GroebnerCell> cells;

    std::size_t fingerprint_classes() const;
};

struct GroebnerComplex {
    int ambient = 0;
    int degree_bound = 0;
    std::vector<GroebnerStratum> strata;

    const GroebnerStratum* find(const std::vector<int>& sigma) const;
};

/// All proper strata sigma of R-bar^{n+1} (the all-infinity point is excluded),
/// by size then lexicographically.
std::vector<std::vector<int>> proper_strata(int num_vars);

/// Common refinement over d <= D of the normal complexes of F^sigma_d, one stratum
/// each; cells carry the fingerprint of their witness point.
GroebnerStratum groebner_stratum(const TruncIdeal& ideal, const std::vector<int>& sigma);
GroebnerComplex groebner_complex(const TruncIdeal& ideal);

enum class Presentation { Projective, Affine };

/// In-variety cells only. Projective: modulo R.1 with the last finite coordinate set
/// to 0. Affine: strata with x0 finite, presented on the chart w0 = 0.
/// Cell labels are fingerprint digests.
PolyComplex variety(const TruncIdeal& ideal, Presentation presentation);
PolyComplex variety(const GroebnerComplex& complex, Presentation presentation);

/// In-variety flags agree on every cell of the common refinement of both Groebner complexes.
bool same_variety(const TruncIdeal& a, const TruncIdeal& b);

/// Circuits separating every non-variety cell, deduplicated, in discovery order.
std::vector<TropPoly> tropical_basis(const TruncIdeal& ideal);
std::vector<TropPoly> tropical_basis(const TruncIdeal& ideal, const GroebnerComplex& complex);

enum class CertificateKind { Unit, Nonempty, Inconclusive };

struct WitnessCell {
    std::vector<int> sigma;
    std::vector<int> coords;
    Cell cell;
};

struct Certificate {
    CertificateKind kind = CertificateKind::Inconclusive;
    std::optional<int> degree;             // unit: every monomial of this degree is in I
    std::optional<WitnessCell> witness;    // nonempty: a cell of the variety
};

std::string to_string(CertificateKind k);

Certificate nullstellensatz(const TruncIdeal& ideal);

}  // namespace tropideal
