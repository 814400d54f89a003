#pragma once

#include "tropideal/trop_poly.hpp"
#include "tropideal/valuated_matroid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropideal {

enum class CoefficientMode { Rational, Boolean };

/// Homogeneous tropical ideal truncated at degree D: one valuated matroid per
/// degree d <= D, with ground set Mon_d in canonical order.
class TruncIdeal {
public:
    TruncIdeal() = default;
    /// Validates that layer d lives on the labels of Mon_d (and is 0/inf valued in Boolean mode).
    TruncIdeal(int num_vars, CoefficientMode mode, std::vector<VMatroid> layers);

    int num_vars() const { return num_vars_; }
    int degree_bound() const { return static_cast<int>(layers_.size()) - 1; }
    CoefficientMode mode() const { return mode_; }
    const std::vector<VMatroid>& layers() const { return layers_; }
    /// Throws PreconditionError for d outside [0, D].
    const VMatroid& layer(int d) const;

    friend bool operator==(const TruncIdeal&, const TruncIdeal&) = default;

private:
    int num_vars_ = 1;
    CoefficientMode mode_ = CoefficientMode::Rational;
    std::vector<VMatroid> layers_;
};

/// Labels of Mon_d in canonical order.
std::vector<std::string> monomial_labels(int num_vars, int d);

// --- classical input --------------------------------------------------------------

/// Polynomial with rational coefficients (zero coefficients are not stored).
struct ClassicalPoly {
    int num_vars = 1;
    std::map<Monomial, Rational, GrlexBefore> terms;

    bool is_homogeneous() const;
    int degree() const;  // requires nonempty
};

enum class ValuationKind { Trivial, PAdic };

struct ClassicalValuation {
    ValuationKind kind = ValuationKind::Trivial;
    long prime = 0;

    /// val(q): infinity for q = 0.
    TropScalar operator()(const Rational& q) const;
};

struct ClassicalInput {
    int num_vars = 1;
    std::vector<ClassicalPoly> generators;
    ClassicalValuation valuation;
};

/// Rows x^u * g_i for every generator and every monomial x^u of complementary degree;
/// columns are Mon_d in canonical order.
MatrixQ macaulay_matrix(const ClassicalInput& input, int d);

/// Valuated matroid whose vectors are trop(row space of `rows`) over the given columns.
/// Rank is the corank of `rows`.
VMatroid tropicalize_subspace(const MatrixQ& rows, const std::vector<std::string>& labels,
                              const ClassicalValuation& val);

TruncIdeal tropicalize(const ClassicalInput& input, int degree_bound);

/// Homogeneous ideal of the point a in tropical projective space. Each layer has
/// p({x^u}) = a.u and the monomials with a.u = inf as loops.
TruncIdeal point_ideal(const Weight& a, int degree_bound);

/// The non-realizable family: M_d has rank d+1 and p_d(B) = 0 exactly when every
/// degree-k monomial divides at most d-k+1 elements of B. n+1 variables, n >= 2.
TruncIdeal nonrealizable_ideal(int n, int degree_bound);

struct CompatibilityViolation {
    int degree;    // d, the violation is between layers d and d+1
    int variable;  // i
    Mask u_set;    // U in Mon_d
    Mask v_set;    // V in Mon_{d+1}
};

std::optional<CompatibilityViolation> check_compatibility(const TruncIdeal& ideal);

int hilbert(const TruncIdeal& ideal, int d);

/// Coefficient vector of a homogeneous f of degree d over Mon_d.
VVector coefficient_vector(const TropPoly& f, int d);
/// Inverse of coefficient_vector.
TropPoly polynomial_of(const VVector& v, int num_vars, int d);

bool contains(const TruncIdeal& ideal, const TropPoly& f);

/// Boolean initial ideal in_w(I), layer by layer.
TruncIdeal initial_ideal(const TruncIdeal& ideal, const Weight& w);

/// Coefficient-forgetting image: every layer replaced by its underlying matroid.
TruncIdeal boolean_image(const TruncIdeal& ideal);

/// V(a) is contained in V(b): every circuit of a is a vector of b.
bool layer_contained(const VMatroid& a, const VMatroid& b);

enum class Comparison { Equal, StrictSubset, StrictSuperset, Incomparable };

std::string to_string(Comparison c);

struct CompareReport {
    Comparison overall = Comparison::Equal;
    std::vector<Comparison> per_degree;
    std::vector<int> hilbert_left;
    std::vector<int> hilbert_right;
    int equal_through = -1;  // largest d with layers equal in every degree <= d
};

/// Throws InvariantError if an inclusion with equal ranks is ever strict.
CompareReport compare(const TruncIdeal& left, const TruncIdeal& right);

// --- affine ideals ------------------------------------------------------------------

/// Affine truncation: layer d lives on Mon_{<=d} of `num_vars` variables.
struct AffineIdeal {
    int num_vars = 1;
    std::vector<VMatroid> layers;
};

/// Affine ideal of a point a in R^n: rank-1 layers with p({x^u}) = a.u.
AffineIdeal affine_point_ideal(const std::vector<Rational>& a, int degree_bound);
/// Affine unit ideal: every layer has rank 0.
AffineIdeal affine_unit_ideal(int num_vars, int degree_bound);

/// Homogenization through x^u -> x0^{d-|u|} x^u on Mon_{<=d}; adds the first variable.
TruncIdeal homogenize_ideal(const AffineIdeal& ideal);

}  // namespace tropideal
