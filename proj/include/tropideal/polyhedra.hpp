#pragma once

#include "tropideal/trop_poly.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace tropideal {

/// Closed rational polyhedron inside one stratum of R-bar^n. Every row is (a | b)
/// over the stratum's coordinates: a.w = b for `eq`, a.w <= b for `ineq`.
struct Cell {
    MatrixQ eq;
    MatrixQ ineq;
    std::string label;
    int dim = -1;
    VectorQ witness;  // relative-interior point
};

struct Stratum {
    std::vector<int> sigma;   // infinite coordinates
    std::vector<int> coords;  // coordinates the columns refer to
    std::vector<Cell> cells;
};

struct PolyComplex {
    int ambient = 0;
    std::vector<Stratum> strata;

    /// nullptr when sigma is not present.
    const Stratum* find(const std::vector<int>& sigma) const;
};

/// Indices of {0..n-1} not in sigma.
std::vector<int> finite_coords(int n, const std::vector<int>& sigma);

/// Primitive integer rows, duplicates and trivially true rows removed.
/// Equalities are also sign-normalized (first nonzero coefficient positive).
MatrixQ canonical_rows(const MatrixQ& rows, bool equality);

struct Interior {
    int dim;
    VectorQ point;
};

/// Dimension and a relative-interior point of {eq, ineq} in R^m, nullopt when empty.
/// Implied equalities are detected through the duals of the slack LP.
std::optional<Interior> relative_interior(const MatrixQ& eq, const MatrixQ& ineq, int m);

/// A point with every inequality strict, if any.
std::optional<VectorQ> strict_point(const MatrixQ& eq, const MatrixQ& ineq, int m);

/// -1 for an empty cell.
int feasible_dim(const MatrixQ& eq, const MatrixQ& ineq, int m);

bool contains_point(const Cell& c, const VectorQ& w);
bool in_relative_interior(const Cell& c, const VectorQ& w);

/// Random rational point of the relative interior near the witness.
VectorQ sample_interior(const Cell& c, std::mt19937_64& rng);

/// Weight in R-bar^n with infinity on sigma and w on `coords`.
Weight embed(const VectorQ& w, const std::vector<int>& coords, int n);

/// "x0 + x1*x2", or "inf" for an empty tie set.
std::string tie_label(const std::vector<Monomial>& ties);

/// Normal complex of f on the stratum sigma; cells are labeled by their tie sets.
/// f must have no term divisible by a variable in sigma.
PolyComplex normal_complex(const TropPoly& f, const std::vector<int>& sigma);

/// Nonempty intersections of relatively open cells; labels joined by " | ".
std::vector<Cell> refine_cells(const std::vector<Cell>& a, const std::vector<Cell>& b, int m);
PolyComplex refine(const std::vector<PolyComplex>& complexes);

enum class Normalize { LastFinite, FirstFinite };

/// Rewrites cells modulo R.1 by setting one finite coordinate to 0. Drops strata
/// without finite coordinates. Throws InvariantError on a row not invariant under R.1.
PolyComplex quotient_lineality(const PolyComplex& c, Normalize which = Normalize::LastFinite);

/// "A.w <= b, C.w = d" in reduced rationals, one row per line.
std::string format_cell(const Cell& c, const std::vector<int>& coords);

}  // namespace tropideal
