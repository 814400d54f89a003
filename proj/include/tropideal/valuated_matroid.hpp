#pragma once

#include "tropideal/trop_scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropideal {

/// Subset of a ground set of at most 64 elements; bit i is ground element i.
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

inline Mask bit(int i) { return Mask{1} << i; }
int popcount(Mask m);
std::vector<int> mask_indices(Mask m);
Mask mask_of(const std::vector<int>& indices);
/// Lexicographic comparison of the sorted index lists.
bool mask_lex_less(Mask a, Mask b);

std::uint64_t binomial(int n, int k);

/// Calls f on every k-subset of {0..n-1} (Gosper order). Checks the enumeration cap first.
void for_each_subset(int n, int k, const std::function<void(Mask)>& f, const std::string& what);

/// Ordinary matroid given by its bases.
class OrdMatroid {
public:
    OrdMatroid() = default;
    OrdMatroid(std::vector<std::string> ground, int rank, std::vector<Mask> bases);

    const std::vector<std::string>& ground() const { return ground_; }
    int size() const { return static_cast<int>(ground_.size()); }
    int rank() const { return rank_; }
    /// Sorted by mask_lex_less.
    const std::vector<Mask>& bases() const { return bases_; }
    bool is_basis(Mask b) const;
    bool is_independent(Mask s) const;
    Mask loops() const;

    friend bool operator==(const OrdMatroid&, const OrdMatroid&) = default;

private:
    std::vector<std::string> ground_;
    int rank_ = 0;
    std::vector<Mask> bases_;
};

/// Circuits (minimal dependent sets) of an ordinary matroid, sorted.
std::vector<Mask> circuits(const OrdMatroid& m);

/// Valuated matroid with values in Q u {inf}. The valuation is stored sparsely
/// (absent r-subsets are infinite) and normalized so its minimum is 0.
class VMatroid {
public:
    VMatroid() = default;

    /// Validates sizes, requires one finite basis, normalizes additively.
    VMatroid(std::vector<std::string> ground, int rank, std::map<Mask, Rational> valuation);

    /// Trivially valued matroid with the given bases.
    static VMatroid from_bases(std::vector<std::string> ground, int rank, const std::vector<Mask>& bases);
    static VMatroid from(const OrdMatroid& m);

    const std::vector<std::string>& ground() const { return ground_; }
    int size() const { return static_cast<int>(ground_.size()); }
    int rank() const { return rank_; }
    const std::map<Mask, Rational>& valuation() const { return valuation_; }
    TropScalar value(Mask b) const;
    /// Finite-valued r-subsets in mask order.
    std::vector<Mask> bases() const;
    bool is_trivially_valued() const;

    friend bool operator==(const VMatroid&, const VMatroid&) = default;

private:
    std::vector<std::string> ground_;
    int rank_ = 0;
    std::map<Mask, Rational> valuation_;
};

OrdMatroid underlying(const VMatroid& m);

/// Coordinates indexed by the ground set; infinity allowed.
using VVector = std::vector<TropScalar>;

Mask support(const VVector& v);
/// Shifts so the minimum finite coordinate is 0.
VVector canonical(VVector v);

struct ExchangeViolation {
    Mask a_set;
    Mask b_set;
    int element;  // a in A \ B with no valid exchange partner
};

/// nullopt when p satisfies the valuated basis exchange axiom.
std::optional<ExchangeViolation> check_valuated_exchange(const VMatroid& m);

/// H(B, e)_{e'} = p(B + e - e') - p(B), canonicalized. Requires B a basis and e not in B.
VVector fundamental_circuit(const VMatroid& m, Mask basis, int e);

/// All circuits up to tropical scaling, canonical, sorted by support.
std::vector<VVector> circuits(const VMatroid& m);

/// p-perp(B) = p(E \ B).
VMatroid dual(const VMatroid& m);

/// Membership in the tropical linear space of vectors of m.
bool is_vector(const VMatroid& m, const VVector& v);

/// Bases minimizing p(B) - sum_{e in B} w_e.
OrdMatroid initial_matroid(const VMatroid& m, const std::vector<Rational>& w);

/// Rank of a subset in the underlying matroid.
int subset_rank(const VMatroid& m, Mask a);
/// Greedy (lexicographically smallest) basis of the subset a.
Mask lex_smallest_basis_of(const VMatroid& m, Mask a);

/// M / A on the ground E \ A (original relative order), q(B) = p(B u B_A).
VMatroid contract(const VMatroid& m, Mask a);

/// Appends the labels as coloops.
VMatroid coloop_extension(const VMatroid& m, const std::vector<std::string>& labels);
OrdMatroid coloop_extension(const OrdMatroid& m, const std::vector<std::string>& labels);

/// Same matroid with its ground set listed in `order` (a permutation of the labels).
OrdMatroid reorder(const OrdMatroid& m, const std::vector<std::string>& order);

}  // namespace tropideal
