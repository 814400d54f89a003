#pragma once

#include "tropideal/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace tropideal {

/// Element of the min-plus semiring over Q: a rational or +infinity.
/// Tropical sum is min, tropical product is rational addition; infinity is the
/// additive identity and absorbs under the product.
class TropScalar {
public:
    TropScalar() = default;  // infinity
    TropScalar(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit by design of the algebra
    TropScalar(long v) : value_(Rational(v)) {}       // NOLINT

    static TropScalar infinity() { return TropScalar(); }
    static TropScalar zero() { return TropScalar(0L); }  // multiplicative identity

    bool is_inf() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }
    /// Requires is_finite().
    const Rational& value() const;

    friend bool operator==(const TropScalar& a, const TropScalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b);

private:
    std::optional<Rational> value_;
};

/// Tropical sum (min).
TropScalar oplus(const TropScalar& a, const TropScalar& b);
/// Tropical product (+, absorbing infinity).
TropScalar otimes(const TropScalar& a, const TropScalar& b);

/// "inf" or canonical "p/q".
std::string format_scalar(const TropScalar& s);
TropScalar parse_scalar(std::string_view text);

}  // namespace tropideal
