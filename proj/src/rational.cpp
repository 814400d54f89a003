#include "tropideal/rational.hpp"

#include "tropideal/errors.hpp"

#include <atomic>
#include <cctype>

namespace tropideal {

namespace {

std::atomic<std::uint64_t> g_cap{5'000'000};

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("malformed rational '" + std::string(whole) + "'");
    Integer v{std::string(s)};
    return negative ? Integer(-v) : v;
}

}  // namespace

std::uint64_t enumeration_cap() { return g_cap.load(); }

void set_enumeration_cap(std::uint64_t cap) {
    if (cap < 1) throw InputError("enumeration cap must be at least 1");
    g_cap.store(cap);
}

void require_within_cap(std::uint64_t count, const std::string& what) {
    if (count > enumeration_cap())
        throw SizeError(what + ": " + std::to_string(count) + " items exceed the enumeration cap of " +
                        std::to_string(enumeration_cap()));
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const Integer num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("malformed rational '" + std::string(text) + "'");
    const Integer den(std::string{den_text});
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& q) {
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

long padic_valuation(const Rational& q, long prime) {
    if (q == 0) throw PreconditionError("p-adic valuation of zero");
    Integer num = abs(numerator(q));
    Integer den = denominator(q);
    long v = 0;
    while (num % prime == 0) {
        num /= prime;
        ++v;
    }
    while (den % prime == 0) {
        den /= prime;
        --v;
    }
    return v;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Integer lcm_of_denominators(const Rational* begin, const Rational* end) {
    Integer l = 1;
    for (const Rational* it = begin; it != end; ++it) l = boost::multiprecision::lcm(l, denominator(*it));
    return l;
}

}  // namespace tropideal
