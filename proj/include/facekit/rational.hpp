#pragma once

// Exact rational scalars. Every value is kept reduced (gcd(num, den) = 1,
// den > 0) so structural equality is value equality and containers can use
// ordinary ordering for deduplication. There are no tolerances anywhere in
// this library: a comparison is exact or it does not compile.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace facekit {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Violated caller-side precondition (dimension mismatch, index out of
/// range, operation on an object that does not satisfy the stated `pre:`).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A condition the library itself promises can never happen. Seeing one of
/// these means a bug in the kernel, not in the caller's input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Parse "p" or "p/q" (optional leading '-' on p, q a positive integer).
/// Returns std::nullopt on malformed input; never throws. The result is
/// always canonical: construction goes through the integer-pair constructor,
/// which reduces, because the string constructor of the backing type does
/// not.
inline std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    const std::size_t slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
    const std::string_view den_part = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);

    auto parse_int = [](std::string_view s, bool allow_sign) -> std::optional<Integer> {
        if (s.empty()) return std::nullopt;
        bool negative = false;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) {
            negative = s[0] == '-';
            s.remove_prefix(1);  // the backing type's reader takes bare digits
        }
        if (s.empty()) return std::nullopt;
        for (char c : s)
            if (c < '0' || c > '9') return std::nullopt;
        Integer value{std::string(s)};
        return negative ? Integer(-value) : value;
    };

    const auto num = parse_int(num_part, true);
    const auto den = parse_int(den_part, false);
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& value) { return value.str(); }

inline int sign(const Rational& value) { return value.sign(); }

}  // namespace facekit
