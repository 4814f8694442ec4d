#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace wdc {

// Exact rational. GMP keeps mpq values canonical (q > 0, gcd(p, q) = 1) as
// long as every value entering through a string or a raw numerator/denominator
// pair is canonicalized, which make_scalar and parse_scalar do.
using Scalar = mpq_class;

Scalar make_scalar(long numerator, long denominator = 1);

/// Canonical text form "p/q"; q is always printed, so zero is "0/1".
std::string to_string(const Scalar& value);

/// Accepts "p/q" or "p" with an optional leading sign. Returns nullopt for
/// anything else, including a zero denominator.
std::optional<Scalar> parse_scalar(std::string_view text);

double to_double(const Scalar& value);

inline int sign(const Scalar& value) { return sgn(value); }

}  // namespace wdc
