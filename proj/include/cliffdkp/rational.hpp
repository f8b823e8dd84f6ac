#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cliffdkp {

using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Canonical "p/q" or "p" form.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

}  // namespace cliffdkp
