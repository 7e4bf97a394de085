#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace aromatic {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Accepts "p/q" or "p" (optional leading '-'); throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Renders as "p/q" with q >= 1, including integers ("3/1").
std::string format_rational(const Rational& value);

}  // namespace aromatic
