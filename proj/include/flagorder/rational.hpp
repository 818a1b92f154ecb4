#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flagorder {

using Integer = mpz_class;
/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
Rat make_rat(const Integer& num, const Integer& den);

/// "3", "-1/2".
std::string to_string(const Rat& r);

/// Parses "n" or "n/d" with an optional leading sign.
Rat parse_rat(std::string_view text);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace flagorder
