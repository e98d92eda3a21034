#ifndef HFG_RATIONAL_HPP
#define HFG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hfg {

// mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as every constructor path goes through canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a" or "a/b". Throws ParseError on malformed input or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den", including integers ("3/1").
std::string to_fraction_string(const Rational& q);

/// "num" for integers, "num/den" otherwise.
std::string to_compact_string(const Rational& q);

Rational make_rational(long num, long den = 1);

} // namespace hfg

#endif
