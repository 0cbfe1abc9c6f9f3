#pragma once

// Exact rational scalars. All geometry in this library is computed over Q so
// that every predicate (intersection parity, general position, disjointness)
// is exact; there are no epsilons anywhere.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace prodembed {

using Rational = mpq_class;
using RationalPoint = std::vector<Rational>;

// Canonical text form "p/q", denominator always written (so "5" prints as
// "5/1"). This is the form used by the complex/geometry file formats.
std::string rational_to_text(const Rational& x);

// Parses "p/q" or a bare integer "p". Throws ParseError on malformed input
// or zero denominator.
Rational rational_from_text(const std::string& text);

std::string point_to_text(const RationalPoint& p);

} // namespace prodembed
