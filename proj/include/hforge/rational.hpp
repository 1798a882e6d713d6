#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hforge {

// Exact arithmetic backbone. Rationals are kept canonical at all times:
// reduced, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den, reduced. den must be nonzero.
Rational frac(long num, long den = 1);

// Accepts "p", "p/q", optional sign, arbitrary precision.
Rational rational_from_string(const std::string& s);

// Always emits an explicit denominator: "-7/8", "0/1", "3/1".
std::string rational_to_string(const Rational& r);

bool is_integral(const Rational& r);

// z = s^2 * f with f squarefree. Requires z >= 1.
void split_square(const Integer& z, Integer& square_root_part, Integer& squarefree_part);

// base^exp with negative exponents allowed (base != 0 then).
Rational pow_rational(long base, long exp);

// Renders sqrt(value_sq) the way the catalogue prints minor values:
// "0", "2", "√3", "2√3", "(3/2)√5". value_sq must be >= 0.
std::string render_sqrt(const Rational& value_sq);

} // namespace hforge
