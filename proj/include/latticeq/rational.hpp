#pragma once

#include <gmpxx.h>

#include <string>

namespace latticeq {

using Rational = mpq_class;

// Accepts "p/q", integers, and decimal strings like "0.55" (converted exactly).
Rational parse_rational(const std::string& text);
std::string rational_string(const Rational& r);
double to_double(const Rational& r);

}  // namespace latticeq
