#include "latticeq/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace latticeq {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::domain_error("parse_rational: empty string");

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos)
      throw std::domain_error("parse_rational: mixed decimal and fraction");
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::domain_error("parse_rational: bad decimal \"" + text + "\"");
    mpz_class num;
    if (num.set_str(digits, 10) != 0)
      throw std::domain_error("parse_rational: bad decimal \"" + text + "\"");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::domain_error("parse_rational: bad rational \"" + text + "\"");
  if (r.get_den() == 0) throw std::domain_error("parse_rational: zero denominator");
  r.canonicalize();
  return r;
}

std::string rational_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace latticeq
