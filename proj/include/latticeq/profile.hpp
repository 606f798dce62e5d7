#pragma once

#include <string>
#include <vector>

namespace latticeq {

// Boundary profile of a convex disk K_f = {(x, y) : 0 <= x <= 1, 0 <= y <= f(x)}.
// Convexity of the disk requires f concave; the disk definition further
// requires f non-increasing with f(0) = 1 and f(1) >= 0.
struct Profile {
  enum class Kind { polynomial, piecewise_linear };
  Kind kind = Kind::polynomial;
  // polynomial: coefficients c0 + c1*x + c2*x^2 + ...
  std::vector<double> coefficients;
  // piecewise_linear: knots strictly increasing from 0 to 1 with their values.
  std::vector<double> knots;
  std::vector<double> values;
};

// Validate and build. Throws std::domain_error when the data does not
// describe a convex disk: f(0) must equal 1 (tol 1e-12), f(1) >= -1e-12,
// f non-increasing (tol 1e-9), and f concave (polynomial: second
// differences <= 1e-9 on a 10^4-point grid; piecewise linear: segment
// slopes non-increasing within 1e-9).
Profile make_polynomial_profile(std::vector<double> coefficients);
Profile make_pwl_profile(std::vector<double> knots, std::vector<double> values);

// Accepts "poly:c0,c1,..." and "pwl:x0:y0,x1:y1,...".
Profile parse_profile(const std::string& text);
std::string profile_string(const Profile& f);

double profile_value(const Profile& f, double x);
// Integral of f over [0, 1], i.e. the area of K_f.
double area_under(const Profile& f);
// Breakpoints an optimizer must visit: {0, 1} plus interior knots of
// piecewise-linear profiles.
std::vector<double> profile_knots(const Profile& f);

}  // namespace latticeq
