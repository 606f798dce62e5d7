#include "latticeq/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace latticeq {

namespace {

double poly_eval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

void validate_common(const Profile& f) {
  const double f0 = profile_value(f, 0.0);
  const double f1 = profile_value(f, 1.0);
  if (std::abs(f0 - 1.0) > 1e-12)
    throw std::domain_error("profile: f(0) must equal 1");
  if (f1 < -1e-12) throw std::domain_error("profile: f(1) must be >= 0");
}

}  // namespace

Profile make_polynomial_profile(std::vector<double> coefficients) {
  if (coefficients.empty())
    throw std::domain_error("profile: polynomial needs at least one coefficient");
  Profile f;
  f.kind = Profile::Kind::polynomial;
  f.coefficients = std::move(coefficients);
  validate_common(f);
  // Monotonicity and concavity on a dense grid: f non-increasing and second
  // differences non-positive (concave f <=> convex disk K_f).
  const int n = 10000;
  const double h = 1.0 / n;
  double prev2 = poly_eval(f.coefficients, 0.0);
  double prev1 = poly_eval(f.coefficients, h);
  if (prev1 > prev2 + 1e-9) throw std::domain_error("profile: f must be non-increasing");
  for (int i = 2; i <= n; ++i) {
    const double cur = poly_eval(f.coefficients, i * h);
    if (cur > prev1 + 1e-9) throw std::domain_error("profile: f must be non-increasing");
    if (cur - 2.0 * prev1 + prev2 > 1e-9)
      throw std::domain_error("profile: f must be concave (convex disk)");
    prev2 = prev1;
    prev1 = cur;
  }
  return f;
}

Profile make_pwl_profile(std::vector<double> knots, std::vector<double> values) {
  if (knots.size() != values.size() || knots.size() < 2)
    throw std::domain_error("profile: piecewise-linear needs matching knots/values, >= 2");
  if (std::abs(knots.front()) > 1e-12 || std::abs(knots.back() - 1.0) > 1e-12)
    throw std::domain_error("profile: knots must run from 0 to 1");
  for (size_t i = 1; i < knots.size(); ++i)
    if (knots[i] <= knots[i - 1] + 1e-15)
      throw std::domain_error("profile: knots must be strictly increasing");
  Profile f;
  f.kind = Profile::Kind::piecewise_linear;
  f.knots = std::move(knots);
  f.values = std::move(values);
  validate_common(f);
  double prev_slope = std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < f.knots.size(); ++i) {
    if (f.values[i] > f.values[i - 1] + 1e-9)
      throw std::domain_error("profile: f must be non-increasing");
    const double slope = (f.values[i] - f.values[i - 1]) / (f.knots[i] - f.knots[i - 1]);
    if (slope > prev_slope + 1e-9)
      throw std::domain_error("profile: slopes must be non-increasing (convex disk)");
    prev_slope = slope;
  }
  return f;
}

namespace {

double parse_profile_number(const std::string& token, const char* what) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw std::domain_error(std::string("profile: cannot parse ") + what + " '" + token + "'");
  }
  if (pos != token.size())
    throw std::domain_error(std::string("profile: cannot parse ") + what + " '" + token + "'");
  return v;
}

}  // namespace

Profile parse_profile(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::domain_error("profile: expected \"poly:...\" or \"pwl:...\"");
  const std::string head = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  if (head == "poly") {
    std::vector<double> coeffs;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ','))
      coeffs.push_back(parse_profile_number(item, "coefficient"));
    if (coeffs.empty()) throw std::domain_error("profile: empty coefficient list");
    return make_polynomial_profile(std::move(coeffs));
  }
  if (head == "pwl") {
    std::vector<double> knots, values;
    std::stringstream ss(body);
    std::string pair;
    while (std::getline(ss, pair, ',')) {
      const auto sep = pair.find(':');
      if (sep == std::string::npos)
        throw std::domain_error("profile: pwl entries must be x:y pairs");
      knots.push_back(parse_profile_number(pair.substr(0, sep), "knot"));
      values.push_back(parse_profile_number(pair.substr(sep + 1), "value"));
    }
    return make_pwl_profile(std::move(knots), std::move(values));
  }
  throw std::domain_error("profile: unknown kind \"" + head + "\"");
}

std::string profile_string(const Profile& f) {
  std::ostringstream out;
  out.precision(17);
  if (f.kind == Profile::Kind::polynomial) {
    out << "poly:";
    for (size_t i = 0; i < f.coefficients.size(); ++i) {
      if (i) out << ',';
      out << f.coefficients[i];
    }
  } else {
    out << "pwl:";
    for (size_t i = 0; i < f.knots.size(); ++i) {
      if (i) out << ',';
      out << f.knots[i] << ':' << f.values[i];
    }
  }
  return out.str();
}

double profile_value(const Profile& f, double x) {
  if (f.kind == Profile::Kind::polynomial) return poly_eval(f.coefficients, x);
  const auto& k = f.knots;
  if (x <= k.front()) return f.values.front();
  if (x >= k.back()) return f.values.back();
  const auto it = std::upper_bound(k.begin(), k.end(), x);
  const size_t i = static_cast<size_t>(it - k.begin());
  const double t = (x - k[i - 1]) / (k[i] - k[i - 1]);
  return f.values[i - 1] + t * (f.values[i] - f.values[i - 1]);
}

double area_under(const Profile& f) {
  if (f.kind == Profile::Kind::polynomial) {
    double a = 0.0;
    for (size_t i = 0; i < f.coefficients.size(); ++i)
      a += f.coefficients[i] / static_cast<double>(i + 1);
    return a;
  }
  double a = 0.0;
  for (size_t i = 1; i < f.knots.size(); ++i)
    a += 0.5 * (f.values[i - 1] + f.values[i]) * (f.knots[i] - f.knots[i - 1]);
  return a;
}

std::vector<double> profile_knots(const Profile& f) {
  if (f.kind == Profile::Kind::polynomial) return {0.0, 1.0};
  return f.knots;
}

}  // namespace latticeq
