#include "latticeq/staircase.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace latticeq {

namespace {

// Remove consecutive duplicates and "spikes" (a vertex whose incoming and
// outgoing edges point in exactly opposite directions), which arise when a
// nominal staircase vertex list degenerates (cut at 0 or 1, f value 0 or 1).
std::vector<Point2> clean_staircase(std::vector<Point2> vs, double tol = 1e-12) {
  bool changed = true;
  while (changed) {
    changed = false;
    // Consecutive duplicates, including the closing pair.
    std::vector<Point2> dd;
    for (const Point2& p : vs)
      if (dd.empty() || distance(dd.back(), p) > tol) dd.push_back(p);
    while (dd.size() >= 2 && distance(dd.front(), dd.back()) <= tol) dd.pop_back();
    if (dd.size() != vs.size()) changed = true;
    vs = std::move(dd);
    if (vs.size() < 3) break;
    // Spikes: zero-turn vertices where the boundary backtracks.
    std::vector<Point2> ds;
    const size_t n = vs.size();
    for (size_t i = 0; i < n; ++i) {
      const Point2 in = vs[i] - vs[(i + n - 1) % n];
      const Point2 out = vs[(i + 1) % n] - vs[i];
      if (std::abs(cross(in, out)) <= tol && dot(in, out) < 0.0) {
        changed = true;
        continue;
      }
      ds.push_back(vs[i]);
    }
    vs = std::move(ds);
  }
  if (vs.size() < 3) throw std::domain_error("staircase: degenerate (zero-area) polygon");
  return vs;
}

}  // namespace

std::vector<Point2> circumscribed_staircase(const Profile& f, double x) {
  if (x < -1e-12 || x > 1.0 + 1e-12)
    throw std::domain_error("circumscribed_staircase: cut outside [0, 1]");
  x = std::min(std::max(x, 0.0), 1.0);
  const double fx = profile_value(f, x);
  return clean_staircase({{0.0, 0.0}, {1.0, 0.0}, {1.0, fx}, {x, fx}, {x, 1.0}, {0.0, 1.0}});
}

std::vector<Point2> inscribed_staircase(const Profile& f, double x1, double x2) {
  if (x1 < -1e-12 || x2 > 1.0 + 1e-12 || x1 > x2 + 1e-12)
    throw std::domain_error("inscribed_staircase: cuts must satisfy 0 <= x1 <= x2 <= 1");
  x1 = std::min(std::max(x1, 0.0), 1.0);
  x2 = std::min(std::max(x2, x1), 1.0);
  const double f1 = profile_value(f, x1);
  const double f2 = profile_value(f, x2);
  return clean_staircase(
      {{0.0, 0.0}, {x2, 0.0}, {x2, f2}, {x1, f2}, {x1, f1}, {0.0, f1}});
}

double circumscribed_staircase_area(const Profile& f, double x) {
  return x + (1.0 - x) * profile_value(f, x);
}

double inscribed_staircase_area(const Profile& f, double x1, double x2) {
  return x1 * profile_value(f, x1) + (x2 - x1) * profile_value(f, x2);
}

Lattice2 circumscribed_staircase_lattice(const Profile& f, double x) {
  return make_lattice({x - 1.0, 1.0}, {x, profile_value(f, x)});
}

Lattice2 inscribed_staircase_lattice(const Profile& f, double x1, double x2) {
  return make_lattice({x1 - x2, profile_value(f, x1)}, {x1, profile_value(f, x2)});
}

}  // namespace latticeq
