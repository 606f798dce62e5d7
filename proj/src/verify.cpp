#include "latticeq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace latticeq {

namespace {

// For a Lagrange-reduced basis, |i u + j v| >= (sqrt(3)/2) max(|i|,|j|) |u|
// (also with real coefficients), so lattice points that can interact within
// distance `range` of the fundamental domain have max(|i|,|j|) below this.
int window_for_range(double range, double shortest) {
  return 1 + static_cast<int>(std::ceil(2.0 / std::sqrt(3.0) * range / shortest));
}

void check_shortest(const Lattice2& R) {
  // Exhaustive shell assertion: nothing within coefficient range 8 may be
  // shorter than the reduced first vector.
  const double s = norm(R.u);
  for (int i = -8; i <= 8; ++i) {
    for (int j = -8; j <= 8; ++j) {
      if (i == 0 && j == 0) continue;
      if (norm(lattice_vector(R, i, j)) < s - 1e-12)
        throw std::logic_error("verify: reduced basis is not shortest in its shell");
    }
  }
}

struct Box {
  double xlo, xhi, ylo, yhi;
};

Box box_shift(const Box& b, Point2 t) {
  return {b.xlo + t.x, b.xhi + t.x, b.ylo + t.y, b.yhi + t.y};
}

Box box_meet(const Box& a, const Box& b) {
  return {std::max(a.xlo, b.xlo), std::min(a.xhi, b.xhi),
          std::max(a.ylo, b.ylo), std::min(a.yhi, b.yhi)};
}

double box_area(const Box& b) {
  return (b.xhi > b.xlo && b.yhi > b.ylo) ? (b.xhi - b.xlo) * (b.yhi - b.ylo)
                                          : 0.0;
}

// |(A u B) n ((A u B) + t)| by inclusion-exclusion over the four pairwise
// intersections; all intermediate sets are axis boxes, so this is exact.
double union_translate_overlap(const Box& A, const Box& B, Point2 t) {
  const Box As = box_shift(A, t), Bs = box_shift(B, t);
  const Box AB = box_meet(A, B);
  const Box AsBs = box_meet(As, Bs);
  const double pairs = box_area(box_meet(A, As)) + box_area(box_meet(A, Bs)) +
                       box_area(box_meet(B, As)) + box_area(box_meet(B, Bs));
  const double triples =
      box_area(box_meet(AB, As)) + box_area(box_meet(AB, Bs)) +
      box_area(box_meet(A, AsBs)) + box_area(box_meet(B, AsBs));
  const double quad = box_area(box_meet(AB, AsBs));
  return pairs - triples + quad;
}

}  // namespace

Certificate verify_packing(const ConvexPolygon& K, const Lattice2& L,
                           const VerifyOptions& opt) {
  Certificate cert;
  cert.mode = ArrangementMode::packing;
  const Lattice2 R = reduced_basis(L);
  check_shortest(R);
  const double s = norm(R.u);
  const double diam = polygon_diameter(K);
  const int W = opt.window_override > 0 ? opt.window_override
                                        : window_for_range(diam, s);
  cert.window_radius = W;
  cert.density = polygon_area(K) / std::abs(R.det);

  // Overlap with translate by w equals overlap by -w; search a half-plane
  // of coefficient pairs.
  double worst = 0.0;
  for (int j = 0; j <= W; ++j) {
    for (int i = (j == 0 ? 1 : -W); i <= W; ++i) {
      const Point2 w = lattice_vector(R, i, j);
      if (norm(w) > diam) continue;  // translates cannot reach each other
      worst = std::max(worst, intersection_area(K, translate(K, w)));
    }
  }
  cert.max_overlap_area = worst;
  cert.ok = worst <= opt.tol;
  return cert;
}

Certificate verify_covering(const ConvexPolygon& K, const Lattice2& L,
                            const VerifyOptions& opt) {
  if (opt.grid_n < 64)
    throw std::domain_error("verify_covering: grid_n must be >= 64");
  Certificate cert;
  cert.mode = ArrangementMode::covering;
  cert.grid_resolution = opt.grid_n;
  const Lattice2 R = reduced_basis(L);
  check_shortest(R);
  const double s = norm(R.u);
  const double m = max_vertex_norm(K);
  const int W = opt.window_override > 0 ? opt.window_override
                                        : window_for_range(m, s);
  cert.window_radius = W;
  cert.density = polygon_area(K) / std::abs(R.det);

  // Candidate translates, nearest first so covered samples exit early.
  std::vector<Point2> offsets;
  offsets.reserve(static_cast<size_t>(2 * W + 1) * (2 * W + 1));
  for (int i = -W; i <= W; ++i)
    for (int j = -W; j <= W; ++j) offsets.push_back(lattice_vector(R, i, j));
  std::sort(offsets.begin(), offsets.end(),
            [](const Point2& a, const Point2& b) { return dot(a, a) < dot(b, b); });

  const int n = opt.grid_n;
  long long uncovered = 0;
  double worst_d = 0.0;
  Point2 worst_p{};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double al = static_cast<double>(a) / n;
      const double be = static_cast<double>(b) / n;
      const Point2 p{al * R.u.x + be * R.v.x, al * R.u.y + be * R.v.y};
      bool hit = false;
      for (const Point2& w : offsets) {
        if (polygon_contains(K, p - w, opt.tol)) {
          hit = true;
          break;
        }
      }
      if (hit) continue;
      ++uncovered;
      double d = std::numeric_limits<double>::infinity();
      for (const Point2& w : offsets) d = std::min(d, distance_to_polygon(K, p - w));
      if (d > worst_d) {
        worst_d = d;
        worst_p = p;
      }
    }
  }
  cert.uncovered_fraction =
      static_cast<double>(uncovered) / (static_cast<double>(n) * n);
  cert.worst_distance = worst_d;
  cert.worst_point = worst_p;
  cert.ok = uncovered == 0;
  return cert;
}

Certificate verify_tiling(const ConvexPolygon& K, const Lattice2& L,
                          const VerifyOptions& opt) {
  const Certificate p = verify_packing(K, L, opt);
  const Certificate c = verify_covering(K, L, opt);
  Certificate t;
  t.mode = ArrangementMode::tiling;
  t.density = p.density;
  t.max_overlap_area = p.max_overlap_area;
  t.uncovered_fraction = c.uncovered_fraction;
  t.worst_point = c.worst_point;
  t.worst_distance = c.worst_distance;
  t.window_radius = std::max(p.window_radius, c.window_radius);
  t.grid_resolution = c.grid_resolution;
  const double area = polygon_area(K);
  const bool det_matches =
      std::abs(std::abs(L.det) - area) <= opt.tol * std::max(1.0, area);
  t.ok = p.ok && c.ok && det_matches;
  return t;
}

Certificate verify_step_tiling(double w1, double h1, double w2, double h2,
                               const Lattice2& L, const VerifyOptions& opt) {
  if (w1 < 0 || h1 < 0 || w2 < 0 || h2 < 0)
    throw std::domain_error("verify_step_tiling: negative box extent");
  Certificate cert;
  cert.mode = ArrangementMode::tiling;
  const Box A{0.0, w1, 0.0, h1};
  const Box B{0.0, w2, 0.0, h2};
  const double area = box_area(A) + box_area(B) - box_area(box_meet(A, B));

  const Lattice2 R = reduced_basis(L);
  check_shortest(R);
  const double diam = std::hypot(std::max(w1, w2), std::max(h1, h2));
  const int W = opt.window_override > 0 ? opt.window_override
                                        : window_for_range(diam, norm(R.u));
  cert.window_radius = W;
  cert.density = area / std::abs(R.det);

  double worst = 0.0;
  for (int j = 0; j <= W; ++j) {
    for (int i = (j == 0 ? 1 : -W); i <= W; ++i) {
      const Point2 w = lattice_vector(R, i, j);
      if (norm(w) > diam) continue;
      worst = std::max(worst, union_translate_overlap(A, B, w));
    }
  }
  cert.max_overlap_area = worst;
  // Zero pairwise overlap plus matching determinant forces zero gaps.
  cert.ok = worst <= opt.tol && std::abs(cert.density - 1.0) <= opt.tol;
  return cert;
}

}  // namespace latticeq
