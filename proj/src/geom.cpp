#include "latticeq/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace latticeq {

double norm(Point2 p) { return std::hypot(p.x, p.y); }
double distance(Point2 a, Point2 b) { return norm(a - b); }

Lattice2 make_lattice(Point2 u, Point2 v, double degenerate_tol) {
  const double det = cross(u, v);
  const double scale = std::max({norm(u) * norm(v), 1.0});
  if (std::abs(det) <= degenerate_tol * scale)
    throw std::domain_error("make_lattice: basis vectors are (nearly) parallel");
  return Lattice2{u, v, det};
}

Point2 lattice_vector(const Lattice2& L, long long i, long long j) {
  return {static_cast<double>(i) * L.u.x + static_cast<double>(j) * L.v.x,
          static_cast<double>(i) * L.u.y + static_cast<double>(j) * L.v.y};
}

Lattice2 reduced_basis(const Lattice2& L) {
  Point2 u = L.u, v = L.v;
  for (int iter = 0; iter < 64; ++iter) {
    if (dot(u, u) > dot(v, v)) std::swap(u, v);
    const double m = std::round(dot(u, v) / dot(u, u));
    if (m == 0.0) break;
    const Point2 w = v - m * u;
    if (dot(w, w) >= dot(v, v)) break;  // no progress possible (fp guard)
    v = w;
  }
  if (dot(u, u) > dot(v, v)) std::swap(u, v);
  return Lattice2{u, v, cross(u, v)};
}

namespace {

double signed_area(const std::vector<Point2>& vs) {
  double s = 0.0;
  const size_t n = vs.size();
  for (size_t i = 0; i < n; ++i) {
    const Point2& a = vs[i];
    const Point2& b = vs[(i + 1) % n];
    s += cross(a, b);
  }
  return 0.5 * s;
}

}  // namespace

ConvexPolygon make_polygon(std::vector<Point2> vertices, double collinear_tol) {
  // Drop consecutive duplicates (including the wrap-around pair).
  std::vector<Point2> vs;
  for (const Point2& p : vertices) {
    if (vs.empty() || distance(vs.back(), p) > collinear_tol) vs.push_back(p);
  }
  while (vs.size() >= 2 && distance(vs.front(), vs.back()) <= collinear_tol) vs.pop_back();
  if (vs.size() < 3) throw std::domain_error("make_polygon: fewer than 3 distinct vertices");

  if (signed_area(vs) < 0.0) std::reverse(vs.begin(), vs.end());

  double scale = 0.0;
  for (const Point2& p : vs) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  scale = std::max(scale, 1.0);
  const double tol = collinear_tol * scale * scale;

  const size_t n = vs.size();
  for (size_t i = 0; i < n; ++i) {
    const Point2 e1 = vs[(i + 1) % n] - vs[i];
    const Point2 e2 = vs[(i + 2) % n] - vs[(i + 1) % n];
    if (cross(e1, e2) < -tol)
      throw std::domain_error("make_polygon: vertex list is not convex");
  }
  return ConvexPolygon{std::move(vs)};
}

double polygon_area(const ConvexPolygon& P) { return std::abs(signed_area(P.vertices)); }

double ring_area(const std::vector<Point2>& ring) { return std::abs(signed_area(ring)); }

double polygon_diameter(const ConvexPolygon& P) {
  double d = 0.0;
  const size_t n = P.vertices.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      d = std::max(d, distance(P.vertices[i], P.vertices[j]));
  return d;
}

double max_vertex_norm(const ConvexPolygon& P) {
  double m = 0.0;
  for (const Point2& p : P.vertices) m = std::max(m, norm(p));
  return m;
}

ConvexPolygon translate(const ConvexPolygon& P, Point2 t) {
  ConvexPolygon Q = P;
  for (Point2& p : Q.vertices) p = p + t;
  return Q;
}

bool polygon_contains(const ConvexPolygon& P, Point2 p, double eps) {
  const size_t n = P.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const Point2& a = P.vertices[i];
    const Point2& b = P.vertices[(i + 1) % n];
    const Point2 e = b - a;
    const double len = norm(e);
    if (len == 0.0) continue;
    if (cross(e, p - a) < -eps * len) return false;
  }
  return true;
}

namespace {

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 e = b - a;
  const double len2 = dot(e, e);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, e) / len2, 0.0, 1.0);
  return distance(p, a + t * e);
}

}  // namespace

double distance_to_polygon(const ConvexPolygon& P, Point2 p) {
  if (polygon_contains(P, p)) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  const size_t n = P.vertices.size();
  for (size_t i = 0; i < n; ++i)
    d = std::min(d, point_segment_distance(p, P.vertices[i], P.vertices[(i + 1) % n]));
  return d;
}

std::optional<ConvexPolygon> convex_intersection(const ConvexPolygon& P,
                                                 const ConvexPolygon& Q,
                                                 double empty_tol) {
  // Clip Q successively by each (counterclockwise) edge halfplane of P.
  std::vector<Point2> poly = Q.vertices;
  const size_t np = P.vertices.size();
  for (size_t i = 0; i < np && !poly.empty(); ++i) {
    const Point2 a = P.vertices[i];
    const Point2 b = P.vertices[(i + 1) % np];
    const Point2 e = b - a;
    std::vector<Point2> next;
    next.reserve(poly.size() + 1);
    const size_t m = poly.size();
    for (size_t j = 0; j < m; ++j) {
      const Point2 cur = poly[j];
      const Point2 prv = poly[(j + m - 1) % m];
      const double sc = cross(e, cur - a);
      const double sp = cross(e, prv - a);
      if (sc >= 0.0) {
        if (sp < 0.0) {
          const double t = sp / (sp - sc);
          next.push_back(prv + t * (cur - prv));
        }
        next.push_back(cur);
      } else if (sp >= 0.0) {
        const double t = sp / (sp - sc);
        next.push_back(prv + t * (cur - prv));
      }
    }
    poly = std::move(next);
  }
  // Clipping output of two convex counterclockwise regions is convex and
  // counterclockwise; dedupe near-coincident vertices and keep the rest.
  std::vector<Point2> vs;
  for (const Point2& p : poly)
    if (vs.empty() || distance(vs.back(), p) > 1e-14) vs.push_back(p);
  while (vs.size() >= 2 && distance(vs.front(), vs.back()) <= 1e-14) vs.pop_back();
  if (vs.size() < 3) return std::nullopt;
  if (std::abs(signed_area(vs)) < empty_tol) return std::nullopt;
  return ConvexPolygon{std::move(vs)};
}

double intersection_area(const ConvexPolygon& P, const ConvexPolygon& Q) {
  const auto R = convex_intersection(P, Q, 0.0);
  return R ? polygon_area(*R) : 0.0;
}

Point2 apply(const AffineMap& M, Point2 p) {
  return {M.a * p.x + M.b * p.y + M.shift.x, M.c * p.x + M.d * p.y + M.shift.y};
}

double linear_det(const AffineMap& M) { return M.a * M.d - M.b * M.c; }

AffineMap inverse(const AffineMap& M) {
  const double det = linear_det(M);
  if (std::abs(det) < 1e-300) throw std::domain_error("inverse: singular affine map");
  AffineMap R;
  R.a = M.d / det;
  R.b = -M.b / det;
  R.c = -M.c / det;
  R.d = M.a / det;
  // R.shift = -R.linear * M.shift
  R.shift = {-(R.a * M.shift.x + R.b * M.shift.y), -(R.c * M.shift.x + R.d * M.shift.y)};
  return R;
}

AffineMap compose(const AffineMap& M, const AffineMap& N) {
  AffineMap R;
  R.a = M.a * N.a + M.b * N.c;
  R.b = M.a * N.b + M.b * N.d;
  R.c = M.c * N.a + M.d * N.c;
  R.d = M.c * N.b + M.d * N.d;
  R.shift = apply(M, N.shift);
  return R;
}

ConvexPolygon affine_apply(const AffineMap& M, const ConvexPolygon& P) {
  std::vector<Point2> vs;
  vs.reserve(P.vertices.size());
  for (const Point2& p : P.vertices) vs.push_back(apply(M, p));
  return make_polygon(std::move(vs));
}

}  // namespace latticeq
