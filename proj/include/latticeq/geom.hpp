#pragma once

#include <optional>
#include <vector>

namespace latticeq {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 p);
double distance(Point2 a, Point2 b);

// Planar lattice: all integer combinations i*u + j*v of an ordered basis pair.
struct Lattice2 {
  Point2 u;
  Point2 v;
  double det = 0.0;  // u.x*v.y - u.y*v.x, cached at construction
};

Lattice2 make_lattice(Point2 u, Point2 v, double degenerate_tol = 1e-12);
Point2 lattice_vector(const Lattice2& L, long long i, long long j);

// Basis of the same lattice reduced so that |u| is the shortest nonzero
// lattice vector and |v| the shortest independent one (Lagrange reduction).
Lattice2 reduced_basis(const Lattice2& L);

// Convex polygon, vertices in counterclockwise order.
struct ConvexPolygon {
  std::vector<Point2> vertices;
};

// Normalizes orientation to counterclockwise; rejects non-convex or
// degenerate vertex lists. Collinear triples are tolerated.
ConvexPolygon make_polygon(std::vector<Point2> vertices, double collinear_tol = 1e-12);

double polygon_area(const ConvexPolygon& P);
// Unsigned shoelace area of an arbitrary simple vertex ring.
double ring_area(const std::vector<Point2>& ring);
double polygon_diameter(const ConvexPolygon& P);
double max_vertex_norm(const ConvexPolygon& P);
ConvexPolygon translate(const ConvexPolygon& P, Point2 t);

// True when p lies inside P or within eps of its boundary halfplanes.
bool polygon_contains(const ConvexPolygon& P, Point2 p, double eps = 0.0);
// Euclidean distance from p to P (0 for interior points).
double distance_to_polygon(const ConvexPolygon& P, Point2 p);

// Intersection of two convex regions (Sutherland-Hodgman clipping).
// nullopt means the interiors are disjoint: results whose area falls below
// empty_tol (shared edges, shared vertices) count as empty.
std::optional<ConvexPolygon> convex_intersection(const ConvexPolygon& P,
                                                 const ConvexPolygon& Q,
                                                 double empty_tol = 1e-12);
double intersection_area(const ConvexPolygon& P, const ConvexPolygon& Q);

// Affine map p -> linear*p + shift with linear = [[a, b], [c, d]].
struct AffineMap {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  Point2 shift;
};

Point2 apply(const AffineMap& M, Point2 p);
double linear_det(const AffineMap& M);
AffineMap inverse(const AffineMap& M);
AffineMap compose(const AffineMap& M, const AffineMap& N);  // M after N
ConvexPolygon affine_apply(const AffineMap& M, const ConvexPolygon& P);

}  // namespace latticeq
