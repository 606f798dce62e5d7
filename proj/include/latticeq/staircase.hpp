#pragma once

#include <vector>

#include "latticeq/geom.hpp"
#include "latticeq/profile.hpp"

namespace latticeq {

// Staircase hexagons are rectilinear, not convex: they carry one reflex
// corner at the step, so they are returned as plain counterclockwise vertex
// rings rather than ConvexPolygon.

// Hexagon circumscribed about K_f with a step at cut x:
// (0,0), (1,0), (1,f(x)), (x,f(x)), (x,1), (0,1).  Area = x + (1-x) f(x).
// Degenerate vertices (x = 0, f(x) = 1, ...) are merged away.
std::vector<Point2> circumscribed_staircase(const Profile& f, double x);

// Hexagon inscribed in K_f with steps at cuts x1 <= x2:
// (0,0), (x2,0), (x2,f(x2)), (x1,f(x2)), (x1,f(x1)), (0,f(x1)).
// Area = x1 f(x1) + (x2 - x1) f(x2).
std::vector<Point2> inscribed_staircase(const Profile& f, double x1, double x2);

double circumscribed_staircase_area(const Profile& f, double x);
double inscribed_staircase_area(const Profile& f, double x1, double x2);

// Lattice generated by (x-1, 1) and (x, f(x)); the circumscribed staircase
// hexagon tiles the plane under it, so |det| equals its area.
Lattice2 circumscribed_staircase_lattice(const Profile& f, double x);

// Lattice generated by (x1-x2, f(x1)) and (x1, f(x2)); the inscribed
// staircase hexagon tiles the plane under it, so |det| equals its area.
Lattice2 inscribed_staircase_lattice(const Profile& f, double x1, double x2);

}  // namespace latticeq
