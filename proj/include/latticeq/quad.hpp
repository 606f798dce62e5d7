#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "latticeq/geom.hpp"
#include "latticeq/profile.hpp"
#include "latticeq/rational.hpp"

namespace latticeq {

// Canonical form of a convex quadrilateral: an affine image of the quad with
// vertices (0,1), (0,0), (1,0), (x,y) where (x,y) lies in the parameter
// triangle D = {0 <= x <= y <= 1, x + y >= 1}.  The edge x + y = 1 carries
// the degenerate quadrilaterals (triangles).
struct QuadParams {
  double x = 0.0;
  double y = 0.0;
  AffineMap to_canonical;  // maps the input quadrilateral onto the canonical one
};

bool in_parameter_triangle(double x, double y, double tol = 1e-9);
bool in_parameter_triangle(const Rational& x, const Rational& y);

// Vertices (0,1), (0,0), (1,0), (x,y) as a counterclockwise polygon.
ConvexPolygon canonical_quad(double x, double y);

// Computes canonical parameters for an arbitrary convex quadrilateral given
// by its four corners (any starting vertex, either orientation).  All eight
// vertex labelings that map into D are considered and the lexicographically
// smallest (x, y) wins, which makes the result reproducible.
QuadParams canonicalize_quad(const std::array<Point2, 4>& vertices, double tol = 1e-9);

// Coarse parameter regions used by the covering-density formula.
enum class CoarseRegion { B1, B2, B3 };  // x<=1/3 | x>1/3 & y>=2/3 | y<2/3

// Case of the optimal covering-lattice family.
enum class CoveringCase { E1, E2, E3, E4, E5, SQUARE };
// Case of the optimal packing-lattice family.
enum class PackingCase { F1, F2, F3, F4, SQUARE };

struct RegionTag {
  CoarseRegion coarse = CoarseRegion::B1;
  CoveringCase covering = CoveringCase::E1;
  PackingCase packing = PackingCase::F4;
  bool degenerate_triangle = false;  // |x + y - 1| <= 1e-12
};

RegionTag classify_region(double x, double y);
std::string to_string(CoarseRegion r);
std::string to_string(CoveringCase c);
std::string to_string(PackingCase c);

// Lattice packing and covering densities of the canonical quadrilateral.
double packing_density(double x, double y);
double covering_density(double x, double y);
Rational packing_density_exact(const Rational& x, const Rational& y);
Rational covering_density_exact(const Rational& x, const Rational& y);

// Largest areas of inscribed corner-cut hexagons, by cut-corner placement.
// Precondition: (x, y) != (1, 1) (for the square all placements degenerate).
struct InscribedComponents {
  double a12 = 0.0;  // one cut at each corner
  double a11 = 0.0;  // both cuts at the first corner
  double a22 = 0.0;  // both cuts at the second corner
};
InscribedComponents inscribed_area_components(double x, double y);

// Smallest areas of circumscribed step hexagons, by step orientation.
struct CircumscribedComponents {
  double a1 = 0.0;  // step against the x-direction edge pair
  double a2 = 0.0;  // step against the y-direction edge pair
};
CircumscribedComponents circumscribed_area_components(double x, double y);

// Max over all inscribed hexagons (determinant of optimal covering lattices)
// and min over all circumscribed hexagons (determinant of optimal packing
// lattices).  covering_density * max_inscribed_area == (x+y)/2 and
// packing_density * min_circumscribed_area == (x+y)/2.
double max_inscribed_area(double x, double y);
double min_circumscribed_area(double x, double y);

// Boundary profile of the canonical quadrilateral: the concave function
// whose subgraph over [0, 1] is K_{x,y} rotated into profile position.
Profile quad_profile(double x, double y);

// Cut pairs (x1, x2) of the profile that achieve max_inscribed_area.
struct CutPairSet {
  std::vector<std::pair<double, double>> pairs;
  bool continuum = false;      // one-parameter family (x = y = 2/3)
  double t_lo = 0.0, t_hi = 0.0;
  std::function<std::pair<double, double>(double)> at;  // set when continuum
  std::vector<std::pair<double, double>> sample(int n) const;
};
// Precondition: (x, y) != (1, 1) (throws std::domain_error for the square).
CutPairSet max_inscribed_cuts(double x, double y);

// Cuts of the profile that achieve min_circumscribed_area.
struct CutSet {
  std::vector<double> points;
  bool interval = false;  // whole interval [lo, hi] optimal (the square)
  double lo = 0.0, hi = 0.0;
  std::vector<double> sample(int n) const;
};
CutSet min_circumscribed_cuts(double x, double y);

// Family of optimal lattices: finitely many members or continuum branches.
struct LatticeBranch {
  double t_lo = 0.0, t_hi = 1.0;
  bool open_lo = false;  // parameter interval (t_lo, t_hi] when true
  std::function<Lattice2(double)> at;
};

struct LatticeFamily {
  enum class Cardinality { one, two, continuum };
  Cardinality cardinality = Cardinality::one;
  std::vector<Lattice2> members;        // populated unless continuum
  std::vector<LatticeBranch> branches;  // populated when continuum
  // members as-is, or per_branch evenly spaced parameters per branch.
  std::vector<Lattice2> sample(int per_branch) const;
};
std::string to_string(LatticeFamily::Cardinality c);

// Optimal families built through the certified construction: step hexagons
// at optimal cuts, i.e. circumscribed_staircase_lattice over
// min_circumscribed_cuts (packing) and inscribed_staircase_lattice over
// max_inscribed_cuts (covering).
LatticeFamily optimal_packing_lattices(double x, double y);
LatticeFamily optimal_covering_lattices(double x, double y);

// The same families evaluated from the casewise closed-form basis table.
// For covering with y < 2/3 the tabulated first basis vector is known to
// disagree with the certified construction; these evaluators reproduce the
// table faithfully so callers can compare (see acceptance criterion on the
// construction/table mismatch).
LatticeFamily casewise_packing_bases(double x, double y);
LatticeFamily casewise_covering_bases(double x, double y);

// True when A and B generate the same planar lattice: the basis of each is
// an integer combination of the other within tol, and determinants match.
bool same_lattice(const Lattice2& A, const Lattice2& B, double tol = 1e-9);

}  // namespace latticeq
