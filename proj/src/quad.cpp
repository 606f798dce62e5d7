#include "latticeq/quad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "latticeq/staircase.hpp"

namespace latticeq {

namespace {

constexpr double kEq = 1e-12;  // equality tolerance for case boundaries

void require_in_triangle(double x, double y, const char* who) {
  if (!in_parameter_triangle(x, y))
    throw std::domain_error(std::string(who) + ": (x, y) outside the parameter triangle");
}

bool is_square_params(double x, double y) {
  return std::abs(x - 1.0) <= kEq && std::abs(y - 1.0) <= kEq;
}

}  // namespace

bool in_parameter_triangle(double x, double y, double tol) {
  return x >= -tol && y >= x - tol && y <= 1.0 + tol && x + y >= 1.0 - tol;
}

bool in_parameter_triangle(const Rational& x_in, const Rational& y_in) {
  Rational x = x_in, y = y_in;  // gmp comparisons require canonical operands
  x.canonicalize();
  y.canonicalize();
  return x >= 0 && y >= x && y <= 1 && x + y >= 1;
}

ConvexPolygon canonical_quad(double x, double y) {
  require_in_triangle(x, y, "canonical_quad");
  return make_polygon({{0.0, 1.0}, {0.0, 0.0}, {1.0, 0.0}, {x, y}});
}

QuadParams canonicalize_quad(const std::array<Point2, 4>& vertices, double tol) {
  // Throws when the four corners, in the given cyclic order, are not in
  // convex position.
  make_polygon(std::vector<Point2>(vertices.begin(), vertices.end()));

  // All cyclic relabelings in both directions.
  std::array<std::array<int, 4>, 8> labelings;
  for (int r = 0; r < 4; ++r) {
    labelings[2 * r] = {r, (r + 1) % 4, (r + 2) % 4, (r + 3) % 4};
    labelings[2 * r + 1] = {r, (r + 3) % 4, (r + 2) % 4, (r + 1) % 4};
  }

  bool found = false;
  QuadParams best;
  for (const auto& lab : labelings) {
    const Point2 q0 = vertices[lab[0]];
    const Point2 q1 = vertices[lab[1]];
    const Point2 q2 = vertices[lab[2]];
    const Point2 q3 = vertices[lab[3]];
    const Point2 e1 = q2 - q1;  // maps to (1,0)
    const Point2 e2 = q0 - q1;  // maps to (0,1)
    const double det = cross(e1, e2);
    if (std::abs(det) < 1e-30) continue;
    AffineMap M;
    M.a = e2.y / det;
    M.b = -e2.x / det;
    M.c = -e1.y / det;
    M.d = e1.x / det;
    M.shift = {-(M.a * q1.x + M.b * q1.y), -(M.c * q1.x + M.d * q1.y)};
    const Point2 p = apply(M, q3);
    if (!in_parameter_triangle(p.x, p.y, tol)) continue;
    if (!found || p.x < best.x || (p.x == best.x && p.y < best.y)) {
      best.x = p.x;
      best.y = p.y;
      best.to_canonical = M;
      found = true;
    }
  }
  if (!found)
    throw std::domain_error("canonicalize_quad: no labeling maps into the parameter triangle");
  best.x = std::clamp(best.x, 0.0, 1.0);
  best.y = std::clamp(best.y, 0.0, 1.0);
  return best;
}

RegionTag classify_region(double x, double y) {
  require_in_triangle(x, y, "classify_region");
  RegionTag tag;
  tag.degenerate_triangle = std::abs(x + y - 1.0) <= kEq;
  const bool square = is_square_params(x, y);

  if (x <= 1.0 / 3.0)
    tag.coarse = CoarseRegion::B1;
  else if (y >= 2.0 / 3.0)
    tag.coarse = CoarseRegion::B2;
  else
    tag.coarse = CoarseRegion::B3;

  if (square)
    tag.covering = CoveringCase::SQUARE;
  else if (x <= 1.0 / 3.0)
    tag.covering = CoveringCase::E1;
  else if (y < 2.0 / 3.0 - kEq)
    tag.covering = CoveringCase::E3;
  else if (std::abs(x - y) <= kEq)
    tag.covering = std::abs(y - 2.0 / 3.0) <= kEq ? CoveringCase::E5 : CoveringCase::E4;
  else
    tag.covering = CoveringCase::E2;

  if (square)
    tag.packing = PackingCase::SQUARE;
  else if (std::abs(x - 0.5) <= kEq && std::abs(y - 0.5) <= kEq)
    tag.packing = PackingCase::F3;
  else if (tag.degenerate_triangle)
    tag.packing = PackingCase::F2;
  else if (std::abs(x - y) <= kEq)
    tag.packing = PackingCase::F1;
  else
    tag.packing = PackingCase::F4;
  return tag;
}

std::string to_string(CoarseRegion r) {
  switch (r) {
    case CoarseRegion::B1: return "B1";
    case CoarseRegion::B2: return "B2";
    case CoarseRegion::B3: return "B3";
  }
  return "?";
}

std::string to_string(CoveringCase c) {
  switch (c) {
    case CoveringCase::E1: return "E1";
    case CoveringCase::E2: return "E2";
    case CoveringCase::E3: return "E3";
    case CoveringCase::E4: return "E4";
    case CoveringCase::E5: return "E5";
    case CoveringCase::SQUARE: return "SQUARE";
  }
  return "?";
}

std::string to_string(PackingCase c) {
  switch (c) {
    case PackingCase::F1: return "F1";
    case PackingCase::F2: return "F2";
    case PackingCase::F3: return "F3";
    case PackingCase::F4: return "F4";
    case PackingCase::SQUARE: return "SQUARE";
  }
  return "?";
}

std::string to_string(LatticeFamily::Cardinality c) {
  switch (c) {
    case LatticeFamily::Cardinality::one: return "one";
    case LatticeFamily::Cardinality::two: return "two";
    case LatticeFamily::Cardinality::continuum: return "continuum";
  }
  return "?";
}

double packing_density(double x, double y) {
  require_in_triangle(x, y, "packing_density");
  return 2.0 * y * (x + y) / (4.0 * y + x - 1.0);
}

namespace {

// Branch values of the covering density; bounded denominators on D except
// the inner/q pair, which degenerates only at (2/3, 2/3).
double cover_b1(double x, double y) { return 3.0 * (x + y) * (1.0 - x) / (2.0 * y); }
double cover_b2(double x, double y) { return 2.0 * (x + y) / (y * (1.0 + 3.0 * x)); }
double inscribed_inner(double x, double y) {
  return x * (1.0 - x) + y * (1.0 - y) - x * y;
}
double inscribed_q(double x, double y) {
  return 4.0 * (1.0 - x) * (1.0 - y) - x * y;
}
double cover_b3(double x, double y) {
  return (x + y) * inscribed_q(x, y) / (2.0 * inscribed_inner(x, y));
}

void check_branch_agreement(double a, double b, const char* where) {
  if (std::abs(a - b) > 1e-12)
    throw std::logic_error(std::string("covering_density: branch disagreement at ") + where);
}

}  // namespace

double covering_density(double x, double y) {
  require_in_triangle(x, y, "covering_density");
  const double inner = inscribed_inner(x, y);
  if (x <= 1.0 / 3.0) {
    const double v = cover_b1(x, y);
    if (std::abs(x - 1.0 / 3.0) <= kEq) check_branch_agreement(v, cover_b2(x, y), "x=1/3");
    return v;
  }
  if (y >= 2.0 / 3.0) {
    const double v = cover_b2(x, y);
    if (std::abs(x - 1.0 / 3.0) <= kEq) check_branch_agreement(v, cover_b1(x, y), "x=1/3");
    // Compare against the third branch only where it is well conditioned.
    if (std::abs(y - 2.0 / 3.0) <= kEq && inner >= 1e-2)
      check_branch_agreement(v, cover_b3(x, y), "y=2/3");
    return v;
  }
  // y < 2/3.  inner > 0 away from (2/3, 2/3); fall back to the adjacent
  // branch inside the sliver where inner/q is numerically meaningless.
  if (inner <= 1e-13) return cover_b2(x, y);
  const double v = cover_b3(x, y);
  if (std::abs(y - 2.0 / 3.0) <= kEq && inner >= 1e-2)
    check_branch_agreement(v, cover_b2(x, y), "y=2/3");
  return v;
}

Rational packing_density_exact(const Rational& x_in, const Rational& y_in) {
  Rational x = x_in, y = y_in;  // gmp comparisons require canonical operands
  x.canonicalize();
  y.canonicalize();
  if (!in_parameter_triangle(x, y))
    throw std::domain_error("packing_density_exact: (x, y) outside the parameter triangle");
  return 2 * y * (x + y) / (4 * y + x - 1);
}

Rational covering_density_exact(const Rational& x_in, const Rational& y_in) {
  Rational x = x_in, y = y_in;
  x.canonicalize();
  y.canonicalize();
  if (!in_parameter_triangle(x, y))
    throw std::domain_error("covering_density_exact: (x, y) outside the parameter triangle");
  const Rational one(1);
  if (x <= Rational(1, 3)) return 3 * (x + y) * (one - x) / (2 * y);
  if (y >= Rational(2, 3)) return 2 * (x + y) / (y * (1 + 3 * x));
  const Rational q = 4 * (one - x) * (one - y) - x * y;
  const Rational inner = x * (one - x) + y * (one - y) - x * y;
  return (x + y) * q / (2 * inner);
}

InscribedComponents inscribed_area_components(double x, double y) {
  require_in_triangle(x, y, "inscribed_area_components");
  if (is_square_params(x, y))
    throw std::domain_error("inscribed_area_components: undefined for the square");
  InscribedComponents c;
  const double inner = inscribed_inner(x, y);
  if (y >= 2.0 / 3.0 || inner <= 1e-13)
    c.a12 = y * (1.0 + 3.0 * x) / 4.0;
  else
    c.a12 = inner / inscribed_q(x, y);
  c.a22 = x <= 1.0 / 3.0 ? y / (3.0 * (1.0 - x)) : y * (1.0 + 3.0 * x) / 4.0;
  c.a11 = y >= 1.0 / 3.0 ? x * (1.0 + 3.0 * y) / 4.0 : x / (3.0 * (1.0 - y));
  return c;
}

CircumscribedComponents circumscribed_area_components(double x, double y) {
  require_in_triangle(x, y, "circumscribed_area_components");
  CircumscribedComponents c;
  c.a1 = x >= 0.5 ? 1.0 - (1.0 - y) / (4.0 * x) : 1.0 - (1.0 - x) * (1.0 - y);
  c.a2 = y >= 0.5 ? 1.0 - (1.0 - x) / (4.0 * y) : 1.0 - (1.0 - x) * (1.0 - y);
  return c;
}

double max_inscribed_area(double x, double y) {
  require_in_triangle(x, y, "max_inscribed_area");
  if (x <= 1.0 / 3.0) return y / (3.0 * (1.0 - x));
  if (y >= 2.0 / 3.0) return y * (1.0 + 3.0 * x) / 4.0;
  const double inner = inscribed_inner(x, y);
  if (inner <= 1e-13) return y * (1.0 + 3.0 * x) / 4.0;
  return inner / inscribed_q(x, y);
}

double min_circumscribed_area(double x, double y) {
  require_in_triangle(x, y, "min_circumscribed_area");
  return 1.0 - (1.0 - x) / (4.0 * y);  // y >= 1/2 throughout the triangle
}

Profile quad_profile(double x, double y) {
  require_in_triangle(x, y, "quad_profile");
  x = std::clamp(x, 0.0, 1.0);
  y = std::clamp(y, 0.0, 1.0);
  if (x + y < 1.0) y = 1.0 - x;  // project boundary-tolerance inputs onto D
  if (x <= 1e-15) return make_pwl_profile({0.0, 1.0}, {1.0, 0.0});
  if (x >= 1.0 - 1e-15) return make_pwl_profile({0.0, 1.0}, {1.0, 1.0});
  return make_pwl_profile({0.0, x, 1.0}, {1.0, y, 0.0});
}

std::vector<std::pair<double, double>> CutPairSet::sample(int n) const {
  if (!continuum) return pairs;
  std::vector<std::pair<double, double>> out;
  if (n <= 1) {
    out.push_back(at(0.5 * (t_lo + t_hi)));
    return out;
  }
  for (int i = 0; i < n; ++i)
    out.push_back(at(t_lo + (t_hi - t_lo) * i / (n - 1)));
  return out;
}

CutPairSet max_inscribed_cuts(double x, double y) {
  require_in_triangle(x, y, "max_inscribed_cuts");
  const RegionTag tag = classify_region(x, y);
  CutPairSet S;
  switch (tag.covering) {
    case CoveringCase::SQUARE:
      throw std::domain_error("max_inscribed_cuts: undefined for the square");
    case CoveringCase::E1:
      S.pairs = {{1.0 / 3.0, 2.0 / 3.0}};
      break;
    case CoveringCase::E2:
      S.pairs = {{x, (1.0 + x) / 2.0}};
      break;
    case CoveringCase::E3: {
      const double q = inscribed_q(x, y);
      S.pairs = {{x * (2.0 * (1.0 - x) - y) / q,
                  ((2.0 - x) * (1.0 - y) - x * x) / q}};
      break;
    }
    case CoveringCase::E4:
      S.pairs = {{y, (1.0 + y) / 2.0}, {y / 2.0, y}};
      break;
    case CoveringCase::E5:
      S.continuum = true;
      S.t_lo = 1.0 / 3.0;
      S.t_hi = 2.0 / 3.0;
      S.at = [](double t) { return std::pair<double, double>{1.0 - t, 1.0 - t / 2.0}; };
      break;
  }
  return S;
}

std::vector<double> CutSet::sample(int n) const {
  if (!interval) return points;
  std::vector<double> out;
  if (n <= 1) {
    out.push_back(0.5 * (lo + hi));
    return out;
  }
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

CutSet min_circumscribed_cuts(double x, double y) {
  require_in_triangle(x, y, "min_circumscribed_cuts");
  CutSet S;
  if (is_square_params(x, y)) {
    S.interval = true;
    S.lo = 0.0;
    S.hi = 1.0;
    return S;
  }
  const double c = 1.0 - (1.0 - x) / (2.0 * y);
  if (classify_region(x, y).packing == PackingCase::F1)
    S.points = {c, 0.5};
  else
    S.points = {c};
  return S;
}

std::vector<Lattice2> LatticeFamily::sample(int per_branch) const {
  if (cardinality != Cardinality::continuum) return members;
  std::vector<Lattice2> out;
  const int n = std::max(per_branch, 1);
  for (const LatticeBranch& b : branches) {
    if (b.open_lo) {
      for (int i = 1; i <= n; ++i) out.push_back(b.at(b.t_lo + (b.t_hi - b.t_lo) * i / n));
    } else if (n == 1) {
      out.push_back(b.at(0.5 * (b.t_lo + b.t_hi)));
    } else {
      for (int i = 0; i < n; ++i)
        out.push_back(b.at(b.t_lo + (b.t_hi - b.t_lo) * i / (n - 1)));
    }
  }
  return out;
}

namespace {

// Tiling lattices of the unit square: vertical and horizontal shears.
LatticeFamily square_tiling_family() {
  LatticeFamily F;
  F.cardinality = LatticeFamily::Cardinality::continuum;
  LatticeBranch shear_v;
  shear_v.t_lo = 0.0;
  shear_v.t_hi = 1.0;
  shear_v.open_lo = true;
  shear_v.at = [](double t) { return make_lattice({0.0, 1.0}, {1.0, t}); };
  LatticeBranch shear_h;
  shear_h.t_lo = 0.0;
  shear_h.t_hi = 1.0;
  shear_h.open_lo = true;
  shear_h.at = [](double t) { return make_lattice({t, 1.0}, {1.0, 0.0}); };
  F.branches = {shear_v, shear_h};
  return F;
}

}  // namespace

LatticeFamily optimal_packing_lattices(double x, double y) {
  require_in_triangle(x, y, "optimal_packing_lattices");
  if (is_square_params(x, y)) return square_tiling_family();
  const Profile f = quad_profile(x, y);
  const CutSet cuts = min_circumscribed_cuts(x, y);
  LatticeFamily F;
  for (double c : cuts.points) F.members.push_back(circumscribed_staircase_lattice(f, c));
  F.cardinality = F.members.size() == 2 ? LatticeFamily::Cardinality::two
                                        : LatticeFamily::Cardinality::one;
  return F;
}

LatticeFamily optimal_covering_lattices(double x, double y) {
  require_in_triangle(x, y, "optimal_covering_lattices");
  if (is_square_params(x, y)) return square_tiling_family();
  const Profile f = quad_profile(x, y);
  const CutPairSet cuts = max_inscribed_cuts(x, y);
  LatticeFamily F;
  if (cuts.continuum) {
    F.cardinality = LatticeFamily::Cardinality::continuum;
    LatticeBranch b;
    b.t_lo = cuts.t_lo;
    b.t_hi = cuts.t_hi;
    b.open_lo = false;
    b.at = [f, at = cuts.at](double t) {
      const auto [c1, c2] = at(t);
      return inscribed_staircase_lattice(f, c1, c2);
    };
    F.branches = {b};
    return F;
  }
  for (const auto& [c1, c2] : cuts.pairs)
    F.members.push_back(inscribed_staircase_lattice(f, c1, c2));
  F.cardinality = F.members.size() == 2 ? LatticeFamily::Cardinality::two
                                        : LatticeFamily::Cardinality::one;
  return F;
}

LatticeFamily casewise_packing_bases(double x, double y) {
  require_in_triangle(x, y, "casewise_packing_bases");
  if (is_square_params(x, y)) return square_tiling_family();
  LatticeFamily F;
  if (classify_region(x, y).packing == PackingCase::F1) {
    F.members = {
        make_lattice({(y - 1.0) / (2.0 * y), 1.0}, {(3.0 * y - 1.0) / (2.0 * y), 0.5}),
        make_lattice({-0.5, 1.0}, {0.5, (3.0 * y - 1.0) / (2.0 * y)})};
    F.cardinality = LatticeFamily::Cardinality::two;
  } else {
    F.members = {make_lattice({(x - 1.0) / (2.0 * y), 1.0},
                              {1.0 - (1.0 - x) / (2.0 * y), 0.5})};
    F.cardinality = LatticeFamily::Cardinality::one;
  }
  return F;
}

LatticeFamily casewise_covering_bases(double x, double y) {
  require_in_triangle(x, y, "casewise_covering_bases");
  const RegionTag tag = classify_region(x, y);
  LatticeFamily F;
  switch (tag.covering) {
    case CoveringCase::SQUARE:
      return square_tiling_family();
    case CoveringCase::E1:
      F.members = {make_lattice({-1.0 / 3.0, 2.0 * y / (3.0 * (1.0 - x))},
                                {1.0 / 3.0, y / (3.0 * (1.0 - x))})};
      break;
    case CoveringCase::E2:
      F.members = {make_lattice({(x - 1.0) / 2.0, y}, {x, y / 2.0})};
      break;
    case CoveringCase::E3: {
      const double q = inscribed_q(x, y);
      F.members = {make_lattice(
          {(y * (1.0 + y - 2.0 * x) - 2.0 * (1.0 - x) * (1.0 - x)) / q,
           ((2.0 - y) * (1.0 - x) - y * y) / q},
          {x * (2.0 * (1.0 - x) - y) / q, y * (2.0 * (1.0 - y) - x) / q})};
      break;
    }
    case CoveringCase::E4:
      F.members = {make_lattice({(y - 1.0) / 2.0, y}, {y, y / 2.0}),
                   make_lattice({-y / 2.0, (1.0 + y) / 2.0}, {y / 2.0, y})};
      break;
    case CoveringCase::E5: {
      F.cardinality = LatticeFamily::Cardinality::continuum;
      LatticeBranch b;
      b.t_lo = 1.0 / 3.0;
      b.t_hi = 2.0 / 3.0;
      b.open_lo = false;
      b.at = [](double t) {
        return make_lattice({-t / 2.0, (1.0 + t) / 2.0}, {1.0 - t, t});
      };
      F.branches = {b};
      return F;
    }
  }
  F.cardinality = F.members.size() == 2 ? LatticeFamily::Cardinality::two
                                        : LatticeFamily::Cardinality::one;
  return F;
}

namespace {

bool basis_in_lattice(const Lattice2& A, const Lattice2& B, double tol) {
  for (const Point2 b : {B.u, B.v}) {
    const double i = cross(b, A.v) / A.det;
    const double j = cross(A.u, b) / A.det;
    const Point2 r = lattice_vector(A, std::llround(i), std::llround(j)) - b;
    if (norm(r) > tol * (1.0 + norm(b))) return false;
  }
  return true;
}

}  // namespace

bool same_lattice(const Lattice2& A, const Lattice2& B, double tol) {
  if (std::abs(std::abs(A.det) - std::abs(B.det)) >
      tol * std::max(1.0, std::abs(A.det)))
    return false;
  return basis_in_lattice(A, B, tol) && basis_in_lattice(B, A, tol);
}

}  // namespace latticeq
