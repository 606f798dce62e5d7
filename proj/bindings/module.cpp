// Python bindings for the lattice packing/covering core: canonicalization,
// closed-form densities, optimal lattice families, profile analysis, and the
// brute-force verifier.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latticeq/geom.hpp"
#include "latticeq/kf.hpp"
#include "latticeq/profile.hpp"
#include "latticeq/quad.hpp"
#include "latticeq/rational.hpp"
#include "latticeq/scan.hpp"
#include "latticeq/verify.hpp"

namespace py = pybind11;
using namespace latticeq;

namespace {

using PointTuple = std::pair<double, double>;
using BasisTuple = std::pair<PointTuple, PointTuple>;

Point2 to_point(const PointTuple& p) { return {p.first, p.second}; }

PointTuple from_point(Point2 p) { return {p.x, p.y}; }

Lattice2 to_lattice(const BasisTuple& b) {
  return make_lattice(to_point(b.first), to_point(b.second));
}

ConvexPolygon to_polygon(const std::vector<PointTuple>& pts) {
  std::vector<Point2> v;
  v.reserve(pts.size());
  for (const PointTuple& p : pts) v.push_back(to_point(p));
  return make_polygon(v);
}

py::dict lattice_dict(const Lattice2& L) {
  py::dict d;
  d["u"] = from_point(L.u);
  d["v"] = from_point(L.v);
  d["det"] = L.det;
  return d;
}

py::dict certificate_dict(const Certificate& c) {
  py::dict d;
  switch (c.mode) {
    case ArrangementMode::packing: d["mode"] = "packing"; break;
    case ArrangementMode::covering: d["mode"] = "covering"; break;
    case ArrangementMode::tiling: d["mode"] = "tiling"; break;
  }
  d["ok"] = c.ok;
  d["density"] = c.density;
  d["max_overlap_area"] = c.max_overlap_area;
  d["uncovered_fraction"] = c.uncovered_fraction;
  d["worst_point"] = from_point(c.worst_point);
  d["worst_distance"] = c.worst_distance;
  d["window_radius"] = c.window_radius;
  d["grid_resolution"] = c.grid_resolution;
  return d;
}

py::dict family_dict(const LatticeFamily& F, int samples) {
  py::dict d;
  d["cardinality_class"] = to_string(F.cardinality);
  py::list lattices;
  for (const Lattice2& L : F.sample(samples)) lattices.append(lattice_dict(L));
  d["lattices"] = std::move(lattices);
  if (F.cardinality == LatticeFamily::Cardinality::continuum) {
    py::list branches;
    for (const LatticeBranch& b : F.branches) {
      py::dict bd;
      bd["t_lo"] = b.t_lo;
      bd["t_hi"] = b.t_hi;
      bd["open_lo"] = b.open_lo;
      branches.append(std::move(bd));
    }
    d["branches"] = std::move(branches);
  }
  return d;
}

py::dict region_dict(double x, double y) {
  const RegionTag tag = classify_region(x, y);
  py::dict d;
  d["coarse"] = to_string(tag.coarse);
  d["covering_case"] = to_string(tag.covering);
  d["packing_case"] = to_string(tag.packing);
  d["degenerate_triangle"] = tag.degenerate_triangle;
  return d;
}

py::dict canonicalize_vertices(const std::vector<PointTuple>& vertices) {
  if (vertices.size() != 4)
    throw std::domain_error("canonicalize: expected four vertices");
  const QuadParams qp = canonicalize_quad({to_point(vertices[0]), to_point(vertices[1]),
                                           to_point(vertices[2]), to_point(vertices[3])});
  py::dict d;
  d["x"] = qp.x;
  d["y"] = qp.y;
  py::dict m;
  m["linear"] = py::make_tuple(py::make_tuple(qp.to_canonical.a, qp.to_canonical.b),
                               py::make_tuple(qp.to_canonical.c, qp.to_canonical.d));
  m["shift"] = from_point(qp.to_canonical.shift);
  d["to_canonical"] = std::move(m);
  return d;
}

py::dict analyze(const std::string& profile_text, int grid) {
  const Profile f = parse_profile(profile_text);
  GridOptions opt;
  if (grid > 0) {
    opt.grid_2d = grid;
    opt.grid_1d = 8 * (grid - 1) + 1;
  }
  const KfReport r = analyze_profile(f, opt);
  py::dict d;
  d["area"] = r.area;
  d["circumscribed_area"] = r.circumscribed;
  d["inscribed_area"] = r.inscribed;
  d["delta"] = r.delta;
  d["theta"] = r.theta;
  d["harmonic_sum"] = 1.0 / r.delta + 1.0 / r.theta;
  d["packing_cuts"] = r.packing_cuts.cuts;
  py::list runs;
  for (const auto& [lo, hi] : r.packing_cuts.flat_runs)
    runs.append(py::make_tuple(lo, hi));
  d["packing_flat_runs"] = std::move(runs);
  py::list pairs;
  for (const auto& [c1, c2] : r.covering_cuts.cut_pairs)
    pairs.append(py::make_tuple(c1, c2));
  d["covering_cut_pairs"] = std::move(pairs);
  d["covering_flat"] = r.covering_cuts.flat;
  d["packing_lattice"] = lattice_dict(r.packing_lattice);
  d["covering_lattice"] = lattice_dict(r.covering_lattice);
  return d;
}

Certificate run_verify(const std::vector<PointTuple>& polygon, const BasisTuple& basis,
                       const std::string& mode, double tol, int grid, int window) {
  const ConvexPolygon K = to_polygon(polygon);
  const Lattice2 L = to_lattice(basis);
  const VerifyOptions opt{tol, grid, window};
  if (mode == "packing") return verify_packing(K, L, opt);
  if (mode == "covering") return verify_covering(K, L, opt);
  if (mode == "tiling") return verify_tiling(K, L, opt);
  throw std::domain_error("mode must be packing, covering, or tiling");
}

py::dict scan_margins(int grid) {
  const std::vector<ScanRow> rows = scan_parameter_triangle(grid);
  const MarginSummary s = summarize_margins(rows);
  const BoundsReport b = check_density_bounds(rows);
  py::dict d;
  d["rows"] = rows.size();
  d["min_product_margin"] = s.min_product;
  d["min_harmonic_margin"] = s.min_harmonic;
  d["min_sum_margin"] = s.min_sum;
  d["min_ismailescu_margin"] = s.min_ismailescu;
  d["product_zero_rows"] = s.product_zeros.size();
  d["harmonic_zero_rows"] = s.harmonic_zeros.size();
  d["min_delta"] = b.min_delta;
  d["max_delta"] = b.max_delta;
  d["min_theta"] = b.min_theta;
  d["max_theta"] = b.max_theta;
  d["bounds_ok"] = b.ok;
  return d;
}

}  // namespace

PYBIND11_MODULE(latticeq, m) {
  m.doc() = "Lattice packing and covering densities of convex quadrilaterals "
            "and staircase-bounded convex disks";

  m.def("packing_density", &packing_density, py::arg("x"), py::arg("y"),
        "Closed-form lattice packing density of the canonical quadrilateral.");
  m.def("covering_density", &covering_density, py::arg("x"), py::arg("y"),
        "Closed-form lattice covering density of the canonical quadrilateral.");
  m.def(
      "packing_density_exact",
      [](const std::string& x, const std::string& y) {
        return rational_string(packing_density_exact(parse_rational(x), parse_rational(y)));
      },
      py::arg("x"), py::arg("y"),
      "Exact rational packing density from rational parameter strings.");
  m.def(
      "covering_density_exact",
      [](const std::string& x, const std::string& y) {
        return rational_string(covering_density_exact(parse_rational(x), parse_rational(y)));
      },
      py::arg("x"), py::arg("y"),
      "Exact rational covering density from rational parameter strings.");

  m.def("classify_region", &region_dict, py::arg("x"), py::arg("y"),
        "Coarse region and covering/packing case of a parameter point.");
  m.def("canonicalize", &canonicalize_vertices, py::arg("vertices"),
        "Canonical (x, y) parameters and affine map of a convex quadrilateral "
        "given as four (x, y) vertex tuples.");
  m.def("max_inscribed_area", &max_inscribed_area, py::arg("x"), py::arg("y"));
  m.def("min_circumscribed_area", &min_circumscribed_area, py::arg("x"), py::arg("y"));

  m.def(
      "optimal_packing_lattices",
      [](double x, double y, int samples) {
        return family_dict(optimal_packing_lattices(x, y), samples);
      },
      py::arg("x"), py::arg("y"), py::arg("samples") = 5,
      "Optimal packing lattices; continuum families sampled per branch.");
  m.def(
      "optimal_covering_lattices",
      [](double x, double y, int samples) {
        return family_dict(optimal_covering_lattices(x, y), samples);
      },
      py::arg("x"), py::arg("y"), py::arg("samples") = 5,
      "Optimal covering lattices; continuum families sampled per branch.");

  m.def("analyze_profile", &analyze, py::arg("f"), py::arg("grid") = 0,
        "Numeric packing/covering analysis of the disk under a concave "
        "boundary profile ('poly:a0,a1,...' or 'pwl:t0:v0,t1:v1,...').");

  m.def(
      "verify",
      [](const std::vector<PointTuple>& polygon, const BasisTuple& basis,
         const std::string& mode, double tol, int grid, int window) {
        return certificate_dict(run_verify(polygon, basis, mode, tol, grid, window));
      },
      py::arg("polygon"), py::arg("lattice"), py::arg("mode"), py::arg("tol") = 1e-9,
      py::arg("grid") = 512, py::arg("window") = 0,
      "Brute-force packing/covering/tiling certificate for a convex polygon "
      "and a lattice basis ((ux, uy), (vx, vy)).");

  m.def("scan_margins", &scan_margins, py::arg("grid") = 200,
        "Density inequality margins over the parameter triangle.");
}
