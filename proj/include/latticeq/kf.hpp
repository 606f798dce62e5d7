#pragma once

#include <utility>
#include <vector>

#include "latticeq/geom.hpp"
#include "latticeq/profile.hpp"

namespace latticeq {

struct GridOptions {
  int grid_1d = 4097;       // coarse scan resolution for single-cut search
  int grid_2d = 513;        // per-axis coarse resolution for cut-pair search
  double flat_tol = 1e-9;   // objective spread treated as one flat optimum
  double x_tol = 1e-10;     // refinement width for golden-section polish
};

// Minimum of the circumscribed staircase area over cuts in [0, 1].
struct CutOptimum {
  double value = 0.0;
  // One representative cut per optimum component, ascending.
  std::vector<double> cuts;
  // Intervals where the objective stays within flat_tol of the optimum
  // across several grid cells (e.g. every cut of a flat-top profile).
  std::vector<std::pair<double, double>> flat_runs;
};
CutOptimum minimize_circumscribed_area(const Profile& f, const GridOptions& opt = {});

// Maximum of the inscribed staircase area over pairs 0 <= x1 <= x2 <= 1.
struct CutPairOptimum {
  double value = 0.0;
  // One representative pair per optimum component, lexicographic.
  std::vector<std::pair<double, double>> cut_pairs;
  bool flat = false;  // the optimum set spans several grid cells
};
CutPairOptimum maximize_inscribed_area(const Profile& f, const GridOptions& opt = {});

// Same search restricted to x1 in box1 and x2 in box2 (both closed),
// still subject to x1 <= x2.
CutPairOptimum max_inscribed_area_on(const Profile& f,
                                     std::pair<double, double> box1,
                                     std::pair<double, double> box2,
                                     const GridOptions& opt = {});

// Numeric packing/covering analysis of the disk K_f.
struct KfReport {
  double area = 0.0;           // |K_f|
  double circumscribed = 0.0;  // min circumscribed staircase area
  double inscribed = 0.0;      // max inscribed staircase area
  double delta = 0.0;          // area / circumscribed (packing density)
  double theta = 0.0;          // area / inscribed (covering density)
  CutOptimum packing_cuts;
  CutPairOptimum covering_cuts;
  Lattice2 packing_lattice;    // staircase lattice at the first optimal cut
  Lattice2 covering_lattice;   // staircase lattice at the first optimal pair
};
KfReport analyze_profile(const Profile& f, const GridOptions& opt = {});

}  // namespace latticeq
