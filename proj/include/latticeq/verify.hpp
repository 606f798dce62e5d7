#pragma once

#include "latticeq/geom.hpp"

namespace latticeq {

enum class ArrangementMode { packing, covering, tiling };

struct VerifyOptions {
  double tol = 1e-9;        // max tolerated overlap area / determinant slack
  int grid_n = 512;         // covering samples per fundamental-domain axis
  int window_override = 0;  // > 0 forces the translate search radius
};

// Brute-force evidence that K + L is a packing / covering / tiling.
// The verifier is independent of the closed forms: it reduces the basis,
// derives a provably sufficient translate window from the shortest vector,
// and measures actual polygon overlaps / pointwise coverage.
struct Certificate {
  ArrangementMode mode = ArrangementMode::packing;
  bool ok = false;
  double density = 0.0;            // |K| / |det L|
  double max_overlap_area = 0.0;   // packing: largest translate overlap found
  double uncovered_fraction = 0.0; // covering: fraction of samples uncovered
  Point2 worst_point;              // covering: sample farthest from coverage
  double worst_distance = 0.0;     //   distance from it to nearest translate
  int window_radius = 0;           // translate radius actually searched
  int grid_resolution = 0;
};

// Packing: no nonzero lattice translate of K overlaps K by more than tol.
Certificate verify_packing(const ConvexPolygon& K, const Lattice2& L,
                           const VerifyOptions& opt = {});

// Covering: every sample of the fundamental parallelogram lies in some
// translate (boundary softened by tol).  Requires grid_n >= 64.
Certificate verify_covering(const ConvexPolygon& K, const Lattice2& L,
                            const VerifyOptions& opt = {});

// Tiling: packing and covering, plus |det L| equal to |K| within tol.
Certificate verify_tiling(const ConvexPolygon& K, const Lattice2& L,
                          const VerifyOptions& opt = {});

// Tiling certificate for a staircase hexagon given as the union of two
// origin-anchored boxes [0,w1]x[0,h1] and [0,w2]x[0,h2].  Box-union overlap
// areas are computed exactly by inclusion-exclusion, so unlike the sampled
// polygon verifier this check carries no discretization error: the hexagon
// tiles under L iff every nonzero translate overlap is ~0 and |det L| equals
// the union area.
Certificate verify_step_tiling(double w1, double h1, double w2, double h2,
                               const Lattice2& L, const VerifyOptions& opt = {});

}  // namespace latticeq
