#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latticeq/quad.hpp"

namespace latticeq {

struct ScanRow {
  double x = 0.0, y = 0.0;
  CoarseRegion region = CoarseRegion::B1;
  double delta = 0.0, theta = 0.0;
  double product_margin = 0.0;     // delta * theta - 1
  double harmonic_margin = 0.0;    // 1/delta + 1/theta - 2
  double sum_margin = 0.0;         // delta + theta - 2
  double ismailescu_margin = 0.0;  // 1 + (5/4) sqrt(1 - delta) - theta
};

// Evaluates densities and inequality margins on the lattice
// {(i/n, j/n)} intersected with the parameter triangle.  n >= 10.
std::vector<ScanRow> scan_parameter_triangle(int grid_n);

struct MarginSummary {
  double min_product = 0.0, min_harmonic = 0.0, min_sum = 0.0, min_ismailescu = 0.0;
  ScanRow argmin_product, argmin_harmonic, argmin_sum, argmin_ismailescu;
  // Rows whose margin sits within zero_tol of zero, for locus checks.
  std::vector<ScanRow> product_zeros;
  std::vector<ScanRow> harmonic_zeros;
  double zero_tol = 1e-9;
};
MarginSummary summarize_margins(const std::vector<ScanRow>& rows, double zero_tol = 1e-9);

struct BoundsReport {
  double min_delta = 0.0, max_delta = 0.0;
  double min_theta = 0.0, max_theta = 0.0;
  bool ok = false;  // 2/3 <= delta <= 1 and 1 <= theta <= 3/2, within tol
};
BoundsReport check_density_bounds(const std::vector<ScanRow>& rows, double tol = 1e-9);

// Columns: x,y,region,delta,theta,product_margin,harmonic_margin,
// sum_margin,ismailescu_margin.
void write_scan_csv(const std::string& path, const std::vector<ScanRow>& rows);

// Density cloud restricted to one coarse region (or all of the triangle).
std::vector<ScanRow> density_cloud(std::optional<CoarseRegion> region, int grid_n);
// Columns: x,y,region,delta,theta.
void write_cloud_csv(const std::string& path, const std::vector<ScanRow>& rows);

}  // namespace latticeq
