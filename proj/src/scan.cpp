#include "latticeq/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace latticeq {

namespace {

ScanRow make_row(double x, double y) {
  ScanRow r;
  r.x = x;
  r.y = y;
  r.region = classify_region(x, y).coarse;
  r.delta = packing_density(x, y);
  r.theta = covering_density(x, y);
  r.product_margin = r.delta * r.theta - 1.0;
  r.harmonic_margin = 1.0 / r.delta + 1.0 / r.theta - 2.0;
  r.sum_margin = r.delta + r.theta - 2.0;
  r.ismailescu_margin =
      1.0 + 1.25 * std::sqrt(std::max(1.0 - r.delta, 0.0)) - r.theta;
  return r;
}

}  // namespace

std::vector<ScanRow> scan_parameter_triangle(int grid_n) {
  if (grid_n < 10) throw std::domain_error("scan_parameter_triangle: grid_n must be >= 10");
  std::vector<ScanRow> rows;
  for (int i = 0; i <= grid_n; ++i) {
    const double x = static_cast<double>(i) / grid_n;
    for (int j = 0; j <= grid_n; ++j) {
      const double y = static_cast<double>(j) / grid_n;
      if (!in_parameter_triangle(x, y, 1e-12)) continue;
      rows.push_back(make_row(x, y));
    }
  }
  return rows;
}

MarginSummary summarize_margins(const std::vector<ScanRow>& rows, double zero_tol) {
  if (rows.empty()) throw std::domain_error("summarize_margins: no rows");
  MarginSummary s;
  s.zero_tol = zero_tol;
  s.min_product = s.min_harmonic = s.min_sum = s.min_ismailescu =
      std::numeric_limits<double>::infinity();
  for (const ScanRow& r : rows) {
    if (r.product_margin < s.min_product) {
      s.min_product = r.product_margin;
      s.argmin_product = r;
    }
    if (r.harmonic_margin < s.min_harmonic) {
      s.min_harmonic = r.harmonic_margin;
      s.argmin_harmonic = r;
    }
    if (r.sum_margin < s.min_sum) {
      s.min_sum = r.sum_margin;
      s.argmin_sum = r;
    }
    if (r.ismailescu_margin < s.min_ismailescu) {
      s.min_ismailescu = r.ismailescu_margin;
      s.argmin_ismailescu = r;
    }
    if (std::abs(r.product_margin) <= zero_tol) s.product_zeros.push_back(r);
    if (std::abs(r.harmonic_margin) <= zero_tol) s.harmonic_zeros.push_back(r);
  }
  return s;
}

BoundsReport check_density_bounds(const std::vector<ScanRow>& rows, double tol) {
  if (rows.empty()) throw std::domain_error("check_density_bounds: no rows");
  BoundsReport b;
  b.min_delta = b.min_theta = std::numeric_limits<double>::infinity();
  b.max_delta = b.max_theta = -std::numeric_limits<double>::infinity();
  for (const ScanRow& r : rows) {
    b.min_delta = std::min(b.min_delta, r.delta);
    b.max_delta = std::max(b.max_delta, r.delta);
    b.min_theta = std::min(b.min_theta, r.theta);
    b.max_theta = std::max(b.max_theta, r.theta);
  }
  b.ok = b.min_delta >= 2.0 / 3.0 - tol && b.max_delta <= 1.0 + tol &&
         b.min_theta >= 1.0 - tol && b.max_theta <= 1.5 + tol;
  return b;
}

namespace {

struct FileCloser {
  std::FILE* f;
  ~FileCloser() {
    if (f) std::fclose(f);
  }
};

}  // namespace

void write_scan_csv(const std::string& path, const std::vector<ScanRow>& rows) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_scan_csv: cannot open " + path);
  FileCloser closer{f};
  std::fprintf(f,
               "x,y,region,delta,theta,product_margin,harmonic_margin,"
               "sum_margin,ismailescu_margin\n");
  for (const ScanRow& r : rows) {
    std::fprintf(f, "%.17g,%.17g,%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.x,
                 r.y, to_string(r.region).c_str(), r.delta, r.theta,
                 r.product_margin, r.harmonic_margin, r.sum_margin,
                 r.ismailescu_margin);
  }
}

std::vector<ScanRow> density_cloud(std::optional<CoarseRegion> region, int grid_n) {
  std::vector<ScanRow> rows = scan_parameter_triangle(grid_n);
  if (!region) return rows;
  std::vector<ScanRow> out;
  for (const ScanRow& r : rows)
    if (r.region == *region) out.push_back(r);
  return out;
}

void write_cloud_csv(const std::string& path, const std::vector<ScanRow>& rows) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_cloud_csv: cannot open " + path);
  FileCloser closer{f};
  std::fprintf(f, "x,y,region,delta,theta\n");
  for (const ScanRow& r : rows)
    std::fprintf(f, "%.17g,%.17g,%s,%.17g,%.17g\n", r.x, r.y,
                 to_string(r.region).c_str(), r.delta, r.theta);
}

}  // namespace latticeq
