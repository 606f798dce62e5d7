#include "latticeq/kf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "latticeq/staircase.hpp"

namespace latticeq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Golden-section minimum of g on [a, b], assuming unimodality there.
double golden_min(const std::function<double(double)>& g, double a, double b,
                  double x_tol) {
  if (b - a <= x_tol) return 0.5 * (a + b);
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - r * (b - a);
  double x2 = a + r * (b - a);
  double g1 = g(x1);
  double g2 = g(x2);
  while (b - a > x_tol) {
    if (g1 <= g2) {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - r * (b - a);
      g1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + r * (b - a);
      g2 = g(x2);
    }
  }
  return 0.5 * (a + b);
}

double golden_max(const std::function<double(double)>& g, double a, double b,
                  double x_tol) {
  return golden_min([&g](double t) { return -g(t); }, a, b, x_tol);
}

// Evenly spaced points over [lo, hi] plus the profile's knots and knot
// midpoints (optimizers must see the kinks of piecewise-linear profiles).
std::vector<double> axis_grid(const Profile& f, double lo, double hi, int n) {
  std::vector<double> g;
  g.reserve(static_cast<size_t>(n) + 8);
  for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / (n - 1));
  const std::vector<double> ks = profile_knots(f);
  for (size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] > lo && ks[i] < hi) g.push_back(ks[i]);
    if (i + 1 < ks.size()) {
      const double m = 0.5 * (ks[i] + ks[i + 1]);
      if (m > lo && m < hi) g.push_back(m);
    }
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end(),
                      [](double a, double b) { return std::abs(a - b) < 1e-14; }),
          g.end());
  return g;
}

}  // namespace

CutOptimum minimize_circumscribed_area(const Profile& f, const GridOptions& opt) {
  if (opt.grid_1d < 3)
    throw std::domain_error("minimize_circumscribed_area: grid_1d must be >= 3");
  const auto phi = [&f](double t) { return circumscribed_staircase_area(f, t); };
  const std::vector<double> g = axis_grid(f, 0.0, 1.0, opt.grid_1d);
  const int n = static_cast<int>(g.size());
  std::vector<double> val(n);
  for (int i = 0; i < n; ++i) val[i] = phi(g[i]);

  // Refine each local-minimum basin.
  struct Cand {
    double t, v;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < n; ++i) {
    const bool local_min = (i == 0 || val[i] <= val[i - 1]) &&
                           (i == n - 1 || val[i] <= val[i + 1]);
    if (!local_min) continue;
    const double a = g[std::max(i - 1, 0)];
    const double b = g[std::min(i + 1, n - 1)];
    const double t = golden_min(phi, a, b, opt.x_tol);
    const double v = phi(t);
    if (v <= val[i])
      cands.push_back({t, v});
    else
      cands.push_back({g[i], val[i]});
  }

  CutOptimum out;
  out.value = kInf;
  for (const Cand& c : cands) out.value = std::min(out.value, c.v);

  // Cluster near-optimal candidates; one representative per cluster.
  std::vector<Cand> hits;
  for (const Cand& c : cands)
    if (c.v <= out.value + opt.flat_tol) hits.push_back(c);
  std::sort(hits.begin(), hits.end(),
            [](const Cand& a, const Cand& b) { return a.t < b.t; });
  const double gap = 2.5 * (g.back() - g.front()) / (n - 1);
  size_t i = 0;
  while (i < hits.size()) {
    size_t j = i;
    Cand rep = hits[i];
    while (j + 1 < hits.size() && hits[j + 1].t - hits[j].t <= gap) {
      ++j;
      if (hits[j].v < rep.v) rep = hits[j];
    }
    out.cuts.push_back(rep.t);
    i = j + 1;
  }

  // Flat runs: maximal grid stretches that stay within flat_tol.
  for (int a = 0; a < n;) {
    if (val[a] > out.value + opt.flat_tol) {
      ++a;
      continue;
    }
    int b = a;
    while (b + 1 < n && val[b + 1] <= out.value + opt.flat_tol) ++b;
    if (b - a >= 2) out.flat_runs.push_back({g[a], g[b]});
    a = b + 1;
  }
  return out;
}

namespace {

CutPairOptimum max_pair_core(const Profile& f, std::pair<double, double> box1,
                             std::pair<double, double> box2,
                             const GridOptions& opt) {
  if (opt.grid_2d < 3)
    throw std::domain_error("maximize_inscribed_area: grid_2d must be >= 3");
  for (const auto& b : {box1, box2})
    if (b.first < -1e-12 || b.second > 1.0 + 1e-12 || b.first > b.second)
      throw std::domain_error("maximize_inscribed_area: cut box outside [0, 1]");

  const std::vector<double> g1 = axis_grid(f, box1.first, box1.second, opt.grid_2d);
  const std::vector<double> g2 = axis_grid(f, box2.first, box2.second, opt.grid_2d);
  const int n1 = static_cast<int>(g1.size());
  const int n2 = static_cast<int>(g2.size());
  std::vector<double> f1(n1), f2(n2);
  for (int i = 0; i < n1; ++i) f1[i] = profile_value(f, g1[i]);
  for (int j = 0; j < n2; ++j) f2[j] = profile_value(f, g2[j]);

  std::vector<double> val(static_cast<size_t>(n1) * n2, -kInf);
  double best = -kInf;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      if (g1[i] > g2[j] + 1e-15) continue;
      const double v = g1[i] * f1[i] + (g2[j] - g1[i]) * f2[j];
      val[static_cast<size_t>(i) * n2 + j] = v;
      best = std::max(best, v);
    }
  }
  if (best == -kInf)
    throw std::domain_error("maximize_inscribed_area: empty feasible cut set");

  // Connected components (8-neighborhood) of near-optimal grid cells.
  std::vector<int> comp(static_cast<size_t>(n1) * n2, -1);
  struct Comp {
    int best_i = 0, best_j = 0;
    double best_v = -kInf;
    int min_i = 1 << 30, max_i = -1, min_j = 1 << 30, max_j = -1;
  };
  std::vector<Comp> comps;
  std::vector<std::pair<int, int>> stack;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      const size_t id = static_cast<size_t>(i) * n2 + j;
      if (comp[id] != -1 || val[id] < best - opt.flat_tol) continue;
      const int c = static_cast<int>(comps.size());
      comps.emplace_back();
      stack.push_back({i, j});
      comp[id] = c;
      while (!stack.empty()) {
        const auto [a, b] = stack.back();
        stack.pop_back();
        Comp& C = comps[c];
        const size_t aid = static_cast<size_t>(a) * n2 + b;
        if (val[aid] > C.best_v) {
          C.best_v = val[aid];
          C.best_i = a;
          C.best_j = b;
        }
        C.min_i = std::min(C.min_i, a);
        C.max_i = std::max(C.max_i, a);
        C.min_j = std::min(C.min_j, b);
        C.max_j = std::max(C.max_j, b);
        for (int da = -1; da <= 1; ++da) {
          for (int db = -1; db <= 1; ++db) {
            const int na = a + da, nb = b + db;
            if (na < 0 || na >= n1 || nb < 0 || nb >= n2) continue;
            const size_t nid = static_cast<size_t>(na) * n2 + nb;
            if (comp[nid] != -1 || val[nid] < best - opt.flat_tol) continue;
            comp[nid] = c;
            stack.push_back({na, nb});
          }
        }
      }
    }
  }

  // Polish each component's best cell with alternating golden sections
  // inside its 3x3 grid window (the continuous optimum of a resolved
  // component lies within one cell of the discrete one).
  struct Refined {
    double a, b, v;
  };
  std::vector<Refined> refined;
  const auto psi = [&f](double a, double b) {
    return inscribed_staircase_area(f, a, b);
  };
  for (const Comp& C : comps) {
    const double lo1 = g1[std::max(C.best_i - 1, 0)];
    const double hi1 = g1[std::min(C.best_i + 1, n1 - 1)];
    const double lo2 = g2[std::max(C.best_j - 1, 0)];
    const double hi2 = g2[std::min(C.best_j + 1, n2 - 1)];
    double a = g1[C.best_i], b = g2[C.best_j];
    for (int sweep = 0; sweep < 400; ++sweep) {
      const double na =
          golden_max([&](double t) { return psi(t, b); }, lo1, std::min(hi1, b),
                     opt.x_tol);
      const double nb =
          golden_max([&](double t) { return psi(na, t); }, std::max(lo2, na), hi2,
                     opt.x_tol);
      const bool done = std::abs(na - a) < opt.x_tol && std::abs(nb - b) < opt.x_tol;
      a = na;
      b = nb;
      if (done) break;
    }
    double v = psi(a, b);
    if (v < C.best_v) {
      a = g1[C.best_i];
      b = g2[C.best_j];
      v = C.best_v;
    }
    refined.push_back({a, b, v});
  }

  CutPairOptimum out;
  for (const Refined& r : refined) out.value = std::max(out.value, r.v);
  std::vector<Refined> hits;
  for (const Refined& r : refined)
    if (r.v >= out.value - opt.flat_tol) hits.push_back(r);
  std::sort(hits.begin(), hits.end(), [](const Refined& p, const Refined& q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  });
  for (const Refined& r : hits) {
    if (!out.cut_pairs.empty() &&
        std::abs(out.cut_pairs.back().first - r.a) < 1e-7 &&
        std::abs(out.cut_pairs.back().second - r.b) < 1e-7)
      continue;
    out.cut_pairs.push_back({r.a, r.b});
  }
  for (size_t c = 0; c < comps.size(); ++c) {
    const Comp& C = comps[c];
    if (refined[c].v < out.value - opt.flat_tol) continue;
    if (C.max_i - C.min_i >= 3 || C.max_j - C.min_j >= 3) out.flat = true;
  }
  return out;
}

}  // namespace

CutPairOptimum maximize_inscribed_area(const Profile& f, const GridOptions& opt) {
  return max_pair_core(f, {0.0, 1.0}, {0.0, 1.0}, opt);
}

CutPairOptimum max_inscribed_area_on(const Profile& f,
                                     std::pair<double, double> box1,
                                     std::pair<double, double> box2,
                                     const GridOptions& opt) {
  return max_pair_core(f, box1, box2, opt);
}

KfReport analyze_profile(const Profile& f, const GridOptions& opt) {
  KfReport R;
  R.area = area_under(f);
  R.packing_cuts = minimize_circumscribed_area(f, opt);
  R.covering_cuts = maximize_inscribed_area(f, opt);
  R.circumscribed = R.packing_cuts.value;
  R.inscribed = R.covering_cuts.value;
  R.delta = R.area / R.circumscribed;
  R.theta = R.area / R.inscribed;
  R.packing_lattice = circumscribed_staircase_lattice(f, R.packing_cuts.cuts.front());
  const auto [c1, c2] = R.covering_cuts.cut_pairs.front();
  R.covering_lattice = inscribed_staircase_lattice(f, c1, c2);
  return R;
}

}  // namespace latticeq
