#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "latticeq/kf.hpp"
#include "latticeq/quad.hpp"
#include "latticeq/staircase.hpp"

using namespace latticeq;

TEST_SUITE("kf") {

TEST_CASE("cubic disk f = 1 - x^3") {
  const Profile f = parse_profile("poly:1,0,0,-1");
  const KfReport r = analyze_profile(f);

  CHECK(r.area == doctest::Approx(0.75).epsilon(1e-14));

  // packing: optimal cut 3/4, hexagon area 229/256, delta = 192/229
  CHECK(r.circumscribed == doctest::Approx(229.0 / 256.0).epsilon(1e-10));
  CHECK(r.delta == doctest::Approx(192.0 / 229.0).epsilon(1e-10));
  REQUIRE(r.packing_cuts.cuts.size() == 1);
  CHECK(r.packing_cuts.cuts[0] == doctest::Approx(0.75).epsilon(1e-6));
  CHECK(r.packing_cuts.flat_runs.empty());

  // covering: x2 = 4^(1/3) x1
  CHECK(r.inscribed == doctest::Approx(0.584734861333854159).epsilon(1e-10));
  CHECK(r.theta == doctest::Approx(1.282632607690184849).epsilon(1e-10));
  REQUIRE(r.covering_cuts.cut_pairs.size() == 1);
  CHECK(r.covering_cuts.cut_pairs[0].first ==
        doctest::Approx(0.491146506934588405).epsilon(1e-6));
  CHECK(r.covering_cuts.cut_pairs[0].second ==
        doctest::Approx(0.779646481778472213).epsilon(1e-6));
  CHECK_FALSE(r.covering_cuts.flat);

  CHECK(1.0 / r.delta + 1.0 / r.theta ==
        doctest::Approx(1.972354815111805546).epsilon(1e-10));

  // lattice determinants carry the hexagon areas
  CHECK(std::abs(r.packing_lattice.det) == doctest::Approx(r.circumscribed).epsilon(1e-12));
  CHECK(std::abs(r.covering_lattice.det) == doctest::Approx(r.inscribed).epsilon(1e-12));
}

TEST_CASE("parabolic disk f = 1 - x^2") {
  const Profile f = parse_profile("poly:1,0,-1");
  const KfReport r = analyze_profile(f);

  CHECK(r.area == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(r.circumscribed == doctest::Approx(23.0 / 27.0).epsilon(1e-10));
  CHECK(r.delta == doctest::Approx(18.0 / 23.0).epsilon(1e-10));
  REQUIRE(r.packing_cuts.cuts.size() == 1);
  CHECK(r.packing_cuts.cuts[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-6));

  // covering: x2 = sqrt(3) x1, x1 = 1/sqrt(9 - 2 sqrt 3)
  CHECK(r.inscribed == doctest::Approx(0.490766956022341495).epsilon(1e-10));
  CHECK(r.theta == doctest::Approx(1.358417999593920454).epsilon(1e-10));
  REQUIRE(r.covering_cuts.cut_pairs.size() == 1);
  CHECK(r.covering_cuts.cut_pairs[0].first ==
        doctest::Approx(0.425016651253308137).epsilon(1e-6));
  CHECK(r.covering_cuts.cut_pairs[0].second ==
        doctest::Approx(0.736150434033512243).epsilon(1e-6));
}

TEST_CASE("degenerate disks: square and triangle profiles") {
  // f == 1: every cut of the square is optimal, flagged as a flat run
  const Profile sq = make_pwl_profile({0.0, 1.0}, {1.0, 1.0});
  const KfReport rs = analyze_profile(sq);
  CHECK(rs.delta == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rs.theta == doctest::Approx(1.0).epsilon(1e-10));
  REQUIRE_FALSE(rs.packing_cuts.flat_runs.empty());
  CHECK(rs.packing_cuts.flat_runs.front().first == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(rs.packing_cuts.flat_runs.back().second == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rs.covering_cuts.flat);

  // f = 1 - x: the triangle, cuts match the (1/2, 1/2) quad closed form
  const Profile tr = make_polynomial_profile({1.0, -1.0});
  const KfReport rt = analyze_profile(tr);
  CHECK(rt.delta == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(rt.theta == doctest::Approx(1.5).epsilon(1e-10));
  REQUIRE(rt.packing_cuts.cuts.size() == 1);
  CHECK(rt.packing_cuts.cuts[0] == doctest::Approx(0.5).epsilon(1e-6));
  REQUIRE(rt.covering_cuts.cut_pairs.size() == 1);
  CHECK(rt.covering_cuts.cut_pairs[0].first == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(rt.covering_cuts.cut_pairs[0].second == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("numeric search reproduces the quadrilateral closed forms") {
  const double pts[][2] = {{0.6, 0.8},  {0.2, 0.9},   {0.55, 0.6},
                           {0.8, 0.8},  {0.45, 0.95}, {0.35, 0.72},
                           {0.05, 0.97}};
  for (const auto& p : pts) {
    const double x = p[0], y = p[1];
    CAPTURE(x);
    CAPTURE(y);
    const KfReport r = analyze_profile(quad_profile(x, y));
    CHECK(r.delta == doctest::Approx(packing_density(x, y)).epsilon(2e-9));
    CHECK(r.theta == doctest::Approx(covering_density(x, y)).epsilon(2e-9));
    CHECK(r.circumscribed ==
          doctest::Approx(min_circumscribed_area(x, y)).epsilon(2e-9));
    CHECK(r.inscribed == doctest::Approx(max_inscribed_area(x, y)).epsilon(2e-9));
    // representative cuts agree with the closed-form optimal cuts
    // (sorted: the tabulated member order differs from ascending)
    std::vector<double> cs = min_circumscribed_cuts(x, y).points;
    std::sort(cs.begin(), cs.end());
    REQUIRE(r.packing_cuts.cuts.size() == cs.size());
    for (size_t i = 0; i < cs.size(); ++i)
      CHECK(r.packing_cuts.cuts[i] == doctest::Approx(cs[i]).epsilon(1e-6));
    auto ps = max_inscribed_cuts(x, y).pairs;
    std::sort(ps.begin(), ps.end());
    REQUIRE(r.covering_cuts.cut_pairs.size() == ps.size());
    for (size_t i = 0; i < ps.size(); ++i) {
      CHECK(r.covering_cuts.cut_pairs[i].first ==
            doctest::Approx(ps[i].first).epsilon(2e-6).scale(1.0));
      CHECK(r.covering_cuts.cut_pairs[i].second ==
            doctest::Approx(ps[i].second).epsilon(2e-6).scale(1.0));
    }
  }
}

TEST_CASE("restricted pair search reproduces the component table") {
  const double pts[][2] = {{0.6, 0.8}, {0.55, 0.6}, {0.2, 0.9}};
  for (const auto& p : pts) {
    const double x = p[0], y = p[1];
    CAPTURE(x);
    CAPTURE(y);
    const Profile f = quad_profile(x, y);
    const InscribedComponents ic = inscribed_area_components(x, y);
    const double a11 = max_inscribed_area_on(f, {0.0, x}, {0.0, x}).value;
    const double a22 = max_inscribed_area_on(f, {x, 1.0}, {x, 1.0}).value;
    const double a12 = max_inscribed_area_on(f, {0.0, x}, {x, 1.0}).value;
    CHECK(a11 == doctest::Approx(ic.a11).epsilon(1e-8));
    CHECK(a22 == doctest::Approx(ic.a22).epsilon(1e-8));
    CHECK(a12 == doctest::Approx(ic.a12).epsilon(1e-8));
  }
}

TEST_CASE("two-member optimum is detected as two components") {
  // x = y = 0.8 has two optimal pairs: (0.8, 0.9) and (0.4, 0.8)
  const CutPairOptimum o = maximize_inscribed_area(quad_profile(0.8, 0.8));
  REQUIRE(o.cut_pairs.size() == 2);
  CHECK(o.cut_pairs[0].first == doctest::Approx(0.4).epsilon(1e-5));
  CHECK(o.cut_pairs[0].second == doctest::Approx(0.8).epsilon(1e-5));
  CHECK(o.cut_pairs[1].first == doctest::Approx(0.8).epsilon(1e-5));
  CHECK(o.cut_pairs[1].second == doctest::Approx(0.9).epsilon(1e-5));

  // x = y = 0.8 packing: two optimal cuts 0.5 and 0.875
  const CutOptimum c = minimize_circumscribed_area(quad_profile(0.8, 0.8));
  REQUIRE(c.cuts.size() == 2);
  CHECK(c.cuts[0] == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(c.cuts[1] == doctest::Approx(0.875).epsilon(1e-5));
}

}  // TEST_SUITE
