#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "latticeq/profile.hpp"
#include "latticeq/staircase.hpp"

using namespace latticeq;

TEST_SUITE("profile") {

TEST_CASE("polynomial profiles evaluate and integrate") {
  const Profile f = make_polynomial_profile({1.0, 0.0, 0.0, -1.0});  // 1 - x^3
  CHECK(profile_value(f, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(profile_value(f, 0.5) == doctest::Approx(0.875).epsilon(1e-15));
  CHECK(profile_value(f, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(area_under(f) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(profile_knots(f).size() == 2);

  const Profile g = make_polynomial_profile({1.0, 0.0, -1.0});  // 1 - x^2
  CHECK(area_under(g) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("polynomial validation rejects non-disks") {
  // f(0) != 1
  CHECK_THROWS_AS(make_polynomial_profile({0.9, 0.0, -0.5}), std::domain_error);
  // increasing somewhere (f' > 0 near 0)
  CHECK_THROWS_AS(make_polynomial_profile({1.0, 0.5, -1.5}), std::domain_error);
  // decreasing but convex (f'' > 0): subgraph is not a convex disk
  CHECK_THROWS_AS(make_polynomial_profile({1.0, -1.5, 0.5}), std::domain_error);
  // f(1) < 0
  CHECK_THROWS_AS(make_polynomial_profile({1.0, -2.0}), std::domain_error);
  // boundary-legal: linear f = 1 - x
  CHECK_NOTHROW(make_polynomial_profile({1.0, -1.0}));
  // constant 1 (square disk)
  CHECK_NOTHROW(make_polynomial_profile({1.0}));
}

TEST_CASE("piecewise-linear profiles") {
  const Profile f = make_pwl_profile({0.0, 0.5, 1.0}, {1.0, 0.8, 0.2});
  CHECK(profile_value(f, 0.25) == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(profile_value(f, 0.75) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(area_under(f) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(profile_knots(f).size() == 3);
  // clamped outside [0, 1]
  CHECK(profile_value(f, -0.5) == doctest::Approx(1.0));
  CHECK(profile_value(f, 1.5) == doctest::Approx(0.2));

  // slopes increasing (convex kink): not a convex disk
  CHECK_THROWS_AS(make_pwl_profile({0.0, 0.5, 1.0}, {1.0, 0.5, 0.4}),
                  std::domain_error);
  // increasing values
  CHECK_THROWS_AS(make_pwl_profile({0.0, 0.5, 1.0}, {1.0, 1.1, 0.2}),
                  std::domain_error);
  // knots must span [0, 1]
  CHECK_THROWS_AS(make_pwl_profile({0.1, 1.0}, {1.0, 0.5}), std::domain_error);
  CHECK_THROWS_AS(make_pwl_profile({0.0, 0.9}, {1.0, 0.5}), std::domain_error);
  // knots must increase
  CHECK_THROWS_AS(make_pwl_profile({0.0, 0.5, 0.5, 1.0}, {1.0, 0.8, 0.7, 0.2}),
                  std::domain_error);
  // f(0) must be 1
  CHECK_THROWS_AS(make_pwl_profile({0.0, 1.0}, {0.99, 0.2}), std::domain_error);
}

TEST_CASE("profile parsing round trips") {
  const Profile f = parse_profile("poly:1,0,0,-1");
  CHECK(f.kind == Profile::Kind::polynomial);
  REQUIRE(f.coefficients.size() == 4);
  CHECK(f.coefficients[3] == doctest::Approx(-1.0));
  CHECK(profile_value(parse_profile(profile_string(f)), 0.5) ==
        doctest::Approx(0.875).epsilon(1e-15));

  const Profile g = parse_profile("pwl:0:1,0.5:0.8,1:0.2");
  CHECK(g.kind == Profile::Kind::piecewise_linear);
  REQUIRE(g.knots.size() == 3);
  CHECK(g.values[1] == doctest::Approx(0.8));
  CHECK(area_under(parse_profile(profile_string(g))) ==
        doctest::Approx(0.7).epsilon(1e-15));

  CHECK_THROWS_AS(parse_profile("spline:1,2,3"), std::domain_error);
  CHECK_THROWS_AS(parse_profile("poly:"), std::domain_error);
  CHECK_THROWS_AS(parse_profile("pwl:0:1,bad"), std::domain_error);
  CHECK_THROWS_AS(parse_profile("no-colon"), std::domain_error);
}

}  // TEST_SUITE

TEST_SUITE("staircase") {

TEST_CASE("circumscribed staircase hexagon") {
  const Profile f = make_polynomial_profile({1.0, 0.0, 0.0, -1.0});
  const std::vector<Point2> S = circumscribed_staircase(f, 0.5);
  CHECK(S.size() == 6);
  CHECK(ring_area(S) == doctest::Approx(0.9375).epsilon(1e-14));
  CHECK(circumscribed_staircase_area(f, 0.5) == doctest::Approx(0.9375).epsilon(1e-14));

  // degenerate cuts collapse to the unit square
  CHECK(ring_area(circumscribed_staircase(f, 0.0)) == doctest::Approx(1.0));
  CHECK(circumscribed_staircase(f, 0.0).size() == 4);
  CHECK(ring_area(circumscribed_staircase(f, 1.0)) == doctest::Approx(1.0));

  CHECK_THROWS_AS(circumscribed_staircase(f, 1.5), std::domain_error);
}

TEST_CASE("inscribed staircase hexagon") {
  const Profile f = make_polynomial_profile({1.0, 0.0, 0.0, -1.0});
  const std::vector<Point2> S = inscribed_staircase(f, 0.25, 0.75);
  CHECK(S.size() == 6);
  CHECK(ring_area(S) == doctest::Approx(0.53515625).epsilon(1e-14));
  CHECK(inscribed_staircase_area(f, 0.25, 0.75) ==
        doctest::Approx(0.53515625).epsilon(1e-14));

  // x1 = 0 and x1 = x2 degenerate to rectangles
  CHECK(inscribed_staircase(f, 0.0, 0.5).size() == 4);
  CHECK(ring_area(inscribed_staircase(f, 0.0, 0.5)) ==
        doctest::Approx(0.5 * 0.875).epsilon(1e-14));
  CHECK(inscribed_staircase(f, 0.5, 0.5).size() == 4);
  CHECK(ring_area(inscribed_staircase(f, 0.5, 0.5)) ==
        doctest::Approx(0.5 * 0.875).epsilon(1e-14));

  CHECK_THROWS_AS(inscribed_staircase(f, 0.75, 0.25), std::domain_error);
  // zero-area corner case
  CHECK_THROWS_AS(inscribed_staircase(f, 0.0, 0.0), std::domain_error);
}

TEST_CASE("staircase lattices carry the hexagon area as determinant") {
  const Profile f = make_polynomial_profile({1.0, 0.0, 0.0, -1.0});
  const Lattice2 Lp = circumscribed_staircase_lattice(f, 0.3);
  CHECK(std::abs(Lp.det) ==
        doctest::Approx(circumscribed_staircase_area(f, 0.3)).epsilon(1e-14));
  const Lattice2 Lc = inscribed_staircase_lattice(f, 0.25, 0.75);
  CHECK(std::abs(Lc.det) ==
        doctest::Approx(inscribed_staircase_area(f, 0.25, 0.75)).epsilon(1e-14));
}

}  // TEST_SUITE
