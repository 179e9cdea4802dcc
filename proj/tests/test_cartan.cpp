#include <doctest.h>

#include "fusionkit/errors.hpp"
#include "fusionkit/weyl.hpp"

using namespace fusionkit;

TEST_CASE("highest root and dual Coxeter numbers") {
  struct Row {
    const char* name;
    Weight theta;
    Label hv;
  };
  const Row rows[] = {{"A1", {2}, 2},       {"A2", {1, 1}, 3},     {"A4", {1, 0, 0, 1}, 5}, {"B2", {2, 0}, 3},
                      {"B3", {0, 1, 0}, 5}, {"C3", {2, 0, 0}, 4}, {"D4", {0, 1, 0, 0}, 6}, {"G2", {0, 1}, 4}};
  for (const auto& r : rows) {
    CAPTURE(r.name);
    const RootSystem rs = build_root_system(parse_algebra(r.name));
    CHECK(rs.theta() == r.theta);
    CHECK(rs.dual_coxeter() == r.hv);
    CHECK(rs.inner_product(rs.theta(), rs.theta()) == 2);
    CHECK(rs.level_of(rs.theta()) == 2);
    CHECK(rs.level_of(rs.rho()) + 1 == r.hv);
  }
}

TEST_CASE("positive root counts") {
  CHECK(build_root_system(parse_algebra("A3")).positive_roots().size() == 6);
  CHECK(build_root_system(parse_algebra("B3")).positive_roots().size() == 9);
  CHECK(build_root_system(parse_algebra("C3")).positive_roots().size() == 9);
  CHECK(build_root_system(parse_algebra("D4")).positive_roots().size() == 12);
  CHECK(build_root_system(parse_algebra("G2")).positive_roots().size() == 6);
}

TEST_CASE("simple roots are the Cartan rows") {
  const RootSystem g2 = build_root_system(parse_algebra("G2"));
  CHECK(g2.simple_root(0) == Weight{2, -1});
  CHECK(g2.simple_root(1) == Weight{-3, 2});
  const RootSystem b2 = build_root_system(parse_algebra("B2"));
  CHECK(b2.simple_root(0) == Weight{2, -1});
  CHECK(b2.simple_root(1) == Weight{-2, 2});
}

TEST_CASE("lattice membership") {
  const RootSystem a2 = build_root_system(parse_algebra("A2"));
  CHECK(a2.in_root_lattice(Weight{1, 1}));
  CHECK_FALSE(a2.in_root_lattice(Weight{1, 0}));
  CHECK(a2.in_root_lattice(Weight{3, 0}));
  const RootSystem d4 = build_root_system(parse_algebra("D4"));
  CHECK_FALSE(d4.in_root_lattice(Weight{1, 0, 0, 0}));
  CHECK(d4.in_root_lattice(Weight{0, 1, 0, 0}));
}

TEST_CASE("P_k^+ enumeration") {
  CHECK(enumerate_Pk(build_root_system(parse_algebra("A2")), 2).size() == 6);
  CHECK(enumerate_Pk(build_root_system(parse_algebra("A2")), 3).size() == 10);
  CHECK(enumerate_Pk(build_root_system(parse_algebra("B2")), 1).size() == 3);
  CHECK(enumerate_Pk(build_root_system(parse_algebra("B2")), 2).size() == 6);
  CHECK(enumerate_Pk(build_root_system(parse_algebra("G2")), 1).size() == 2);
}

TEST_CASE("conjugation") {
  const RootSystem a3 = build_root_system(parse_algebra("A3"));
  CHECK(conjugate_weight(a3, Weight{1, 2, 3}) == Weight{3, 2, 1});
  const RootSystem b2 = build_root_system(parse_algebra("B2"));
  CHECK(conjugate_weight(b2, Weight{1, 2}) == Weight{1, 2});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_algebra("E8"), InvalidAlgebra);
  CHECK_THROWS_AS(parse_algebra("B1"), InvalidAlgebra);
  CHECK_THROWS_AS(parse_algebra("G3"), InvalidAlgebra);
  CHECK_THROWS_AS(parse_weight("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_weight("(1,a)"), ParseError);
  CHECK(parse_weight("(1,2)") == Weight{1, 2});
  CHECK(parse_weight("3") == Weight{3});
  const RootSystem a2 = build_root_system(parse_algebra("A2"));
  CHECK_THROWS_AS(a2.check_rank(Weight{1, 2, 3}), DimensionMismatch);
}
