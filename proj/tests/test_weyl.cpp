#include <doctest.h>

#include <set>

#include "fusionkit/weyl.hpp"

using namespace fusionkit;

namespace {

// Closure of x under simple reflections, no cleverness.
std::set<Weight> orbit_by_closure(const RootSystem& rs, const Weight& x) {
  std::set<Weight> seen{x};
  std::vector<Weight> todo{x};
  while (!todo.empty()) {
    Weight y = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      Weight z = reflect_simple(rs, y, i);
      if (seen.insert(z).second) todo.push_back(z);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("Weyl group orders") {
  CHECK(weyl_group_words(build_root_system(parse_algebra("A2"))).size() == 6);
  CHECK(weyl_group_words(build_root_system(parse_algebra("B2"))).size() == 8);
  CHECK(weyl_group_words(build_root_system(parse_algebra("G2"))).size() == 12);
  CHECK(weyl_group_words(build_root_system(parse_algebra("A3"))).size() == 24);
  CHECK(weyl_group_words(build_root_system(parse_algebra("B3"))).size() == 48);
}

TEST_CASE("orbits agree with reflection closure") {
  for (const char* name : {"A2", "B2", "G2", "A3", "C3"}) {
    const RootSystem rs = build_root_system(parse_algebra(name));
    for (const Weight& x : {rs.rho(), rs.theta(), Weight(std::vector<Label>(rs.rank(), 0))}) {
      const auto ref = orbit_by_closure(rs, x);
      const auto got = weyl_orbit(rs, x);
      CHECK(std::set<Weight>(got.begin(), got.end()) == ref);
      std::set<Weight> from_words;
      for (const auto& w : weyl_group_words(rs)) from_words.insert(apply_word(rs, w, x));
      CHECK(from_words == ref);
    }
  }
}

TEST_CASE("dominant folding") {
  const RootSystem a2 = build_root_system(parse_algebra("A2"));
  auto f = fold_dominant(a2, Weight{-1, 2});
  CHECK(f.weight == Weight{1, 1});
  CHECK(f.sign == -1);
  CHECK(fold_dominant(a2, Weight{-1, 0}).sign == 0);
  CHECK(dominant_representative(a2, Weight{-2, -1}) == Weight{1, 2});
}

TEST_CASE("affine folding") {
  const RootSystem a1 = build_root_system(parse_algebra("A1"));
  // K = k + 2; r_0(x) = 2K - x for A1.
  CHECK(reflect_affine(a1, Weight{5}, 2) == Weight{3});
  auto on_wall = fold_alcove(a1, Weight{4}, 2);
  CHECK(on_wall.sign == 0);
  auto in = fold_alcove(a1, Weight{5}, 2);
  CHECK(in.sign == -1);
  CHECK(in.weight == Weight{3});
  CHECK(in_open_Fk(a1, Weight{3}, 2));
  CHECK_FALSE(in_open_Fk(a1, Weight{4}, 2));
}
