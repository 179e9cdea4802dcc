#include <doctest.h>

#include <set>

#include "fusionkit/errors.hpp"
#include "fusionkit/weight_system.hpp"
#include "fusionkit/weyl.hpp"

using namespace fusionkit;

namespace {

void for_each_box(std::size_t rank, Label max_label, const std::function<void(const Weight&)>& f) {
  Weight w(rank);
  while (true) {
    f(w);
    std::size_t i = 0;
    while (i < rank && w[i] == max_label) w[i++] = 0;
    if (i == rank) return;
    ++w[i];
  }
}

std::set<Weight> dominant_below_bruteforce(const RootSystem& rs, const Weight& lambda) {
  std::set<Weight> out;
  for_each_box(rs.rank(), rs.level_of(lambda), [&](const Weight& mu) {
    for (const auto& c : rs.simple_root_coords(lambda - mu))
      if (c < 0 || c.get_den() != 1) return;
    out.insert(mu);
  });
  return out;
}

}  // namespace

TEST_CASE("dominant weights below lambda against a box search") {
  for (const char* name : {"A2", "B2", "G2", "A3", "C3"}) {
    const RootSystem rs = build_root_system(parse_algebra(name));
    for_each_box(rs.rank(), 3, [&](const Weight& lambda) {
      const auto got = dominant_below(rs, lambda);
      CHECK(std::set<Weight>(got.begin(), got.end()) == dominant_below_bruteforce(rs, lambda));
    });
  }
}

TEST_CASE("A2 V(3,2) shells") {
  const RootSystem a2 = build_root_system(parse_algebra("A2"));
  const WeightSystem ws = racah_multiplicities(a2, Weight{3, 2});
  std::map<Label, int> shells;
  for (const auto& [w, m] : ws.mults()) ++shells[m];
  CHECK(shells == std::map<Label, int>{{1, 15}, {2, 9}, {3, 3}});
  CHECK(dimension(ws) == 42);
}

TEST_CASE("A2 closed-form dimension") {
  const RootSystem a2 = build_root_system(parse_algebra("A2"));
  for (Label a = 0; a <= 6; ++a)
    for (Label b = 0; b <= 6; ++b) {
      const Label expect = (a + b + 2) * (a + 1) * (b + 1) / 2;
      CHECK(dimension(racah_multiplicities(a2, Weight{a, b})) == expect);
      CHECK(weyl_dimension(a2, Weight{a, b}) == expect);
    }
}

TEST_CASE("small module dimensions") {
  const RootSystem b2 = build_root_system(parse_algebra("B2"));
  CHECK(weyl_dimension(b2, Weight{0, 1}) == 5);
  CHECK(weyl_dimension(b2, Weight{1, 0}) == 4);
  CHECK(weyl_dimension(b2, Weight{0, 2}) == 14);
  const RootSystem g2 = build_root_system(parse_algebra("G2"));
  CHECK(weyl_dimension(g2, Weight{0, 1}) == 14);
  CHECK(weyl_dimension(g2, Weight{1, 0}) == 7);
  CHECK(weyl_dimension(build_root_system(parse_algebra("D4")), Weight{0, 1, 0, 0}) == 28);
  CHECK(weyl_dimension(build_root_system(parse_algebra("C3")), Weight{0, 0, 1}) == 14);
}

TEST_CASE("Racah recursion equals Freudenthal, rank 2") {
  for (const char* name : {"A2", "B2", "G2"}) {
    const RootSystem rs = build_root_system(parse_algebra(name));
    for_each_box(2, 6, [&](const Weight& lambda) {
      const WeightSystem r = racah_multiplicities(rs, lambda, 1u << 30);
      const WeightSystem f = freudenthal_multiplicities(rs, lambda, 1u << 30);
      CHECK(r.mults() == f.mults());
      CHECK(mpz_class(dimension(r)) == weyl_dimension(rs, lambda));
    });
  }
}

TEST_CASE("Racah recursion equals Freudenthal, rank 3 and 4") {
  for (const char* name : {"A3", "B3", "C3", "D4"}) {
    const RootSystem rs = build_root_system(parse_algebra(name));
    std::size_t checked = 0;
    for_each_box(rs.rank(), 4, [&](const Weight& lambda) {
      if (weyl_dimension(rs, lambda) > 5000) return;
      const WeightSystem r = racah_multiplicities(rs, lambda);
      const WeightSystem f = freudenthal_multiplicities(rs, lambda);
      CHECK(r.mults() == f.mults());
      ++checked;
    });
    CHECK(checked > 10);
  }
}

TEST_CASE("weight systems are Weyl invariant") {
  const RootSystem g2 = build_root_system(parse_algebra("G2"));
  const WeightSystem ws = racah_multiplicities(g2, Weight{1, 1});
  for (const auto& [w, m] : ws.mults())
    for (std::size_t i = 0; i < 2; ++i) CHECK(ws.mult(reflect_simple(g2, w, i)) == m);
}

TEST_CASE("weight strings") {
  const RootSystem a2 = build_root_system(parse_algebra("A2"));
  const WeightSystem ws = racah_multiplicities(a2, Weight{1, 1});
  const auto s = weight_string(ws, Weight{0, 0}, a2.simple_root(0));
  CHECK(s.r == 1);
  CHECK(s.q == 1);
}

TEST_CASE("dimension bound") {
  const RootSystem a3 = build_root_system(parse_algebra("A3"));
  CHECK_THROWS_AS(racah_multiplicities(a3, Weight{6, 6, 6}, 1000), BoundExceeded);
}
