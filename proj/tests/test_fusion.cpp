#include <doctest.h>

#include <set>

#include "fusionkit/errors.hpp"
#include "fusionkit/fixtures.hpp"
#include "fusionkit/orbits.hpp"
#include "fusionkit/weyl.hpp"

using namespace fusionkit;

namespace {

// Independent fold: search w in W and small translations K*t (t a sum of long
// roots) for the image of x in the closed alcove.
SignedWeight fold_by_search(const RootSystem& rs, const Weight& x, Label k) {
  const Label K = k + rs.dual_coxeter();
  const auto longs = long_root_orbit(rs);
  std::set<Weight> shifts{Weight(rs.rank())};
  for (int depth = 0; depth < 3; ++depth) {
    std::set<Weight> next = shifts;
    for (const Weight& s : shifts)
      for (const Weight& r : longs) next.insert(s + r);
    shifts = std::move(next);
  }
  for (const auto& word : weyl_group_words(rs)) {
    const Weight wx = apply_word(rs, word, x);
    for (const Weight& t : shifts) {
      const Weight y = wx + K * t;
      bool closed = rs.level_of(y) <= K, open = rs.level_of(y) < K;
      for (Label c : y) {
        closed = closed && c >= 0;
        open = open && c > 0;
      }
      if (!closed) continue;
      if (!open) return {y, 0};
      return {y, word.size() % 2 ? -1 : 1};
    }
  }
  FAIL("no alcove image found");
  return {};
}

std::map<Weight, Label> fusion_by_search(const RootSystem& rs, const Weight& l, const Weight& m, Label k) {
  std::map<Weight, Label> out;
  const WeightSystem ws = racah_multiplicities(rs, l);
  for (const auto& [beta, mult] : ws.mults()) {
    const SignedWeight f = fold_by_search(rs, beta + m + rs.rho(), k);
    if (f.sign) out[f.weight - rs.rho()] += f.sign * mult;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void check_fixture(const NamedTable& t, const RootSystem& rs, Label k, const std::vector<Weight>& weights) {
  CAPTURE(t.caption);
  const FusionAlgebra fa = build_fusion_algebra(rs, k);
  CHECK(fa.relabeled(weights) == t.table);
}

}  // namespace

TEST_CASE("Kac-Walton against brute-force affine folding") {
  for (const char* name : {"A2", "B2"}) {
    const RootSystem rs = build_root_system(parse_algebra(name));
    for (Label k = 1; k <= 6; ++k)
      for (const Weight& l : enumerate_Pk(rs, k))
        for (const Weight& m : enumerate_Pk(rs, k)) {
          if (l[0] > 2 || l[1] > 2 || m[0] > 2 || m[1] > 2) continue;
          CAPTURE(name);
          CAPTURE(k);
          CAPTURE(l.to_string());
          CAPTURE(m.to_string());
          CHECK(kac_walton(rs, l, m, k) == fusion_by_search(rs, l, m, k));
        }
  }
}

TEST_CASE("published tables") {
  const RootSystem a1 = build_root_system(parse_algebra("A1"));
  const RootSystem a2 = build_root_system(parse_algebra("A2"));
  const RootSystem b2 = build_root_system(parse_algebra("B2"));
  check_fixture(fixtures::a1_level2(), a1, 2, fixtures::a1_level2_weights());
  check_fixture(fixtures::a1_level3(), a1, 3, fixtures::a1_level3_weights());
  check_fixture(fixtures::a2_level2(), a2, 2, fixtures::a2_level2_weights());
  check_fixture(fixtures::b2_level2(), b2, 2, fixtures::b2_level2_weights());
  check_fixture(fixtures::a1_level2(), b2, 1, fixtures::b2_level1_weights());

  const FusionAlgebra a2k3 = build_fusion_algebra(a2, 3);
  CHECK(a2k3.relabeled(fixtures::a2_level3_part_weights()) == fixtures::a2_level3_part().table);
  CHECK(a2k3.coefficient(Weight{1, 1}, Weight{1, 1}, Weight{1, 1}) == 2);
}

TEST_CASE("B2 level 1") {
  const RootSystem b2 = build_root_system(parse_algebra("B2"));
  const FusionAlgebra fa = build_fusion_algebra(b2, 1);
  const Weight w0{0, 0}, w1{0, 1}, w2{1, 0};
  CHECK(fa.coefficient(w1, w1, w0) == 1);
  CHECK(fa.coefficient(w1, w2, w2) == 1);
  CHECK(fa.coefficient(w2, w2, w0) == 1);
  CHECK(fa.coefficient(w2, w2, w1) == 1);
  CHECK(fa.coefficient(w2, w2, w2) == 0);
}

TEST_CASE("fusion converges to the tensor product") {
  const RootSystem a2 = build_root_system(parse_algebra("A2"));
  const Weight l{3, 2}, m{1, 0}, top{4, 2};
  CHECK(kac_walton(a2, l, m, 5).count(top) == 0);
  for (Label k = 6; k <= 9; ++k) CHECK(kac_walton(a2, l, m, k).at(top) == 1);
  CHECK_THROWS_AS(kac_walton(a2, l, m, 4), LevelError);
}

TEST_CASE("axioms on every small algebra") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    const RootSystem rs = build_root_system(parse_algebra(name));
    for (Label k = 1; k <= 3; ++k) {
      const FusionAlgebra fa = build_fusion_algebra(rs, k);
      CHECK(check_fusion_axioms(fa.table(), 0, fa.conjugation()).empty());
      for (std::size_t i = 0; i < fa.size(); ++i)
        CHECK(fa.basis()[fa.conjugation()[i]] == conjugate_weight(rs, fa.basis()[i]));
    }
  }
}

TEST_CASE("axiom checker catches broken tables") {
  NamedTable t = fixtures::a1_level2();
  FusionTable bad = t.table;
  bad.set_product(1, 2, {{0, 1}});
  CHECK_FALSE(check_fusion_axioms(bad, 0, {0, 1, 2}).empty());
  CHECK_FALSE(check_fusion_axioms(t.table, 0, {0, 2, 1}).empty());

  // Commutative, symmetric N_{abc}, but (1.1).2 != 1.(1.2).
  const NamedTable skew = table_from_upper("skew", {"0", "1", "2"}, {{"[0]", "[1]", "[2]"}, {"[0]+[2]", "[1]+[2]"}, {"[0]+[1]"}});
  const auto problems = check_fusion_axioms(skew.table, 0, {0, 1, 2});
  REQUIRE_FALSE(problems.empty());
  for (const auto& msg : problems) CHECK(msg.find("not associative") == 0);
}

TEST_CASE("level-1 group fusion") {
  for (int n = 2; n <= 6; ++n) {
    const RootSystem rs = build_root_system(AlgebraId(Family::A, n - 1));
    const FusionAlgebra g = level1_group_fusion(rs);
    CHECK(g == build_fusion_algebra(rs, 1));
    CHECK(group_invariants(g) == std::vector<Label>{n});
  }
  const RootSystem d4 = build_root_system(parse_algebra("D4"));
  CHECK(group_invariants(level1_group_fusion(d4)) == std::vector<Label>{2, 2});
  CHECK(group_invariants(level1_group_fusion(build_root_system(parse_algebra("D5")))) == std::vector<Label>{4});
}

TEST_CASE("sl2 direct rule") {
  CHECK(sl2_fusion_direct(3, parse_spin("1"), parse_spin("1/2")) ==
        std::map<Spin, Label>{{Spin{1}, 1}, {Spin{3}, 1}});
  CHECK(sl2_fusion_direct(3, parse_spin("1"), parse_spin("3/2")) == std::map<Spin, Label>{{Spin{1}, 1}});
  CHECK_THROWS_AS(sl2_fusion_direct(2, parse_spin("3/2"), parse_spin("0")), std::out_of_range);
  const RootSystem a1 = build_root_system(parse_algebra("A1"));
  for (Label k = 1; k <= 8; ++k)
    for (Label a = 0; a <= k; ++a)
      for (Label b = 0; b <= k; ++b) {
        const auto kw = kac_walton(a1, Weight{a}, Weight{b}, k);
        std::map<Spin, Label> as_spins;
        for (const auto& [w, c] : kw) as_spins[Spin{w[0]}] = c;
        CHECK(sl2_fusion_direct(k, Spin{a}, Spin{b}) == as_spins);
        for (Label c = 0; c <= k; ++c)
          CHECK(p_admissible(a + 1, b + 1, c + 1, k + 2) == (kw.count(Weight{c}) == 1));
      }
}

TEST_CASE("spin parsing") {
  CHECK(parse_spin("3/2").twice == 3);
  CHECK(parse_spin("2").twice == 4);
  CHECK(Spin{3}.to_string() == "3/2");
  CHECK(Spin{4}.to_string() == "2");
  CHECK_THROWS(parse_spin("1/3"));
  CHECK_THROWS(parse_spin("-1"));
}

TEST_CASE("basis bound") {
  const RootSystem a3 = build_root_system(parse_algebra("A3"));
  CHECK_THROWS_AS(build_fusion_algebra(a3, 10, {.max_basis = 50}), BoundExceeded);
}

TEST_CASE("experimental probes on the worked instance") {
  const RootSystem a2 = build_root_system(parse_algebra("A2"));
  const Weight l{3, 2}, m{1, 0}, beta{3, 2};
  for (Label k = 6; k <= 10; ++k) {
    const auto c = experimental::corollary_threshold_check(a2, l, m, beta, k);
    CHECK(c.held);
    const auto p = experimental::conjecture1_probe(a2, l, m, beta, k);
    CHECK(p.status != experimental::ProbeStatus::Violated);
  }
}
