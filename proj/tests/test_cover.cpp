#include <doctest.h>

#include "fusionkit/errors.hpp"
#include "fusionkit/fixtures.hpp"

using namespace fusionkit;

TEST_CASE("fixture covers") {
  for (const auto& fc : {fixtures::a1_level2_cover(), fixtures::a1_level3_cover(), fixtures::a2_level2_cover(),
                         fixtures::w3_11_cover()}) {
    CAPTURE(fc.caption);
    const CoverReport r = verify_cover(fc.partition, fc.table.table, 0, fc.bijection);
    CHECK(r.covers);
    CHECK(r.mismatches.empty());
    CHECK(is_associative(fc.partition));
  }
  CHECK(fixtures::w3_11_cover().partition.group().order() == 9);
}

TEST_CASE("a wrong bijection is reported") {
  const auto fc = fixtures::a1_level3_cover();
  const CoverReport r = verify_cover(fc.partition, fc.table.table, 0, {0, 2, 1, 3});
  CHECK_FALSE(r.covers);
  CHECK_FALSE(r.mismatches.empty());
}

TEST_CASE("Hamming covers of sl2") {
  for (Label k = 1; k <= 8; ++k) {
    auto [p, report] = sl2_cover(k);
    CHECK(report.covers);
    CHECK(p.group().order() == (std::size_t{1} << k));
  }
  CHECK_THROWS_AS(hamming_partition(20, 1000), BoundExceeded);
}

TEST_CASE("coefficient 2 is unsupported") {
  const RootSystem a2 = build_root_system(parse_algebra("A2"));
  const FusionAlgebra fa = build_fusion_algebra(a2, 3);
  const auto p = hamming_partition(3);
  std::vector<std::size_t> id(fa.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  CHECK_THROWS_AS(verify_cover(p, fa.table(), 0, id), UnsupportedCoefficient);
}

TEST_CASE("partition validation") {
  FiniteAbelianGroup z3({3});
  CHECK_THROWS(GroupPartition(z3, {{{0}}, {{1}}}));
  CHECK_THROWS(GroupPartition(z3, {{{1}}, {{0}, {2}}}));
  CHECK_THROWS(GroupPartition(z3, {{{0}}, {{1}, {2}}, {{2}}}));
  CHECK_NOTHROW(GroupPartition(z3, {{{0}}, {{1}, {2}}}));
  CHECK(GroupPartition(z3, {{{0}}, {{1}}, {{2}}}).size() == 3);
}

TEST_CASE("group arithmetic") {
  FiniteAbelianGroup g({2, 3});
  CHECK(g.order() == 6);
  CHECK(g.add({1, 2}, {1, 2}) == GroupElement{0, 1});
  for (std::size_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element(i)) == i);
  CHECK(element_to_string({1, 0, 1}) == "(1,0,1)");
}

TEST_CASE("block products") {
  const GroupPartition h = hamming_partition(2);
  CHECK(block_product(h, 2, 2) == std::vector<std::size_t>{0});
  CHECK(block_product(h, 1, 1) == std::vector<std::size_t>{0, 2});
  for (std::size_t j = 0; j < h.size(); ++j) CHECK(block_product(h, 0, j) == std::vector<std::size_t>{j});
}

TEST_CASE("singleton partition gives the group algebra") {
  FiniteAbelianGroup g({2, 3});
  std::vector<std::vector<GroupElement>> blocks;
  for (std::size_t i = 0; i < g.order(); ++i) blocks.push_back({g.element(i)});
  const GroupPartition p(g, blocks);
  CHECK(is_associative(p));
  const FusionTable t = partition_table(p);
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      CHECK(t.product(a, b) == SparseRow{{g.index_of(g.add(g.element(a), g.element(b))), 1}});
}

TEST_CASE("W3(1,1) table") {
  const NamedTable w = fixtures::w3_fixture();
  CHECK(format_product(w.table.product(1, 1), w.names) == "[0]+[1]");
  CHECK(format_product(w.table.product(2, 4), w.names) == "[0]");
  for (std::size_t a : {0, 2, 4})
    for (std::size_t b : {0, 2, 4})
      for (const auto& [c, m] : w.table.product(a, b)) CHECK((c == 0 || c == 2 || c == 4));
}

TEST_CASE("Z_3^2 covers the computed A2 level-2 algebra") {
  const auto fc = fixtures::a2_level2_cover();
  const FusionTable computed =
      build_fusion_algebra(build_root_system(parse_algebra("A2")), 2).relabeled(fixtures::a2_level2_weights());
  CHECK(verify_cover(fc.partition, computed, 0, fc.bijection).covers);
}
