#include <doctest.h>

#include "fusionkit/diagram.hpp"
#include "fusionkit/errors.hpp"
#include "fusionkit/fixtures.hpp"
#include "fusionkit/io.hpp"

using namespace fusionkit;

TEST_CASE("fusion algebra JSON round trip") {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    const FusionAlgebra fa = build_fusion_algebra(build_root_system(parse_algebra(name)), 2);
    const Json doc = to_json(fa);
    CHECK(fusion_algebra_from_json(doc) == fa);
    CHECK(fusion_algebra_from_json(Json::parse(doc.dump())) == fa);
  }
}

TEST_CASE("decomposition and partition round trip") {
  const Decomposition d = racah_speiser(build_root_system(parse_algebra("G2")), Weight{1, 1}, Weight{0, 1});
  CHECK(decomposition_from_json(Json::parse(to_json(d).dump())) == d);
  const GroupPartition p = fixtures::w3_11_cover().partition;
  CHECK(partition_from_json(Json::parse(to_json(p).dump())) == p);
}

TEST_CASE("malformed JSON is rejected") {
  Json doc = to_json(build_fusion_algebra(build_root_system(parse_algebra("A1")), 2));
  doc["algebra"] = "Q7";
  CHECK_THROWS(fusion_algebra_from_json(doc));
  CHECK_THROWS(decomposition_from_json(Json::object()));
}

TEST_CASE("table text") {
  const NamedTable t = fixtures::a1_level2();
  const std::string text = render_table(t.table, t.names);
  CHECK(text.find("[i].[j]") == 0);
  CHECK(text.find("[0]+[1]") != std::string::npos);
  const FusionAlgebra fa = build_fusion_algebra(build_root_system(parse_algebra("A1")), 2);
  CHECK(render_fusion_algebra(fa).find("[2] = (2)") != std::string::npos);
}

TEST_CASE("product notation") {
  const std::vector<std::string> names{"0", "1", "2", "9"};
  const SparseRow row = parse_product("[0]+[1]+[2]+2[9]", names);
  CHECK(row == SparseRow{{0, 1}, {1, 1}, {2, 1}, {3, 2}});
  CHECK(format_product(row, names) == "[0]+[1]+[2]+2[9]");
  CHECK_THROWS_AS(parse_product("[0]+[7]", names), ParseError);
  CHECK_THROWS_AS(parse_product("[0]+", names), ParseError);
}

TEST_CASE("SVG output") {
  DiagramSpec spec;
  spec.highest = Weight{2, 1};
  spec.level = 3;
  const std::string a = render_svg(spec);
  CHECK(a == render_svg(spec));
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(a.find("class=\"affine\"") != std::string::npos);
  CHECK(a.find("data-mult=\"2\"") != std::string::npos);
  CHECK(a.find("-0.000000") == std::string::npos);

  spec.show_mults = false;
  spec.show_axes = false;
  const std::string b = render_svg(spec);
  CHECK(b.find("class=\"mult\"") == std::string::npos);
  CHECK(b.find("class=\"weyl\"") == std::string::npos);

  for (const char* name : {"B2", "G2"}) {
    DiagramSpec s;
    s.algebra = parse_algebra(name);
    s.highest = Weight{1, 1};
    CHECK_NOTHROW(render_svg(s));
  }
  DiagramSpec bad;
  bad.algebra = parse_algebra("A3");
  CHECK_THROWS_AS(render_svg(bad), std::invalid_argument);
}
