#pragma once

// Published fusion tables, label-to-weight maps and group covers, kept as data.

#include <map>
#include <string>
#include <vector>

#include "fusionkit/cover.hpp"
#include "fusionkit/fusion.hpp"

namespace fusionkit {

/// A table indexed by bracket labels such as [0], [1], [9].
struct NamedTable {
  std::string caption;
  std::vector<std::string> names;  // names[i] labels index i, without brackets
  FusionTable table;
};

/// Parses "[0]+[1]+2[9]" against the given bracket names. Throws ParseError.
SparseRow parse_product(const std::string& text, const std::vector<std::string>& names);
/// Inverse of parse_product; terms in index order.
std::string format_product(const SparseRow& row, const std::vector<std::string>& names);

/// Builds a symmetric table from its upper triangle (row i lists products [i].[j] for j >= i).
NamedTable table_from_upper(std::string caption, std::vector<std::string> names,
                            const std::vector<std::vector<std::string>>& upper);

namespace fixtures {

NamedTable a1_level2();       // also B2 level 1 under b2_level1_weights
NamedTable a1_level3();
NamedTable a2_level2();
NamedTable a2_level3_part();  // basis [0], [1], [2], [9] of the ten primaries
NamedTable b2_level2();
NamedTable w3_11();           // W3(1,1) fusion rules
inline NamedTable w3_fixture() { return w3_11(); }

/// Weights for the bracket labels of the tables above, in table order.
std::vector<Weight> a1_level2_weights();
std::vector<Weight> a1_level3_weights();
std::vector<Weight> a2_level2_weights();
std::vector<Weight> b2_level1_weights();
std::vector<Weight> b2_level2_weights();
std::vector<Weight> a2_level3_weights();       // [0]..[9]
std::vector<Weight> a2_level3_part_weights();  // [0], [1], [2], [9]

struct FixtureCover {
  std::string caption;
  GroupPartition partition;
  NamedTable table;
  std::vector<std::size_t> bijection;  // table index -> block index
};

FixtureCover a1_level2_cover();  // Z_2^2
FixtureCover a1_level3_cover();  // Z_2^3
FixtureCover a2_level2_cover();  // Z_3^2
FixtureCover w3_11_cover();     // Z_3^2

}  // namespace fixtures

}  // namespace fusionkit
