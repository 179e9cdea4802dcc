#pragma once

// JSON documents and plain-text tables for the library's result types.

#include <string>
#include <vector>

#include <json.hpp>

#include "fusionkit/cover.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/tensor.hpp"

namespace fusionkit {

using Json = nlohmann::ordered_json;

/// {algebra, level, basis, constants: [[i,j,k,N], ...], conjugation}
Json to_json(const FusionAlgebra& fa);
FusionAlgebra fusion_algebra_from_json(const Json& doc);

/// {left, right, terms: [{weight, mult}, ...]}
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& doc);

/// {highest, dimension, weights: [{weight, mult}, ...]}
Json to_json(const WeightSystem& ws);

/// {factors, blocks: [[element, ...], ...]}
Json to_json(const GroupPartition& p);
GroupPartition partition_from_json(const Json& doc);

Json to_json(const CoverReport& r);

/// Upper-triangular product table with a header row, one line per basis element.
std::string render_table(const FusionTable& table, const std::vector<std::string>& names);
/// The algebra's table with [i] labels followed by the [i] -> weight legend.
std::string render_fusion_algebra(const FusionAlgebra& fa);
/// Column-aligned "weight  mult" lines.
std::string render_terms(const std::map<Weight, Label>& terms);

}  // namespace fusionkit
