#include "fusionkit/io.hpp"

#include <algorithm>
#include <sstream>

#include "fusionkit/errors.hpp"
#include "fusionkit/fixtures.hpp"

namespace fusionkit {

namespace {

Weight weight_from(const Json& j) { return Weight(j.get<std::vector<Label>>()); }

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + " document: " + e.what(), 0);
  }
}

}  // namespace

Json to_json(const FusionAlgebra& fa) {
  Json doc;
  doc["algebra"] = fa.algebra().to_string();
  doc["level"] = fa.level();
  doc["basis"] = Json::array();
  for (const Weight& w : fa.basis()) doc["basis"].push_back(w.labels());
  doc["constants"] = Json::array();
  for (std::size_t i = 0; i < fa.size(); ++i)
    for (std::size_t j = 0; j < fa.size(); ++j)
      for (const auto& [k, n] : fa.table().product(i, j)) doc["constants"].push_back({i, j, k, n});
  doc["conjugation"] = fa.conjugation();
  return doc;
}

FusionAlgebra fusion_algebra_from_json(const Json& doc) {
  return guarded("fusion algebra", [&] {
    const AlgebraId id = parse_algebra(doc.at("algebra").get<std::string>());
    std::vector<Weight> basis;
    for (const auto& w : doc.at("basis")) basis.push_back(weight_from(w));
    const std::size_t n = basis.size();
    std::vector<SparseRow> rows(n * n);
    for (const auto& c : doc.at("constants")) {
      const auto i = c.at(0).get<std::size_t>(), j = c.at(1).get<std::size_t>(), k = c.at(2).get<std::size_t>();
      if (i >= n || j >= n) throw std::invalid_argument("constant index out of range");
      rows[i * n + j].emplace_back(k, c.at(3).get<Label>());
    }
    FusionTable table(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table.set_product(i, j, std::move(rows[i * n + j]));
    return FusionAlgebra(id, doc.at("level").get<Label>(), std::move(basis), std::move(table),
                         doc.at("conjugation").get<std::vector<std::size_t>>());
  });
}

Json to_json(const Decomposition& d) {
  Json doc;
  doc["left"] = d.left.labels();
  doc["right"] = d.right.labels();
  doc["terms"] = Json::array();
  for (const auto& [nu, m] : d.terms) doc["terms"].push_back({{"weight", nu.labels()}, {"mult", m}});
  return doc;
}

Decomposition decomposition_from_json(const Json& doc) {
  return guarded("decomposition", [&] {
    Decomposition d{weight_from(doc.at("left")), weight_from(doc.at("right")), {}};
    for (const auto& t : doc.at("terms")) d.terms.emplace(weight_from(t.at("weight")), t.at("mult").get<Label>());
    return d;
  });
}

Json to_json(const WeightSystem& ws) {
  Json doc;
  doc["highest"] = ws.highest().labels();
  doc["dimension"] = dimension(ws);
  doc["weights"] = Json::array();
  for (const auto& [beta, m] : ws.mults()) doc["weights"].push_back({{"weight", beta.labels()}, {"mult", m}});
  return doc;
}

Json to_json(const GroupPartition& p) {
  Json doc;
  doc["factors"] = p.group().factors();
  doc["blocks"] = p.blocks();
  return doc;
}

GroupPartition partition_from_json(const Json& doc) {
  return guarded("partition", [&] {
    return GroupPartition(FiniteAbelianGroup(doc.at("factors").get<std::vector<Label>>()),
                          doc.at("blocks").get<std::vector<std::vector<GroupElement>>>());
  });
}

Json to_json(const CoverReport& r) {
  Json doc;
  doc["covers"] = r.covers;
  doc["mismatches"] = r.mismatches;
  return doc;
}

std::string render_table(const FusionTable& table, const std::vector<std::string>& names) {
  const std::size_t n = table.size();
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
  cells[0][0] = "[i].[j]";
  for (std::size_t i = 0; i < n; ++i) {
    cells[0][i + 1] = "[" + names.at(i) + "]";
    cells[i + 1][0] = "[" + names.at(i) + "]";
    for (std::size_t j = i; j < n; ++j) cells[i + 1][j + 1] = format_product(table.product(i, j), names);
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c <= n; ++c) {
      line += row[c];
      if (c < n) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string render_fusion_algebra(const FusionAlgebra& fa) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < fa.size(); ++i) names.push_back(std::to_string(i));
  std::ostringstream out;
  out << fa.algebra().to_string() << " level " << fa.level() << "\n\n" << render_table(fa.table(), names) << '\n';
  for (std::size_t i = 0; i < fa.size(); ++i) out << "[" << i << "] = (" << fa.basis()[i].to_string() << ")\n";
  return out.str();
}

std::string render_terms(const std::map<Weight, Label>& terms) {
  std::size_t width = 6;
  for (const auto& [nu, m] : terms) width = std::max(width, nu.to_string().size() + 2);
  std::ostringstream out;
  out << "weight" << std::string(width - 6 + 2, ' ') << "mult\n";
  for (const auto& [nu, m] : terms) {
    const std::string w = "(" + nu.to_string() + ")";
    out << w << std::string(width - w.size() + 2, ' ') << m << '\n';
  }
  return out.str();
}

}  // namespace fusionkit
