#include "fusionkit/cover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fusionkit/errors.hpp"

namespace fusionkit {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Label> factors, std::size_t max_order)
    : factors_(std::move(factors)) {
  for (Label m : factors_) {
    if (m < 1) throw std::invalid_argument("cyclic factor orders must be >= 1");
    if (order_ > max_order / static_cast<std::size_t>(m))
      throw BoundExceeded("group order exceeds the bound " + std::to_string(max_order));
    order_ *= static_cast<std::size_t>(m);
  }
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  if (a.size() != factors_.size() || b.size() != factors_.size())
    throw std::invalid_argument("group element has the wrong length");
  GroupElement c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = ((a[i] + b[i]) % factors_[i] + factors_[i]) % factors_[i];
  return c;
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& g) const {
  if (g.size() != factors_.size()) throw std::invalid_argument("group element has the wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < 0 || g[i] >= factors_[i]) throw std::invalid_argument("group element " + element_to_string(g) + " is not reduced");
    idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(g[i]);
  }
  return idx;
}

GroupElement FiniteAbelianGroup::element(std::size_t index) const {
  if (index >= order_) throw std::out_of_range("group element index out of range");
  GroupElement g(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    g[i] = static_cast<Label>(index % static_cast<std::size_t>(factors_[i]));
    index /= static_cast<std::size_t>(factors_[i]);
  }
  return g;
}

std::string element_to_string(const GroupElement& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

GroupPartition::GroupPartition(FiniteAbelianGroup group, std::vector<std::vector<GroupElement>> blocks)
    : group_(std::move(group)), blocks_(std::move(blocks)), block_of_(group_.order(), blocks_.size()) {
  if (blocks_.empty() || blocks_[0] != std::vector<GroupElement>{group_.zero()})
    throw std::invalid_argument("partition must start with the block {0}");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw std::invalid_argument("partition block " + std::to_string(b) + " is empty");
    for (const GroupElement& g : blocks_[b]) {
      std::size_t& slot = block_of_[group_.index_of(g)];
      if (slot != blocks_.size()) throw std::invalid_argument("element " + element_to_string(g) + " lies in two blocks");
      slot = b;
    }
  }
  for (std::size_t i = 0; i < block_of_.size(); ++i)
    if (block_of_[i] == blocks_.size())
      throw std::invalid_argument("element " + element_to_string(group_.element(i)) + " lies in no block");
}

std::vector<std::size_t> block_product(const GroupPartition& p, std::size_t i, std::size_t j) {
  if (i >= p.size() || j >= p.size()) throw std::out_of_range("block index out of range");
  std::set<std::size_t> out;
  for (const GroupElement& a : p.blocks()[i])
    for (const GroupElement& b : p.blocks()[j]) out.insert(p.block_of(p.group().add(a, b)));
  return {out.begin(), out.end()};
}

FusionTable partition_table(const GroupPartition& p) {
  FusionTable t(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      SparseRow row;
      for (std::size_t k : block_product(p, i, j)) row.emplace_back(k, 1);
      t.set_product(i, j, std::move(row));
    }
  return t;
}

bool is_associative(const GroupPartition& p) {
  const FusionTable t = partition_table(p);
  const std::size_t n = t.size();
  std::vector<Label> left(n), right(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::fill(left.begin(), left.end(), 0);
        std::fill(right.begin(), right.end(), 0);
        for (const auto& [d, m] : t.product(a, b))
          for (const auto& [e, m2] : t.product(d, c)) left[e] += m * m2;
        for (const auto& [d, m] : t.product(b, c))
          for (const auto& [e, m2] : t.product(a, d)) right[e] += m * m2;
        if (left != right) return false;
      }
  return true;
}

CoverReport verify_cover(const GroupPartition& p, const FusionTable& table, std::size_t identity,
                         const std::vector<std::size_t>& bijection) {
  const std::size_t n = table.size();
  if (table.max_coefficient() > 1)
    throw UnsupportedCoefficient("fusion coefficient " + std::to_string(table.max_coefficient()) +
                                 " > 1: group covers only handle fusion algebras with coefficients in {0,1}");
  if (bijection.size() != n || p.size() != n)
    throw std::invalid_argument("cover bijection, table and partition sizes differ");
  std::vector<bool> hit(n, false);
  for (std::size_t b : bijection) {
    if (b >= n || hit[b]) throw std::invalid_argument("cover map is not a bijection onto the blocks");
    hit[b] = true;
  }
  if (identity >= n || bijection[identity] != 0) throw std::invalid_argument("cover must send the identity to P_0");

  CoverReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::vector<std::size_t> mapped;
      for (const auto& [k, c] : table.product(i, j)) mapped.push_back(bijection[k]);
      std::sort(mapped.begin(), mapped.end());
      if (mapped != block_product(p, bijection[i], bijection[j]))
        report.mismatches.push_back("[" + std::to_string(i) + "].[" + std::to_string(j) + "]");
    }
  report.covers = report.mismatches.empty();
  return report;
}

GroupPartition hamming_partition(Label k, std::size_t max_group_order) {
  if (k < 1) throw std::invalid_argument("Hamming partition needs k >= 1");
  FiniteAbelianGroup g(std::vector<Label>(k, 2), max_group_order);
  std::vector<std::vector<GroupElement>> blocks(k + 1);
  for (std::size_t i = 0; i < g.order(); ++i) {
    GroupElement e = g.element(i);
    const auto weight = std::count(e.begin(), e.end(), 1);
    blocks[weight].push_back(std::move(e));
  }
  return GroupPartition(std::move(g), std::move(blocks));
}

std::pair<GroupPartition, CoverReport> sl2_cover(Label k, Label max_k, std::size_t max_group_order) {
  if (k > max_k) throw BoundExceeded("level " + std::to_string(k) + " exceeds the bound " + std::to_string(max_k));
  GroupPartition p = hamming_partition(k, max_group_order);
  const FusionAlgebra fa = build_fusion_algebra(build_root_system(AlgebraId(Family::A, 1)), k);
  std::vector<std::size_t> bijection(fa.size());
  for (std::size_t i = 0; i < fa.size(); ++i) bijection[i] = static_cast<std::size_t>(fa.basis()[i][0]);
  CoverReport report = verify_cover(p, fa.table(), 0, bijection);
  return {std::move(p), std::move(report)};
}

}  // namespace fusionkit
