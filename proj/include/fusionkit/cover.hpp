#pragma once

// Coverings of {0,1}-valued fusion algebras by partitions of finite abelian groups.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fusionkit/fusion.hpp"

namespace fusionkit {

inline constexpr std::size_t kDefaultMaxGroupOrder = 1 << 16;

using GroupElement = std::vector<Label>;

/// Z_{m_1} x ... x Z_{m_t}; elements are tuples reduced mod the factors.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<Label> factors, std::size_t max_order = kDefaultMaxGroupOrder);

  const std::vector<Label>& factors() const noexcept { return factors_; }
  std::size_t order() const noexcept { return order_; }
  GroupElement zero() const { return GroupElement(factors_.size(), 0); }
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  /// Mixed-radix index in [0, order); throws std::invalid_argument for a malformed element.
  std::size_t index_of(const GroupElement& g) const;
  GroupElement element(std::size_t index) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<Label> factors_;
  std::size_t order_ = 1;
};

std::string element_to_string(const GroupElement& g);  // "(1,0,1)"

/// Blocks P_0 = {0}, P_1, ..., P_{N-1}, disjoint and covering the group.
class GroupPartition {
 public:
  /// Throws std::invalid_argument when the blocks are not a valid partition.
  GroupPartition(FiniteAbelianGroup group, std::vector<std::vector<GroupElement>> blocks);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const std::vector<std::vector<GroupElement>>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  std::size_t block_of(const GroupElement& g) const { return block_of_.at(group_.index_of(g)); }

  friend bool operator==(const GroupPartition& a, const GroupPartition& b) {
    return a.group_ == b.group_ && a.blocks_ == b.blocks_;
  }

 private:
  FiniteAbelianGroup group_;
  std::vector<std::vector<GroupElement>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// T(i,j) = {k : a + b in P_k for some a in P_i, b in P_j}, sorted.
std::vector<std::size_t> block_product(const GroupPartition& p, std::size_t i, std::size_t j);

/// The induced table P_i * P_j = sum_{k in T(i,j)} P_k.
FusionTable partition_table(const GroupPartition& p);

/// Associativity of the induced product.
bool is_associative(const GroupPartition& p);

struct CoverReport {
  bool covers = false;
  std::vector<std::string> mismatches;
};

/// Checks that bijection (table index -> block index, identity -> P_0) carries
/// the table onto the induced product. Throws UnsupportedCoefficient if the
/// table has a coefficient > 1, std::invalid_argument for a bad bijection.
CoverReport verify_cover(const GroupPartition& p, const FusionTable& table, std::size_t identity,
                         const std::vector<std::size_t>& bijection);

/// Z_2^k with P_i the elements having exactly i coordinates equal to 1.
GroupPartition hamming_partition(Label k, std::size_t max_group_order = kDefaultMaxGroupOrder);

/// Hamming partition of Z_2^k checked against the sl_2 level-k fusion algebra
/// (block i <-> Dynkin label i). Throws BoundExceeded above max_k.
std::pair<GroupPartition, CoverReport> sl2_cover(Label k, Label max_k = 10,
                                              std::size_t max_group_order = kDefaultMaxGroupOrder);

}  // namespace fusionkit
