#pragma once

// Level-k fusion coefficients by the Kac-Walton algorithm and the fusion algebra
// axioms they must satisfy.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusionkit/tensor.hpp"

namespace fusionkit {

inline constexpr std::size_t kDefaultMaxBasis = 10000;

/// (index, coefficient) pairs sorted by index, coefficients > 0.
using SparseRow = std::vector<std::pair<std::size_t, Label>>;

/// Structure constants N_{i,j}^k of a finite algebra on basis indices 0..n-1.
class FusionTable {
 public:
  FusionTable() = default;
  explicit FusionTable(std::size_t n) : n_(n), products_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  const SparseRow& product(std::size_t i, std::size_t j) const { return products_.at(i * n_ + j); }
  void set_product(std::size_t i, std::size_t j, SparseRow row);
  Label coefficient(std::size_t i, std::size_t j, std::size_t k) const;
  Label max_coefficient() const;

  friend bool operator==(const FusionTable&, const FusionTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<SparseRow> products_;
};

/// Violations of the fusion algebra axioms (identity, commutativity,
/// conjugation, S_3 symmetry of N_{a,b,c}, associativity). Empty when all hold.
std::vector<std::string> check_fusion_axioms(const FusionTable& table, std::size_t identity,
                                             const std::vector<std::size_t>& conjugation);

/// Conjugation derived from N_{a,b}^identity = delta_{b, a^+}; nullopt if that is not a permutation.
std::optional<std::vector<std::size_t>> conjugation_from_table(const FusionTable& table, std::size_t identity);

class FusionAlgebra {
 public:
  FusionAlgebra(AlgebraId algebra, Label level, std::vector<Weight> basis, FusionTable table,
                std::vector<std::size_t> conjugation);

  const AlgebraId& algebra() const noexcept { return algebra_; }
  Label level() const noexcept { return level_; }
  const std::vector<Weight>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  const FusionTable& table() const noexcept { return table_; }
  const std::vector<std::size_t>& conjugation() const noexcept { return conjugation_; }

  std::optional<std::size_t> index_of(const Weight& w) const;
  /// N_{lambda,mu}^nu; zero when nu is outside the basis. Throws on lambda/mu outside.
  Label coefficient(const Weight& lambda, const Weight& mu, const Weight& nu) const;
  /// The table re-indexed so that index i refers to label_map[i].
  FusionTable relabeled(const std::vector<Weight>& label_map) const;

  friend bool operator==(const FusionAlgebra&, const FusionAlgebra&) = default;

 private:
  AlgebraId algebra_;
  Label level_;
  std::vector<Weight> basis_;
  FusionTable table_;
  std::vector<std::size_t> conjugation_;
  std::map<Weight, std::size_t> index_;
};

/// N_{lambda,mu}^{(k) nu} for all nu; throws LevelError unless lambda, mu in P_k^+.
std::map<Weight, Label> kac_walton(const RootSystem& rs, const WeightSystem& ws_lambda, const Weight& mu, Label k);
std::map<Weight, Label> kac_walton(const RootSystem& rs, const Weight& lambda, const Weight& mu, Label k);

struct FusionBuildOptions {
  std::size_t max_basis = kDefaultMaxBasis;
  std::size_t max_dim = kDefaultMaxDim;
  bool verify_axioms = true;
};

/// The fusion algebra F(g, k) on P_k^+. Throws BoundExceeded or AxiomViolation.
FusionAlgebra build_fusion_algebra(const RootSystem& rs, Label k, const FusionBuildOptions& options = {});

/// Level-1 fusion from addition in P/Q for the A and D families; other families
/// fall through to build_fusion_algebra.
FusionAlgebra level1_group_fusion(const RootSystem& rs);

/// Invariant factors (d_1 | d_2 | ...) of the abelian group whose group algebra
/// the given algebra is. Throws std::invalid_argument if some product is not a
/// single basis element.
std::vector<Label> group_invariants(const FusionAlgebra& fa);

/// sl_2 spin a in (1/2)Z, stored as the Dynkin label 2a.
struct Spin {
  Label twice = 0;

  static Spin from_label(Label label) { return Spin{label}; }
  std::string to_string() const;
  friend auto operator<=>(const Spin&, const Spin&) = default;
};

Spin parse_spin(const std::string& text);

/// N_{a,b}^c = 1 iff |a-b| <= c <= a+b, a+b+c integral and a+b+c <= k.
std::map<Spin, Label> sl2_fusion_direct(Label k, Spin a, Spin b);

namespace experimental {

enum class ProbeStatus { HypothesisNotMet, Holds, Violated };

struct Conjecture1Report {
  ProbeStatus status = ProbeStatus::HypothesisNotMet;
  std::size_t candidates = 0;          // affine elements mapping the point into the set
  std::optional<std::string> witness;  // description of an offending element
};

/// For lambda, mu, beta+mu in P_k^+ with r_0(beta+mu+rho) outside Pi^lambda+mu+rho,
/// checks that every affine Weyl element taking beta+mu+rho into that set is finite.
Conjecture1Report conjecture1_probe(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& beta,
                                    Label k);

struct CorollaryCheck {
  bool applicable = false;  // k >= <mu,theta> + r
  bool held = true;
  Label r = 0;              // theta-string length below beta
  Label fusion = 0;
  Label tensor = 0;
};

/// If k >= <mu,theta> + r, fusion and tensor multiplicity at beta+mu must agree.
CorollaryCheck corollary_threshold_check(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                         const Weight& beta, Label k);

}  // namespace experimental

}  // namespace fusionkit
