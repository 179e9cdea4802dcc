#pragma once

// Root-system data for the simple Lie algebras A_n, B_n, C_n, D_n and G_2,
// normalized so that the highest root has (theta, theta) = 2.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fusionkit/linalg.hpp"
#include "fusionkit/weight.hpp"

namespace fusionkit {

enum class Family { A, B, C, D, G };

class AlgebraId {
 public:
  /// Throws InvalidAlgebra unless A>=1, B>=2, C>=2, D>=4, G==2.
  AlgebraId(Family family, int rank);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }

  /// "A2", "B2", "G2", "D4", ...
  std::string to_string() const;

  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
  friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;

 private:
  Family family_;
  int rank_;
};

AlgebraId parse_algebra(const std::string& text);

/// A positive root together with the coordinates needed by the folding and
/// multiplicity code.
struct Root {
  Weight labels;                      // in the fundamental-weight basis
  std::vector<Label> simple_coords;   // alpha = sum c_i alpha_i
  std::vector<Label> coroot_coords;   // alpha^vee = sum c_i alpha_i^vee, so <x, alpha^vee> = sum c_i x_i
  mpq_class length2;                  // (alpha, alpha)
  bool is_long = false;

  Label height() const;
  Label pair(const Weight& x) const;  // <x, alpha^vee>
};

class RootSystem {
 public:
  const AlgebraId& algebra() const noexcept { return id_; }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(id_.rank()); }

  /// a_ij = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  const IntMatrix& cartan() const noexcept { return cartan_; }
  /// (alpha_i, alpha_i).
  const std::vector<mpq_class>& root_lengths() const noexcept { return root_lengths_; }
  /// (lambda_i, lambda_j).
  const RatMatrix& form_fw() const noexcept { return form_fw_; }
  /// Row i holds alpha_i in the fundamental-weight basis.
  const IntMatrix& simple_roots_fw() const noexcept { return cartan_; }
  Weight simple_root(std::size_t i) const;

  const Weight& theta() const noexcept { return theta_; }
  /// ell_1..ell_rank (ell_0 = 1 is implicit).
  const std::vector<Label>& marks() const noexcept { return marks_; }
  /// ell^vee_1..ell^vee_rank as exact rationals.
  const std::vector<mpq_class>& comarks() const noexcept { return comarks_; }
  /// Same comarks as integers (they are integral for every supported family).
  const std::vector<Label>& integer_comarks() const noexcept { return comarks_int_; }
  const Weight& rho() const noexcept { return rho_; }
  Label dual_coxeter() const noexcept { return dual_coxeter_; }

  const std::vector<Root>& positive_roots() const noexcept { return positive_roots_; }

  /// (x, y) through form_fw. Throws DimensionMismatch.
  mpq_class inner_product(const Weight& x, const Weight& y) const;
  /// <x, theta> = sum n_i comark_i.
  mpq_class theta_pairing(const Weight& x) const;
  /// Integer form of theta_pairing; every integral weight pairs integrally with theta.
  Label level_of(const Weight& x) const;

  /// D * (x, rho) with D the common denominator of form_fw; strictly increases
  /// along every positive root, so it orders weights compatibly with <=.
  Label height_key(const Weight& x) const;
  /// D * (x, y) as an integer.
  Label scaled_inner_product(const Weight& x, const Weight& y) const;
  Label form_scale() const noexcept { return form_scale_; }

  /// Coordinates of x in the simple-root basis (exact rationals).
  std::vector<mpq_class> simple_root_coords(const Weight& x) const;
  bool in_root_lattice(const Weight& x) const;
  /// x in the Z-span of the simple coroots (the translation lattice of the affine Weyl group).
  bool in_coroot_lattice(const Weight& x) const;

  void check_rank(const Weight& x) const;

  friend RootSystem build_root_system(const AlgebraId& id);

 private:
  explicit RootSystem(AlgebraId id) : id_(id) {}

  AlgebraId id_;
  IntMatrix cartan_;
  std::vector<mpq_class> root_lengths_;
  RatMatrix form_fw_;
  RatMatrix cartan_inverse_;
  IntMatrix form_scaled_;
  Label form_scale_ = 1;
  std::vector<Label> rho_key_;
  Weight theta_;
  std::vector<Label> marks_;
  std::vector<mpq_class> comarks_;
  std::vector<Label> comarks_int_;
  Weight rho_;
  Label dual_coxeter_ = 0;
  std::vector<Root> positive_roots_;
};

/// Builds exact root-system data; all invariants are checked before returning.
RootSystem build_root_system(const AlgebraId& id);

/// Affine dominant weight (n_0, n_1, ..., n_rank).
struct AffineWeight {
  std::vector<Label> labels;
};

/// (level, classical weight) with level = n_0 + <lambda, theta>.
std::pair<Label, Weight> affine_to_classical(const RootSystem& rs, const AffineWeight& aw);
AffineWeight classical_to_affine(const RootSystem& rs, const Weight& lambda, Label level);

/// P_k^+ in lexicographic order.
std::vector<Weight> enumerate_Pk(const RootSystem& rs, Label k);

/// lambda^+ = -w_0 lambda, the highest weight of the contragredient module.
Weight conjugate_weight(const RootSystem& rs, const Weight& lambda);

}  // namespace fusionkit
