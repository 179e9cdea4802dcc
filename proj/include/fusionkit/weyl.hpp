#pragma once

// Finite and affine Weyl group actions on integral weights.
//
// Folding applies the first violated reflection in the fixed order
// r_1, ..., r_rank, then r_0, and stops with sign 0 as soon as a wall is hit.

#include <cstddef>
#include <utility>
#include <vector>

#include "fusionkit/cartan.hpp"

namespace fusionkit {

inline constexpr std::size_t kDefaultFoldSteps = 10000;
inline constexpr std::size_t kDefaultMaxWeylOrder = 1000000;

struct SignedWeight {
  Weight weight;
  int sign = 0;  // -1, 0 (wall), +1

  friend bool operator==(const SignedWeight&, const SignedWeight&) = default;
};

struct SignedOrbit {
  std::vector<std::pair<Weight, int>> entries;  // (w rho, eps(w))
};

/// r_i(x) = x - <x, alpha_i^vee> alpha_i, i is 0-based. Throws std::out_of_range.
Weight reflect_simple(const RootSystem& rs, const Weight& x, std::size_t i);

/// r_0(x) = r_theta(x) + (k + h^vee) theta.
Weight reflect_affine(const RootSystem& rs, const Weight& x, Label k);

/// Folds x into the closed dominant chamber; sign 0 when x lies on a wall.
SignedWeight fold_dominant(const RootSystem& rs, const Weight& x, std::size_t max_steps = kDefaultFoldSteps);

/// Dominant element of the W-orbit of x (no wall semantics).
Weight dominant_representative(const RootSystem& rs, const Weight& x, std::size_t max_steps = kDefaultFoldSteps);

/// Folds x into the open alcove {y : <y, alpha_i^vee> > 0, <y, theta> < k + h^vee}.
SignedWeight fold_alcove(const RootSystem& rs, const Weight& x, Label k, std::size_t max_steps = kDefaultFoldSteps);

/// All w rho with eps(w); throws BoundExceeded when |W| > max_order.
SignedOrbit signed_rho_orbit(const RootSystem& rs, std::size_t max_order = kDefaultMaxWeylOrder);

/// A reduced word (0-based simple reflection indices) for every element of W,
/// applied right to left: word {a, b} means r_a r_b.
std::vector<std::vector<std::size_t>> weyl_group_words(const RootSystem& rs,
                                                       std::size_t max_order = kDefaultMaxWeylOrder);
Weight apply_word(const RootSystem& rs, const std::vector<std::size_t>& word, const Weight& x);

/// The W-orbit of theta, i.e. all long roots, in lexicographic order.
std::vector<Weight> long_root_orbit(const RootSystem& rs);

/// The full W-orbit of an arbitrary weight, in lexicographic order.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& x);

/// -(k+h^vee) < <x, w theta> < k+h^vee for every long root w theta.
bool in_open_Fk(const RootSystem& rs, const Weight& x, Label k);

}  // namespace fusionkit
