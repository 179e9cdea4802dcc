#include "fusionkit/weyl.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "fusionkit/errors.hpp"

namespace fusionkit {

namespace {

void reflect_in_place(const RootSystem& rs, Weight& x, std::size_t i) {
  const Label c = x[i];
  if (c == 0) return;
  const IntMatrix& a = rs.cartan();
  for (std::size_t j = 0; j < rs.rank(); ++j) x[j] = checked_add(x[j], -checked_mul(c, a(i, j)));
}

void affine_in_place(const RootSystem& rs, Weight& x, Label shifted_level) {
  const Label excess = rs.level_of(x) - shifted_level;
  if (excess == 0) return;
  const Weight& theta = rs.theta();
  for (std::size_t j = 0; j < rs.rank(); ++j) x[j] = checked_add(x[j], -checked_mul(excess, theta[j]));
}

[[noreturn]] void step_bound(const Weight& x) {
  throw std::logic_error("folding of " + x.to_string() + " exceeded the step bound");
}

}  // namespace

Weight reflect_simple(const RootSystem& rs, const Weight& x, std::size_t i) {
  rs.check_rank(x);
  if (i >= rs.rank()) throw std::out_of_range("simple reflection index " + std::to_string(i) + " out of range");
  Weight y = x;
  reflect_in_place(rs, y, i);
  return y;
}

Weight reflect_affine(const RootSystem& rs, const Weight& x, Label k) {
  rs.check_rank(x);
  Weight y = x;
  affine_in_place(rs, y, k + rs.dual_coxeter());
  return y;
}

SignedWeight fold_dominant(const RootSystem& rs, const Weight& x, std::size_t max_steps) {
  rs.check_rank(x);
  Weight y = x;
  int sign = 1;
  bool wall = false;
  for (std::size_t step = 0;; ++step) {
    if (step > max_steps) step_bound(x);
    std::size_t violated = rs.rank();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (y[i] == 0) wall = true;
      if (y[i] < 0 && violated == rs.rank()) violated = i;
    }
    if (violated == rs.rank()) break;
    reflect_in_place(rs, y, violated);
    sign = -sign;
  }
  return {std::move(y), wall ? 0 : sign};
}

Weight dominant_representative(const RootSystem& rs, const Weight& x, std::size_t max_steps) {
  return fold_dominant(rs, x, max_steps).weight;
}

SignedWeight fold_alcove(const RootSystem& rs, const Weight& x, Label k, std::size_t max_steps) {
  rs.check_rank(x);
  if (k < 1) throw std::invalid_argument("alcove folding needs level k >= 1");
  const Label shifted = k + rs.dual_coxeter();
  Weight y = x;
  int sign = 1;
  bool wall = false;
  for (std::size_t step = 0;; ++step) {
    if (step > max_steps) step_bound(x);
    std::size_t violated = rs.rank();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (y[i] == 0) wall = true;
      if (y[i] < 0 && violated == rs.rank()) violated = i;
    }
    if (violated != rs.rank()) {
      reflect_in_place(rs, y, violated);
      sign = -sign;
      continue;
    }
    const Label level = rs.level_of(y);
    if (level == shifted) wall = true;
    if (level <= shifted) break;
    affine_in_place(rs, y, shifted);
    sign = -sign;
  }
  return {std::move(y), wall ? 0 : sign};
}

namespace {

// BFS over the orbit of rho; each orbit point corresponds to a unique w.
template <typename Visit>
void walk_rho_orbit(const RootSystem& rs, std::size_t max_order, Visit&& visit) {
  std::unordered_map<Weight, std::vector<std::size_t>, WeightHash> words;
  std::deque<Weight> queue;
  words.emplace(rs.rho(), std::vector<std::size_t>{});
  queue.push_back(rs.rho());
  while (!queue.empty()) {
    Weight y = std::move(queue.front());
    queue.pop_front();
    const std::vector<std::size_t> word = words.at(y);
    visit(y, word);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      Weight z = y;
      reflect_in_place(rs, z, i);
      if (words.count(z)) continue;
      if (words.size() >= max_order)
        throw BoundExceeded("Weyl group of " + rs.algebra().to_string() + " exceeds the order bound " +
                            std::to_string(max_order));
      std::vector<std::size_t> longer;
      longer.reserve(word.size() + 1);
      longer.push_back(i);
      longer.insert(longer.end(), word.begin(), word.end());
      words.emplace(z, std::move(longer));
      queue.push_back(std::move(z));
    }
  }
}

}  // namespace

SignedOrbit signed_rho_orbit(const RootSystem& rs, std::size_t max_order) {
  SignedOrbit orbit;
  walk_rho_orbit(rs, max_order, [&](const Weight& y, const std::vector<std::size_t>& word) {
    orbit.entries.emplace_back(y, word.size() % 2 == 0 ? 1 : -1);
  });
  return orbit;
}

std::vector<std::vector<std::size_t>> weyl_group_words(const RootSystem& rs, std::size_t max_order) {
  std::vector<std::vector<std::size_t>> words;
  walk_rho_orbit(rs, max_order,
                 [&](const Weight&, const std::vector<std::size_t>& word) { words.push_back(word); });
  return words;
}

Weight apply_word(const RootSystem& rs, const std::vector<std::size_t>& word, const Weight& x) {
  rs.check_rank(x);
  Weight y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) reflect_in_place(rs, y, *it);
  return y;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& x) {
  rs.check_rank(x);
  std::unordered_set<Weight, WeightHash> seen{x};
  std::vector<Weight> stack{x};
  while (!stack.empty()) {
    Weight y = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (y[i] == 0) continue;
      Weight z = y;
      reflect_in_place(rs, z, i);
      if (seen.insert(z).second) stack.push_back(std::move(z));
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> long_root_orbit(const RootSystem& rs) { return weyl_orbit(rs, rs.theta()); }

bool in_open_Fk(const RootSystem& rs, const Weight& x, Label k) {
  rs.check_rank(x);
  if (k < 1) throw std::invalid_argument("F_k' needs level k >= 1");
  const Label bound = k + rs.dual_coxeter();
  for (const Root& root : rs.positive_roots()) {
    if (!root.is_long) continue;
    const Label p = root.pair(x);
    if (p >= bound || p <= -bound) return false;
  }
  return true;
}

}  // namespace fusionkit
