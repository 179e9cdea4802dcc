#pragma once

// S_k-orbits of Z_n^k, the triple-orbit counts M([a],[b],[c]) and their
// relation to sl_n fusion, and the orbit counts M(n,k,r) of tuples by sum.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "fusionkit/weight.hpp"

namespace fusionkit {

/// The orbit P(i_0, ..., i_{n-1}): tuples in which j occurs exactly i_j times.
struct OrbitLabel {
  Label n = 0;
  Label k = 0;
  std::vector<Label> occupancy;

  std::string to_string() const;  // "(1,1,1)"
  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

/// Throws std::invalid_argument unless n >= 2, k >= 1, entries >= 0 summing to k.
OrbitLabel make_orbit_label(Label n, Label k, std::vector<Label> occupancy);

/// Throws std::out_of_range for an entry outside [0, n).
OrbitLabel orbit_of(Label n, const std::vector<Label>& tuple);

/// Every orbit label for (n, k), lexicographic in the occupancy vector.
std::vector<OrbitLabel> all_orbit_labels(Label n, Label k);

/// sl_n weight (i_1, ..., i_{n-1}) attached to an orbit; level k in P_k^+.
Weight orbit_weight(const OrbitLabel& a);
OrbitLabel orbit_from_weight(Label n, Label k, const Weight& w);

/// The orbit of the negated tuples.
OrbitLabel negate(const OrbitLabel& a);

/// Number of S_k-orbits of {(x, y, z) in [a] x [b] x [c] : x + y + z = 0}.
/// Throws std::invalid_argument on mismatched n or k.
Label count_triple_orbits(const OrbitLabel& a, const OrbitLabel& b, const OrbitLabel& c);

struct OrbitFusionRow {
  OrbitLabel a, b, c;
  Label orbits = 0;  // M([a],[b],[c])
  Label fusion = 0;  // N_{[a],[b],[c]} for sl_n at level k
};

/// M and N side by side for every label triple of (n, k).
std::vector<OrbitFusionRow> orbit_fusion_rows(Label n, Label k);

struct TheoremReport {
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

/// n = 2: M([a],[b],[c]) = N_{[a],[b],[c]}. Throws BoundExceeded above max_k.
TheoremReport verify_theorem_fusion1(Label k, Label max_k = 8);
/// n = 3: M([a],[b],[c]) = N(N+1)/2. Throws BoundExceeded above max_k.
TheoremReport verify_theorem_fusion2(Label k, Label max_k = 5);

/// Strict triangle inequalities, bounds 0 < m < p, odd sum below 2p.
bool p_admissible(Label m1, Label m2, Label m3, Label p);

Label mobius(Label n);
/// c_d(r) = sum_{e | gcd(d, r)} e mu(d / e).
Label ramanujan_sum(Label d, Label r);

/// M(n,k,r) = (1/(n+k)) sum_{d | gcd(n,k)} C((n+k)/d, n/d) c_d(r); r is taken mod n.
mpz_class count_orbits_formula(Label n, Label k, Label r);
/// Weakly decreasing k-tuples over [0, n) with sum = r mod n.
mpz_class count_orbits_bruteforce(Label n, Label k, Label r);
/// Partitions of t into at most b parts, each at most a; p(a, b, 0) = 1.
mpz_class bounded_partitions(Label a, Label b, Label t);
/// sum_{t >= 0} p(n-1, k, r + n t).
mpz_class count_orbits_partitions(Label n, Label k, Label r);

}  // namespace fusionkit
