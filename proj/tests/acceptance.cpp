// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "fusionkit/errors.hpp"
#include "fusionkit/fixtures.hpp"
#include "fusionkit/orbits.hpp"
#include "fusionkit/verify.hpp"

using namespace fusionkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

RootSystem rs_of(const char* name) { return build_root_system(parse_algebra(name)); }

bool same_table(const RootSystem& rs, Label k, const NamedTable& t, const std::vector<Weight>& weights) {
  return build_fusion_algebra(rs, k).relabeled(weights) == t.table;
}

Outcome tables() {
  const RootSystem a1 = rs_of("A1"), a2 = rs_of("A2"), b2 = rs_of("B2");
  Outcome o;
  o.ok = same_table(a1, 2, fixtures::a1_level2(), fixtures::a1_level2_weights()) &&
         same_table(a1, 3, fixtures::a1_level3(), fixtures::a1_level3_weights()) &&
         same_table(a2, 2, fixtures::a2_level2(), fixtures::a2_level2_weights()) &&
         same_table(b2, 2, fixtures::b2_level2(), fixtures::b2_level2_weights());
  const FusionAlgebra a2k3 = build_fusion_algebra(a2, 3);
  const NamedTable part = fixtures::a2_level3_part();
  const FusionTable got = a2k3.relabeled(fixtures::a2_level3_part_weights());
  o.ok = o.ok && got == part.table && a2k3.coefficient({1, 1}, {1, 1}, {1, 1}) == 2;
  o.detail = "[9].[9] = " + format_product(got.product(3, 3), part.names);
  return o;
}

Outcome b2_level1() {
  const FusionTable t = build_fusion_algebra(rs_of("B2"), 1).relabeled(fixtures::b2_level1_weights());
  const std::vector<std::string> names{"0", "1", "2"};
  Outcome o;
  o.ok = format_product(t.product(1, 1), names) == "[0]" && format_product(t.product(1, 2), names) == "[2]" &&
         format_product(t.product(2, 2), names) == "[0]+[1]";
  o.detail = "[2].[2] = " + format_product(t.product(2, 2), names);
  return o;
}

Outcome dimensions() {
  const RootSystem a2 = rs_of("A2");
  const WeightSystem ws = racah_multiplicities(a2, {3, 2});
  std::map<Label, int> shells;
  for (const auto& [w, m] : ws.mults()) ++shells[m];
  Outcome o;
  o.ok = shells == std::map<Label, int>{{1, 15}, {2, 9}, {3, 3}} && dimension(ws) == 42;
  for (Label a = 0; a <= 6; ++a)
    for (Label b = 0; b <= 6; ++b)
      o.ok = o.ok && dimension(racah_multiplicities(a2, {a, b})) == (a + b + 2) * (a + 1) * (b + 1) / 2;
  o.detail = "dim V(3,2) = " + std::to_string(dimension(ws));
  return o;
}

Outcome tensor_example() {
  const Decomposition d = racah_speiser(rs_of("A2"), {3, 2}, {1, 0});
  Outcome o;
  o.ok = d.terms == std::map<Weight, Label>{{{4, 2}, 1}, {{3, 1}, 1}, {{2, 3}, 1}};
  for (const auto& [nu, m] : d.terms) o.detail += (o.detail.empty() ? "(" : " + (") + nu.to_string() + ")";
  return o;
}

std::vector<Weight> box(std::size_t rank, Label max_label) {
  std::vector<Weight> out{Weight(rank)};
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Weight> next;
    for (const Weight& w : out)
      for (Label v = 0; v <= max_label; ++v) {
        Weight x = w;
        x[i] = v;
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t n = 0;
  for (const char* name : {"A2", "B2", "G2"}) {
    const RootSystem rs = rs_of(name);
    for (const Weight& l : box(2, 6)) {
      ++n;
      if (racah_multiplicities(rs, l, 1u << 30).mults() != freudenthal_multiplicities(rs, l, 1u << 30).mults()) {
        o.ok = false;
        o.detail = std::string(name) + " " + l.to_string() + "; ";
      }
    }
  }
  for (const char* name : {"A3", "B3", "C3", "D4"}) {
    const RootSystem rs = rs_of(name);
    for (const Weight& l : box(rs.rank(), 6)) {
      if (weyl_dimension(rs, l) > 5000) continue;
      ++n;
      if (racah_multiplicities(rs, l).mults() != freudenthal_multiplicities(rs, l).mults()) {
        o.ok = false;
        o.detail = std::string(name) + " " + l.to_string() + "; ";
      }
    }
  }
  o.detail += std::to_string(n) + " modules";
  return o;
}

Outcome from_suite(const SuiteResult& r) {
  Outcome o;
  o.ok = r.passed();
  o.detail = std::to_string(r.checked) + " checks";
  if (!r.failures.empty()) o.detail += ", first failure: " + r.failures.front();
  return o;
}

Outcome merge(const std::vector<SuiteResult>& rs) {
  SuiteResult all;
  for (const auto& r : rs) {
    all.checked += r.checked;
    all.failures.insert(all.failures.end(), r.failures.begin(), r.failures.end());
  }
  return from_suite(all);
}

Outcome stabilization() {
  Outcome o = merge({sweep_level_stabilization(rs_of("A2"), 3), sweep_level_stabilization(rs_of("B2"), 3),
                     sweep_level_stabilization(rs_of("G2"), 3)});
  const RootSystem a2 = rs_of("A2");
  const Weight top{4, 2};
  bool instance = kac_walton(a2, {3, 2}, {1, 0}, 5).count(top) == 0;
  for (Label k = 6; k <= 12; ++k) instance = instance && kac_walton(a2, {3, 2}, {1, 0}, k).at(top) == 1;
  o.ok = o.ok && instance;
  o.detail += instance ? "; (4,2) appears from k = 6" : "; A2 (3,2)x(1,0) instance wrong";
  return o;
}

Outcome weight_string_stability() {
  return merge({sweep_weight_string_stability(rs_of("A2"), 3), sweep_weight_string_stability(rs_of("B2"), 3)});
}

Outcome axioms() {
  Outcome o;
  std::size_t built = 0, largest = 0;
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"}) {
    const RootSystem rs = rs_of(name);
    for (Label k = 1;; ++k) {
      const std::size_t n = enumerate_Pk(rs, k).size();
      if (n > 200) break;
      const FusionAlgebra fa = build_fusion_algebra(rs, k, {.max_basis = 200, .max_dim = 1u << 26, .verify_axioms = false});
      const auto problems = check_fusion_axioms(fa.table(), 0, fa.conjugation());
      if (!problems.empty()) {
        o.ok = false;
        o.detail += std::string(name) + " k=" + std::to_string(k) + ": " + problems.front() + "; ";
      }
      for (std::size_t i = 0; i < fa.size(); ++i)
        if (fa.basis()[fa.conjugation()[i]] != conjugate_weight(rs, fa.basis()[i])) o.ok = false;
      ++built;
      largest = std::max(largest, n);
    }
  }
  o.detail += std::to_string(built) + " algebras, largest basis " + std::to_string(largest);
  return o;
}

bool is_group_algebra(const FusionAlgebra& fa) {
  for (std::size_t i = 0; i < fa.size(); ++i)
    for (std::size_t j = 0; j < fa.size(); ++j) {
      const auto& row = fa.table().product(i, j);
      if (row.size() != 1 || row.front().second != 1) return false;
    }
  return true;
}

Outcome level1() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    const RootSystem rs = build_root_system(AlgebraId(Family::A, n - 1));
    const FusionAlgebra fa = level1_group_fusion(rs);
    o.ok = o.ok && is_group_algebra(fa) && fa == build_fusion_algebra(rs, 1) &&
           group_invariants(fa) == std::vector<Label>{n};
  }
  const FusionAlgebra d4 = level1_group_fusion(rs_of("D4"));
  o.ok = o.ok && is_group_algebra(d4) && group_invariants(d4) == std::vector<Label>{2, 2};
  o.detail = "sl_N: Z_N for N = 2..6, so(8): Z_2 x Z_2";
  return o;
}

Outcome orbit_identities() {
  Outcome o;
  std::size_t checked = 0;
  for (Label k = 1; k <= 8; ++k) {
    const TheoremReport r = verify_theorem_fusion1(k);
    checked += r.checked;
    o.ok = o.ok && r.passed();
  }
  for (Label k = 1; k <= 5; ++k) {
    const TheoremReport r = verify_theorem_fusion2(k);
    checked += r.checked;
    o.ok = o.ok && r.passed();
  }
  const OrbitLabel nine = make_orbit_label(3, 3, {1, 1, 1});
  const Label m = count_triple_orbits(nine, nine, nine);
  const Label n = build_fusion_algebra(rs_of("A2"), 3).coefficient({1, 1}, {1, 1}, {1, 1});
  o.ok = o.ok && m == 3 && n == 2;
  o.detail = std::to_string(checked) + " triples; M([9],[9],[9]) = " + std::to_string(m) + ", N = " + std::to_string(n);
  return o;
}

Outcome ramanujan() {
  Outcome o;
  std::size_t checked = 0;
  for (Label n = 1; n <= 8; ++n)
    for (Label k = 1; k <= 8; ++k)
      for (Label r = 0; r < std::max(n, k); ++r) {
        const mpz_class f = count_orbits_formula(n, k, r);
        o.ok = o.ok && f == count_orbits_bruteforce(n, k, r) && f == count_orbits_partitions(n, k, r) &&
               f == count_orbits_formula(k, n, r);
        ++checked;
      }
  mpz_class sum = 0;
  for (Label r = 0; r < 3; ++r) sum += count_orbits_formula(3, 3, r);
  o.ok = o.ok && sum == 10;
  o.detail = std::to_string(checked) + " (n,k,r); sum_r M(3,3,r) = " + sum.get_str();
  return o;
}

Outcome covers() {
  Outcome o;
  for (const auto& fc : {fixtures::a1_level2_cover(), fixtures::a1_level3_cover(), fixtures::a2_level2_cover(),
                         fixtures::w3_11_cover()})
    o.ok = o.ok && verify_cover(fc.partition, fc.table.table, 0, fc.bijection).covers;
  for (Label k = 1; k <= 8; ++k) o.ok = o.ok && sl2_cover(k).second.covers;
  bool rejected = false;
  try {
    const FusionAlgebra fa = build_fusion_algebra(rs_of("A2"), 3);
    std::vector<std::size_t> id(fa.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    verify_cover(hamming_partition(3), fa.table(), 0, id);
  } catch (const UnsupportedCoefficient&) {
    rejected = true;
  }
  o.ok = o.ok && rejected;
  o.detail = "4 fixture covers, Z_2^k for k <= 8, A2 level 3 rejected";
  return o;
}

Outcome sl2_cross_check() {
  Outcome o;
  const RootSystem a1 = rs_of("A1");
  std::size_t pairs = 0;
  for (Label k = 1; k <= 8; ++k)
    for (Label a = 0; a <= k; ++a)
      for (Label b = 0; b <= k; ++b) {
        const auto kw = kac_walton(a1, {a}, {b}, k);
        std::map<Spin, Label> spins;
        for (const auto& [w, c] : kw) spins[Spin{w[0]}] = c;
        o.ok = o.ok && sl2_fusion_direct(k, Spin{a}, Spin{b}) == spins;
        for (Label c = 0; c <= k; ++c) o.ok = o.ok && p_admissible(a + 1, b + 1, c + 1, k + 2) == (kw.count({c}) == 1);
        ++pairs;
      }
  o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome probes() {
  SuiteResult all;
  std::string notes;
  for (const char* name : {"A2", "B2", "G2"}) {
    const SuiteResult r = sweep_conjecture_probes(rs_of(name), 3, 10);
    all.checked += r.checked;
    all.failures.insert(all.failures.end(), r.failures.begin(), r.failures.end());
  }
  Outcome o = from_suite(all);
  o.detail += ", 0 violations expected, " + std::to_string(all.failures.size()) + " found";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table regressions", tables},
      {"B2 level-1 products", b2_level1},
      {"dimensions and multiplicity shells", dimensions},
      {"A2 (3,2) x (1,0)", tensor_example},
      {"Racah recursion vs Freudenthal", oracle_equivalence},
      {"level stabilization", stabilization},
      {"weight-string stability", weight_string_stability},
      {"fusion axioms up to 200 primaries", axioms},
      {"level-1 group fusion", level1},
      {"orbit identities", orbit_identities},
      {"Ramanujan-sum orbit count", ramanujan},
      {"group covers", covers},
      {"sl2 p-admissibility vs Kac-Walton", sl2_cross_check},
      {"affine-fold probe and threshold sweep", probes},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " ("
         << o.detail << ") [" << secs << "s]";
    std::cout << line.str() << std::endl;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
