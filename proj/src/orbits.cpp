#include "fusionkit/orbits.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

#include "fusionkit/errors.hpp"
#include "fusionkit/fusion.hpp"

namespace fusionkit {

std::string OrbitLabel::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < occupancy.size(); ++i) s += (i ? "," : "") + std::to_string(occupancy[i]);
  return s + ")";
}

OrbitLabel make_orbit_label(Label n, Label k, std::vector<Label> occupancy) {
  if (n < 2 || k < 1) throw std::invalid_argument("orbit labels need n >= 2 and k >= 1");
  if (occupancy.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("occupancy vector must have n entries");
  Label total = 0;
  for (Label i : occupancy) {
    if (i < 0) throw std::invalid_argument("occupancy entries must be nonnegative");
    total += i;
  }
  if (total != k) throw std::invalid_argument("occupancy must sum to k");
  return OrbitLabel{n, k, std::move(occupancy)};
}

OrbitLabel orbit_of(Label n, const std::vector<Label>& tuple) {
  if (n < 2) throw std::invalid_argument("orbits need n >= 2");
  std::vector<Label> occ(n, 0);
  for (Label x : tuple) {
    if (x < 0 || x >= n) throw std::out_of_range("tuple entry " + std::to_string(x) + " outside [0, n)");
    ++occ[x];
  }
  return make_orbit_label(n, static_cast<Label>(tuple.size()), std::move(occ));
}

namespace {

void compositions(Label n, Label k, std::vector<Label>& cur, std::vector<OrbitLabel>& out) {
  if (static_cast<Label>(cur.size()) == n - 1) {
    cur.push_back(k);
    out.push_back(OrbitLabel{n, static_cast<Label>(0), cur});
    cur.pop_back();
    return;
  }
  for (Label i = 0; i <= k; ++i) {
    cur.push_back(i);
    compositions(n, k - i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<OrbitLabel> all_orbit_labels(Label n, Label k) {
  if (n < 2 || k < 1) throw std::invalid_argument("orbit labels need n >= 2 and k >= 1");
  std::vector<OrbitLabel> out;
  std::vector<Label> cur;
  compositions(n, k, cur, out);
  for (auto& o : out) o.k = k;
  return out;
}

Weight orbit_weight(const OrbitLabel& a) { return Weight(std::vector<Label>(a.occupancy.begin() + 1, a.occupancy.end())); }

OrbitLabel orbit_from_weight(Label n, Label k, const Weight& w) {
  if (w.rank() != static_cast<std::size_t>(n - 1)) throw DimensionMismatch("weight rank must be n - 1");
  std::vector<Label> occ{k - std::accumulate(w.begin(), w.end(), Label{0})};
  occ.insert(occ.end(), w.begin(), w.end());
  return make_orbit_label(n, k, std::move(occ));
}

OrbitLabel negate(const OrbitLabel& a) {
  OrbitLabel out = a;
  for (Label j = 1; j < a.n; ++j) out.occupancy[j] = a.occupancy[a.n - j];
  return out;
}

namespace {

struct ColumnCounter {
  Label n;
  std::vector<std::array<Label, 3>> columns;
  std::vector<Label> ra, rb, rc;

  Label run(std::size_t idx, Label remaining) {
    if (remaining == 0) return 1;
    if (idx == columns.size()) return 0;
    const auto [x, y, z] = columns[idx];
    Label total = run(idx + 1, remaining);
    Label taken = 0;
    while (ra[x] > 0 && rb[y] > 0 && rc[z] > 0) {
      --ra[x], --rb[y], --rc[z];
      ++taken;
      total = checked_add(total, run(idx + 1, remaining - taken));
    }
    ra[x] += taken, rb[y] += taken, rc[z] += taken;
    return total;
  }
};

}  // namespace

Label count_triple_orbits(const OrbitLabel& a, const OrbitLabel& b, const OrbitLabel& c) {
  if (a.n != b.n || a.n != c.n || a.k != b.k || a.k != c.k)
    throw std::invalid_argument("orbit labels " + a.to_string() + ", " + b.to_string() + ", " + c.to_string() +
                                " have different (n, k)");
  // An orbit is a multiset of k columns (x_i, y_i, z_i) with x_i + y_i + z_i = 0.
  ColumnCounter counter{a.n, {}, a.occupancy, b.occupancy, c.occupancy};
  for (Label x = 0; x < a.n; ++x)
    for (Label y = 0; y < a.n; ++y) counter.columns.push_back({x, y, ((-x - y) % a.n + a.n) % a.n});
  return counter.run(0, a.k);
}

std::vector<OrbitFusionRow> orbit_fusion_rows(Label n, Label k) {
  const RootSystem rs = build_root_system(AlgebraId(Family::A, static_cast<int>(n - 1)));
  const FusionAlgebra fa = build_fusion_algebra(rs, k);
  const auto labels = all_orbit_labels(n, k);
  std::vector<OrbitFusionRow> rows;
  for (const auto& a : labels)
    for (const auto& b : labels)
      for (const auto& c : labels)
        rows.push_back({a, b, c, count_triple_orbits(a, b, c),
                        fa.coefficient(orbit_weight(a), orbit_weight(b), orbit_weight(negate(c)))});
  return rows;
}

namespace {

TheoremReport compare(Label n, Label k, Label max_k, Label (*expected)(Label)) {
  if (k < 1) throw std::invalid_argument("level must be >= 1");
  if (k > max_k) throw BoundExceeded("level " + std::to_string(k) + " exceeds the bound " + std::to_string(max_k));
  TheoremReport report;
  for (const auto& row : orbit_fusion_rows(n, k)) {
    ++report.checked;
    if (row.orbits != expected(row.fusion))
      report.counterexamples.push_back("M(" + row.a.to_string() + "," + row.b.to_string() + "," + row.c.to_string() +
                                       ") = " + std::to_string(row.orbits) + " but N = " + std::to_string(row.fusion));
  }
  return report;
}

}  // namespace

TheoremReport verify_theorem_fusion1(Label k, Label max_k) {
  return compare(2, k, max_k, [](Label n) { return n; });
}

TheoremReport verify_theorem_fusion2(Label k, Label max_k) {
  return compare(3, k, max_k, [](Label n) { return n * (n + 1) / 2; });
}

bool p_admissible(Label m1, Label m2, Label m3, Label p) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  for (Label m : {m1, m2, m3})
    if (m <= 0 || m >= p) return false;
  const Label sum = m1 + m2 + m3;
  if (sum % 2 == 0 || sum >= 2 * p) return false;
  return m1 < m2 + m3 && m2 < m1 + m3 && m3 < m1 + m2;
}

Label mobius(Label n) {
  if (n < 1) throw std::invalid_argument("mobius needs n >= 1");
  Label result = 1;
  for (Label p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Label ramanujan_sum(Label d, Label r) {
  if (d < 1) throw std::invalid_argument("ramanujan_sum needs d >= 1");
  const Label g = std::gcd(d, r < 0 ? -r : r);
  Label sum = 0;
  for (Label e = 1; e <= g; ++e)
    if (g % e == 0) sum += e * mobius(d / e);
  return sum;
}

namespace {

void check_nk(Label n, Label k) {
  if (n < 1 || k < 1) throw std::invalid_argument("orbit counts need n >= 1 and k >= 1");
}

mpz_class binomial(Label n, Label k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

mpz_class count_orbits_formula(Label n, Label k, Label r) {
  check_nk(n, k);
  r = ((r % n) + n) % n;
  const Label g = std::gcd(n, k);
  mpz_class sum = 0;
  for (Label d = 1; d <= g; ++d)
    if (g % d == 0) sum += binomial((n + k) / d, n / d) * ramanujan_sum(d, r);
  const mpz_class nk = n + k;
  if (sum % nk != 0) throw std::logic_error("Ramanujan-sum formula: inexact division by n + k");
  return sum / nk;
}

mpz_class count_orbits_bruteforce(Label n, Label k, Label r) {
  check_nk(n, k);
  r = ((r % n) + n) % n;
  mpz_class total = 0;
  auto rec = [&](auto&& self, Label max_entry, Label len, Label sum) -> void {
    if (len == k) {
      if (sum % n == r) ++total;
      return;
    }
    for (Label x = max_entry; x >= 0; --x) self(self, x, len + 1, sum + x);
  };
  rec(rec, n - 1, 0, 0);
  return total;
}

mpz_class bounded_partitions(Label a, Label b, Label t) {
  if (a < 0 || b < 0) throw std::invalid_argument("bounded partitions need a, b >= 0");
  if (t < 0 || t > a * b) return 0;
  // ways[j][s]: partitions of s into at most j parts, sizes limited to those processed so far.
  std::vector<std::vector<mpz_class>> ways(b + 1, std::vector<mpz_class>(t + 1, 0));
  for (Label j = 0; j <= b; ++j) ways[j][0] = 1;
  for (Label size = 1; size <= a; ++size)
    for (Label j = b; j >= 1; --j)
      for (Label s = 0; s <= t; ++s) {
        // add any number c >= 1 of parts equal to size
        mpz_class extra = 0;
        for (Label c = 1; c <= j && c * size <= s; ++c) extra += ways[j - c][s - c * size];
        ways[j][s] += extra;
      }
  return ways[b][t];
}

mpz_class count_orbits_partitions(Label n, Label k, Label r) {
  check_nk(n, k);
  r = ((r % n) + n) % n;
  mpz_class total = 0;
  for (Label t = r; t <= (n - 1) * k; t += n) total += bounded_partitions(n - 1, k, t);
  return total;
}

}  // namespace fusionkit
