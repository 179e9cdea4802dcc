#include "fusionkit/fusion.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fusionkit/errors.hpp"
#include "fusionkit/weyl.hpp"

namespace fusionkit {

void FusionTable::set_product(std::size_t i, std::size_t j, SparseRow row) {
  if (i >= n_ || j >= n_) throw std::out_of_range("fusion table index out of range");
  std::sort(row.begin(), row.end());
  for (const auto& [k, c] : row)
    if (k >= n_ || c <= 0) throw std::invalid_argument("fusion table entries need index < size and coefficient > 0");
  products_[i * n_ + j] = std::move(row);
}

Label FusionTable::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  const SparseRow& row = product(i, j);
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(k, Label{0}));
  return it != row.end() && it->first == k ? it->second : 0;
}

Label FusionTable::max_coefficient() const {
  Label best = 0;
  for (const SparseRow& row : products_)
    for (const auto& [k, c] : row) best = std::max(best, c);
  return best;
}

namespace {

constexpr std::size_t kMaxReported = 20;

std::string idx(std::size_t i) { return "[" + std::to_string(i) + "]"; }

class Violations {
 public:
  void add(std::string msg) {
    if (list_.size() < kMaxReported) list_.push_back(std::move(msg));
  }
  bool full() const { return list_.size() >= kMaxReported; }
  std::vector<std::string> take() { return std::move(list_); }

 private:
  std::vector<std::string> list_;
};


// Basis elements whose products with the identity span the whole space, chosen
// greedily by sparsity. Spanning is tested modulo a prime; full rank mod p
// implies full rank over Q.
std::vector<std::size_t> generating_set(const FusionTable& table, std::size_t identity) {
  constexpr std::uint64_t p = 2305843009213693951ULL;  // 2^61 - 1
  const std::size_t n = table.size();
  auto mulmod = [](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  };
  auto inverse = [&](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    for (; e; e >>= 1, a = mulmod(a, a))
      if (e & 1) r = mulmod(r, a);
    return r;
  };
  auto reduce = [](Label x) { return static_cast<std::uint64_t>(((x % static_cast<Label>(p)) + static_cast<Label>(p)) % static_cast<Label>(p)); };

  std::vector<std::vector<std::uint64_t>> echelon(n);  // echelon[pivot], normalized to 1 at the pivot
  std::vector<std::vector<std::uint64_t>> spanning;    // inserted vectors, unreduced
  std::vector<std::size_t> gens;

  auto insert = [&](std::vector<std::uint64_t> vec) {
    std::vector<std::uint64_t> orig = vec;
    for (std::size_t i = 0; i < n; ++i) {
      if (vec[i] == 0) continue;
      if (echelon[i].empty()) {
        const std::uint64_t s = inverse(vec[i]);
        for (auto& c : vec) c = mulmod(c, s);
        echelon[i] = std::move(vec);
        spanning.push_back(std::move(orig));
        return true;
      }
      const std::uint64_t f = vec[i];
      for (std::size_t j = i; j < n; ++j) vec[j] = (vec[j] + p - mulmod(f, echelon[i][j])) % p;
    }
    return false;
  };
  auto apply = [&](std::size_t g, const std::vector<std::uint64_t>& vec) {
    std::vector<std::uint64_t> out(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (vec[c] == 0) continue;
      for (const auto& [e, m] : table.product(g, c)) out[e] = (out[e] + mulmod(vec[c], reduce(m))) % p;
    }
    return out;
  };
  auto in_span = [&](std::size_t a) {
    std::vector<std::uint64_t> vec(n, 0);
    vec[a] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (vec[i] == 0) continue;
      if (echelon[i].empty()) return false;
      const std::uint64_t f = vec[i];
      for (std::size_t j = i; j < n; ++j) vec[j] = (vec[j] + p - mulmod(f, echelon[i][j])) % p;
    }
    return true;
  };

  std::vector<std::size_t> order(n);
  std::vector<std::size_t> cost(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    order[a] = a;
    for (std::size_t c = 0; c < n; ++c) cost[a] += table.product(a, c).size();
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cost[a] < cost[b]; });

  std::vector<std::uint64_t> one(n, 0);
  one[identity] = 1;
  insert(one);
  std::size_t dim = 1;
  for (std::size_t a : order) {
    if (dim == n) break;
    if (a == identity || in_span(a)) continue;
    gens.push_back(a);
    // Close the span under every generator so far.
    for (std::size_t next = 0; next < spanning.size(); ++next)
      for (std::size_t g : gens)
        if (insert(apply(g, spanning[next]))) ++dim;
  }
  return gens;
}
}  // namespace

std::optional<std::vector<std::size_t>> conjugation_from_table(const FusionTable& table, std::size_t identity) {
  const std::size_t n = table.size();
  std::vector<std::size_t> sigma(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Label c = table.coefficient(a, b, identity);
      if (c == 0) continue;
      if (c != 1 || sigma[a] != n) return std::nullopt;
      sigma[a] = b;
    }
    if (sigma[a] == n) return std::nullopt;
  }
  return sigma;
}

std::vector<std::string> check_fusion_axioms(const FusionTable& table, std::size_t identity,
                                             const std::vector<std::size_t>& sigma) {
  const std::size_t n = table.size();
  Violations v;
  if (identity >= n) return {"identity index out of range"};
  if (sigma.size() != n) return {"conjugation has the wrong size"};
  for (std::size_t a = 0; a < n; ++a) {
    if (sigma[a] >= n) return {"conjugation index out of range"};
    if (sigma[sigma[a]] != a) v.add("conjugation is not an involution at " + idx(a));
  }
  if (sigma[identity] != identity) v.add("identity is not self-conjugate");

  for (std::size_t a = 0; a < n && !v.full(); ++a) {
    if (table.product(identity, a) != SparseRow{{a, 1}}) v.add("identity fails: [0]." + idx(a) + " != " + idx(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (table.product(a, b) != table.product(b, a)) v.add("not commutative at " + idx(a) + idx(b));
      if (table.coefficient(a, b, identity) != (b == sigma[a] ? 1 : 0))
        v.add("conjugation pairing fails at " + idx(a) + idx(b));
      for (const auto& [c, m] : table.product(a, b)) {
        if (table.coefficient(sigma[a], sigma[b], sigma[c]) != m)
          v.add("not conjugation invariant at " + idx(a) + idx(b) + idx(c));
        // N_{a,b,c^+} = N_{b,c^+,a} = N_{b,c^+}^{a^+}
        if (table.coefficient(b, sigma[c], sigma[a]) != m)
          v.add("N_{a,b,c} not cyclically symmetric at " + idx(a) + idx(b) + idx(c));
      }
    }
  }
  if (v.full()) return v.take();

  // Associativity: the elements u with u(xy) = (ux)y form a subalgebra, so it
  // suffices to check this for a set of elements that generates the algebra.
  std::vector<Label> diff(n, 0);
  std::vector<std::size_t> touched;
  auto bump = [&](std::size_t e, Label by) {
    if (diff[e] == 0) touched.push_back(e);
    diff[e] = checked_add(diff[e], by);
  };
  for (std::size_t g : generating_set(table, identity)) {
    for (std::size_t x = 0; x < n && !v.full(); ++x)
      for (std::size_t y = 0; y < n; ++y) {
        for (const auto& [d, m] : table.product(x, y))
          for (const auto& [e, m2] : table.product(g, d)) bump(e, checked_mul(m, m2));
        for (const auto& [d, m] : table.product(g, x))
          for (const auto& [e, m2] : table.product(d, y)) bump(e, -checked_mul(m, m2));
        bool equal = true;
        for (std::size_t e : touched) {
          equal = equal && diff[e] == 0;
          diff[e] = 0;
        }
        touched.clear();
        if (!equal) {
          v.add("not associative at " + idx(g) + idx(x) + idx(y));
          break;
        }
      }
  }
  return v.take();
}

FusionAlgebra::FusionAlgebra(AlgebraId algebra, Label level, std::vector<Weight> basis, FusionTable table,
                             std::vector<std::size_t> conjugation)
    : algebra_(algebra),
      level_(level),
      basis_(std::move(basis)),
      table_(std::move(table)),
      conjugation_(std::move(conjugation)) {
  if (table_.size() != basis_.size() || conjugation_.size() != basis_.size())
    throw std::invalid_argument("fusion algebra basis, table and conjugation sizes differ");
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (!index_.emplace(basis_[i], i).second) throw std::invalid_argument("repeated basis weight " + basis_[i].to_string());
}

std::optional<std::size_t> FusionAlgebra::index_of(const Weight& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Label FusionAlgebra::coefficient(const Weight& lambda, const Weight& mu, const Weight& nu) const {
  const auto i = index_of(lambda);
  const auto j = index_of(mu);
  if (!i || !j) throw std::invalid_argument("weight outside the fusion basis");
  const auto k = index_of(nu);
  return k ? table_.coefficient(*i, *j, *k) : 0;
}

FusionTable FusionAlgebra::relabeled(const std::vector<Weight>& label_map) const {
  const std::size_t n = label_map.size();
  std::vector<std::size_t> to_basis(n);
  std::map<std::size_t, std::size_t> from_basis;
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = index_of(label_map[i]);
    if (!b) throw std::invalid_argument("label map weight " + label_map[i].to_string() + " is not in the basis");
    to_basis[i] = *b;
    from_basis[*b] = i;
  }
  FusionTable out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseRow row;
      for (const auto& [k, c] : table_.product(to_basis[i], to_basis[j])) {
        auto it = from_basis.find(k);
        if (it == from_basis.end())
          throw std::invalid_argument("label map does not close under fusion: product leaves the labelled subset");
        row.emplace_back(it->second, c);
      }
      out.set_product(i, j, std::move(row));
    }
  return out;
}

namespace {

void check_level(const RootSystem& rs, const Weight& x, Label k) {
  rs.check_rank(x);
  if (!x.is_dominant()) throw std::invalid_argument("fusion needs dominant weights, got " + x.to_string());
  const Label level = rs.level_of(x);
  if (level > k)
    throw LevelError("weight " + x.to_string() + " has level " + std::to_string(level) + " > " + std::to_string(k),
                     level, k);
}

}  // namespace

std::map<Weight, Label> kac_walton(const RootSystem& rs, const WeightSystem& ws_lambda, const Weight& mu, Label k) {
  if (k < 1) throw std::invalid_argument("fusion level must be >= 1");
  check_level(rs, ws_lambda.highest(), k);
  check_level(rs, mu, k);
  const Weight shift = mu + rs.rho();
  std::map<Weight, Label> acc;
  for (const auto& [beta, m] : ws_lambda.mults()) {
    SignedWeight folded = fold_alcove(rs, beta + shift, k);
    if (folded.sign == 0) continue;
    Label& slot = acc[folded.weight - rs.rho()];
    slot = checked_add(slot, folded.sign * m);
  }
  std::map<Weight, Label> out;
  for (auto& [nu, n] : acc) {
    if (n < 0) throw std::logic_error("negative fusion coefficient at " + nu.to_string());
    if (n > 0) out.emplace(nu, n);
  }
  return out;
}

std::map<Weight, Label> kac_walton(const RootSystem& rs, const Weight& lambda, const Weight& mu, Label k) {
  if (k < 1) throw std::invalid_argument("fusion level must be >= 1");
  check_level(rs, lambda, k);
  check_level(rs, mu, k);
  return kac_walton(rs, *default_weight_cache().get(rs, lambda), mu, k);
}

namespace {

FusionAlgebra assemble(const RootSystem& rs, Label k, std::vector<Weight> basis, FusionTable table, bool verify) {
  auto sigma = conjugation_from_table(table, 0);
  if (!sigma) throw AxiomViolation(rs.algebra().to_string() + " level " + std::to_string(k) + ": no conjugation pairing");
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[(*sigma)[i]] != conjugate_weight(rs, basis[i]))
      throw AxiomViolation("conjugation of " + basis[i].to_string() + " disagrees with -w_0");
  if (verify) {
    const auto violations = check_fusion_axioms(table, 0, *sigma);
    if (!violations.empty()) {
      std::string msg = rs.algebra().to_string() + " level " + std::to_string(k) + " violates the fusion axioms:";
      for (const auto& s : violations) msg += "\n  " + s;
      throw AxiomViolation(msg);
    }
  }
  return FusionAlgebra(rs.algebra(), k, std::move(basis), std::move(table), std::move(*sigma));
}

}  // namespace

FusionAlgebra build_fusion_algebra(const RootSystem& rs, Label k, const FusionBuildOptions& options) {
  if (k < 1) throw std::invalid_argument("fusion level must be >= 1");
  std::vector<Weight> basis = enumerate_Pk(rs, k);
  if (basis.size() > options.max_basis)
    throw BoundExceeded("|P_k^+| = " + std::to_string(basis.size()) + " exceeds the bound " +
                        std::to_string(options.max_basis));
  std::map<Weight, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  FusionTable table(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto ws = default_weight_cache().get(rs, basis[i], options.max_dim);
    for (std::size_t j = i; j < basis.size(); ++j) {
      SparseRow row;
      for (const auto& [nu, n] : kac_walton(rs, *ws, basis[j], k)) {
        auto it = index.find(nu);
        if (it == index.end()) throw AxiomViolation("fusion product left P_k^+ at " + nu.to_string());
        row.emplace_back(it->second, n);
      }
      if (j != i) table.set_product(j, i, row);
      table.set_product(i, j, std::move(row));
    }
  }
  return assemble(rs, k, std::move(basis), std::move(table), options.verify_axioms);
}

FusionAlgebra level1_group_fusion(const RootSystem& rs) {
  const Family f = rs.algebra().family();
  if (f != Family::A && f != Family::D) return build_fusion_algebra(rs, 1);
  std::vector<Weight> basis = enumerate_Pk(rs, 1);
  FusionTable table(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Weight sum = basis[i] + basis[j];
      std::size_t hit = basis.size();
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (rs.in_root_lattice(sum - basis[l])) {
          if (hit != basis.size()) throw std::logic_error("level-1 weights are not distinct mod the root lattice");
          hit = l;
        }
      if (hit == basis.size()) throw std::logic_error("level-1 weights do not cover P/Q");
      table.set_product(i, j, {{hit, 1}});
    }
  return assemble(rs, 1, std::move(basis), std::move(table), true);
}

namespace {

std::vector<Label> prime_factors(Label n) {
  std::vector<Label> out;
  for (Label p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::vector<Label> group_invariants(const FusionAlgebra& fa) {
  const FusionTable& t = fa.table();
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseRow& row = t.product(i, j);
      if (row.size() != 1 || row[0].second != 1)
        throw std::invalid_argument("product [" + std::to_string(i) + "].[" + std::to_string(j) +
                                    "] is not a single basis element");
    }
  auto power = [&](std::size_t x, Label e) {
    std::size_t acc = 0;
    for (Label s = 0; s < e; ++s) acc = t.product(acc, x)[0].first;
    return acc;
  };
  // Number of cyclic p-primary factors of order >= p^j is log_p(|G[p^j]| / |G[p^{j-1}]|).
  const Label order = static_cast<Label>(n);
  std::vector<std::vector<Label>> primary;  // per prime, exponents in decreasing order
  for (Label p : prime_factors(order)) {
    std::vector<Label> at_least;  // at_least[j-1] = number of factors of order >= p^j
    Label prev = 1;
    for (Label pj = p;; pj *= p) {
      Label count = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (power(x, pj) == 0) ++count;
      if (count == prev) break;
      Label ratio = count / prev, r = 0;
      while (ratio > 1) ratio /= p, ++r;
      at_least.push_back(r);
      prev = count;
    }
    std::vector<Label> factors;  // p-power factor orders, decreasing
    for (std::size_t j = at_least.size(); j-- > 0;) {
      const Label exact = at_least[j] - (j + 1 < at_least.size() ? at_least[j + 1] : 0);
      Label q = 1;
      for (std::size_t s = 0; s <= j; ++s) q *= p;
      for (Label c = 0; c < exact; ++c) factors.push_back(q);
    }
    primary.push_back(std::move(factors));
  }
  std::size_t len = 0;
  for (const auto& f : primary) len = std::max(len, f.size());
  std::vector<Label> inv(len, 1);
  for (const auto& f : primary)
    for (std::size_t s = 0; s < f.size(); ++s) inv[len - 1 - s] *= f[s];
  return inv;
}

std::string Spin::to_string() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

Spin parse_spin(const std::string& text) {
  if (!text.empty() && text[0] == '-') throw ParseError("spin must be >= 0", 0);
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const Label v = std::stoll(text, &used);
      if (used != text.size()) throw ParseError("trailing characters in spin '" + text + "'", used);
      return Spin{2 * v};
    }
    const Label num = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw ParseError("bad spin numerator in '" + text + "'", used);
    if (text.substr(slash + 1) != "2") throw ParseError("spin denominator must be 2 in '" + text + "'", slash + 1);
    return Spin{num};
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError("cannot parse spin '" + text + "'", 0);
  }
}

std::map<Spin, Label> sl2_fusion_direct(Label k, Spin a, Spin b) {
  if (k < 1) throw std::invalid_argument("fusion level must be >= 1");
  for (const Spin& s : {a, b})
    if (s.twice < 0 || s.twice > k) throw std::out_of_range("spin " + s.to_string() + " outside [0, k/2]");
  std::map<Spin, Label> out;
  for (Label c = std::abs(a.twice - b.twice); c <= a.twice + b.twice; c += 2)
    if (a.twice + b.twice + c <= 2 * k) out.emplace(Spin{c}, 1);
  return out;
}

namespace experimental {

namespace {

std::string word_string(const std::vector<std::size_t>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t i : word) s += (s.empty() ? "r" : " r") + std::to_string(i + 1);
  return s;
}

}  // namespace

Conjecture1Report conjecture1_probe(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& beta,
                                    Label k) {
  check_level(rs, lambda, k);
  check_level(rs, mu, k);
  check_level(rs, beta + mu, k);
  const auto ws = default_weight_cache().get(rs, lambda);
  if (!ws->contains(beta)) throw std::invalid_argument("beta " + beta.to_string() + " is not a weight of V^lambda");

  const Weight shift = mu + rs.rho();
  std::vector<Weight> targets;
  for (const auto& [b, m] : ws->mults()) targets.push_back(b + shift);
  const Weight p = beta + shift;

  Conjecture1Report report;
  if (std::binary_search(targets.begin(), targets.end(), reflect_affine(rs, p, k))) return report;

  // Every element of the affine Weyl group acts as x -> w x + K t with w in W,
  // K = k + h^vee and t in the coroot lattice; solve for t target by target.
  const Label K = k + rs.dual_coxeter();
  report.status = ProbeStatus::Holds;
  for (const auto& word : weyl_group_words(rs)) {
    const Weight wp = apply_word(rs, word, p);
    for (const Weight& s : targets) {
      Weight t = s - wp;
      if (t.is_zero()) {
        ++report.candidates;
        continue;
      }
      bool divisible = true;
      for (std::size_t i = 0; i < t.rank() && divisible; ++i) divisible = t[i] % K == 0;
      if (!divisible) continue;
      for (std::size_t i = 0; i < t.rank(); ++i) t[i] /= K;
      if (!rs.in_coroot_lattice(t)) continue;
      ++report.candidates;
      if (!report.witness) {
        report.status = ProbeStatus::Violated;
        report.witness = "translation by " + std::to_string(K) + "*(" + t.to_string() + ") after " + word_string(word) +
                         " maps " + p.to_string() + " to " + s.to_string();
      }
    }
  }
  return report;
}

CorollaryCheck corollary_threshold_check(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                         const Weight& beta, Label k) {
  check_level(rs, lambda, k);
  check_level(rs, mu, k);
  const Weight nu = beta + mu;
  check_level(rs, nu, k);
  const auto ws = default_weight_cache().get(rs, lambda);
  CorollaryCheck c;
  c.r = weight_string(*ws, beta, rs.theta()).r;
  c.applicable = k >= rs.level_of(mu) + c.r;
  c.tensor = racah_speiser(rs, *ws, mu).mult(nu);
  const auto fusion = kac_walton(rs, *ws, mu, k);
  auto it = fusion.find(nu);
  c.fusion = it == fusion.end() ? 0 : it->second;
  c.held = !c.applicable || c.fusion == c.tensor;
  return c;
}

}  // namespace experimental

}  // namespace fusionkit
