#include "fusionkit/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fusionkit/errors.hpp"
#include "fusionkit/weyl.hpp"

namespace fusionkit {

AlgebraId::AlgebraId(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw InvalidAlgebra("invalid rank " + std::to_string(rank) + " for family " + to_string().substr(0, 1));
}

std::string AlgebraId::to_string() const {
  static constexpr char names[] = {'A', 'B', 'C', 'D', 'G'};
  return std::string(1, names[static_cast<int>(family_)]) + std::to_string(rank_);
}

AlgebraId parse_algebra(const std::string& text) {
  if (text.size() < 2) throw ParseError("expected an algebra such as A2", 0);
  Family family;
  switch (text[0]) {
    case 'A': case 'a': family = Family::A; break;
    case 'B': case 'b': family = Family::B; break;
    case 'C': case 'c': family = Family::C; break;
    case 'D': case 'd': family = Family::D; break;
    case 'G': case 'g': family = Family::G; break;
    case 'E': case 'e': case 'F': case 'f':
      throw InvalidAlgebra("exceptional algebra " + text + " is not supported (G2 is the only exceptional type)");
    default: throw ParseError("unknown algebra family '" + text.substr(0, 1) + "'", 0);
  }
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("expected a decimal rank", i);
    rank = rank * 10 + (text[i] - '0');
    if (rank > 1000) throw ParseError("rank too large", i);
  }
  return AlgebraId(family, rank);
}

Label Root::height() const { return std::accumulate(simple_coords.begin(), simple_coords.end(), Label{0}); }

Label Root::pair(const Weight& x) const {
  Label s = 0;
  for (std::size_t i = 0; i < coroot_coords.size(); ++i) s = checked_add(s, checked_mul(coroot_coords[i], x[i]));
  return s;
}

namespace {

// Gram matrix (alpha_i, alpha_j) of the simple roots, 0-based.
RatMatrix simple_gram(const AlgebraId& id) {
  const std::size_t n = static_cast<std::size_t>(id.rank());
  RatMatrix b(n, n);
  auto link = [&](std::size_t i, std::size_t j, const mpq_class& v) {
    b(i, j) = v;
    b(j, i) = v;
  };
  switch (id.family()) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) b(i, i) = 2;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      if (n == 2) {
        // alpha_1 short, alpha_2 long; theta = 2 lambda_1.
        b(0, 0) = 1;
        b(1, 1) = 2;
        link(0, 1, -1);
      } else {
        for (std::size_t i = 0; i < n; ++i) b(i, i) = 2;
        b(n - 1, n - 1) = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      }
      break;
    case Family::C:
      for (std::size_t i = 0; i < n; ++i) b(i, i) = 1;
      b(n - 1, n - 1) = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, mpq_class(-1, 2));
      link(n - 2, n - 1, -1);
      break;
    case Family::D:
      for (std::size_t i = 0; i < n; ++i) b(i, i) = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::G:
      b(0, 0) = mpq_class(2, 3);
      b(1, 1) = 2;
      link(0, 1, -1);
      break;
  }
  return b;
}

std::vector<Root> positive_roots_from(const IntMatrix& cartan, const RatMatrix& gram) {
  const std::size_t n = cartan.rows();
  std::map<std::vector<Label>, bool> present;
  std::vector<std::vector<Label>> order;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Label> c(n, 0);
    c[i] = 1;
    present[c] = true;
    order.push_back(c);
  }
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const std::vector<Label> beta = order[idx];
    for (std::size_t i = 0; i < n; ++i) {
      Label pairing = 0;  // <beta, alpha_i^vee>
      for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan(j, i);
      Label r = 0;
      std::vector<Label> down = beta;
      while (true) {
        down[i] -= 1;
        if (!present.count(down)) break;
        ++r;
      }
      const Label q = r - pairing;
      if (q > 0) {
        std::vector<Label> up = beta;
        up[i] += 1;
        if (!present.count(up)) {
          present[up] = true;
          order.push_back(up);
        }
      }
    }
  }
  std::vector<Root> roots;
  for (const auto& c : order) {
    Root root;
    root.simple_coords = c;
    root.labels = Weight(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) root.labels[j] += c[i] * cartan(i, j);
    mpq_class len = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) len += mpq_class(static_cast<long>(c[i] * c[j])) * gram(i, j);
    root.length2 = len;
    root.coroot_coords.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      root.coroot_coords[i] = to_int64(mpq_class(static_cast<long>(c[i])) * gram(i, i) / len);
    roots.push_back(std::move(root));
  }
  std::stable_sort(roots.begin(), roots.end(),
                   [](const Root& a, const Root& b) { return a.height() < b.height(); });
  mpq_class longest = 0;
  for (const auto& r : roots) longest = std::max(longest, r.length2);
  for (auto& r : roots) r.is_long = (r.length2 == longest);
  return roots;
}

}  // namespace

RootSystem build_root_system(const AlgebraId& id) {
  RootSystem rs(id);
  const std::size_t n = rs.rank();
  const RatMatrix gram = simple_gram(id);

  rs.cartan_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.cartan_(i, j) = to_int64(2 * gram(i, j) / gram(j, j));
  rs.root_lengths_.resize(n);
  for (std::size_t i = 0; i < n; ++i) rs.root_lengths_[i] = gram(i, i);

  rs.cartan_inverse_ = inverse(to_rational(rs.cartan_));
  rs.form_fw_ = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.form_fw_(i, j) = rs.cartan_inverse_(i, j) * gram(j, j) / 2;

  mpz_class denom = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), rs.form_fw_(i, j).get_den_mpz_t());
  rs.form_scale_ = to_int64(denom);
  rs.form_scaled_ = IntMatrix(n, n);
  rs.rho_key_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rs.form_scaled_(i, j) = to_int64(rs.form_fw_(i, j) * denom);
      rs.rho_key_[i] += rs.form_scaled_(i, j);
    }

  rs.positive_roots_ = positive_roots_from(rs.cartan_, gram);
  const Root& highest = rs.positive_roots_.back();
  rs.theta_ = highest.labels;
  rs.marks_ = highest.simple_coords;
  rs.comarks_.resize(n);
  rs.comarks_int_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rs.comarks_[i] = mpq_class(static_cast<long>(rs.marks_[i])) * gram(i, i) / 2;
    rs.comarks_int_[i] = to_int64(rs.comarks_[i]);
  }
  rs.rho_ = Weight(std::vector<Label>(n, 1));
  rs.dual_coxeter_ = 1 + std::accumulate(rs.comarks_int_.begin(), rs.comarks_int_.end(), Label{0});

  // Invariants.
  if (rs.inner_product(rs.theta_, rs.theta_) != 2) throw std::logic_error("highest root not normalized");
  if (highest.coroot_coords != rs.comarks_int_) throw std::logic_error("comark identity violated");
  if (rs.inner_product(rs.rho_, rs.theta_) != rs.dual_coxeter_ - 1)
    throw std::logic_error("dual Coxeter number inconsistent with (rho, theta)");
  for (std::size_t i = 0; i + 1 < rs.positive_roots_.size(); ++i)
    if (rs.positive_roots_[i].height() >= highest.height()) throw std::logic_error("highest root not unique");
  return rs;
}

Weight RootSystem::simple_root(std::size_t i) const {
  Weight w(rank());
  for (std::size_t j = 0; j < rank(); ++j) w[j] = cartan_(i, j);
  return w;
}

void RootSystem::check_rank(const Weight& x) const {
  if (x.rank() != rank())
    throw DimensionMismatch("weight " + x.to_string() + " has rank " + std::to_string(x.rank()) + ", algebra " +
                            id_.to_string() + " has rank " + std::to_string(rank()));
}

mpq_class RootSystem::inner_product(const Weight& x, const Weight& y) const {
  check_rank(x);
  check_rank(y);
  mpq_class s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      s += mpq_class(static_cast<long>(x[i])) * mpq_class(static_cast<long>(y[j])) * form_fw_(i, j);
  return s;
}

mpq_class RootSystem::theta_pairing(const Weight& x) const { return mpq_class(static_cast<long>(level_of(x))); }

Label RootSystem::level_of(const Weight& x) const {
  check_rank(x);
  Label s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s = checked_add(s, checked_mul(x[i], comarks_int_[i]));
  return s;
}

Label RootSystem::height_key(const Weight& x) const {
  Label s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s = checked_add(s, checked_mul(x[i], rho_key_[i]));
  return s;
}

Label RootSystem::scaled_inner_product(const Weight& x, const Weight& y) const {
  Label s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    Label row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row = checked_add(row, checked_mul(form_scaled_(i, j), y[j]));
    s = checked_add(s, checked_mul(x[i], row));
  }
  return s;
}

std::vector<mpq_class> RootSystem::simple_root_coords(const Weight& x) const {
  check_rank(x);
  std::vector<mpq_class> c(rank(), 0);
  for (std::size_t j = 0; j < rank(); ++j)
    for (std::size_t i = 0; i < rank(); ++i) c[j] += mpq_class(static_cast<long>(x[i])) * cartan_inverse_(i, j);
  return c;
}

bool RootSystem::in_root_lattice(const Weight& x) const {
  for (const auto& c : simple_root_coords(x))
    if (c.get_den() != 1) return false;
  return true;
}

bool RootSystem::in_coroot_lattice(const Weight& x) const {
  const auto c = simple_root_coords(x);
  for (std::size_t i = 0; i < rank(); ++i) {
    const mpq_class coroot = c[i] * root_lengths_[i] / 2;
    if (coroot.get_den() != 1) return false;
  }
  return true;
}

std::pair<Label, Weight> affine_to_classical(const RootSystem& rs, const AffineWeight& aw) {
  if (aw.labels.size() != rs.rank() + 1)
    throw DimensionMismatch("affine weight needs " + std::to_string(rs.rank() + 1) + " labels");
  for (Label n : aw.labels)
    if (n < 0) throw std::invalid_argument("affine dominant weight labels must be nonnegative");
  Weight lambda(std::vector<Label>(aw.labels.begin() + 1, aw.labels.end()));
  return {checked_add(aw.labels[0], rs.level_of(lambda)), lambda};
}

AffineWeight classical_to_affine(const RootSystem& rs, const Weight& lambda, Label level) {
  const Label n0 = level - rs.level_of(lambda);
  if (!lambda.is_dominant() || n0 < 0)
    throw LevelError("weight " + lambda.to_string() + " is not in P_" + std::to_string(level) + "^+",
                     rs.level_of(lambda), level);
  AffineWeight aw;
  aw.labels.push_back(n0);
  aw.labels.insert(aw.labels.end(), lambda.begin(), lambda.end());
  return aw;
}

namespace {

void enumerate_rec(const RootSystem& rs, std::size_t i, Label budget, Weight& current, std::vector<Weight>& out) {
  if (i == rs.rank()) {
    out.push_back(current);
    return;
  }
  const Label c = rs.integer_comarks()[i];
  for (Label n = 0; n * c <= budget; ++n) {
    current[i] = n;
    enumerate_rec(rs, i + 1, budget - n * c, current, out);
  }
  current[i] = 0;
}

}  // namespace

std::vector<Weight> enumerate_Pk(const RootSystem& rs, Label k) {
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  std::vector<Weight> out;
  Weight current(rs.rank());
  enumerate_rec(rs, 0, k, current, out);
  return out;
}

Weight conjugate_weight(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda);
  return dominant_representative(rs, -lambda);
}

}  // namespace fusionkit
