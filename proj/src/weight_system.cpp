#include "fusionkit/weight_system.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "fusionkit/errors.hpp"
#include "fusionkit/weyl.hpp"

namespace fusionkit {

Label WeightSystem::mult(const Weight& beta) const {
  auto it = mults_.find(beta);
  return it == mults_.end() ? 0 : it->second;
}

std::vector<Weight> dominant_below(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda);
  if (!lambda.is_dominant()) throw std::invalid_argument("dominant_below needs a dominant weight, got " + lambda.to_string());
  // Covering relations among dominant weights are differences of positive roots.
  std::set<Weight> seen{lambda};
  std::vector<Weight> stack{lambda};
  while (!stack.empty()) {
    Weight mu = std::move(stack.back());
    stack.pop_back();
    for (const Root& root : rs.positive_roots()) {
      Weight next = mu - root.labels;
      if (next.is_dominant() && seen.insert(next).second) stack.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

mpz_class weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda);
  const Weight shifted = lambda + rs.rho();
  mpq_class dim = 1;
  for (const Root& root : rs.positive_roots()) {
    mpq_class factor(static_cast<long>(root.pair(shifted)), static_cast<long>(root.pair(rs.rho())));
    factor.canonicalize();
    dim *= factor;
  }
  if (dim.get_den() != 1) throw std::logic_error("non-integral Weyl dimension");
  return dim.get_num();
}

namespace {

void check_dimension_bound(const RootSystem& rs, const Weight& lambda, std::size_t max_dim) {
  if (!lambda.is_dominant()) throw std::invalid_argument("highest weight must be dominant, got " + lambda.to_string());
  const mpz_class dim = weyl_dimension(rs, lambda);
  if (dim > mpz_class(static_cast<unsigned long>(max_dim)))
    throw BoundExceeded("dim V^" + lambda.to_string() + " = " + dim.get_str() + " exceeds the bound " +
                        std::to_string(max_dim));
}

std::vector<Weight> by_decreasing_height(const RootSystem& rs, std::vector<Weight> weights) {
  std::stable_sort(weights.begin(), weights.end(), [&](const Weight& a, const Weight& b) {
    return rs.height_key(a) > rs.height_key(b);
  });
  return weights;
}

WeightSystem close_under_weyl(const RootSystem& rs, const Weight& lambda, std::map<Weight, Label> dominant) {
  std::map<Weight, Label> all;
  for (const auto& [beta, m] : dominant)
    for (const Weight& w : weyl_orbit(rs, beta)) all.emplace(w, m);
  return WeightSystem(lambda, std::move(dominant), std::move(all));
}

Label lookup(const RootSystem& rs, const std::map<Weight, Label>& known, const Weight& x) {
  auto it = known.find(dominant_representative(rs, x));
  return it == known.end() ? 0 : it->second;
}

}  // namespace

WeightSystem racah_multiplicities(const RootSystem& rs, const Weight& lambda, std::size_t max_dim) {
  rs.check_rank(lambda);
  check_dimension_bound(rs, lambda, max_dim);
  const SignedOrbit orbit = signed_rho_orbit(rs);
  const Weight& rho = rs.rho();

  std::map<Weight, Label> mults{{lambda, 1}};
  for (const Weight& nu : by_decreasing_height(rs, dominant_below(rs, lambda))) {
    if (nu == lambda) continue;
    const Weight base = nu + rho;
    Label sum = 0;
    for (const auto& [w_rho, sign] : orbit.entries) {
      if (w_rho == rho) continue;
      sum = checked_add(sum, sign * lookup(rs, mults, base - w_rho));
    }
    if (-sum <= 0) throw std::logic_error("Racah recursion produced a nonpositive multiplicity at " + nu.to_string());
    mults.emplace(nu, -sum);
  }
  return close_under_weyl(rs, lambda, std::move(mults));
}

WeightSystem freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda, std::size_t max_dim) {
  rs.check_rank(lambda);
  check_dimension_bound(rs, lambda, max_dim);
  const Weight top = lambda + rs.rho();
  const Label top_norm = rs.scaled_inner_product(top, top);

  std::map<Weight, Label> mults{{lambda, 1}};
  for (const Weight& nu : by_decreasing_height(rs, dominant_below(rs, lambda))) {
    if (nu == lambda) continue;
    const Weight shifted = nu + rs.rho();
    const Label denom = top_norm - rs.scaled_inner_product(shifted, shifted);
    Label numer = 0;
    for (const Root& root : rs.positive_roots()) {
      Weight x = nu;
      while (true) {
        x += root.labels;
        const Label m = lookup(rs, mults, x);
        if (m == 0) break;
        numer = checked_add(numer, checked_mul(2 * m, rs.scaled_inner_product(x, root.labels)));
      }
    }
    if (denom <= 0 || numer % denom != 0 || numer / denom <= 0)
      throw std::logic_error("Freudenthal recursion failed at " + nu.to_string());
    mults.emplace(nu, numer / denom);
  }
  return close_under_weyl(rs, lambda, std::move(mults));
}

Label dimension(const WeightSystem& ws) {
  Label d = 0;
  for (const auto& [beta, m] : ws.mults()) d = checked_add(d, m);
  return d;
}

WeightString weight_string(const WeightSystem& ws, const Weight& beta, const Weight& direction) {
  if (!ws.contains(beta)) throw std::invalid_argument("weight " + beta.to_string() + " is not in the weight system");
  if (direction.is_zero()) throw std::invalid_argument("weight string direction must be nonzero");
  WeightString s;
  for (Weight x = beta - direction; ws.contains(x); x -= direction) ++s.r;
  for (Weight x = beta + direction; ws.contains(x); x += direction) ++s.q;
  return s;
}

WeightSystemCache::WeightSystemCache(std::size_t capacity, std::optional<std::filesystem::path> dir)
    : capacity_(std::max<std::size_t>(capacity, 1)), dir_(std::move(dir)) {}

void WeightSystemCache::set_directory(std::optional<std::filesystem::path> dir) {
  std::unique_lock lock(mutex_);
  dir_ = std::move(dir);
}

std::size_t WeightSystemCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void WeightSystemCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
  recency_.clear();
}

std::shared_ptr<const WeightSystem> WeightSystemCache::get(const RootSystem& rs, const Weight& lambda,
                                                           std::size_t max_dim) {
  rs.check_rank(lambda);
  const Key key = rs.algebra().to_string() + "_" + lambda.to_string();
  {
    std::unique_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      recency_.splice(recency_.begin(), recency_, it->second.second);
      return it->second.first;
    }
  }
  std::shared_ptr<const WeightSystem> ws = load_from_disk(key, lambda);
  if (!ws) {
    ws = std::make_shared<const WeightSystem>(racah_multiplicities(rs, lambda, max_dim));
    store_to_disk(key, *ws);
  }
  std::unique_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it != entries_.end()) return it->second.first;
  recency_.push_front(key);
  entries_.emplace(key, std::make_pair(ws, recency_.begin()));
  while (entries_.size() > capacity_) {
    entries_.erase(recency_.back());
    recency_.pop_back();
  }
  return ws;
}

std::shared_ptr<const WeightSystem> WeightSystemCache::load_from_disk(const Key& key, const Weight& lambda) const {
  std::optional<std::filesystem::path> dir;
  {
    std::shared_lock lock(mutex_);
    dir = dir_;
  }
  if (!dir) return nullptr;
  std::ifstream in(*dir / (key + ".json"));
  if (!in) return nullptr;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("highest").get<std::vector<Label>>() != lambda.labels()) return nullptr;
    std::map<Weight, Label> dominant;
    for (const auto& entry : doc.at("dominant")) dominant.emplace(Weight(entry.at(0).get<std::vector<Label>>()), entry.at(1).get<Label>());
    std::map<Weight, Label> all;
    for (const auto& entry : doc.at("weights")) all.emplace(Weight(entry.at(0).get<std::vector<Label>>()), entry.at(1).get<Label>());
    return std::make_shared<const WeightSystem>(lambda, std::move(dominant), std::move(all));
  } catch (const nlohmann::json::exception&) {
    return nullptr;  // unreadable cache entries are recomputed
  }
}

void WeightSystemCache::store_to_disk(const Key& key, const WeightSystem& ws) const {
  std::optional<std::filesystem::path> dir;
  {
    std::shared_lock lock(mutex_);
    dir = dir_;
  }
  if (!dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  nlohmann::json doc;
  doc["highest"] = ws.highest().labels();
  doc["dominant"] = nlohmann::json::array();
  for (const auto& [w, m] : ws.dominant_mults()) doc["dominant"].push_back({w.labels(), m});
  doc["weights"] = nlohmann::json::array();
  for (const auto& [w, m] : ws.mults()) doc["weights"].push_back({w.labels(), m});
  const auto tmp = *dir / (key + ".json.tmp");
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << doc.dump();
  }
  std::filesystem::rename(tmp, *dir / (key + ".json"), ec);
}

WeightSystemCache& default_weight_cache() {
  static WeightSystemCache cache(512);
  return cache;
}

}  // namespace fusionkit
