#include "fusionkit/tensor.hpp"

#include <stdexcept>

#include "fusionkit/weyl.hpp"

namespace fusionkit {

Label Decomposition::mult(const Weight& nu) const {
  auto it = terms.find(nu);
  return it == terms.end() ? 0 : it->second;
}

Decomposition racah_speiser(const RootSystem& rs, const WeightSystem& ws_lambda, const Weight& mu) {
  rs.check_rank(mu);
  if (!mu.is_dominant()) throw std::invalid_argument("tensor factor must be dominant, got " + mu.to_string());
  const Weight shift = mu + rs.rho();
  std::map<Weight, Label> acc;
  for (const auto& [beta, m] : ws_lambda.mults()) {
    SignedWeight folded = fold_dominant(rs, beta + shift);
    if (folded.sign == 0) continue;
    Label& slot = acc[folded.weight - rs.rho()];
    slot = checked_add(slot, folded.sign * m);
  }
  Decomposition d{ws_lambda.highest(), mu, {}};
  for (auto& [nu, n] : acc) {
    if (n < 0) throw std::logic_error("negative tensor multiplicity at " + nu.to_string());
    if (n > 0) d.terms.emplace(nu, n);
  }
  return d;
}

Decomposition racah_speiser(const RootSystem& rs, const Weight& lambda, const Weight& mu, std::size_t max_dim) {
  return racah_speiser(rs, *default_weight_cache().get(rs, lambda, max_dim), mu);
}

bool symmetric_decomposition_check(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  return racah_speiser(rs, lambda, mu).terms == racah_speiser(rs, mu, lambda).terms;
}

Label stability_threshold(const RootSystem& rs, const WeightSystem& ws_lambda, const Weight& beta, std::size_t j) {
  if (j >= rs.rank()) throw std::out_of_range("simple root index out of range");
  return weight_string(ws_lambda, beta, rs.simple_root(j)).q;
}

Label min_equal_level(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  return rs.level_of(lambda + mu);
}

bool verify_Fk_containment(const RootSystem& rs, const Weight& lambda, const Weight& mu, Label k) {
  const auto ws = default_weight_cache().get(rs, lambda);
  const Weight shift = mu + rs.rho();
  for (const auto& [beta, m] : ws->mults())
    if (!in_open_Fk(rs, beta + shift, k)) return false;
  return true;
}

}  // namespace fusionkit
