#pragma once

// Racah-Speiser tensor product decomposition and the stability results built on it.
//
// The PRV description of Mult_{lambda,mu}^{beta+mu} as the dimension of
// {v in V^lambda_beta : e_j^{<mu,alpha_j>+1} v = 0} needs explicit root-vector
// actions and is not computed here; its consequence for stability zones is
// checked through stability_threshold instead.

#include <cstddef>
#include <map>

#include "fusionkit/weight_system.hpp"

namespace fusionkit {

struct Decomposition {
  Weight left;
  Weight right;
  std::map<Weight, Label> terms;  // nu -> Mult_{left,right}^nu, all > 0

  Label mult(const Weight& nu) const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// V^lambda (x) V^mu via signed folding of Pi^lambda + mu + rho into the dominant chamber.
Decomposition racah_speiser(const RootSystem& rs, const WeightSystem& ws_lambda, const Weight& mu);
Decomposition racah_speiser(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                            std::size_t max_dim = kDefaultMaxDim);

/// racah_speiser(lambda, mu) == racah_speiser(mu, lambda) as maps.
bool symmetric_decomposition_check(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// q_{beta,j}: for <mu, alpha_j^vee> >= q and beta + mu dominant,
/// Mult_{lambda,mu}^{beta+mu} = Mult_{lambda,mu+lambda_j}^{beta+mu+lambda_j}. j is 0-based.
Label stability_threshold(const RootSystem& rs, const WeightSystem& ws_lambda, const Weight& beta, std::size_t j);

/// <lambda + mu, theta>: from this level on fusion equals tensor multiplicity.
Label min_equal_level(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// Pi^lambda + mu + rho contained in F_k', tested point by point.
bool verify_Fk_containment(const RootSystem& rs, const Weight& lambda, const Weight& mu, Label k);

}  // namespace fusionkit
