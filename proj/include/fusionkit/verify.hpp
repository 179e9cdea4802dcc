#pragma once

// Cross-module verification sweeps used by the CLI "verify" command.

#include <cstddef>
#include <string>
#include <vector>

#include "fusionkit/io.hpp"

namespace fusionkit {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;  // informational counts, never affect passed()

  bool passed() const { return failures.empty(); }
};

Json to_json(const SuiteResult& r);

/// Known suite names, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs one suite or, for "all", every suite in order. Throws
/// std::invalid_argument for an unknown name.
std::vector<SuiteResult> run_suite(const std::string& name);

SuiteResult verify_tables();
SuiteResult verify_stability();
SuiteResult verify_orbit_identities();
SuiteResult verify_covers();
SuiteResult verify_ramanujan();

/// Whenever <mu, alpha_j^vee> >= q_{beta,j} and beta+mu
/// is dominant, Mult_{lambda,mu}^{beta+mu} = Mult_{lambda,mu+lambda_j}^{beta+mu+lambda_j}.
/// Sweeps lambda with labels <= max_label and mu with labels <= q + 2.
SuiteResult sweep_weight_string_stability(const RootSystem& rs, Label max_label);

/// N^(k) = Mult for k >= <lambda+mu, theta>, N^(k) <= Mult and N^(k) <= N^(k+1)
/// below, for lambda, mu with labels <= max_label.
SuiteResult sweep_level_stabilization(const RootSystem& rs, Label max_label);

/// Affine-fold probe and threshold check over lambda, mu with labels <= max_label,
/// beta in Pi^lambda with beta+mu in P_k^+, k <= max_level.
SuiteResult sweep_conjecture_probes(const RootSystem& rs, Label max_label, Label max_level);

}  // namespace fusionkit
