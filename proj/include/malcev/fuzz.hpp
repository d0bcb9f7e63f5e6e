#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "malcev/algebra.hpp"

namespace malcev {

enum class FuzzTarget { NonLieMalcev, IdealProductFailure, NonDirectDecomposition };

const char* fuzz_target_name(FuzzTarget t);
std::optional<FuzzTarget> fuzz_target_from(const std::string& name);

struct FuzzConfig {
  std::size_t dim = 4;
  /// Nonzero coefficients are drawn from [-bound, bound]; three quarters of
  /// the slots stay zero, since dense tables almost never pass the identity.
  long bound = 1;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  FuzzTarget target = FuzzTarget::NonLieMalcev;
};

struct FuzzFinding {
  std::size_t trial;
  /// Sampled algebra's name, unique per (dim, seed, trial).
  std::string name;
  /// Canonical document of the sampled algebra; replaying it reproduces
  /// the reported property.
  std::string document;
  std::string detail;
};

struct FuzzReport {
  std::size_t trials_run;
  /// Sampled algebras that passed the linearized identity.
  std::size_t identity_hits;
  std::vector<FuzzFinding> findings;
};

/// Samples random anticommutative algebras and records the ones exhibiting
/// the target property. Raw generator words feed the sampler directly, so
/// equal configs give byte-equal reports on every platform.
FuzzReport run_fuzz(const FuzzConfig& config);

}  // namespace malcev
