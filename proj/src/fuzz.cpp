#include "malcev/fuzz.hpp"

#include <random>
#include <string>
#include <vector>

#include "malcev/document.hpp"
#include "malcev/ideals.hpp"

namespace malcev {

namespace {

Algebra sample_algebra(std::mt19937_64& rng, const FuzzConfig& cfg, std::size_t trial) {
  const std::size_t n = cfg.dim;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));

  const std::uint64_t span = 2 * static_cast<std::uint64_t>(cfg.bound) + 1;
  std::vector<Algebra::Entry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec value = zero_vec(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (rng() % 4 != 0) continue;
        value[k] = static_cast<long>(rng() % span) - cfg.bound;
      }
      entries.push_back({i, j, std::move(value)});
    }

  const std::string name = "fuzz_dim" + std::to_string(n) + "_seed" +
                           std::to_string(cfg.seed) + "_trial" + std::to_string(trial);
  return Algebra(name, std::move(labels), entries);
}

std::string dims_line(const Decomposition& d) {
  const Subspace meet = subspace_intersect(d.n, d.j);
  const Subspace join = subspace_sum(d.n, d.j);
  return "dim N = " + std::to_string(d.n.dim()) + ", dim J = " +
         std::to_string(d.j.dim()) + ", dim(N meet J) = " +
         std::to_string(meet.dim()) + ", dim(N + J) = " + std::to_string(join.dim());
}

}  // namespace

const char* fuzz_target_name(FuzzTarget t) {
  switch (t) {
    case FuzzTarget::NonLieMalcev: return "non-lie-malcev";
    case FuzzTarget::IdealProductFailure: return "ideal-product-failure";
    case FuzzTarget::NonDirectDecomposition: return "non-direct-decomposition";
  }
  return "";
}

std::optional<FuzzTarget> fuzz_target_from(const std::string& name) {
  for (FuzzTarget t : {FuzzTarget::NonLieMalcev, FuzzTarget::IdealProductFailure,
                       FuzzTarget::NonDirectDecomposition})
    if (name == fuzz_target_name(t)) return t;
  return std::nullopt;
}

FuzzReport run_fuzz(const FuzzConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  FuzzReport report{0, 0, {}};
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    ++report.trials_run;
    const Algebra a = sample_algebra(rng, cfg, trial);
    const ValidationReport v = validate(a);
    if (!v.is_malcev) continue;
    ++report.identity_hits;

    switch (cfg.target) {
      case FuzzTarget::NonLieMalcev: {
        if (v.is_lie) break;
        const Witness& w = v.lie_witnesses.front();
        const std::string detail =
            "passes the linearized identity, Jacobi fails on basis triple (" +
            std::to_string(w.indices[0]) + ", " + std::to_string(w.indices[1]) +
            ", " + std::to_string(w.indices[2]) + ")";
        report.findings.push_back({trial, a.name(), serialize_algebra(a), detail});
        break;
      }
      case FuzzTarget::IdealProductFailure: {
        const auto hit = product_counterexample_search(a, 2);
        if (!hit) break;
        const std::string detail =
            "ideals of dim " + std::to_string(hit->p.space.dim()) + " and " +
            std::to_string(hit->q.space.dim()) + " multiply to a non-ideal of dim " +
            std::to_string(hit->product.dim());
        report.findings.push_back({trial, a.name(), serialize_algebra(a), detail});
        break;
      }
      case FuzzTarget::NonDirectDecomposition: {
        const Decomposition d = decompose(a);
        if (d.direct) break;
        report.findings.push_back(
            {trial, a.name(), serialize_algebra(a),
             "nucleus and Jacobian span are not complementary: " + dims_line(d)});
        break;
      }
    }
  }
  return report;
}

}  // namespace malcev
