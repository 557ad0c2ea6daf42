#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rootbounds/parallel.hpp"
#include "rootbounds/poly.hpp"
#include "rootbounds/rng.hpp"

// Randomized and exhaustive verification of every structural claim the bound
// machinery relies on. Each claim is a registered property over a seeded
// corpus; identical seeds give identical results regardless of thread count.
namespace rootbounds::theorems {

enum class Distribution { Uniform, Integer, Examples };

struct CorpusConfig {
  std::vector<int> degrees = {3, 4, 5, 6, 7};
  int samples_per_degree = 200;
  Distribution dist = Distribution::Uniform;
  double range = 5.0;  // coefficient range (integer distributions round it)
  std::uint64_t seed = 42;
  ExecPolicy exec = ExecPolicy::Parallel;
};

struct Violation {
  std::vector<double> coeffs;   // polynomial tail that broke the property
  std::string context;          // shape / split / partition involved
  std::vector<double> observed; // the numbers that contradicted the claim
};

struct PropertyResult {
  std::string theorem_id;
  long trials = 0;
  std::vector<Violation> violations;
  long near_boundary = 0;  // strict comparisons within 1e-9 of the boundary

  bool pass() const { return violations.empty(); }
  bool vacuous() const { return trials == 0; }
};

struct PropertyInfo {
  std::string id;
  std::string description;
};

/// The fixed registry of verified properties, in run order.
const std::vector<PropertyInfo>& registry();

/// Runs one registered property over the seeded corpus. Shape-quantified
/// claims sweep every shape up to degree 7 and a deterministic sample beyond.
PropertyResult run_property(const std::string& theorem_id, const CorpusConfig& config);

/// Runs the whole registry.
std::vector<PropertyResult> run_all(const CorpusConfig& config);

/// The built-in worked-example polynomials used by the bench corpus.
const std::vector<Polynomial>& example_corpus();

/// Deterministic corpus draw. Band stratifies the constant term into
/// |a_0| < 1, |a_0| = 1 and |a_0| > 1; the caller cycles bands per trial.
Polynomial sample_polynomial(int degree, Distribution dist, double range, int band,
                             SplitMix64& rng);

}  // namespace rootbounds::theorems
