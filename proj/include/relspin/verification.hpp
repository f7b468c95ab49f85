#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relspin/linalg.hpp"

namespace relspin {

struct CheckOptions
{
    std::uint64_t seed = 42;
    int samples = 1000;
    real tolerance = kDefaultTolerance;
    real max_rapidity = 3.0;
    /// Perturbs gamma^1 by 1e-6 before the Clifford suite (harness self-test).
    bool inject_clifford_fault = false;
};

struct SuiteResult
{
    std::string name;
    real max_residual;
    real threshold;
    int samples;
    bool passed() const { return max_residual < threshold; }
};

/// Runs every identity suite in a fixed order: clifford, appendix-b, dirac,
/// weinberg, spin-spectrum, spin-commutators, omega-structure, covariance,
/// correlation-oracle. Deterministic for a given seed.
std::vector<SuiteResult> run_identity_suites(const CheckOptions& options);

// Individual suites, each returning the max-abs residual over its samples.
real suite_clifford(bool inject_fault);
real suite_appendix_b(std::uint64_t seed, int samples, real max_rapidity);
real suite_dirac(std::uint64_t seed, int samples, real max_rapidity);
real suite_weinberg(std::uint64_t seed, int samples, real max_rapidity);
real suite_spin_spectrum(std::uint64_t seed, int samples, real max_rapidity);
real suite_spin_commutators(std::uint64_t seed, int samples, real max_rapidity);
real suite_omega_structure(std::uint64_t seed, int samples, real max_rapidity);
real suite_covariance(std::uint64_t seed, int samples, real max_rapidity);
real suite_correlation_oracle(std::uint64_t seed, int samples, real max_rapidity);

} // namespace relspin
