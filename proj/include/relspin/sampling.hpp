#pragma once

#include <cstdint>
#include <random>

#include "relspin/lorentz.hpp"

namespace relspin {

/// Seeded source of random kinematic elements for property checks.
/// Rotations come from uniformly distributed unit quaternions; boosts use a
/// uniform direction and a rapidity uniform in [0, max_rapidity].
class Sampler
{
  public:
    explicit Sampler(std::uint64_t seed, real max_rapidity = 3.0)
        : rng_(seed), max_rapidity_(max_rapidity)
    {
    }

    real uniform(real lo, real hi);
    Vec3 unit_vector();
    /// Uniform in the unit ball.
    Vec3 bloch_vector();
    Eigen::Quaterniond quaternion();

    SpinorMap rotation();
    SpinorMap boost();
    /// boost() * rotation()
    SpinorMap transformation();
    OnShellMomentum momentum(real mass);
    real mass();

  private:
    std::mt19937_64 rng_;
    real max_rapidity_;
};

} // namespace relspin
