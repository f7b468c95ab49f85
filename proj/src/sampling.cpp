#include "relspin/sampling.hpp"

#include <cmath>

namespace relspin {

real Sampler::uniform(real lo, real hi)
{
    return std::uniform_real_distribution<real>(lo, hi)(rng_);
}

Vec3 Sampler::unit_vector()
{
    std::normal_distribution<real> normal;
    Vec3 v;
    do
    {
        v = Vec3(normal(rng_), normal(rng_), normal(rng_));
    } while (v.norm() < 1e-8);
    return v.normalized();
}

Vec3 Sampler::bloch_vector()
{
    return unit_vector() * std::cbrt(uniform(0.0, 1.0));
}

Eigen::Quaterniond Sampler::quaternion()
{
    std::normal_distribution<real> normal;
    Eigen::Quaterniond q;
    do
    {
        q = Eigen::Quaterniond(normal(rng_), normal(rng_), normal(rng_), normal(rng_));
    } while (q.norm() < 1e-8);
    return q.normalized();
}

SpinorMap Sampler::rotation()
{
    return SpinorMap::from_quaternion(quaternion());
}

SpinorMap Sampler::boost()
{
    return SpinorMap::boost(unit_vector(), uniform(0.0, max_rapidity_));
}

SpinorMap Sampler::transformation()
{
    return boost() * rotation();
}

OnShellMomentum Sampler::momentum(real mass)
{
    return OnShellMomentum::from_rapidity(mass, unit_vector(), uniform(0.0, max_rapidity_));
}

real Sampler::mass()
{
    return std::exp(uniform(std::log(0.1), std::log(10.0)));
}

} // namespace relspin
