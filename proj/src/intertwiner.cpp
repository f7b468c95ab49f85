#include "relspin/intertwiner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace relspin {

namespace {

FourVector parity(const FourVector& k)
{
    return {k.t(), Vec3(-k.spatial())};
}

CMat2 sigma_contract(const FourVector& k)
{
    return k.t() * CMat2::Identity() + sigma_dot(k.spatial());
}

} // namespace

Intertwiner::Intertwiner(const OnShellMomentum& k) : k_(k)
{
    const real m = k.mass();
    const CMat2& s2 = pauli()[2];
    const real norm = 1.0 / (2.0 * std::sqrt(1.0 + k.energy() / m));
    v_.topRows<2>() = norm * (CMat2::Identity() + sigma_contract(k.four()) / m) * s2;
    v_.bottomRows<2>() = norm * (CMat2::Identity() + sigma_contract(parity(k.four())) / m) * s2;
}

Eigen::Matrix<complex, 2, 4> Intertwiner::bar() const
{
    return v_.adjoint() * gammas().mu[0];
}

CMat4 Intertwiner::projector() const
{
    return v_ * this->bar();
}

Intertwiner v_of(const OnShellMomentum& k)
{
    return Intertwiner(k);
}

real weinberg_residual(const LorentzTransform& lambda, const OnShellMomentum& k)
{
    const SpinorMap a = spinor_lift(lambda);
    const CMat42 target = v_of(lambda.apply(k)).matrix();
    const CMat42 vk = v_of(k).matrix();

    real best = std::numeric_limits<real>::infinity();
    for (const SpinorMap& lift : {a, -a})
    {
        const WignerRotation r = wigner_rotation(lift, k);
        const CMat42 lhs = bispinor_rep(lift).matrix() * vk * r.su2.transpose();
        best = std::min(best, max_abs(lhs - target));
    }
    return best;
}

real dirac_residual(const OnShellMomentum& k)
{
    const CMat4 op = gammas().slash(k.four()) - k.mass() * CMat4::Identity();
    return max_abs(op * v_of(k).matrix());
}

CMat2 gram(const OnShellMomentum& k)
{
    const CMat42& v = v_of(k).matrix();
    return v.adjoint() * v;
}

CMat4 overlap_kernel(const OnShellMomentum& k)
{
    const CMat42& v = v_of(k).matrix();
    return v * v.adjoint();
}

} // namespace relspin
