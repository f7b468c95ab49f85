#include "relspin/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace relspin {

namespace {

CMat4 block_diag(const CMat2& upper, const CMat2& lower)
{
    CMat4 m = CMat4::Zero();
    m.topLeftCorner<2, 2>() = upper;
    m.bottomRightCorner<2, 2>() = lower;
    return m;
}

CMat4 off_diag(const CMat2& upper_right, const CMat2& lower_left)
{
    CMat4 m = CMat4::Zero();
    m.topRightCorner<2, 2>() = upper_right;
    m.bottomLeftCorner<2, 2>() = lower_left;
    return m;
}

} // namespace

CMat4 GammaMatrices::slash(const FourVector& k) const
{
    return k[0] * mu[0] - k[1] * mu[1] - k[2] * mu[2] - k[3] * mu[3];
}

const GammaMatrices& gammas()
{
    static const GammaMatrices g = [] {
        const auto& s = pauli();
        GammaMatrices out;
        out.mu[0] = off_diag(s[0], s[0]);
        for (int i = 1; i <= 3; ++i)
        {
            out.mu[i] = off_diag(-s[i], s[i]);
        }
        out.five = block_diag(s[0], -s[0]);
        return out;
    }();
    return g;
}

real clifford_residual(const GammaMatrices& g)
{
    const Mat4 metric_tensor = metric();
    real worst = 0.0;
    for (int a = 0; a < 4; ++a)
    {
        for (int b = 0; b < 4; ++b)
        {
            const CMat4 anti = g.mu[a] * g.mu[b] + g.mu[b] * g.mu[a]
                               - 2.0 * metric_tensor(a, b) * CMat4::Identity();
            worst = std::max(worst, max_abs(anti));
        }
    }
    return worst;
}

BispinorRep::BispinorRep(const SpinorMap& a)
{
    const CMat2& am = a.matrix();
    const CMat2 ainv = a.inverse().matrix();
    d_ = block_diag(am, ainv.adjoint());
    inv_ = block_diag(ainv, am.adjoint());
}

CMat4 BispinorRep::inverse() const
{
    return inv_;
}

BispinorRep bispinor_rep(const SpinorMap& a)
{
    return BispinorRep(a);
}

const std::array<std::array<CMat4, 4>, 4>& lorentz_generators()
{
    static const auto generators = [] {
        const auto& g = gammas();
        std::array<std::array<CMat4, 4>, 4> out;
        for (int a = 0; a < 4; ++a)
        {
            for (int b = 0; b < 4; ++b)
            {
                out[a][b] = (0.25 * kI) * (g.mu[a] * g.mu[b] - g.mu[b] * g.mu[a]);
            }
        }
        return out;
    }();
    return generators;
}

PauliLubanskiOps pauli_lubanski(const OnShellMomentum& k)
{
    const auto& s = pauli();
    const Vec3& p = k.spatial();
    const CMat2 p_sigma = sigma_dot(p);

    PauliLubanskiOps ops;
    ops.w0 = 0.5 * block_diag(p_sigma, p_sigma);
    for (int j = 0; j < 3; ++j)
    {
        // (p x sigma)_j = eps_{jab} p_a sigma_b
        CMat2 cross = CMat2::Zero();
        for (int a = 0; a < 3; ++a)
        {
            for (int b = 0; b < 3; ++b)
            {
                const int eps = levi_civita3(j, a, b);
                if (eps != 0)
                {
                    cross += static_cast<real>(eps) * p[a] * s[b + 1];
                }
            }
        }
        ops.w[j] = 0.5 * k.energy() * block_diag(s[j + 1], s[j + 1])
                   - (0.5 * kI) * block_diag(cross, -cross);
    }
    return ops;
}

CMat4 spin_matrix(const Vec3& n, const OnShellMomentum& k)
{
    if (std::abs(n.norm() - 1.0) > 1e-9)
    {
        throw std::invalid_argument("spin direction must be a unit vector");
    }
    const PauliLubanskiOps ops = pauli_lubanski(k);
    const CMat4 n_w = n[0] * ops.w[0] + n[1] * ops.w[1] + n[2] * ops.w[2];
    const real m = k.mass();
    return (n_w - ops.w0 * (n.dot(k.spatial()) / (k.energy() + m))) / m;
}

SpinSpectrum spin_spectrum(const CMat4& s)
{
    Eigen::ComplexEigenSolver<CMat4> solver(s, true);
    if (solver.info() != Eigen::Success)
    {
        throw std::runtime_error("eigen-solver did not converge on spin matrix");
    }
    std::array<int, 4> order{};
    std::iota(order.begin(), order.end(), 0);
    const auto& vals = solver.eigenvalues();
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vals[a].real() > vals[b].real(); });

    SpinSpectrum out;
    for (int i = 0; i < 4; ++i)
    {
        out.values[i] = vals[order[i]];
        out.vectors.col(i) = solver.eigenvectors().col(order[i]);
    }
    return out;
}

} // namespace relspin
