#include "relspin/reduced_density.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace relspin {

namespace {

constexpr real kMetricSign[4] = {1.0, -1.0, -1.0, -1.0};

CMat4 slash_lower(const Eigen::Vector4d& lower)
{
    // v_mu gamma^mu with covariant components
    const auto& g = gammas();
    return lower[0] * g.mu[0] + lower[1] * g.mu[1] + lower[2] * g.mu[2] + lower[3] * g.mu[3];
}

} // namespace

//---------------------------------------------------------------------------//

SharpState::SharpState(const OnShellMomentum& momentum, const Vec3& bloch)
    : momentum_(momentum), bloch_(bloch)
{
    if (!bloch.allFinite() || bloch.norm() > 1.0 + 1e-12)
    {
        throw std::invalid_argument("Bloch vector must satisfy |xi| <= 1");
    }
}

Ensemble::Ensemble(std::vector<Entry> entries) : entries_(std::move(entries))
{
    if (entries_.empty())
    {
        throw std::invalid_argument("ensemble must contain at least one state");
    }
    real total = 0.0;
    const real m = entries_.front().state.momentum().mass();
    for (const auto& e : entries_)
    {
        if (!(e.weight > 0.0))
        {
            throw std::invalid_argument("ensemble weights must be positive");
        }
        if (std::abs(e.state.momentum().mass() - m) > 1e-12 * m)
        {
            throw std::invalid_argument("ensemble entries must share one mass");
        }
        total += e.weight;
    }
    if (std::abs(total - 1.0) > 1e-9)
    {
        throw std::invalid_argument("ensemble weights must sum to 1");
    }
}

//---------------------------------------------------------------------------//

FourVector mean_w(const SharpState& state)
{
    const OnShellMomentum& q = state.momentum();
    const real m = q.mass();
    const Vec3& xi = state.bloch();
    const Vec3& qs = q.spatial();
    const real w0 = 0.5 * qs.dot(xi);
    const Vec3 w = 0.5 * (m * xi + qs * (qs.dot(xi) / (q.energy() + m)));
    return {w0, w};
}

OmegaMatrix omega_sharp(const SharpState& state)
{
    const auto& g = gammas();
    const real m = state.momentum().mass();
    const CMat4 id = CMat4::Identity();
    const CMat4 q_slash = g.slash(state.momentum().four());
    const CMat4 w_slash = g.slash(mean_w(state));
    return OmegaMatrix(0.25 * (q_slash / m + id) * (id + 2.0 * g.five * w_slash / m));
}

OmegaMatrix omega_of_ensemble(const Ensemble& e)
{
    CMat4 sum = CMat4::Zero();
    for (const auto& entry : e.entries())
    {
        sum += entry.weight * omega_sharp(entry.state).matrix();
    }
    return OmegaMatrix(sum);
}

SpinDecomposition decompose(const OmegaMatrix& omega, real mass)
{
    const auto& g = gammas();
    const auto& gen = lorentz_generators();
    const CMat4& om = omega.matrix();

    SpinDecomposition d;
    d.a = om.trace().real();
    d.b = (kI * om * g.five).trace().real();
    for (int mu = 0; mu < 4; ++mu)
    {
        const CMat4 g_lower = g.lower(mu);
        // raise the index on the way out
        d.u[mu] = kMetricSign[mu] * (om * g_lower).trace().real();
        d.w[mu] = kMetricSign[mu] * 0.5 * mass * (om * g_lower * g.five).trace().real();
        for (int nu = 0; nu < 4; ++nu)
        {
            const CMat4 sigma_lower = kMetricSign[mu] * kMetricSign[nu] * gen[mu][nu];
            d.s(mu, nu) = (om * sigma_lower).trace().real();
        }
    }
    return d;
}

OmegaMatrix rebuild(const SpinDecomposition& d, real mass)
{
    const auto& g = gammas();
    const auto& gen = lorentz_generators();
    CMat4 om = 0.25 * d.a * CMat4::Identity() - (0.25 * d.b) * kI * g.five;
    om += 0.25 * slash_lower(d.u.lowered());
    om += g.five * slash_lower(d.w.lowered()) / (2.0 * mass);
    for (int mu = 0; mu < 4; ++mu)
    {
        for (int nu = 0; nu < 4; ++nu)
        {
            om += 0.5 * d.s(mu, nu) * gen[mu][nu];
        }
    }
    return OmegaMatrix(om);
}

OmegaMatrix transform_omega(const OmegaMatrix& omega, const SpinorMap& a)
{
    const BispinorRep d(a);
    return OmegaMatrix(d.matrix() * omega.matrix() * d.inverse());
}

CMat4 theta_of(const OmegaMatrix& omega, real tol)
{
    const CMat4 theta = omega.matrix() * gammas().mu[0];
    const real scale = std::max(1.0, max_abs(theta));
    if (max_abs(theta - theta.adjoint()) > tol * scale)
    {
        throw std::domain_error("theta = Omega gamma^0 is not Hermitian; Omega is invalid");
    }
    return theta;
}

CMat4 normalize(const CMat4& theta)
{
    const complex tr = theta.trace();
    if (std::abs(tr) < 1e-300)
    {
        throw std::domain_error("cannot normalize theta with vanishing trace");
    }
    return theta / tr;
}

OmegaMatrix omega_of_theta(const CMat4& theta)
{
    return OmegaMatrix(theta * gammas().mu[0]);
}

real entropy(const CMat4& theta_normalized)
{
    if (max_abs(theta_normalized - theta_normalized.adjoint()) > 1e-9)
    {
        throw std::domain_error("entropy requires a Hermitian density matrix");
    }
    if (std::abs(theta_normalized.trace() - 1.0) > 1e-9)
    {
        throw std::domain_error("entropy requires a unit-trace density matrix");
    }
    const CMat4 herm = 0.5 * (theta_normalized + theta_normalized.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat4> solver(herm, Eigen::EigenvaluesOnly);
    real s = 0.0;
    for (int i = 0; i < 4; ++i)
    {
        const real lambda = solver.eigenvalues()[i];
        if (lambda < -1e-12)
        {
            throw std::domain_error("entropy requires a positive semidefinite matrix");
        }
        if (lambda > 0.0)
        {
            s -= lambda * std::log(lambda);
        }
    }
    return s;
}

real sharp_entropy(real r)
{
    auto term = [](real x) { return x > 0.0 ? x * std::log(x / 2.0) : 0.0; };
    return -0.5 * (term(1.0 + r) + term(1.0 - r));
}

Vec3 sigma_average(const OmegaMatrix& omega)
{
    const auto& g = gammas();
    const CMat4 id = CMat4::Identity();
    const CMat4& om = omega.matrix();
    const CMat4 plus = id + g.mu[0];
    const real denom = 2.0 * (om * plus).trace().real();
    if (std::abs(denom) < 1e-14)
    {
        throw std::domain_error("spin average denominator Tr(Omega (I + gamma^0)) vanishes");
    }
    Vec3 out;
    for (int i = 0; i < 3; ++i)
    {
        out[i] = (om * g.mu[i + 1] * g.five * plus).trace().real() / denom;
    }
    return out;
}

real omega_entropy(const OmegaMatrix& omega)
{
    return entropy(normalize(theta_of(omega)));
}

} // namespace relspin
