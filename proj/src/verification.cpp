#include "relspin/verification.hpp"

#include <algorithm>
#include <cmath>

#include "relspin/correlation.hpp"
#include "relspin/sampling.hpp"

namespace relspin {

namespace {

SpinorMap random_element(Sampler& s, int i)
{
    switch (i % 3)
    {
        case 0: return s.rotation();
        case 1: return s.boost();
        default: return s.transformation();
    }
}

real commutator_residual(const std::array<CMat4, 3>& spin)
{
    real r = 0.0;
    for (int i = 0; i < 3; ++i)
    {
        for (int j = 0; j < 3; ++j)
        {
            CMat4 expected = CMat4::Zero();
            for (int k = 0; k < 3; ++k)
            {
                expected += kI * static_cast<real>(levi_civita3(i, j, k)) * spin[k];
            }
            const CMat4 comm = spin[i] * spin[j] - spin[j] * spin[i];
            r = std::max(r, max_abs(CMat4(comm - expected)));
        }
    }
    return r;
}

} // namespace

real suite_clifford(bool inject_fault)
{
    GammaMatrices g = gammas();
    if (inject_fault)
    {
        g.mu[1](0, 2) += 1e-6;
    }
    return clifford_residual(g);
}

real suite_appendix_b(std::uint64_t seed, int samples, real max_rapidity)
{
    Sampler s(seed, max_rapidity);
    const GammaMatrices& g = gammas();
    real r = 0.0;
    for (int n = 0; n < samples; ++n)
    {
        const real m = s.mass();
        const OnShellMomentum k = s.momentum(m);
        const Intertwiner v(k);
        const auto vbar = v.bar();
        r = std::max(r, max_abs(CMat2(vbar * v.matrix() - CMat2::Identity())));
        const CMat4 proj = (g.slash(k.four()) + m * CMat4::Identity()) / (2.0 * m);
        r = std::max(r, max_abs(CMat4(v.projector() - proj)));
        for (int mu = 0; mu < 4; ++mu)
        {
            const CMat2 lhs = vbar * g.mu[mu] * v.matrix();
            r = std::max(r, max_abs(CMat2(lhs - (k.four()[mu] / m) * CMat2::Identity())));
        }
    }
    return r;
}

real suite_dirac(std::uint64_t seed, int samples, real max_rapidity)
{
    Sampler s(seed, max_rapidity);
    real r = 0.0;
    for (int n = 0; n < samples; ++n)
    {
        r = std::max(r, dirac_residual(s.momentum(s.mass())));
    }
    return r;
}

real suite_weinberg(std::uint64_t seed, int samples, real max_rapidity)
{
    Sampler s(seed, max_rapidity);
    real r = 0.0;
    for (int n = 0; n < samples; ++n)
    {
        const LorentzTransform lambda = lambda_of_sl2c(random_element(s, n));
        r = std::max(r, weinberg_residual(lambda, s.momentum(s.mass())));
    }
    return r;
}

real suite_spin_spectrum(std::uint64_t seed, int samples, real max_rapidity)
{
    Sampler s(seed, max_rapidity);
    const Eigen::Vector4d expected(0.5, 0.5, -0.5, -0.5);
    real r = 0.0;
    for (int n = 0; n < samples; ++n)
    {
        const Vec3 dir = s.unit_vector();
        const SpinSpectrum spec = spin_spectrum(spin_matrix(dir, s.momentum(s.mass())));
        r = std::max(r, (spec.values.real() - expected).cwiseAbs().maxCoeff());
        r = std::max(r, spec.values.imag().cwiseAbs().maxCoeff());
    }
    return r;
}

real suite_spin_commutators(std::uint64_t seed, int samples, real max_rapidity)
{
    Sampler s(seed, max_rapidity);
    real r = 0.0;
    for (int n = 0; n < samples; ++n)
    {
        const OnShellMomentum k = s.momentum(s.mass());
        const std::array<CMat4, 3> spin{spin_matrix(Vec3::UnitX(), k),
                                        spin_matrix(Vec3::UnitY(), k),
                                        spin_matrix(Vec3::UnitZ(), k)};
        r = std::max(r, commutator_residual(spin));
    }
    return r;
}

real suite_omega_structure(std::uint64_t seed, int samples, real max_rapidity)
{
    Sampler s(seed, max_rapidity);
    real r = 0.0;
    for (int n = 0; n < samples; ++n)
    {
        const real m = s.mass();
        const SharpState state(s.momentum(m), s.bloch_vector());
        const OmegaMatrix omega = omega_sharp(state);
        const SpinDecomposition d = decompose(omega, m);
        const FourVector q = state.momentum().four();
        const FourVector w = mean_w(state);

        r = std::max(r, std::abs(omega.trace() - 1.0));
        r = std::max(r, std::abs(d.b));
        r = std::max(r, max_abs(CMat4(rebuild(d, m).matrix() - omega.matrix())));
        // u and w scale with the momentum; compare relative to q^0.
        const real scale = q.t() / m;
        r = std::max(r, (d.u.components() - q.components() / m).cwiseAbs().maxCoeff() / scale);
        r = std::max(r, (d.w.components() - w.components()).cwiseAbs().maxCoeff() / (m * scale));
        r = std::max(r, std::abs(minkowski_dot(w, q)) / (m * m * scale * scale));
    }
    return r;
}

real suite_covariance(std::uint64_t seed, int samples, real max_rapidity)
{
    Sampler s(seed, max_rapidity);
    const auto& gen = lorentz_generators();
    real r = 0.0;
    for (int n = 0; n < samples; ++n)
    {
        const real m = s.mass();
        const SpinorMap a = random_element(s, n);
        const SharpState state(s.momentum(m), s.bloch_vector());
        const LorentzTransform lambda = lambda_of_sl2c(a);
        const WignerRotation wr = wigner_rotation(a, state.momentum());

        const OmegaMatrix moved = transform_omega(omega_sharp(state), a);
        const OmegaMatrix direct
            = omega_sharp(SharpState(lambda.apply(state.momentum()), wr.so3 * state.bloch()));
        r = std::max(r, max_abs(CMat4(moved.matrix() - direct.matrix())));
        r = std::max(r, std::abs(moved.trace() - 1.0));

        const BispinorRep d(a);
        const Mat4& l = lambda.matrix();
        for (int mu = 0; mu < 4; ++mu)
        {
            for (int nu = mu + 1; nu < 4; ++nu)
            {
                CMat4 expected = CMat4::Zero();
                for (int al = 0; al < 4; ++al)
                {
                    for (int be = 0; be < 4; ++be)
                    {
                        expected += l(mu, al) * l(nu, be) * gen[al][be];
                    }
                }
                const CMat4 lhs = d.inverse() * gen[mu][nu] * d.matrix();
                r = std::max(r, max_abs(CMat4(lhs - expected)));
            }
        }
    }
    return r;
}

real suite_correlation_oracle(std::uint64_t seed, int samples, real max_rapidity)
{
    Sampler s(seed, max_rapidity);
    const CMat4 singlet = singlet_coeffs();
    real r = 0.0;
    for (int n = 0; n < samples; ++n)
    {
        const real m = s.mass();
        const OnShellMomentum k = s.momentum(m);
        const OnShellMomentum p = s.momentum(m);
        const Vec3 a = s.unit_vector();
        const Vec3 b = s.unit_vector();
        const real trace = correlation_trace(TwoParticleState(k, p, singlet), a, b);
        r = std::max(r, std::abs(trace - correlation_closed(k, p, a, b)));
    }
    return r;
}

std::vector<SuiteResult> run_identity_suites(const CheckOptions& o)
{
    const real tol = o.tolerance;
    const int n = o.samples;
    const real y = o.max_rapidity;
    return {
        {"clifford", suite_clifford(o.inject_clifford_fault), tol, 16},
        {"appendix-b", suite_appendix_b(o.seed + 1, n, y), tol, n},
        {"dirac", suite_dirac(o.seed + 2, n, y), tol, n},
        {"weinberg", suite_weinberg(o.seed + 3, n, y), tol, n},
        {"spin-spectrum", suite_spin_spectrum(o.seed + 4, n, y), tol, n},
        {"spin-commutators", suite_spin_commutators(o.seed + 5, n, y), tol, n},
        {"omega-structure", suite_omega_structure(o.seed + 6, n, y), tol, n},
        {"covariance", suite_covariance(o.seed + 7, n, y), tol, n},
        {"correlation-oracle", suite_correlation_oracle(o.seed + 8, n, y), tol, n},
    };
}

} // namespace relspin
