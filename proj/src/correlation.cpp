#include "relspin/correlation.hpp"

#include <cmath>
#include <stdexcept>

namespace relspin {

namespace {

void require_unit(const Vec3& n, const char* name)
{
    if (std::abs(n.norm() - 1.0) > 1e-9)
    {
        throw std::invalid_argument(std::string("direction ") + name + " must be a unit vector");
    }
}

Eigen::Matrix<complex, 16, 1> row_major_vec(const CMat4& m)
{
    Eigen::Matrix<complex, 16, 1> out;
    for (int i = 0; i < 4; ++i)
    {
        for (int j = 0; j < 4; ++j)
        {
            out[4 * i + j] = m(i, j);
        }
    }
    return out;
}

/// a.gamma gamma^5 (I + gamma^0)
CMat4 spin_observable(const Vec3& n)
{
    const auto& g = gammas();
    const CMat4 n_gamma = n[0] * g.mu[1] + n[1] * g.mu[2] + n[2] * g.mu[3];
    return n_gamma * g.five * (CMat4::Identity() + g.mu[0]);
}

} // namespace

//---------------------------------------------------------------------------//

TwoParticleState::TwoParticleState(const OnShellMomentum& k, const OnShellMomentum& p,
                                   const CMat4& coeffs)
    : k_(k), p_(p), c_(coeffs)
{
    if (std::abs(k.mass() - p.mass()) > 1e-12 * k.mass())
    {
        throw std::invalid_argument("both particles must share one mass");
    }
    if (!coeffs.allFinite() || max_abs(coeffs) == 0.0)
    {
        throw std::invalid_argument("coefficient matrix must be nonzero and finite");
    }
}

CMat2 TwoParticleState::wigner_amplitude() const
{
    return v_of(k_).matrix().transpose() * c_ * v_of(p_).matrix();
}

CMat4 singlet_coeffs()
{
    CMat4 c = CMat4::Zero();
    c.topLeftCorner<2, 2>() = pauli()[2];
    c.bottomRightCorner<2, 2>() = pauli()[2];
    return c;
}

bool is_singlet(const CMat4& coeffs, real tol)
{
    const CMat4 s = singlet_coeffs();
    // Least-squares scale factor, then the residual relative to |C|.
    const complex scale = (s.adjoint() * coeffs).trace() / (s.adjoint() * s).trace();
    const real norm = coeffs.norm();
    return norm > 0.0 && (coeffs - scale * s).norm() <= tol * norm;
}

TwoParticleOmega omega_two(const TwoParticleState& state)
{
    const CMat4& g0 = gammas().mu[0];
    const CMat4 pk = v_of(state.k()).projector();
    const CMat4 pp = v_of(state.p()).projector();
    const CMat4& c = state.coeffs();

    const CMat4 left = pk * g0 * c.conjugate() * g0 * pp.transpose();
    const CMat4 right = pk.transpose() * c * pp;
    const CMat16 omega = row_major_vec(left) * row_major_vec(right).transpose();

    const complex tr = omega.trace();
    if (std::abs(tr) < 1e-14 * std::max(1.0, c.squaredNorm()))
    {
        throw std::domain_error("two-particle state is annihilated by the momentum projectors");
    }
    return TwoParticleOmega(omega / tr.real());
}

real correlation_from_omega(const TwoParticleOmega& omega, const Vec3& a, const Vec3& b)
{
    require_unit(a, "a");
    require_unit(b, "b");
    const CMat4 plus = CMat4::Identity() + gammas().mu[0];
    const complex num = (omega.matrix() * kron(spin_observable(a), spin_observable(b))).trace();
    const complex den = (omega.matrix() * kron(plus, plus)).trace();
    if (std::abs(den) < 1e-14)
    {
        throw std::domain_error("correlation denominator vanishes");
    }
    return (num / den).real();
}

real correlation_trace(const TwoParticleState& state, const Vec3& a, const Vec3& b)
{
    require_unit(a, "a");
    require_unit(b, "b");
    const CMat4& g0 = gammas().mu[0];
    const CMat4 pk = v_of(state.k()).projector() * g0;
    const CMat4 pp = v_of(state.p()).projector() * g0;
    const CMat4& c = state.coeffs();
    const CMat4 cd = c.adjoint();

    const CMat4 sa = spin_matrix(a, state.k()) * pk;
    const CMat4 sb = spin_matrix(b, state.p()) * pp;

    const complex num = (sb * cd * sa.transpose() * c).trace();
    const complex den = (pp * cd * pk.transpose() * c).trace();
    if (std::abs(den) < 1e-14 * std::max(1.0, c.squaredNorm()))
    {
        throw std::domain_error("correlation denominator vanishes for this state");
    }
    return 4.0 * (num / den).real();
}

real correlation_closed(const OnShellMomentum& k, const OnShellMomentum& p, const Vec3& a,
                        const Vec3& b)
{
    const real m = k.mass();
    const Vec3& kv = k.spatial();
    const Vec3& pv = p.spatial();
    const real kp = minkowski_dot(k.four(), p.four());
    const Vec3 bracket = a.cross(b)
                         + (a.dot(kv) * b.cross(pv) - b.dot(pv) * a.cross(kv))
                               / ((k.energy() + m) * (p.energy() + m));
    return -a.dot(b) + kv.cross(pv).dot(bracket) / (m * m + kp);
}

real special_config_correlation(real beta)
{
    if (!(beta >= 0.0 && beta < 1.0))
    {
        throw std::invalid_argument("beta must lie in [0, 1)");
    }
    return beta * beta / (2.0 - beta * beta);
}

SpecialGeometry special_geometry(SpecialConfig config, real beta, real mass)
{
    if (!(beta >= 0.0 && beta < 1.0))
    {
        throw std::invalid_argument("beta must lie in [0, 1)");
    }
    const Vec3 x = Vec3::UnitX();
    const Vec3 y = Vec3::UnitY();
    SpecialGeometry geo{OnShellMomentum::from_velocity(mass, beta * x),
                        OnShellMomentum::from_velocity(mass, beta * y), x, y};
    if (config == SpecialConfig::perpendicular_spin)
    {
        geo.a = y;
        geo.b = -x;
    }
    return geo;
}

} // namespace relspin
