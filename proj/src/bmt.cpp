#include "relspin/bmt.hpp"

#include <cmath>
#include <string>

namespace relspin {

namespace {

using BmtVector = Eigen::Matrix<real, 11, 1>;
using SlowVector = Eigen::Matrix<real, 9, 1>;

BmtVector pack(const SpinKinState& s)
{
    BmtVector y;
    y << s.x, s.q.components(), s.w.components();
    return y;
}

SpinKinState unpack(const BmtVector& y, real tau)
{
    SpinKinState s;
    s.tau = tau;
    s.x = y.segment<3>(0);
    s.q = FourVector(Eigen::Vector4d(y.segment<4>(3)));
    s.w = FourVector(Eigen::Vector4d(y.segment<4>(7)));
    return s;
}

SlowVector pack(const SlowMotionState& s)
{
    SlowVector y;
    y << s.x, s.q, s.xi;
    return y;
}

SlowMotionState unpack(const SlowVector& y, real t)
{
    return {t, y.segment<3>(0), y.segment<3>(3), y.segment<3>(6)};
}

/// One classical fourth-order Runge-Kutta step.
template <class Vector, class Rhs>
Vector rk4_step(const Vector& y, real h, Rhs&& rhs)
{
    const Vector k1 = rhs(y);
    const Vector k2 = rhs(Vector(y + 0.5 * h * k1));
    const Vector k3 = rhs(Vector(y + 0.5 * h * k2));
    const Vector k4 = rhs(Vector(y + h * k3));
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void check_step_args(real h, long steps, long sample_every)
{
    if (!(h > 0.0) || !std::isfinite(h))
    {
        throw std::invalid_argument("step size must be positive");
    }
    if (steps < 1)
    {
        throw std::invalid_argument("step count must be at least 1");
    }
    if (sample_every < 1)
    {
        throw std::invalid_argument("sampling interval must be at least 1");
    }
}

bool is_sample(long step, long steps, long sample_every)
{
    return step % sample_every == 0 || step == steps;
}

} // namespace

//---------------------------------------------------------------------------//

void EMField::validate() const
{
    if (!e.allFinite() || !b.allFinite() || !grad_b.allFinite())
    {
        throw std::invalid_argument("field components must be finite");
    }
    const real scale = max_abs(grad_b);
    if (scale == 0.0)
    {
        return;
    }
    if (max_abs(grad_b - grad_b.transpose()) > 1e-9 * scale)
    {
        throw std::invalid_argument("magnetic gradient must be symmetric (curl-free)");
    }
    if (std::abs(grad_b.trace()) > 1e-9 * scale)
    {
        throw std::invalid_argument("magnetic gradient must be trace-free (divergence-free)");
    }
}

ParticleParams ParticleParams::from_g_factor(real mass, real charge, real g)
{
    ParticleParams p{mass, charge, 0.0};
    p.validate();
    p.zeta = g * charge / (2.0 * mass);
    return p;
}

void ParticleParams::validate() const
{
    if (!(mass > 0.0) || !std::isfinite(mass))
    {
        throw std::invalid_argument("particle mass must be positive");
    }
    if (!std::isfinite(charge) || !std::isfinite(zeta))
    {
        throw std::invalid_argument("charge and zeta must be finite");
    }
}

Mat4 field_tensor(const EMField& f)
{
    Mat4 t = Mat4::Zero();
    for (int i = 0; i < 3; ++i)
    {
        t(i + 1, 0) = f.e[i];
        t(0, i + 1) = -f.e[i];
        for (int j = 0; j < 3; ++j)
        {
            for (int k = 0; k < 3; ++k)
            {
                t(i + 1, j + 1) -= levi_civita3(i, j, k) * f.b[k];
            }
        }
    }
    return t;
}

Mat4 dual_tensor(const Mat4& f_upper)
{
    const Mat4 g = metric();
    const Mat4 f_lower = g * f_upper * g;
    Mat4 d = Mat4::Zero();
    for (int a = 0; a < 4; ++a)
    {
        for (int b = 0; b < 4; ++b)
        {
            for (int mu = 0; mu < 4; ++mu)
            {
                for (int nu = 0; nu < 4; ++nu)
                {
                    d(a, b) += 0.5 * levi_civita4(a, b, mu, nu) * f_lower(mu, nu);
                }
            }
        }
    }
    return d;
}

BmtDerivative bmt_rhs(const SpinKinState& s, const EMField& f, const ParticleParams& p)
{
    const real m = p.mass;
    const Mat4 g = metric();
    const Eigen::Vector4d& q = s.q.components();
    const Eigen::Vector4d& w = s.w.components();

    EMField local = f;
    local.b = f.magnetic_at(s.x);
    const Mat4 f_up = field_tensor(local);
    const Mat4 f_mixed = f_up * g;     // F^mu_nu
    const Mat4 f_low = g * f_up * g;   // F_{mu nu}
    const Mat4 dual_mixed = dual_tensor(f_up) * g;

    const real wfq = w.dot(f_low * q);
    const Eigen::Vector4d f_w = f_mixed * w;

    // w^nu d_nu ~F^mu_beta for a static field linear in x: only spatial nu.
    Mat4 dual_gradient = Mat4::Zero();
    for (int j = 0; j < 3 && !f.grad_b.isZero(0.0); ++j)
    {
        EMField slope;
        slope.b = f.grad_b.row(j).transpose();
        dual_gradient += w[j + 1] * dual_tensor(field_tensor(slope)) * g;
    }

    const Eigen::Vector4d dq = (p.charge / m) * f_mixed * q
                               + (p.zeta / (m * m)) * dual_gradient * q
                               + (p.zeta * p.zeta / m) * dual_mixed * (f_w + q * (wfq / (m * m)));
    const Eigen::Vector4d dw = p.zeta * (f_w + q * (wfq / (m * m)));

    return {q.tail<3>() / m, FourVector(dq), FourVector(dw)};
}

SpinKinState make_spin_state(const ParticleParams& p, const Vec3& momentum, const Vec3& bloch,
                             const Vec3& position)
{
    const SharpState sharp(OnShellMomentum(p.mass, momentum), bloch);
    SpinKinState s;
    s.x = position;
    s.q = sharp.momentum().four();
    s.w = mean_w(sharp);
    return s;
}

Vec3 bloch_from_w(const FourVector& q, const FourVector& w, real mass)
{
    const OnShellMomentum k(mass, q.spatial());
    return standard_boost(k).inverse().apply(w).spatial() * (2.0 / mass);
}

Trajectory integrate(const SpinKinState& s0, const EMField& f, const ParticleParams& p, real dtau,
                     long steps, long sample_every)
{
    check_step_args(dtau, steps, sample_every);
    f.validate();
    p.validate();

    const real m2 = p.mass * p.mass;
    const real qq0 = minkowski_dot(s0.q, s0.q);
    const real ww0 = minkowski_dot(s0.w, s0.w);
    const real qw0 = minkowski_dot(s0.q, s0.w);

    Trajectory traj;
    auto record = [&](const SpinKinState& s) {
        const real qq = minkowski_dot(s.q, s.q);
        const real qw = minkowski_dot(s.q, s.w);
        traj.rows.push_back({s, (qq - m2) / m2, qw / m2});
    };
    auto rhs = [&](const BmtVector& y) {
        const BmtDerivative d = bmt_rhs(unpack(y, 0.0), f, p);
        BmtVector out;
        out << d.dx, d.dq.components(), d.dw.components();
        return out;
    };

    record(s0);
    BmtVector y = pack(s0);
    for (long step = 1; step <= steps; ++step)
    {
        y = rk4_step(y, dtau, rhs);
        if (!y.allFinite())
        {
            throw IntegrationError("integration produced non-finite values at step "
                                       + std::to_string(step),
                                   traj.rows.size() - 1);
        }
        const SpinKinState s = unpack(y, s0.tau + step * dtau);
        traj.drift_qq = std::max(traj.drift_qq, std::abs(minkowski_dot(s.q, s.q) - qq0) / m2);
        traj.drift_ww = std::max(traj.drift_ww, std::abs(minkowski_dot(s.w, s.w) - ww0) / m2);
        traj.drift_qw = std::max(traj.drift_qw, std::abs(minkowski_dot(s.q, s.w) - qw0) / m2);
        if (is_sample(step, steps, sample_every))
        {
            record(s);
        }
    }
    return traj;
}

//---------------------------------------------------------------------------//

SlowMotionDerivative
slow_motion_rhs(const SlowMotionState& s, const EMField& f, const ParticleParams& p)
{
    if (f.e.squaredNorm() != 0.0)
    {
        throw std::invalid_argument("slow-motion equations require a vanishing electric field");
    }
    const Vec3 b = f.magnetic_at(s.x);
    SlowMotionDerivative d;
    d.dx = s.q / p.mass;
    d.dq = (p.charge / p.mass) * s.q.cross(b) + 0.5 * p.zeta * (f.grad_b.transpose() * s.xi);
    d.dxi = p.zeta * s.xi.cross(b);
    return d;
}

std::vector<SlowMotionState> integrate_slow_motion(const SlowMotionState& s0, const EMField& f,
                                                   const ParticleParams& p, real dt, long steps,
                                                   long sample_every)
{
    check_step_args(dt, steps, sample_every);
    f.validate();
    p.validate();
    // Validates the field before stepping.
    slow_motion_rhs(s0, f, p);

    auto rhs = [&](const SlowVector& y) {
        const SlowMotionDerivative d = slow_motion_rhs(unpack(y, 0.0), f, p);
        SlowVector out;
        out << d.dx, d.dq, d.dxi;
        return out;
    };

    std::vector<SlowMotionState> rows{s0};
    SlowVector y = pack(s0);
    for (long step = 1; step <= steps; ++step)
    {
        y = rk4_step(y, dt, rhs);
        if (!y.allFinite())
        {
            throw IntegrationError("integration produced non-finite values at step "
                                       + std::to_string(step),
                                   rows.size() - 1);
        }
        if (is_sample(step, steps, sample_every))
        {
            rows.push_back(unpack(y, s0.t + step * dt));
        }
    }
    return rows;
}

LimitReport limit_consistency(real beta, long steps)
{
    if (!(beta >= 0.0 && beta < 1.0))
    {
        throw std::invalid_argument("beta must lie in [0, 1)");
    }
    constexpr real mass = 1e8;
    const ParticleParams p = ParticleParams::from_g_factor(mass, mass, 2.0);
    EMField f;
    f.b = Vec3::UnitZ();

    const real period = 2.0 * M_PI / (p.zeta * f.b.norm());
    const real h = period / static_cast<real>(steps);
    const OnShellMomentum k0 = OnShellMomentum::from_velocity(mass, beta * Vec3::UnitX());
    const Vec3 q0 = k0.spatial();
    const Vec3 xi0 = Vec3::UnitY();

    // gamma is constant in a uniform magnetic field, so rows of the two runs
    // line up at equal lab time t = gamma tau.
    const real gamma = k0.energy() / mass;
    const Trajectory full = integrate(make_spin_state(p, q0, xi0), f, p, h / gamma, steps);
    const auto slow = integrate_slow_motion({0.0, Vec3::Zero(), q0, xi0}, f, p, h, steps);

    const real q_scale = q0.norm() > 0.0 ? q0.norm() : mass;
    LimitReport r{beta, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < slow.size(); ++i)
    {
        const SpinKinState& s = full.rows[i].state;
        r.q_deviation = std::max(r.q_deviation, (s.q.spatial() - slow[i].q).norm() / q_scale);
        r.xi_deviation
            = std::max(r.xi_deviation, (bloch_from_w(s.q, s.w, mass) - slow[i].xi).norm());
    }
    r.deviation = std::max(r.q_deviation, r.xi_deviation);
    return r;
}

} // namespace relspin
