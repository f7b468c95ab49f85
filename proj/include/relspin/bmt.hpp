#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "relspin/reduced_density.hpp"

namespace relspin {

/// Static electromagnetic field with an optional linear magnetic gradient,
/// B(x) = B + grad_b^T x where grad_b(i, j) = d_i B_j.
struct EMField
{
    Vec3 e = Vec3::Zero();
    Vec3 b = Vec3::Zero();
    Mat3 grad_b = Mat3::Zero();

    /// Throws std::invalid_argument when a nonzero gradient is not symmetric
    /// and trace-free (curl- and divergence-free).
    void validate() const;
    Vec3 magnetic_at(const Vec3& x) const { return b + grad_b.transpose() * x; }
};

struct ParticleParams
{
    real mass = 1.0;
    real charge = 0.0;
    /// Magnetic moment is (zeta / m) w.
    real zeta = 0.0;

    /// zeta = g e / 2m. Throws std::invalid_argument for mass <= 0.
    static ParticleParams from_g_factor(real mass, real charge, real g);
    void validate() const;
};

/// Kinetic four-momentum q, mean Pauli-Lubanski vector w and position x at
/// proper time tau.
struct SpinKinState
{
    real tau = 0.0;
    Vec3 x = Vec3::Zero();
    FourVector q;
    FourVector w;
};

/// Slow-motion variables: lab time t, position, momentum and Bloch vector.
struct SlowMotionState
{
    real t = 0.0;
    Vec3 x = Vec3::Zero();
    Vec3 q = Vec3::Zero();
    Vec3 xi = Vec3::Zero();
};

/// Contravariant F^{mu nu}: F^{i0} = E^i, F^{ij} = -eps_{ijk} B^k.
Mat4 field_tensor(const EMField& f);
/// Contravariant dual ~F^{ab} = (1/2) eps^{ab mu nu} F_{mu nu}, eps^{0123} = 1.
Mat4 dual_tensor(const Mat4& f_upper);

struct BmtDerivative
{
    Vec3 dx;
    FourVector dq;
    FourVector dw;
};

/// Right-hand side of the coupled momentum / spin equations including the
/// gradient and zeta^2 terms, with the field evaluated at s.x.
BmtDerivative bmt_rhs(const SpinKinState& s, const EMField& f, const ParticleParams& p);

/// Initial state with q on shell and w = L_q (0, m xi / 2).
SpinKinState make_spin_state(const ParticleParams& p, const Vec3& momentum, const Vec3& bloch,
                             const Vec3& position = Vec3::Zero());

/// Rest-frame Bloch vector recovered from (q, w): (2/m) x spatial part of
/// L_q^{-1} w.
Vec3 bloch_from_w(const FourVector& q, const FourVector& w, real mass);

struct TrajectoryRow
{
    SpinKinState state;
    real inv_qq; ///< (q.q - m^2) / m^2
    real inv_qw; ///< q.w / m^2
};

struct Trajectory
{
    std::vector<TrajectoryRow> rows;
    /// Largest deviation from the initial value over all steps, / m^2.
    real drift_qq = 0.0;
    real drift_ww = 0.0;
    real drift_qw = 0.0;
};

/// Raised when the integrator produces non-finite values.
class IntegrationError : public std::runtime_error
{
  public:
    IntegrationError(const std::string& what, std::size_t last_good_row)
        : std::runtime_error(what), last_good_row_(last_good_row)
    {
    }
    std::size_t last_good_row() const { return last_good_row_; }

  private:
    std::size_t last_good_row_;
};

/// Fixed-step classical RK4 in proper time. Rows are emitted for the initial
/// state, every sample_every steps and the final step.
Trajectory integrate(const SpinKinState& s0, const EMField& f, const ParticleParams& p,
                     real dtau, long steps, long sample_every = 1);

struct SlowMotionDerivative
{
    Vec3 dx;
    Vec3 dq;
    Vec3 dxi;
};

/// dq/dt = (e/m) q x B + (zeta/2)(xi . grad) B, dxi/dt = zeta xi x B.
/// Throws std::invalid_argument for a nonzero electric field.
SlowMotionDerivative
slow_motion_rhs(const SlowMotionState& s, const EMField& f, const ParticleParams& p);

std::vector<SlowMotionState> integrate_slow_motion(const SlowMotionState& s0, const EMField& f,
                                                   const ParticleParams& p, real dt, long steps,
                                                   long sample_every = 1);

struct LimitReport
{
    real beta;
    real q_deviation;  ///< max |dq| / |q(0)| (absolute / m at rest)
    real xi_deviation; ///< max |dxi|
    real deviation;    ///< max of the two
};

/// Integrates the full and slow-motion systems over one precession period in
/// a uniform field from matched data (speed beta, Bloch vector transverse to
/// the momentum, g = 2) and compares them at equal lab time t = gamma tau.
/// Uses m = 1e8 with e B / m = 1 so the zeta^2 terms stay near 1e-8.
LimitReport limit_consistency(real beta, long steps = 4000);

} // namespace relspin
