#pragma once

#include "relspin/reduced_density.hpp"

namespace relspin {

/// Pure two-particle state sum_{ab} C_{ab} |a,k> (x) |b,p> with sharp momenta.
class TwoParticleState
{
  public:
    /// Throws std::invalid_argument for C = 0 or mismatched masses.
    TwoParticleState(const OnShellMomentum& k, const OnShellMomentum& p, const CMat4& coeffs);

    const OnShellMomentum& k() const { return k_; }
    const OnShellMomentum& p() const { return p_; }
    const CMat4& coeffs() const { return c_; }

    /// Wigner-basis amplitude psi = v(k)^T C v(p), psi(sigma, lambda).
    CMat2 wigner_amplitude() const;

  private:
    OnShellMomentum k_;
    OnShellMomentum p_;
    CMat4 c_;
};

/// Reduced two-particle matrix, rows and columns indexed by 4 * alpha + beta.
/// Scaled to unit trace.
class TwoParticleOmega
{
  public:
    explicit TwoParticleOmega(const CMat16& m) : m_(m) {}
    const CMat16& matrix() const { return m_; }

  private:
    CMat16 m_;
};

/// diag(sigma_2, sigma_2), unnormalized.
CMat4 singlet_coeffs();

/// True when C is a nonzero multiple of singlet_coeffs() (relative tol).
bool is_singlet(const CMat4& coeffs, real tol = 1e-12);

/// Omega^psi_{ab,a'b'} ~ [P_k g0 C* g0 P_p^T]_{ab} [P_k^T C P_p]_{a'b'} with
/// P = v vbar. Throws std::domain_error for a state annihilated by the
/// projectors.
TwoParticleOmega omega_two(const TwoParticleState& state);

/// Tr[Omega (f (x) g)] / Tr[Omega ((g0 + I) (x) (g0 + I))] with
/// f = a.gamma gamma^5 (I + gamma^0), g likewise for b.
real correlation_from_omega(const TwoParticleOmega& omega, const Vec3& a, const Vec3& b);

/// 4 Tr{(b.S(p) P_p g0) C^dag (a.S(k) P_k g0)^T C} / Tr{(P_p g0) C^dag (P_k g0)^T C}.
/// Directions must be unit vectors; throws std::domain_error for a
/// degenerate denominator.
real correlation_trace(const TwoParticleState& state, const Vec3& a, const Vec3& b);

/// Closed-form singlet correlation with k.p the Minkowski product:
/// -a.b + (k x p) / (m^2 + k.p) . [a x b + ((a.k)(b x p) - (b.p)(a x k)) / ((k0 + m)(p0 + m))]
real correlation_closed(const OnShellMomentum& k, const OnShellMomentum& p, const Vec3& a,
                        const Vec3& b);

/// beta^2 / (2 - beta^2); throws std::invalid_argument unless 0 <= beta < 1.
real special_config_correlation(real beta);

/// Geometry of the two configurations where -a.b vanishes but the
/// relativistic correction survives. Momenta k = kappa x, p = kappa y.
enum class SpecialConfig
{
    parallel_spin,      ///< a = x (along k), b = y (along p)
    perpendicular_spin, ///< a = y (perpendicular to k), b = -x (perpendicular to p)
};

struct SpecialGeometry
{
    OnShellMomentum k;
    OnShellMomentum p;
    Vec3 a;
    Vec3 b;
};

/// Both particles at speed beta in the chosen configuration.
SpecialGeometry special_geometry(SpecialConfig config, real beta, real mass = 1.0);

} // namespace relspin
