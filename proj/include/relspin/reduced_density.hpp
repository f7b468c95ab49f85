#pragma once

#include <vector>

#include "relspin/intertwiner.hpp"

namespace relspin {

/// Particle with sharp momentum and rest-frame Bloch vector xi, |xi| <= 1.
class SharpState
{
  public:
    /// Throws std::invalid_argument when |xi| > 1 (beyond 1e-12).
    SharpState(const OnShellMomentum& momentum, const Vec3& bloch);

    const OnShellMomentum& momentum() const { return momentum_; }
    const Vec3& bloch() const { return bloch_; }

  private:
    OnShellMomentum momentum_;
    Vec3 bloch_;
};

/// Finite mixture of sharp-momentum states sharing one mass.
class Ensemble
{
  public:
    struct Entry
    {
        real weight;
        SharpState state;
    };

    /// Validates: non-empty, positive weights summing to 1 within 1e-9,
    /// common mass.
    explicit Ensemble(std::vector<Entry> entries);
    static Ensemble single(const SharpState& s) { return Ensemble({{1.0, s}}); }

    const std::vector<Entry>& entries() const { return entries_; }
    real mass() const { return entries_.front().state.momentum().mass(); }

  private:
    std::vector<Entry> entries_;
};

/// Covariant reduced density matrix Omega = theta gamma^0.
class OmegaMatrix
{
  public:
    explicit OmegaMatrix(const CMat4& m) : m_(m) {}
    const CMat4& matrix() const { return m_; }
    complex trace() const { return m_.trace(); }

  private:
    CMat4 m_;
};

/// Coefficients of Omega in the 16-element Clifford basis. u and w hold
/// contravariant components; s holds s_{mu nu} with lower indices.
struct SpinDecomposition
{
    real a = 0;
    real b = 0;
    FourVector u;
    FourVector w;
    Mat4 s = Mat4::Zero();
};

/// Mean Pauli-Lubanski vector of a sharp state: L_q (0, m xi / 2).
FourVector mean_w(const SharpState& state);

/// (1/4)(q.gamma/m + I)(I + 2 gamma^5 (w.gamma)/m)
OmegaMatrix omega_sharp(const SharpState& state);

/// Weighted sum of omega_sharp over the ensemble, in entry order.
OmegaMatrix omega_of_ensemble(const Ensemble& e);

/// Trace projections: a = Tr Omega, b = Tr(i Omega gamma^5),
/// u_mu = Tr(Omega gamma_mu), w_mu = (m/2) Tr(Omega gamma_mu gamma^5),
/// s_{mu nu} = Tr(Omega (i/4)[gamma_mu, gamma_nu]).
SpinDecomposition decompose(const OmegaMatrix& omega, real mass);

/// Inverse of decompose.
OmegaMatrix rebuild(const SpinDecomposition& d, real mass);

/// D(A) Omega D(A)^{-1}
OmegaMatrix transform_omega(const OmegaMatrix& omega, const SpinorMap& a);

/// theta = Omega gamma^0. Throws std::domain_error when theta is not
/// Hermitian to within tol (relative to its largest entry).
CMat4 theta_of(const OmegaMatrix& omega, real tol = kDefaultTolerance);

/// theta / Tr theta. Throws std::domain_error for a vanishing trace.
CMat4 normalize(const CMat4& theta);

/// Inverse of theta_of: Omega = theta gamma^0.
OmegaMatrix omega_of_theta(const CMat4& theta);

/// Von Neumann entropy -sum l ln l with 0 ln 0 = 0. Eigenvalues in
/// [-1e-12, 0) are clamped to zero; anything more negative, a non-Hermitian
/// input or a trace away from 1 throws std::domain_error.
real entropy(const CMat4& theta_normalized);

/// Closed-form entropy of a sharp state with Bloch vector length r.
real sharp_entropy(real bloch_length);

/// Normalized spin average Tr(Omega gamma^i gamma^5 (I + gamma^0)) /
/// (2 Tr(Omega (I + gamma^0))). Throws std::domain_error on a vanishing
/// denominator.
Vec3 sigma_average(const OmegaMatrix& omega);

/// Entropy of the normalized theta built from Omega.
real omega_entropy(const OmegaMatrix& omega);

} // namespace relspin
