#pragma once

#include <array>

#include "relspin/lorentz.hpp"

namespace relspin {

/// Chiral-basis gamma matrices: gamma^0 = [[0, I], [I, 0]],
/// gamma^i = [[0, -sigma_i], [sigma_i, 0]], gamma^5 = diag(I, -I).
struct GammaMatrices
{
    std::array<CMat4, 4> mu; ///< gamma^mu, upper index
    CMat4 five;

    /// gamma_mu = g_{mu nu} gamma^nu
    CMat4 lower(int index) const { return index == 0 ? mu[0] : CMat4(-mu[index]); }
    /// k_mu gamma^mu for a contravariant k
    CMat4 slash(const FourVector& k) const;
};

const GammaMatrices& gammas();

/// Max-abs residual of {gamma^mu, gamma^nu} - 2 g^{mu nu} I over all 16 pairs.
real clifford_residual(const GammaMatrices& g);

/// D(A) = diag(A, (A^dagger)^{-1}).
class BispinorRep
{
  public:
    explicit BispinorRep(const SpinorMap& a);

    const CMat4& matrix() const { return d_; }
    CMat4 inverse() const;

  private:
    CMat4 d_;
    CMat4 inv_;
};

BispinorRep bispinor_rep(const SpinorMap& a);

/// Sigma^{mu nu} = (i/4)[gamma^mu, gamma^nu], upper indices, all 16 slots
/// (diagonal entries vanish). Index as generators[mu][nu].
const std::array<std::array<CMat4, 4>, 4>& lorentz_generators();

/// Pauli-Lubanski operators with the momentum replaced by its on-shell value.
struct PauliLubanskiOps
{
    CMat4 w0;
    std::array<CMat4, 3> w;
};

PauliLubanskiOps pauli_lubanski(const OnShellMomentum& k);

/// Spin projection n . S at sharp momentum k. Throws std::invalid_argument
/// when |n| differs from 1 by more than 1e-9.
CMat4 spin_matrix(const Vec3& n, const OnShellMomentum& k);

struct SpinSpectrum
{
    Eigen::Vector4cd values;
    CMat4 vectors;
};

/// Eigen-decomposition of a spin matrix, eigenvalues sorted by descending
/// real part. Throws std::runtime_error if the solver fails.
SpinSpectrum spin_spectrum(const CMat4& s);

} // namespace relspin
