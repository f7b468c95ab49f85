#pragma once

#include "relspin/dirac.hpp"

namespace relspin {

/// The 4x2 amplitude v(k) carrying Wigner-basis spin states into covariantly
/// transforming bispinor states. Column 0 is sigma = +1/2, column 1 is -1/2.
class Intertwiner
{
  public:
    explicit Intertwiner(const OnShellMomentum& k);

    const CMat42& matrix() const { return v_; }
    const OnShellMomentum& momentum() const { return k_; }

    /// vbar = v^dagger gamma^0
    Eigen::Matrix<complex, 2, 4> bar() const;
    /// v vbar = (k.gamma + m) / 2m
    CMat4 projector() const;

  private:
    OnShellMomentum k_;
    CMat42 v_;
};

Intertwiner v_of(const OnShellMomentum& k);

/// max-abs of D(Lambda) v(k) D^{1/2}(R(Lambda, k))^T - v(Lambda k), minimized
/// over the two signs of the spinor lift.
real weinberg_residual(const LorentzTransform& lambda, const OnShellMomentum& k);

/// max-abs of (k.gamma - m) v(k).
real dirac_residual(const OnShellMomentum& k);

/// v^dagger(k) v(k) = (k^0 / m) I_2, the 2x2 Gram matrix of the columns.
CMat2 gram(const OnShellMomentum& k);

/// v(k) v^dagger(k), the 4x4 kernel of the overlap <alpha,k|beta,p>.
CMat4 overlap_kernel(const OnShellMomentum& k);

} // namespace relspin
