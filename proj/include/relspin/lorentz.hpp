#pragma once

#include "relspin/linalg.hpp"

namespace relspin {

//---------------------------------------------------------------------------//
// Kinematic value types
//---------------------------------------------------------------------------//

/// Contravariant four-vector (t, x, y, z) in units with hbar = c = 1.
class FourVector
{
  public:
    FourVector() : c_(Eigen::Vector4d::Zero()) {}
    FourVector(real t, real x, real y, real z) : c_(t, x, y, z) {}
    FourVector(real t, const Vec3& spatial) : c_(t, spatial.x(), spatial.y(), spatial.z()) {}
    explicit FourVector(const Eigen::Vector4d& c) : c_(c) {}

    real t() const { return c_[0]; }
    Vec3 spatial() const { return c_.tail<3>(); }
    real operator[](int mu) const { return c_[mu]; }
    real& operator[](int mu) { return c_[mu]; }

    const Eigen::Vector4d& components() const { return c_; }
    /// Covariant components g_{mu nu} v^nu.
    Eigen::Vector4d lowered() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

    FourVector operator+(const FourVector& o) const { return FourVector(Eigen::Vector4d(c_ + o.c_)); }
    FourVector operator-(const FourVector& o) const { return FourVector(Eigen::Vector4d(c_ - o.c_)); }
    FourVector operator*(real s) const { return FourVector(Eigen::Vector4d(c_ * s)); }

  private:
    Eigen::Vector4d c_;
};

real minkowski_dot(const FourVector& u, const FourVector& v);

/// Four-momentum on the positive mass shell; the energy is derived.
class OnShellMomentum
{
  public:
    /// Throws std::invalid_argument for non-positive or non-finite mass.
    OnShellMomentum(real mass, const Vec3& spatial);

    /// Particle at rest.
    static OnShellMomentum rest(real mass) { return {mass, Vec3::Zero()}; }
    /// Momentum with the given rapidity along a (normalized) direction.
    static OnShellMomentum from_rapidity(real mass, const Vec3& direction, real rapidity);
    /// Momentum with speed |velocity| < 1 along velocity.
    static OnShellMomentum from_velocity(real mass, const Vec3& velocity);

    real mass() const { return mass_; }
    real energy() const { return energy_; }
    const Vec3& spatial() const { return spatial_; }
    FourVector four() const { return {energy_, spatial_}; }
    /// |k| / k^0
    real speed() const { return spatial_.norm() / energy_; }

  private:
    real mass_;
    Vec3 spatial_;
    real energy_;
};

class SpinorMap;

/// Proper orthochronous Lorentz transformation Lambda^mu_nu.
class LorentzTransform
{
  public:
    /// Identity.
    LorentzTransform() : m_(Mat4::Identity()) {}

    /// Validates Lambda^T g Lambda = g, det = +1 and Lambda^0_0 >= 1.
    static LorentzTransform from_matrix(const Mat4& m);
    /// Pure boost along axis with the given rapidity.
    static LorentzTransform boost(const Vec3& axis, real rapidity);
    /// Spatial rotation embedded in the lower 3x3 block.
    static LorentzTransform rotation(const Mat3& r);

    const Mat4& matrix() const { return m_; }
    real operator()(int mu, int nu) const { return m_(mu, nu); }

    FourVector apply(const FourVector& v) const;
    OnShellMomentum apply(const OnShellMomentum& k) const;
    LorentzTransform operator*(const LorentzTransform& o) const;
    /// g Lambda^T g
    LorentzTransform inverse() const;

    /// Max-abs residual of Lambda^T g Lambda - g.
    real metric_residual() const;

  private:
    explicit LorentzTransform(const Mat4& m) : m_(m) {}
    Mat4 m_;
};

/// Element of SL(2,C).
class SpinorMap
{
  public:
    SpinorMap() : a_(CMat2::Identity()) {}

    /// Throws std::invalid_argument unless |det - 1| is within tolerance.
    static SpinorMap from_matrix(const CMat2& a, real tol = 1e-9);
    /// exp(-i angle n.sigma / 2), an active rotation by angle about axis.
    static SpinorMap rotation(const Vec3& axis, real angle);
    /// exp(rapidity n.sigma / 2), an active boost along axis.
    static SpinorMap boost(const Vec3& axis, real rapidity);
    /// SU(2) image of a unit quaternion (w, x, y, z).
    static SpinorMap from_quaternion(const Eigen::Quaterniond& q);

    const CMat2& matrix() const { return a_; }
    SpinorMap operator*(const SpinorMap& o) const { return SpinorMap(CMat2(a_ * o.a_)); }
    SpinorMap inverse() const;
    SpinorMap operator-() const { return SpinorMap(CMat2(-a_)); }

  private:
    explicit SpinorMap(const CMat2& a) : a_(a) {}
    CMat2 a_;
};

/// The Wigner rotation as an SO(3) matrix and its SU(2) lift.
struct WignerRotation
{
    Mat3 so3;
    CMat2 su2;
};

//---------------------------------------------------------------------------//
// Operations
//---------------------------------------------------------------------------//

/// Canonical rotation-free boost L_k with L_k (m, 0) = k.
LorentzTransform standard_boost(const OnShellMomentum& k);

/// Positive Hermitian SL(2,C) lift of standard_boost(k).
SpinorMap sl2c_boost(const OnShellMomentum& k);

/// Image of A under the covering map: (Lambda k).sigma = A (k.sigma) A^dagger.
LorentzTransform lambda_of_sl2c(const SpinorMap& a);

/// Spinor lift of Lambda via Lambda = L_p R: positive boost times the
/// rotation lift with non-negative quaternion scalar part. Defined up to sign
/// by nature; this choice is continuous at the identity.
SpinorMap spinor_lift(const LorentzTransform& lambda);

/// SU(2) element for a 3x3 rotation matrix (non-negative scalar part).
SpinorMap su2_of_rotation(const Mat3& r);

/// R(Lambda, k) = L_{Lambda k}^{-1} Lambda L_k together with its SU(2) image
/// A_{Lambda k}^{-1} A A_k, where A is the spinor lift of Lambda.
WignerRotation wigner_rotation(const LorentzTransform& lambda, const OnShellMomentum& k);
/// Adjoint image R_ij = (1/2) Tr(sigma_i U sigma_j U^dagger) of a 2x2 unitary.
Mat3 rotation_of_su2(const CMat2& u);

/// Same, starting from an explicit spinor map. The SO(3) part is the adjoint
/// image of the SU(2) part.
WignerRotation wigner_rotation(const SpinorMap& a, const OnShellMomentum& k);

} // namespace relspin
