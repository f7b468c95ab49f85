#include "relspin/lorentz.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relspin {

real minkowski_dot(const FourVector& u, const FourVector& v)
{
    return u.t() * v.t() - u.spatial().dot(v.spatial());
}

//---------------------------------------------------------------------------//
// OnShellMomentum
//---------------------------------------------------------------------------//

OnShellMomentum::OnShellMomentum(real mass, const Vec3& spatial)
    : mass_(mass), spatial_(spatial)
{
    if (!(mass > 0.0) || !std::isfinite(mass))
    {
        throw std::invalid_argument("mass must be positive and finite, got "
                                    + std::to_string(mass));
    }
    if (!spatial.allFinite())
    {
        throw std::invalid_argument("momentum components must be finite");
    }
    energy_ = std::sqrt(mass * mass + spatial.squaredNorm());
}

OnShellMomentum
OnShellMomentum::from_rapidity(real mass, const Vec3& direction, real rapidity)
{
    const real n = direction.norm();
    if (n == 0.0)
    {
        if (rapidity != 0.0)
        {
            throw std::invalid_argument("boost direction must be nonzero");
        }
        return rest(mass);
    }
    return {mass, Vec3(direction / n * (mass * std::sinh(rapidity)))};
}

OnShellMomentum OnShellMomentum::from_velocity(real mass, const Vec3& velocity)
{
    const real v2 = velocity.squaredNorm();
    if (!(v2 < 1.0))
    {
        throw std::invalid_argument("speed must be below 1 (units of c)");
    }
    return {mass, Vec3(velocity * (mass / std::sqrt(1.0 - v2)))};
}

//---------------------------------------------------------------------------//
// LorentzTransform
//---------------------------------------------------------------------------//

LorentzTransform LorentzTransform::from_matrix(const Mat4& m)
{
    if (!m.allFinite())
    {
        throw std::invalid_argument("Lorentz matrix has non-finite entries");
    }
    LorentzTransform result(m);
    // Roundoff in products grows with the square of the largest entry.
    const real scale = std::max(1.0, max_abs(m));
    const real tol = 1e-9 * scale * scale;
    if (result.metric_residual() > tol)
    {
        throw std::invalid_argument("matrix does not preserve the Minkowski metric");
    }
    if (std::abs(m.determinant() - 1.0) > tol * scale * scale)
    {
        throw std::invalid_argument("Lorentz matrix is not proper (det != 1)");
    }
    if (m(0, 0) < 1.0 - tol)
    {
        throw std::invalid_argument("Lorentz matrix is not orthochronous");
    }
    return result;
}

LorentzTransform LorentzTransform::boost(const Vec3& axis, real rapidity)
{
    return standard_boost(OnShellMomentum::from_rapidity(1.0, axis, rapidity));
}

LorentzTransform LorentzTransform::rotation(const Mat3& r)
{
    Mat4 m = Mat4::Identity();
    m.bottomRightCorner<3, 3>() = r;
    return from_matrix(m);
}

FourVector LorentzTransform::apply(const FourVector& v) const
{
    return FourVector(Eigen::Vector4d(m_ * v.components()));
}

OnShellMomentum LorentzTransform::apply(const OnShellMomentum& k) const
{
    return {k.mass(), this->apply(k.four()).spatial()};
}

LorentzTransform LorentzTransform::operator*(const LorentzTransform& o) const
{
    return LorentzTransform(Mat4(m_ * o.m_));
}

LorentzTransform LorentzTransform::inverse() const
{
    const Mat4 g = metric();
    return LorentzTransform(Mat4(g * m_.transpose() * g));
}

real LorentzTransform::metric_residual() const
{
    const Mat4 g = metric();
    return max_abs(m_.transpose() * g * m_ - g);
}

//---------------------------------------------------------------------------//
// SpinorMap
//---------------------------------------------------------------------------//

SpinorMap SpinorMap::from_matrix(const CMat2& a, real tol)
{
    if (!a.allFinite())
    {
        throw std::invalid_argument("spinor map has non-finite entries");
    }
    if (std::abs(a.determinant() - 1.0) > tol)
    {
        throw std::invalid_argument("spinor map is not unimodular (det != 1)");
    }
    return SpinorMap(a);
}

SpinorMap SpinorMap::rotation(const Vec3& axis, real angle)
{
    const real n = axis.norm();
    if (n == 0.0)
    {
        throw std::invalid_argument("rotation axis must be nonzero");
    }
    const CMat2 a = std::cos(0.5 * angle) * CMat2::Identity()
                    - kI * std::sin(0.5 * angle) * sigma_dot(axis / n);
    return SpinorMap(a);
}

SpinorMap SpinorMap::boost(const Vec3& axis, real rapidity)
{
    const real n = axis.norm();
    if (n == 0.0)
    {
        throw std::invalid_argument("boost axis must be nonzero");
    }
    const CMat2 a = std::cosh(0.5 * rapidity) * CMat2::Identity()
                    + std::sinh(0.5 * rapidity) * sigma_dot(axis / n);
    return SpinorMap(a);
}

SpinorMap SpinorMap::from_quaternion(const Eigen::Quaterniond& q)
{
    const Eigen::Quaterniond u = q.normalized();
    const CMat2 a = u.w() * CMat2::Identity() - kI * sigma_dot(u.vec());
    return SpinorMap(a);
}

SpinorMap SpinorMap::inverse() const
{
    // For det = 1 the inverse is the adjugate.
    CMat2 inv;
    inv << a_(1, 1), -a_(0, 1), -a_(1, 0), a_(0, 0);
    return SpinorMap(inv);
}

//---------------------------------------------------------------------------//
// Group maps
//---------------------------------------------------------------------------//

LorentzTransform standard_boost(const OnShellMomentum& k)
{
    const real m = k.mass();
    const real e = k.energy();
    const Vec3& p = k.spatial();
    Mat4 l;
    l(0, 0) = e / m;
    l.block<1, 3>(0, 1) = p.transpose() / m;
    l.block<3, 1>(1, 0) = p / m;
    l.bottomRightCorner<3, 3>() = Mat3::Identity() + p * p.transpose() / (m * (e + m));
    return LorentzTransform::from_matrix(l);
}

SpinorMap sl2c_boost(const OnShellMomentum& k)
{
    const real m = k.mass();
    const real e = k.energy();
    const CMat2 a = ((e + m) * CMat2::Identity() + sigma_dot(k.spatial()))
                    / std::sqrt(2.0 * m * (e + m));
    return SpinorMap::from_matrix(a);
}

LorentzTransform lambda_of_sl2c(const SpinorMap& a)
{
    const auto& s = pauli();
    const CMat2& am = a.matrix();
    const CMat2 ad = am.adjoint();
    Mat4 l;
    for (int nu = 0; nu < 4; ++nu)
    {
        const CMat2 image = am * s[nu] * ad;
        for (int mu = 0; mu < 4; ++mu)
        {
            l(mu, nu) = 0.5 * (s[mu] * image).trace().real();
        }
    }
    return LorentzTransform::from_matrix(l);
}

SpinorMap su2_of_rotation(const Mat3& r)
{
    Eigen::Quaterniond q(r);
    if (q.w() < 0.0)
    {
        q.coeffs() = -q.coeffs();
    }
    return SpinorMap::from_quaternion(q);
}

SpinorMap spinor_lift(const LorentzTransform& lambda)
{
    const Mat4& m = lambda.matrix();
    // Image of the unit time axis fixes the boost factor.
    const OnShellMomentum p(1.0, Vec3(m(1, 0), m(2, 0), m(3, 0)));
    const Mat4 rot = standard_boost(p).inverse().matrix() * m;
    return sl2c_boost(p) * su2_of_rotation(rot.bottomRightCorner<3, 3>());
}

namespace {

WignerRotation
wigner_rotation_impl(const LorentzTransform& lambda, const SpinorMap& a, const OnShellMomentum& k)
{
    const OnShellMomentum lk = lambda.apply(k);
    const Mat4 r = standard_boost(lk).inverse().matrix() * lambda.matrix()
                   * standard_boost(k).matrix();
    WignerRotation w;
    w.so3 = r.bottomRightCorner<3, 3>();
    w.su2 = (sl2c_boost(lk).inverse() * a * sl2c_boost(k)).matrix();
    return w;
}

} // namespace

WignerRotation wigner_rotation(const SpinorMap& a, const OnShellMomentum& k)
{
    // The 2x2 product is far better conditioned than the 4x4 one at large
    // rapidity, so the rotation is taken as the adjoint image of su2.
    WignerRotation w;
    w.su2 = (sl2c_boost(lambda_of_sl2c(a).apply(k)).inverse() * a * sl2c_boost(k)).matrix();
    w.so3 = rotation_of_su2(w.su2);
    return w;
}

WignerRotation wigner_rotation(const LorentzTransform& lambda, const OnShellMomentum& k)
{
    return wigner_rotation_impl(lambda, spinor_lift(lambda), k);
}

Mat3 rotation_of_su2(const CMat2& u)
{
    const auto& s = pauli();
    Mat3 r;
    for (int i = 0; i < 3; ++i)
    {
        for (int j = 0; j < 3; ++j)
        {
            r(i, j) = 0.5 * (s[i + 1] * u * s[j + 1] * u.adjoint()).trace().real();
        }
    }
    return r;
}

} // namespace relspin
