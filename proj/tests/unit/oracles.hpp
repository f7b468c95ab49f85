#pragma once

// Reference constructions written independently of the library code paths:
// generators and matrix exponentials instead of closed forms, literal
// matrices instead of generated ones.

#include <unsupported/Eigen/MatrixFunctions>

#include "relspin/linalg.hpp"

namespace oracle {

using namespace relspin;

/// Boost generator K_i with (K_i)^0_i = (K_i)^i_0 = 1.
inline Mat4 boost_generator(int i)
{
    Mat4 k = Mat4::Zero();
    k(0, i + 1) = 1.0;
    k(i + 1, 0) = 1.0;
    return k;
}

/// exp(rapidity n.K) for unit n.
inline Mat4 boost_exp(const Vec3& n, real rapidity)
{
    Mat4 gen = Mat4::Zero();
    for (int i = 0; i < 3; ++i)
    {
        gen += n[i] * boost_generator(i);
    }
    return (rapidity * gen).exp();
}

/// Rotation matrix about unit axis n by angle, via Rodrigues.
inline Mat3 rotation(const Vec3& n, real angle)
{
    Mat3 cross;
    cross << 0, -n.z(), n.y(), n.z(), 0, -n.x(), -n.y(), n.x(), 0;
    return Mat3::Identity() + std::sin(angle) * cross + (1 - std::cos(angle)) * cross * cross;
}

/// 2x2 Hermitian h = x^mu sigma_mu decomposed back to x.
inline Eigen::Vector4d hermitian_to_vector(const CMat2& h)
{
    return {0.5 * (h(0, 0) + h(1, 1)).real(), h(1, 0).real(), h(1, 0).imag(),
            0.5 * (h(0, 0) - h(1, 1)).real()};
}

inline CMat2 vector_to_hermitian(const Eigen::Vector4d& x)
{
    CMat2 h;
    h << complex(x[0] + x[3], 0), complex(x[1], -x[2]), complex(x[1], x[2]),
        complex(x[0] - x[3], 0);
    return h;
}

/// Lorentz image of A by mapping the four basis vectors.
inline Mat4 lorentz_of(const CMat2& a)
{
    Mat4 l;
    for (int nu = 0; nu < 4; ++nu)
    {
        const CMat2 image = a * vector_to_hermitian(Eigen::Vector4d::Unit(nu)) * a.adjoint();
        l.col(nu) = hermitian_to_vector(image);
    }
    return l;
}

/// Chiral gamma matrices written out entry by entry.
inline std::array<CMat4, 5> literal_gammas()
{
    const complex i{0, 1};
    std::array<CMat4, 5> g;
    g[0] << 0, 0, 1, 0, //
        0, 0, 0, 1,     //
        1, 0, 0, 0,     //
        0, 1, 0, 0;
    g[1] << 0, 0, 0, -1, //
        0, 0, -1, 0,     //
        0, 1, 0, 0,      //
        1, 0, 0, 0;
    g[2] << 0, 0, 0, i, //
        0, 0, -i, 0,    //
        0, -i, 0, 0,    //
        i, 0, 0, 0;
    g[3] << 0, 0, -1, 0, //
        0, 0, 0, 1,      //
        1, 0, 0, 0,      //
        0, -1, 0, 0;
    g[4] << 1, 0, 0, 0, //
        0, 1, 0, 0,     //
        0, 0, -1, 0,    //
        0, 0, 0, -1;
    return g;
}

/// Wigner-basis expectation 4 <psi| a.S (x) b.S |psi> / <psi|psi> with
/// S = sigma / 2 acting on the amplitude psi(sigma, lambda).
inline real wigner_basis_correlation(const CMat2& psi, const Vec3& a, const Vec3& b)
{
    const CMat2 moved = sigma_dot(a) * psi * sigma_dot(b).transpose();
    return psi.conjugate().cwiseProduct(moved).sum().real() / psi.squaredNorm();
}

} // namespace oracle
