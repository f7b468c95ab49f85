#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace relspin {

using real = double;
using complex = std::complex<double>;

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using CMat2 = Eigen::Matrix2cd;
using CMat4 = Eigen::Matrix4cd;
using CMat42 = Eigen::Matrix<complex, 4, 2>;
using CMat16 = Eigen::Matrix<complex, 16, 16>;

inline constexpr complex kI{0.0, 1.0};

/// Default threshold for matrix-identity residuals (max-abs norm).
inline constexpr real kDefaultTolerance = 1e-10;

/// Minkowski metric diag(1, -1, -1, -1).
inline Mat4 metric()
{
    return Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
}

/// Pauli matrices sigma_0 = I, sigma_1, sigma_2, sigma_3.
const std::array<CMat2, 4>& pauli();

/// n . sigma for a real 3-vector.
CMat2 sigma_dot(const Vec3& n);

/// Levi-Civita symbol in three dimensions, indices 0..2.
int levi_civita3(int i, int j, int k);

/// Levi-Civita symbol with upper indices, epsilon^{0123} = +1.
int levi_civita4(int a, int b, int c, int d);

template <class Derived>
real max_abs(const Eigen::MatrixBase<Derived>& m)
{
    return m.cwiseAbs().maxCoeff();
}

/// Kronecker product for the fixed 4x4 bispinor blocks.
CMat16 kron(const CMat4& a, const CMat4& b);

} // namespace relspin
