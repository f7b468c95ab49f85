#include "relspin/linalg.hpp"

namespace relspin {

const std::array<CMat2, 4>& pauli()
{
    static const std::array<CMat2, 4> s = [] {
        std::array<CMat2, 4> m;
        m[0] << 1, 0, 0, 1;
        m[1] << 0, 1, 1, 0;
        m[2] << 0, -kI, kI, 0;
        m[3] << 1, 0, 0, -1;
        return m;
    }();
    return s;
}

CMat2 sigma_dot(const Vec3& n)
{
    const auto& s = pauli();
    return n.x() * s[1] + n.y() * s[2] + n.z() * s[3];
}

int levi_civita3(int i, int j, int k)
{
    return (i - j) * (j - k) * (k - i) / 2;
}

int levi_civita4(int a, int b, int c, int d)
{
    if (a == b || a == c || a == d || b == c || b == d || c == d)
    {
        return 0;
    }
    // Parity of the permutation (a, b, c, d) of (0, 1, 2, 3).
    std::array<int, 4> p{a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
    {
        while (p[i] != i)
        {
            std::swap(p[i], p[p[i]]);
            sign = -sign;
        }
    }
    return sign;
}

CMat16 kron(const CMat4& a, const CMat4& b)
{
    CMat16 out;
    for (int i = 0; i < 4; ++i)
    {
        for (int j = 0; j < 4; ++j)
        {
            out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
        }
    }
    return out;
}

} // namespace relspin
