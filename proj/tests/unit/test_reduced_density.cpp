#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "relspin/reduced_density.hpp"
#include "relspin/sampling.hpp"

using namespace relspin;

namespace {

constexpr real tol = 1e-10;

CMat4 rest_omega(const Vec3& xi)
{
    const CMat2 a = 0.25 * (CMat2::Identity() + sigma_dot(xi));
    CMat4 o;
    o << a, a, a, a;
    return o;
}

SharpState random_state(Sampler& s, real m)
{
    return SharpState(s.momentum(m), s.bloch_vector());
}

real closed_entropy(real r)
{
    auto term = [](real x) { return x > 0 ? x * std::log(x / 2) : 0.0; };
    return -0.5 * (term(1 + r) + term(1 - r));
}

} // namespace

TEST(SharpState, RejectsLongBloch)
{
    EXPECT_THROW(SharpState(OnShellMomentum::rest(1.0), Vec3(0.8, 0.8, 0)), std::invalid_argument);
    EXPECT_NO_THROW(SharpState(OnShellMomentum::rest(1.0), Vec3(0, 0, 1)));
}

TEST(Ensemble, Validation)
{
    const SharpState a(OnShellMomentum::rest(1.0), Vec3::Zero());
    const SharpState b(OnShellMomentum::rest(2.0), Vec3::Zero());
    EXPECT_THROW(Ensemble({}), std::invalid_argument);
    EXPECT_THROW(Ensemble({{0.5, a}, {0.4, a}}), std::invalid_argument);
    EXPECT_THROW(Ensemble({{1.5, a}, {-0.5, a}}), std::invalid_argument);
    EXPECT_THROW(Ensemble({{0.5, a}, {0.5, b}}), std::invalid_argument);
    EXPECT_NO_THROW(Ensemble({{0.25, a}, {0.75, a}}));
}

TEST(MeanW, RestFrameAndTransversality)
{
    const Vec3 xi(0.1, -0.4, 0.5);
    const FourVector w = mean_w(SharpState(OnShellMomentum::rest(2.0), xi));
    EXPECT_EQ(w[0], 0.0);
    EXPECT_LT((w.spatial() - xi).cwiseAbs().maxCoeff(), 1e-15);

    Sampler s(51);
    for (int n = 0; n < 500; ++n)
    {
        const real m = s.mass();
        const Vec3 dir = s.unit_vector();
        const real eta = s.uniform(0, 3);
        const Vec3 bloch = s.bloch_vector();
        const SharpState st(OnShellMomentum::from_rapidity(m, dir, eta), bloch);
        const FourVector w = mean_w(st);
        const Eigen::Vector4d expected
            = oracle::boost_exp(dir, eta) * Eigen::Vector4d(0, 0.5 * m * bloch.x(),
                                                            0.5 * m * bloch.y(), 0.5 * m * bloch.z());
        ASSERT_LT((w.components() - expected).cwiseAbs().maxCoeff(), tol * m * std::cosh(eta));
        ASSERT_NEAR(minkowski_dot(w, st.momentum().four()), 0.0, tol * m * m * std::cosh(eta));
    }
}

TEST(MeanW, Longitudinal)
{
    const real kappa = 1.3;
    const real r = 0.6;
    const OnShellMomentum q(1.0, Vec3(0, kappa, 0));
    const FourVector w = mean_w(SharpState(q, Vec3(0, r, 0)));
    EXPECT_NEAR(w[0], kappa * r / 2, 1e-14);
    EXPECT_NEAR(w.spatial().norm(), q.energy() * r / 2, 1e-14);
}

TEST(OmegaSharp, RestFrameMatrix)
{
    const Vec3 xi(0.3, 0.2, -0.9);
    const OmegaMatrix o = omega_sharp(SharpState(OnShellMomentum::rest(0.7), xi));
    EXPECT_LT(max_abs(CMat4(o.matrix() - rest_omega(xi))), 1e-15);
}

TEST(OmegaSharp, TraceAndMomentum)
{
    const GammaMatrices& g = gammas();
    Sampler s(52);
    for (int n = 0; n < 500; ++n)
    {
        const real m = s.mass();
        const SharpState st = random_state(s, m);
        const OmegaMatrix o = omega_sharp(st);
        ASSERT_NEAR(std::abs(o.trace() - 1.0), 0.0, tol);
        const Eigen::Vector4d ql = st.momentum().four().lowered();
        for (int mu = 0; mu < 4; ++mu)
        {
            ASSERT_NEAR(std::abs((o.matrix() * g.lower(mu)).trace() - ql[mu] / m), 0.0, tol);
        }
    }
}

TEST(Ensemble, LinearityExamples)
{
    const OnShellMomentum q(1.0, Vec3(0.2, 0.1, 0));
    const SharpState up(q, Vec3::UnitZ());
    const SharpState down(q, -Vec3::UnitZ());
    const OmegaMatrix single = omega_of_ensemble(Ensemble::single(up));
    EXPECT_EQ(max_abs(CMat4(single.matrix() - omega_sharp(up).matrix())), 0.0);

    const OmegaMatrix mix = omega_of_ensemble(Ensemble({{0.5, up}, {0.5, down}}));
    const SpinDecomposition d = decompose(mix, 1.0);
    EXPECT_LT(d.w.components().cwiseAbs().maxCoeff(), 1e-15);

    const real m = 2.0;
    const SharpState a(OnShellMomentum(m, Vec3(1, 0, 0)), Vec3(0, 0.5, 0));
    const SharpState b(OnShellMomentum(m, Vec3(0, -3, 1)), Vec3(0.2, 0, 0));
    const SpinDecomposition two = decompose(omega_of_ensemble(Ensemble({{0.3, a}, {0.7, b}})), m);
    const Eigen::Vector4d expected
        = (0.3 * a.momentum().four().lowered() + 0.7 * b.momentum().four().lowered()) / m;
    EXPECT_LT((two.u.lowered() - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Decompose, RestFrameCoefficients)
{
    const real m = 1.5;
    const Vec3 xi(0.0, 0.6, 0.8);
    const SpinDecomposition d = decompose(omega_sharp(SharpState(OnShellMomentum::rest(m), xi)), m);
    EXPECT_NEAR(d.a, 1.0, 1e-15);
    EXPECT_NEAR(d.b, 0.0, 1e-15);
    EXPECT_LT((d.u.components() - Eigen::Vector4d(1, 0, 0, 0)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_NEAR(d.w[0], 0.0, 1e-15);
    EXPECT_LT((d.w.spatial() - 0.5 * m * xi).cwiseAbs().maxCoeff(), 1e-15);
    // Spin tensor against the covariant spin vector w_k = -w^k.
    const Eigen::Vector4d wl = d.w.lowered();
    for (int i = 0; i < 3; ++i)
    {
        for (int j = 0; j < 3; ++j)
        {
            real expected = 0.0;
            for (int k = 0; k < 3; ++k)
            {
                expected -= levi_civita3(i, j, k) * wl[k + 1] / m;
            }
            EXPECT_NEAR(d.s(i + 1, j + 1), expected, 1e-15);
        }
        EXPECT_NEAR(d.s(0, i + 1), 0.0, 1e-15);
    }
}

TEST(Decompose, RoundTrip)
{
    Sampler s(53);
    for (int n = 0; n < 1000; ++n)
    {
        const real m = s.mass();
        const Ensemble e({{0.4, random_state(s, m)}, {0.6, random_state(s, m)}});
        const OmegaMatrix o = omega_of_ensemble(e);
        const SpinDecomposition d = decompose(o, m);
        ASSERT_LT(max_abs(CMat4(rebuild(d, m).matrix() - o.matrix())), 1e-12);
        ASSERT_LT(max_abs(Mat4(d.s + d.s.transpose())), 1e-12);
        ASSERT_NEAR(d.a, 1.0, tol);
        ASSERT_NEAR(d.b, 0.0, tol);
    }
}

TEST(Decompose, RoundTripCoversBasis)
{
    // Every real coefficient set must survive decompose(rebuild(.)).
    Sampler s(54);
    for (int n = 0; n < 200; ++n)
    {
        SpinDecomposition d;
        d.a = s.uniform(-1, 1);
        d.b = s.uniform(-1, 1);
        d.u = FourVector(s.uniform(-1, 1), s.unit_vector());
        d.w = FourVector(s.uniform(-1, 1), s.unit_vector());
        for (int mu = 0; mu < 4; ++mu)
        {
            for (int nu = mu + 1; nu < 4; ++nu)
            {
                d.s(mu, nu) = s.uniform(-1, 1);
                d.s(nu, mu) = -d.s(mu, nu);
            }
        }
        const real m = s.mass();
        const SpinDecomposition back = decompose(rebuild(d, m), m);
        ASSERT_NEAR(back.a, d.a, 1e-13);
        ASSERT_NEAR(back.b, d.b, 1e-13);
        ASSERT_LT((back.u.components() - d.u.components()).cwiseAbs().maxCoeff(), 1e-13);
        ASSERT_LT((back.w.components() - d.w.components()).cwiseAbs().maxCoeff(), 1e-13 * m);
        ASSERT_LT(max_abs(Mat4(back.s - d.s)), 1e-13);
    }
}

TEST(TransformOmega, IdentityTraceAndChain)
{
    Sampler s(55);
    const OmegaMatrix o = omega_sharp(random_state(s, 1.0));
    EXPECT_EQ(max_abs(CMat4(transform_omega(o, SpinorMap()).matrix() - o.matrix())), 0.0);
    for (int n = 0; n < 300; ++n)
    {
        const OmegaMatrix x = omega_sharp(random_state(s, s.mass()));
        const SpinorMap a1 = s.transformation();
        const SpinorMap a2 = s.transformation();
        const OmegaMatrix lhs = transform_omega(x, a1 * a2);
        const OmegaMatrix rhs = transform_omega(transform_omega(x, a2), a1);
        ASSERT_LT(max_abs(CMat4(lhs.matrix() - rhs.matrix())), tol * max_abs(lhs.matrix()));
        ASSERT_NEAR(std::abs(transform_omega(x, a1).trace() - 1.0), 0.0, 1e-12);
    }
}

TEST(TransformOmega, MatchesBoostedSharpState)
{
    Sampler s(56);
    for (int n = 0; n < 1000; ++n)
    {
        const real m = s.mass();
        const SharpState st = random_state(s, m);
        const SpinorMap a = n % 2 ? s.boost() : s.rotation();
        // Wigner rotation from exponentiated boost lifts, independent of the
        // library path.
        const Mat4 l = oracle::lorentz_of(a.matrix());
        const OnShellMomentum moved(m, (l * st.momentum().four().components()).tail<3>());
        auto lift = [m](const OnShellMomentum& k) {
            const real eta = std::asinh(k.spatial().norm() / m);
            const Vec3 dir = eta > 0 ? Vec3(k.spatial().normalized()) : Vec3::UnitZ();
            return CMat2((0.5 * eta * sigma_dot(dir)).exp());
        };
        const CMat2 u = lift(moved).inverse() * a.matrix() * lift(st.momentum());
        const Mat4 r = oracle::lorentz_of(u);
        const Vec3 xi = r.bottomRightCorner<3, 3>() * st.bloch();
        const OmegaMatrix expected = omega_sharp(SharpState(moved, xi));
        ASSERT_LT(max_abs(CMat4(transform_omega(omega_sharp(st), a).matrix() - expected.matrix())),
                  tol);
    }
}

TEST(Theta, RestAndPositivity)
{
    const Vec3 xi(0.1, 0.2, 0.3);
    const OmegaMatrix rest = omega_sharp(SharpState(OnShellMomentum::rest(1.0), xi));
    EXPECT_LT(max_abs(CMat4(normalize(theta_of(rest)) - rest.matrix())), 1e-15);

    Sampler s(57);
    for (int n = 0; n < 500; ++n)
    {
        const real m = s.mass();
        const OmegaMatrix o = transform_omega(omega_sharp(random_state(s, m)), s.transformation());
        const CMat4 theta = theta_of(o);
        Eigen::SelfAdjointEigenSolver<CMat4> es(theta);
        ASSERT_GE(es.eigenvalues().minCoeff(), -1e-12 * max_abs(theta));
        ASSERT_NEAR(std::abs(normalize(theta).trace() - 1.0), 0.0, 1e-14);
        ASSERT_LT(max_abs(CMat4(omega_of_theta(theta).matrix() - o.matrix())), 1e-14 * max_abs(theta));
    }
}

TEST(Theta, BoostLaw)
{
    Sampler s(58);
    for (int n = 0; n < 200; ++n)
    {
        const OmegaMatrix o = omega_sharp(random_state(s, s.mass()));
        const SpinorMap a = s.transformation();
        const CMat4 d = bispinor_rep(a).matrix();
        const CMat4 expected = d * theta_of(o) * d.adjoint();
        const CMat4 actual = theta_of(transform_omega(o, a));
        ASSERT_LT(max_abs(CMat4(actual - expected)), tol * max_abs(expected));
    }
}

TEST(Theta, RejectsNonHermitian)
{
    CMat4 bad = CMat4::Zero();
    bad(0, 1) = 1.0;
    EXPECT_THROW(theta_of(OmegaMatrix(bad)), std::domain_error);
    EXPECT_THROW(normalize(CMat4::Zero()), std::domain_error);
}

TEST(Entropy, Examples)
{
    EXPECT_NEAR(omega_entropy(omega_sharp(SharpState(OnShellMomentum::rest(1.0), Vec3::Zero()))),
                std::log(2.0), 1e-15);
    EXPECT_NEAR(omega_entropy(omega_sharp(SharpState(OnShellMomentum::rest(1.0), Vec3::UnitX()))),
                0.0, 1e-15);
    for (real r : {0.0, 0.25, 0.5, 0.99, 1.0})
    {
        EXPECT_NEAR(sharp_entropy(r), closed_entropy(r), 1e-15);
    }
}

TEST(Entropy, SharpClosedFormAndBoostInvariance)
{
    Sampler s(59);
    for (int n = 0; n < 1000; ++n)
    {
        const real m = s.mass();
        const SharpState st = random_state(s, m);
        const OmegaMatrix o = omega_sharp(st);
        const real expected = closed_entropy(st.bloch().norm());
        ASSERT_NEAR(omega_entropy(o), expected, 1e-12);
        ASSERT_NEAR(omega_entropy(transform_omega(o, s.transformation())), expected, tol);
    }
}

TEST(Entropy, EnsembleNotInvariant)
{
    const real m = 1.0;
    const SharpState a(OnShellMomentum::from_rapidity(m, Vec3::UnitX(), 1.0), Vec3::UnitZ());
    const SharpState b(OnShellMomentum::from_rapidity(m, -Vec3::UnitX(), 1.0), -Vec3::UnitZ());
    const OmegaMatrix o = omega_of_ensemble(Ensemble({{0.5, a}, {0.5, b}}));
    const real before = omega_entropy(o);
    const real after = omega_entropy(transform_omega(o, SpinorMap::boost(Vec3::UnitX(), 1.0)));
    EXPECT_GT(std::abs(after - before), 1e-3);
}

TEST(Entropy, RejectsInvalidInput)
{
    CMat4 neg = CMat4::Zero();
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    EXPECT_THROW(entropy(neg), std::domain_error);
    EXPECT_THROW(entropy(CMat4::Identity()), std::domain_error);
    CMat4 tiny = CMat4::Zero();
    tiny(0, 0) = 1.0 + 1e-13;
    tiny(1, 1) = -1e-13;
    EXPECT_NEAR(entropy(tiny), 0.0, 1e-12);
}

TEST(SigmaAverage, SharpAndMixtures)
{
    Sampler s(60);
    for (int n = 0; n < 500; ++n)
    {
        const SharpState st = random_state(s, s.mass());
        const Vec3 avg = sigma_average(omega_sharp(st));
        ASSERT_LT((avg - 0.5 * st.bloch()).cwiseAbs().maxCoeff(), tol);
    }
    const OnShellMomentum q(1.0, Vec3(1, 2, 3));
    const Vec3 unpol = sigma_average(omega_of_ensemble(
        Ensemble({{0.5, SharpState(q, Vec3::UnitY())}, {0.5, SharpState(q, -Vec3::UnitY())}})));
    EXPECT_LT(unpol.norm(), 1e-15);
}

TEST(SigmaAverage, NonrelativisticEnsemble)
{
    const Vec3 xi(0.2, -0.3, 0.6);
    for (real beta : {1e-4, 1e-3})
    {
        const SharpState a(OnShellMomentum(1.0, Vec3(beta, 0, 0)), xi);
        const SharpState b(OnShellMomentum(1.0, Vec3(0, 0, -beta)), xi);
        const Vec3 avg = sigma_average(omega_of_ensemble(Ensemble({{0.5, a}, {0.5, b}})));
        EXPECT_LT((avg - 0.5 * xi).norm(), 2 * beta * beta);
    }
}

TEST(NonrelativisticLimit, ConvergenceOrders)
{
    const real m = 1.3;
    const Vec3 dir = Vec3(0.3, -0.5, 0.8).normalized();
    const Vec3 xi(0.5, 0.4, -0.6);
    auto deviations = [&](real eps) {
        const OmegaMatrix o = omega_sharp(SharpState(OnShellMomentum(m, eps * m * dir), xi));
        const SpinDecomposition d = decompose(o, m);
        const Eigen::Vector4d wl = d.w.lowered();
        real s_spatial = 0.0;
        real s_time = 0.0;
        for (int i = 0; i < 3; ++i)
        {
            s_time = std::max(s_time, std::abs(d.s(0, i + 1)));
            for (int j = 0; j < 3; ++j)
            {
                real eps_w = 0.0;
                for (int k = 0; k < 3; ++k)
                {
                    eps_w += levi_civita3(i, j, k) * wl[k + 1] / m;
                }
                s_spatial = std::max(s_spatial, std::abs(d.s(i + 1, j + 1) + eps_w));
            }
        }
        const real u = (d.u.components() - Eigen::Vector4d(1, 0, 0, 0)).cwiseAbs().maxCoeff();
        return Eigen::Vector4d(u, std::abs(d.w[0]), s_time, s_spatial);
    };
    const Eigen::Vector4d e1 = deviations(1e-2);
    const Eigen::Vector4d e2 = deviations(5e-3);
    const Eigen::Vector4d e3 = deviations(2.5e-3);
    for (int c = 0; c < 4; ++c)
    {
        const real order1 = std::log2(e1[c] / e2[c]);
        const real order2 = std::log2(e2[c] / e3[c]);
        const real expected = c == 3 ? 2.0 : 1.0;
        EXPECT_NEAR(order1, expected, 0.05) << c;
        EXPECT_NEAR(order2, expected, 0.05) << c;
    }
}
