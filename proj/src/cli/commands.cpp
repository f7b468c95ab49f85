#include "relspin/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relspin/cli/format.hpp"
#include "relspin/cli/input_files.hpp"
#include "relspin/verification.hpp"

namespace relspin::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

real tolerance_from_env()
{
    const char* env = std::getenv("RELSPIN_TOLERANCE");
    if (env == nullptr || *env == '\0')
    {
        return kDefaultTolerance;
    }
    real value = 0.0;
    const char* end = env + std::strlen(env);
    const auto res = std::from_chars(env, end, value);
    if (res.ec != std::errc{} || res.ptr != end || !(value > 0.0) || !std::isfinite(value))
    {
        throw UsageError(std::string("RELSPIN_TOLERANCE: not a positive number: ") + env);
    }
    return value;
}

Vec3 to_vec3(const std::vector<real>& v)
{
    return {v[0], v[1], v[2]};
}

json to_json(const Vec3& v)
{
    return json::array({v[0], v[1], v[2]});
}

json to_json(const FourVector& v)
{
    return json::array({v[0], v[1], v[2], v[3]});
}

json omega_report(const OmegaMatrix& omega, real mass)
{
    const SpinDecomposition d = decompose(omega, mass);
    json s = json::array();
    for (int mu = 0; mu < 4; ++mu)
    {
        s.push_back(json::array({d.s(mu, 0), d.s(mu, 1), d.s(mu, 2), d.s(mu, 3)}));
    }
    return {
        {"a", d.a},
        {"b", d.b},
        {"u", to_json(d.u)},
        {"w", to_json(d.w)},
        {"s", s},
        {"entropy", omega_entropy(omega)},
        {"sigma_average", to_json(sigma_average(omega))},
    };
}

//---------------------------------------------------------------------------//

struct CheckArgs
{
    std::uint64_t seed = 42;
    int samples = 1000;
    bool inject_fault = false;
};

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err)
{
    CheckOptions options;
    options.seed = args.seed;
    options.samples = args.samples;
    options.tolerance = tolerance_from_env();
    options.inject_clifford_fault = args.inject_fault;

    int status = exit_ok;
    for (const SuiteResult& r : run_identity_suites(options))
    {
        out << r.name << " max_residual=" << format_real(r.max_residual)
            << " threshold=" << format_real(r.threshold) << " samples=" << r.samples << ' '
            << (r.passed() ? "PASS" : "FAIL") << '\n';
        if (!r.passed())
        {
            err << "check failed: " << r.name << '\n';
            status = exit_failure;
        }
    }
    return status;
}

int cmd_correlate(const std::string& file, std::ostream& out, std::ostream& err)
{
    const PairFile pair = parse_pair_file(read_json(file));
    for (const auto& w : pair.warnings)
    {
        err << "warning: " << w << '\n';
    }
    const real trace = correlation_trace(pair.state, pair.a, pair.b);
    out << "C_trace=" << format_real(trace) << '\n';
    if (is_singlet(pair.state.coeffs()))
    {
        const real closed = correlation_closed(pair.state.k(), pair.state.p(), pair.a, pair.b);
        out << "C_closed=" << format_real(closed) << '\n';
        out << "abs_difference=" << format_real(std::abs(trace - closed)) << '\n';
    }
    else
    {
        err << "note: coefficients are not a singlet; closed form suppressed\n";
    }
    out << "delta_C=" << format_real(trace + pair.a.dot(pair.b)) << '\n';
    return exit_ok;
}

struct CurveArgs
{
    std::string config;
    real beta_min = 0.0;
    real beta_max = 0.99;
    int steps = 100;
    real mass = 1.0;
};

int cmd_curve(const CurveArgs& args, std::ostream& out)
{
    if (!(args.beta_min >= 0.0 && args.beta_min < args.beta_max && args.beta_max < 1.0))
    {
        throw UsageError("curve: require 0 <= beta-min < beta-max < 1");
    }
    if (args.steps < 2)
    {
        throw UsageError("curve: --steps must be at least 2");
    }
    if (!(args.mass > 0.0))
    {
        throw UsageError("curve: --mass must be positive");
    }
    const SpecialConfig config = args.config == "parallel-spin" ? SpecialConfig::parallel_spin
                                                                 : SpecialConfig::perpendicular_spin;
    const CMat4 singlet = singlet_coeffs();

    out << "beta,correlation_trace,correlation_closed\n";
    const real span = args.beta_max - args.beta_min;
    for (int i = 0; i < args.steps; ++i)
    {
        const real beta = i + 1 == args.steps
                              ? args.beta_max
                              : args.beta_min + span * static_cast<real>(i) / (args.steps - 1);
        const SpecialGeometry g = special_geometry(config, beta, args.mass);
        const real trace = correlation_trace(TwoParticleState(g.k, g.p, singlet), g.a, g.b);
        const real closed = correlation_closed(g.k, g.p, g.a, g.b);
        out << csv_row({beta, trace, closed});
    }
    return exit_ok;
}

int cmd_omega(const std::string& file, bool entropy_only, std::ostream& out)
{
    const StateFile state = parse_state_file(read_json(file));
    const OmegaMatrix omega = omega_of_ensemble(state.ensemble);

    json report;
    if (entropy_only)
    {
        report["entropy"] = omega_entropy(omega);
    }
    else
    {
        report = omega_report(omega, state.mass);
    }
    report["mass"] = state.mass;

    if (state.boost)
    {
        const OmegaMatrix moved = transform_omega(omega, *state.boost);
        const real before = omega_entropy(omega);
        const real after = omega_entropy(moved);
        if (entropy_only)
        {
            report["boosted_entropy"] = after;
        }
        else
        {
            report["boosted"] = omega_report(moved, state.mass);
        }
        report["entropy_delta"] = after - before;
    }
    out << report.dump(2) << '\n';
    return exit_ok;
}

struct PrecessArgs
{
    std::string field;
    std::string params;
    std::vector<real> momentum{0.0, 0.0, 0.0};
    std::vector<real> bloch{0.0, 0.0, 1.0};
    std::vector<real> position{0.0, 0.0, 0.0};
    real dt = 1e-3;
    long steps = 1000;
    long sample_every = 1;
    bool slow_motion = false;
};

int cmd_precess(const PrecessArgs& args, std::ostream& out, std::ostream& err)
{
    const EMField field = args.field.empty() ? EMField{} : parse_field(read_json(args.field));
    const ParticleParams params = parse_params(read_json(args.params));
    const Vec3 momentum = to_vec3(args.momentum);
    const Vec3 bloch = to_vec3(args.bloch);
    const Vec3 position = to_vec3(args.position);
    if (bloch.norm() > 1.0 + 1e-12)
    {
        throw UsageError("precess: --bloch length exceeds 1");
    }

    try
    {
        if (args.slow_motion)
        {
            const auto rows = integrate_slow_motion({0.0, position, momentum, bloch}, field, params,
                                                    args.dt, args.steps, args.sample_every);
            out << "t,qx,qy,qz,xix,xiy,xiz\n";
            for (const auto& r : rows)
            {
                out << csv_row({r.t, r.q[0], r.q[1], r.q[2], r.xi[0], r.xi[1], r.xi[2]});
            }
            return exit_ok;
        }

        const SpinKinState s0 = make_spin_state(params, momentum, bloch, position);
        const Trajectory traj
            = integrate(s0, field, params, args.dt, args.steps, args.sample_every);
        out << "tau,x,y,z,q0,qx,qy,qz,w0,wx,wy,wz,inv_qq,inv_qw\n";
        for (const auto& row : traj.rows)
        {
            const SpinKinState& s = row.state;
            out << csv_row({s.tau, s.x[0], s.x[1], s.x[2], s.q[0], s.q[1], s.q[2], s.q[3], s.w[0],
                            s.w[1], s.w[2], s.w[3], row.inv_qq, row.inv_qw});
        }
        err << "drift q.q=" << format_real(traj.drift_qq) << " w.w=" << format_real(traj.drift_ww)
            << " q.w=" << format_real(traj.drift_qw) << '\n';
    }
    catch (const IntegrationError& e)
    {
        err << "integration failed: " << e.what() << "; last good row " << e.last_good_row()
            << '\n';
        return exit_failure;
    }
    return exit_ok;
}

} // namespace

//---------------------------------------------------------------------------//

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Covariant spin density matrices, EPR correlations and BMT precession"};
    app.name("relspin");
    app.require_subcommand(1);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Run every identity suite and report residuals");
    check_cmd->add_option("--seed", check.seed, "Random seed")->capture_default_str();
    check_cmd->add_option("--samples", check.samples, "Samples per suite")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    check_cmd->add_flag("--inject-fault", check.inject_fault,
                        "Perturb gamma^1 by 1e-6 to exercise the failure path");
    check_cmd->footer("RELSPIN_TOLERANCE overrides the residual threshold (default 1e-10).");

    std::string pair_file;
    auto* correlate_cmd
        = app.add_subcommand("correlate", "Two-particle spin correlation for a pair file");
    correlate_cmd->add_option("pairfile", pair_file, "JSON pair file")->required();

    CurveArgs curve;
    auto* curve_cmd = app.add_subcommand("curve", "Correlation along a special configuration (CSV)");
    curve_cmd
        ->add_option("--config", curve.config,
                     "parallel-spin: a along k, b along p; perpendicular-spin: a = y, b = -x. "
                     "Momenta are k = kappa x, p = kappa y with equal speeds beta")
        ->required()
        ->check(CLI::IsMember({"parallel-spin", "perpendicular-spin"}));
    curve_cmd->add_option("--beta-min", curve.beta_min)->capture_default_str();
    curve_cmd->add_option("--beta-max", curve.beta_max)->capture_default_str();
    curve_cmd->add_option("--steps", curve.steps, "Number of grid points")->capture_default_str();
    curve_cmd->add_option("--mass", curve.mass)->capture_default_str();

    std::string state_file;
    bool entropy_only = false;
    auto* omega_cmd = app.add_subcommand("omega", "Decompose the reduced matrix of a state file");
    omega_cmd->add_option("statefile", state_file, "JSON state file")->required();
    omega_cmd->add_flag("--entropy-only", entropy_only, "Report only the entropy");

    auto* entropy_cmd = app.add_subcommand("entropy", "Alias of omega --entropy-only");
    entropy_cmd->add_option("statefile", state_file, "JSON state file")->required();

    PrecessArgs precess;
    auto* precess_cmd = app.add_subcommand("precess", "Integrate the momentum/spin equations (CSV)");
    precess_cmd->add_option("--field", precess.field, "Field JSON file or inline object");
    precess_cmd->add_option("--params", precess.params, "Particle JSON file or inline object")
        ->required();
    precess_cmd->add_option("--momentum", precess.momentum, "Initial spatial momentum")
        ->expected(3)
        ->delimiter(',');
    precess_cmd->add_option("--bloch", precess.bloch, "Initial rest-frame Bloch vector")
        ->expected(3)
        ->delimiter(',');
    precess_cmd->add_option("--position", precess.position, "Initial position")
        ->expected(3)
        ->delimiter(',');
    precess_cmd->add_option("--dt", precess.dt, "Step in proper time (lab time with --slow-motion)")
        ->capture_default_str();
    precess_cmd->add_option("--steps", precess.steps)->capture_default_str();
    precess_cmd->add_option("--sample-every", precess.sample_every)->capture_default_str();
    precess_cmd->add_flag("--slow-motion", precess.slow_motion,
                          "Integrate the slow-motion limit instead");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (*check_cmd)
        {
            return cmd_check(check, out, err);
        }
        if (*correlate_cmd)
        {
            return cmd_correlate(pair_file, out, err);
        }
        if (*curve_cmd)
        {
            return cmd_curve(curve, out);
        }
        if (*omega_cmd)
        {
            return cmd_omega(state_file, entropy_only, out);
        }
        if (*entropy_cmd)
        {
            return cmd_omega(state_file, true, out);
        }
        if (*precess_cmd)
        {
            return cmd_precess(precess, out, err);
        }
    }
    catch (const SchemaError& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const UsageError& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::invalid_argument& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

} // namespace relspin::cli
