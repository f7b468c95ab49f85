#include "relspin/cli/input_files.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace relspin::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw SchemaError(where + ": " + what);
}

void check_keys(const json& node, const std::string& where, const std::set<std::string>& allowed,
                const std::set<std::string>& required)
{
    if (!node.is_object())
    {
        fail(where, "expected an object");
    }
    for (const auto& [key, value] : node.items())
    {
        if (!allowed.count(key))
        {
            fail(where.empty() ? key : where + "." + key, "unknown key");
        }
    }
    for (const auto& key : required)
    {
        if (!node.contains(key))
        {
            fail(where.empty() ? key : where + "." + key, "missing required key");
        }
    }
}

std::string path(const std::string& where, const std::string& key)
{
    return where.empty() ? key : where + "." + key;
}

real number(const json& node, const std::string& where)
{
    if (!node.is_number())
    {
        fail(where, "expected a number");
    }
    const real v = node.get<real>();
    if (!std::isfinite(v))
    {
        fail(where, "expected a finite number");
    }
    return v;
}

Vec3 vec3(const json& node, const std::string& where)
{
    if (!node.is_array() || node.size() != 3)
    {
        fail(where, "expected an array of 3 numbers");
    }
    Vec3 v;
    for (int i = 0; i < 3; ++i)
    {
        v[i] = number(node[i], where + "[" + std::to_string(i) + "]");
    }
    return v;
}

Mat3 mat3(const json& node, const std::string& where)
{
    if (!node.is_array() || node.size() != 3)
    {
        fail(where, "expected a 3x3 array");
    }
    Mat3 m;
    for (int i = 0; i < 3; ++i)
    {
        m.row(i) = vec3(node[i], where + "[" + std::to_string(i) + "]").transpose();
    }
    return m;
}

real positive_mass(const json& doc, const std::string& where)
{
    const real m = number(doc.at("mass"), path(where, "mass"));
    if (!(m > 0.0))
    {
        fail(path(where, "mass"), "must be positive");
    }
    return m;
}

Vec3 unit_direction(const json& node, const std::string& where, std::vector<std::string>& warnings)
{
    const Vec3 v = vec3(node, where);
    const real n = v.norm();
    if (n == 0.0)
    {
        fail(where, "direction must be nonzero");
    }
    if (std::abs(n - 1.0) > 1e-12)
    {
        warnings.push_back(where + " renormalized from length " + std::to_string(n));
    }
    return v / n;
}

CMat4 coefficient_matrix(const json& node, const std::string& where)
{
    if (!node.is_array() || node.size() != 4)
    {
        fail(where, "expected a 4x4 array of [re, im] pairs");
    }
    CMat4 c;
    for (int i = 0; i < 4; ++i)
    {
        const std::string row = where + "[" + std::to_string(i) + "]";
        if (!node[i].is_array() || node[i].size() != 4)
        {
            fail(row, "expected 4 [re, im] pairs");
        }
        for (int j = 0; j < 4; ++j)
        {
            const std::string cell = row + "[" + std::to_string(j) + "]";
            const json& z = node[i][j];
            if (!z.is_array() || z.size() != 2)
            {
                fail(cell, "expected [re, im]");
            }
            c(i, j) = complex(number(z[0], cell + "[0]"), number(z[1], cell + "[1]"));
        }
    }
    return c;
}

} // namespace

json read_json(const std::string& path_or_text)
{
    std::string text;
    std::string source = path_or_text;
    if (!path_or_text.empty() && path_or_text.front() == '{')
    {
        text = path_or_text;
        source = "<inline>";
    }
    else
    {
        std::ifstream in(path_or_text);
        if (!in)
        {
            throw SchemaError(path_or_text + ": cannot open file");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw SchemaError(source + ": " + e.what());
    }
}

SpinorMap parse_boost(const json& node, const std::string& where)
{
    if (node.is_array())
    {
        const Vec3 v = vec3(node, where);
        const real speed = v.norm();
        if (speed >= 1.0)
        {
            fail(where, "velocity must have magnitude below 1");
        }
        if (speed == 0.0)
        {
            return SpinorMap();
        }
        return SpinorMap::boost(v / speed, std::atanh(speed));
    }
    check_keys(node, where, {"axis", "rapidity"}, {"axis", "rapidity"});
    const Vec3 axis = vec3(node.at("axis"), path(where, "axis"));
    if (axis.norm() == 0.0)
    {
        fail(path(where, "axis"), "must be nonzero");
    }
    return SpinorMap::boost(axis.normalized(), number(node.at("rapidity"), path(where, "rapidity")));
}

StateFile parse_state_file(const json& doc)
{
    check_keys(doc, "", {"mass", "ensemble", "boost"}, {"mass", "ensemble"});
    const real m = positive_mass(doc, "");
    const json& list = doc.at("ensemble");
    if (!list.is_array() || list.empty())
    {
        fail("ensemble", "expected a non-empty array");
    }

    std::vector<Ensemble::Entry> entries;
    for (std::size_t i = 0; i < list.size(); ++i)
    {
        const std::string where = "ensemble[" + std::to_string(i) + "]";
        check_keys(list[i], where, {"weight", "momentum", "bloch"}, {"weight", "momentum", "bloch"});
        const real weight = number(list[i].at("weight"), path(where, "weight"));
        if (!(weight > 0.0))
        {
            fail(path(where, "weight"), "must be positive");
        }
        const Vec3 momentum = vec3(list[i].at("momentum"), path(where, "momentum"));
        const Vec3 bloch = vec3(list[i].at("bloch"), path(where, "bloch"));
        if (bloch.norm() > 1.0 + 1e-12)
        {
            fail(path(where, "bloch"), "length exceeds 1");
        }
        entries.push_back({weight, SharpState(OnShellMomentum(m, momentum), bloch)});
    }

    real total = 0.0;
    for (const auto& e : entries)
    {
        total += e.weight;
    }
    if (std::abs(total - 1.0) > 1e-9)
    {
        fail("ensemble", "weights sum to " + std::to_string(total) + ", expected 1");
    }

    StateFile out{m, Ensemble(std::move(entries)), std::nullopt};
    if (doc.contains("boost"))
    {
        out.boost = parse_boost(doc.at("boost"), "boost");
    }
    return out;
}

PairFile parse_pair_file(const json& doc)
{
    check_keys(doc, "", {"mass", "k", "p", "a", "b", "coeffs"}, {"mass", "k", "p", "a", "b"});
    const real m = positive_mass(doc, "");
    const OnShellMomentum k(m, vec3(doc.at("k"), "k"));
    const OnShellMomentum p(m, vec3(doc.at("p"), "p"));

    std::vector<std::string> warnings;
    const Vec3 a = unit_direction(doc.at("a"), "a", warnings);
    const Vec3 b = unit_direction(doc.at("b"), "b", warnings);

    CMat4 c = singlet_coeffs();
    if (doc.contains("coeffs"))
    {
        c = coefficient_matrix(doc.at("coeffs"), "coeffs");
        if (c.isZero(0.0))
        {
            fail("coeffs", "coefficient matrix must be nonzero");
        }
    }
    return {TwoParticleState(k, p, c), a, b, std::move(warnings)};
}

EMField parse_field(const json& doc)
{
    check_keys(doc, "field", {"E", "B", "gradB"}, {});
    EMField f;
    if (doc.contains("E"))
    {
        f.e = vec3(doc.at("E"), "field.E");
    }
    if (doc.contains("B"))
    {
        f.b = vec3(doc.at("B"), "field.B");
    }
    if (doc.contains("gradB"))
    {
        f.grad_b = mat3(doc.at("gradB"), "field.gradB");
    }
    try
    {
        f.validate();
    }
    catch (const std::invalid_argument& e)
    {
        fail("field.gradB", e.what());
    }
    return f;
}

ParticleParams parse_params(const json& doc)
{
    check_keys(doc, "params", {"mass", "charge", "zeta", "g"}, {"mass", "charge"});
    const real m = positive_mass(doc, "params");
    const real e = number(doc.at("charge"), "params.charge");
    if (doc.contains("zeta") == doc.contains("g"))
    {
        fail("params", "exactly one of \"zeta\" or \"g\" is required");
    }
    if (doc.contains("g"))
    {
        return ParticleParams::from_g_factor(m, e, number(doc.at("g"), "params.g"));
    }
    return {m, e, number(doc.at("zeta"), "params.zeta")};
}

} // namespace relspin::cli
