#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "relspin/bmt.hpp"
#include "relspin/correlation.hpp"

namespace relspin::cli {

/// Malformed or inconsistent input document. The message names the
/// offending key path or the line/column of a syntax error.
class SchemaError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct StateFile
{
    real mass;
    Ensemble ensemble;
    std::optional<SpinorMap> boost;
};

struct PairFile
{
    TwoParticleState state;
    Vec3 a;
    Vec3 b;
    /// Human-readable notes about silently repaired input (renormalized
    /// directions).
    std::vector<std::string> warnings;
};

/// Reads a file or, when the text begins with '{', parses it inline.
nlohmann::json read_json(const std::string& path_or_text);

StateFile parse_state_file(const nlohmann::json& doc);
PairFile parse_pair_file(const nlohmann::json& doc);
/// {"E": [..], "B": [..], "gradB": [[..], [..], [..]]}, all optional.
EMField parse_field(const nlohmann::json& doc);
/// {"mass", "charge", and one of "zeta" or "g"}.
ParticleParams parse_params(const nlohmann::json& doc);

/// Active boost from a velocity 3-vector or {"axis": [..], "rapidity": r}.
SpinorMap parse_boost(const nlohmann::json& node, const std::string& where);

} // namespace relspin::cli
