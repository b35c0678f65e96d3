#pragma once

#include <string>

#include <json.hpp>

#include "hypermass/flat_norm.hpp"
#include "hypermass/mass.hpp"
#include "hypermass/profile.hpp"
#include "hypermass/stability.hpp"

namespace hypermass {

using Json = nlohmann::ordered_json;

/// Profile documents:
///   {"kind": "ads", "n": 3, "m": 1}
///   {"kind": "constant", "n": 3, "value": 0}
///   {"kind": "sech", "n": 3, "a": .., "b": .., "p": .., "omega": .., "offset": ..}
///   {"kind": "sampled", "n": 3, "boundary": "entire" | "minimal",
///    "samples": [{"r": .., "f": .., "f1": .., "f2": ..}, ...]}
/// Throws ConfigError on malformed documents.
RadialProfile profile_from_json(const Json& doc);

/// Sampled document for any profile on the given radii.
Json sampled_profile_json(const RadialProfile& f, std::span<const double> radii);

Json to_json(const MassReport& report);
Json to_json(const HeightBoundReport& report);
Json to_json(const SweepTable& table);
Json to_json(const OdeSolution& solution);

/// Fixed header m,M_A,M_Bplus,M_Bminus,flat_upper,ratio and %.12g fields.
std::string sweep_csv(const SweepTable& table);

/// Shortest round-trip representation of a double.
std::string format_number(double x);

}  // namespace hypermass
