#pragma once

// Output envelope and plain-text tables shared by the command-line tool.

#include <optional>
#include <string>

#include <json.hpp>

#include "arrstab/characters.hpp"
#include "arrstab/elliptic.hpp"
#include "arrstab/lattice_oracle.hpp"
#include "arrstab/spectral.hpp"
#include "arrstab/stability.hpp"

namespace arrstab {

inline constexpr int kSchemaVersion = 1;

nlohmann::ordered_json envelope(std::optional<Family> family, std::optional<GroundSpace> space,
                                nlohmann::ordered_json config, nlohmann::ordered_json result);

std::string to_table(const Cohomology& h);
std::string to_table(const E2Cell& cell);
std::string to_table(const StabilityReport& r);
std::string to_table(const CharacterTable& t);
std::string to_table(const IsomorphismReport& r);
std::string to_table(const SmithNormalForm& snf);

}  // namespace arrstab
