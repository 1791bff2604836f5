#pragma once

#include <string>
#include <vector>

#include "replisim/config.hpp"
#include "replisim/engine.hpp"

namespace replisim {

/// Structural checks on a committed state. Returns one message per violation.
///
/// - bonds are reciprocal, never to self, vertical bonds join opposite types
/// - red/blue fields are Large exactly when bonded
/// - the vertical field is Large exactly when the codon has a strand neighbour
/// - strand_location 2 implies exactly one red-or-blue neighbour
/// - the splitting timer only runs in z, the yellow timer only while Large
/// - every middle lies inside the container and every value is finite
std::vector<std::string> check_invariants(const SimulationState& s, const SimulationConfig& cfg);

/// Bonds that would survive the break phase on `s` but whose field circles
/// do not intersect. Always empty unless break_separated_bonds is wrong.
std::vector<std::string> check_bond_contact(const SimulationState& s, const SimulationConfig& cfg);

}  // namespace replisim
