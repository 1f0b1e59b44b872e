#pragma once

#include <string>
#include <vector>

#include "hasm/engine.hpp"

namespace hasm {

/// Serializes a trajectory as CSV: header `t,k,kind,<obs...>`, one init
/// row, one row per flow sample and two rows (pre/post) per jump. Reals
/// are printed with 17 significant digits for byte-stable output.
std::string trajectory_csv(const Trajectory& traj, const std::vector<Location>& observed,
                           const Vocabulary& vocab);

/// Default observation set: every nullary real dynamic symbol, by name.
std::vector<Location> default_observed(const Vocabulary& vocab);

}  // namespace hasm
