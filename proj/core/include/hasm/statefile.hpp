#pragma once

#include <string_view>
#include <vector>

#include "hasm/ast.hpp"
#include "hasm/state.hpp"

namespace hasm {

/// Initial-state files: one `name = literal` or `name(arg, ...) = literal`
/// per line, `#` comments. Symbols must exist in the program's vocabulary;
/// each location may be assigned at most once.
State parse_state_file(std::string_view text, const Program& p);

/// Samples files: state blocks separated by lines containing only `---`.
std::vector<State> parse_samples_file(std::string_view text, const Program& p);

/// Location specs as used by --observe: `name` or `name(lit, ...)`.
Location parse_location_spec(std::string_view text, const Program& p);

}  // namespace hasm
