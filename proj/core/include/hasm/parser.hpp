#pragma once

#include <string_view>

#include "hasm/ast.hpp"

namespace hasm {

/// Parses a program file: declarations followed by one rule. Rejects
/// mixed par/flow blocks, assignments to static symbols, sort errors and
/// arity misuse with named diagnostics.
Program parse(std::string_view text);

/// Parses a single ground term against an existing vocabulary. Undeclared
/// symbols are an error here. Intended for option parsing and tests.
TermPtr parse_term(std::string_view text, const Vocabulary& vocab);

}  // namespace hasm
