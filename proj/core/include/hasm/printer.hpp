#pragma once

#include <string>

#include "hasm/ast.hpp"

namespace hasm {

/// Canonical text: explicit declarations for every dynamic symbol followed
/// by the body with 2-space block indentation and minimal parentheses.
/// parse(print(p)) is structurally identical to p.
std::string print(const Program& p);
std::string print_rule(const Rule& r, const Vocabulary& vocab, int indent = 0);
std::string print_term(const Term& t, const Vocabulary& vocab);
inline std::string print_term(const TermPtr& t, const Vocabulary& vocab) {
  return print_term(*t, vocab);
}

}  // namespace hasm
