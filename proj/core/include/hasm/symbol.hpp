#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hasm/value.hpp"

namespace hasm {

using SymbolId = uint32_t;

/// A dynamic function symbol: the only kind that owns locations and may
/// appear as an update or Dynamic target. The static background (arithmetic,
/// comparisons, connectives, literals) is built into terms and has no
/// symbol-table presence.
struct DynSymbol {
  std::string name;
  int arity = 0;
  Sort sort = Sort::Real;

  bool relational() const { return sort == Sort::Bool; }
};

/// The dynamic part of a program's vocabulary, keyed by (name, arity).
class Vocabulary {
public:
  SymbolId add(std::string name, int arity, Sort sort);

  std::optional<SymbolId> lookup(const std::string& name, int arity) const;
  /// All arities a name is known at (used to report arity misuse).
  std::vector<SymbolId> lookup_name(const std::string& name) const;

  const DynSymbol& operator[](SymbolId id) const { return symbols_[id]; }
  size_t size() const { return symbols_.size(); }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b);

private:
  std::vector<DynSymbol> symbols_;
  std::map<std::pair<std::string, int>, SymbolId> index_;
};

}  // namespace hasm
