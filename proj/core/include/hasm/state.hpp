#pragma once

#include <map>
#include <memory>
#include <vector>

#include "hasm/symbol.hpp"
#include "hasm/value.hpp"

namespace hasm {

/// A location <f, args> of a dynamic symbol.
struct Location {
  SymbolId sym = 0;
  std::vector<Value> args;

  friend bool operator==(const Location& a, const Location& b) {
    return a.sym == b.sym && a.args == b.args;
  }
  friend std::strong_ordering operator<=>(const Location& a, const Location& b) {
    if (auto c = a.sym <=> b.sym; c != 0) return c;
    return a.args <=> b.args;
  }
};

struct Update {
  Location loc;
  Value value;

  friend bool operator==(const Update&, const Update&) = default;
};

/// Interpretation of the dynamic symbols as finitely supported maps over
/// value tuples. Reads are total: unmapped locations yield the symbol's
/// sort default. Entries holding the default are normalized away, so two
/// states are equal iff their stored maps are.
class State {
public:
  explicit State(std::shared_ptr<const Vocabulary> vocab);

  const Vocabulary& vocabulary() const { return *vocab_; }
  const std::shared_ptr<const Vocabulary>& vocabulary_ptr() const { return vocab_; }

  Value read(const Location& loc) const;
  void set(const Location& loc, const Value& v);

  /// Locations with an explicitly stored (non-default) value, in order.
  std::vector<Location> support() const;

  friend bool operator==(const State& a, const State& b);

private:
  std::shared_ptr<const Vocabulary> vocab_;
  std::vector<std::map<std::vector<Value>, Value>> maps_;  // indexed by SymbolId
};

/// Returns a state identical to the input except at the listed locations.
State apply_updates(const State& state, const std::vector<Update>& updates);
State apply_updates(const State& state, const std::map<Location, Value>& updates);

/// after \ before: the updates that turn `before` into `after`.
std::vector<Update> state_diff(const State& after, const State& before);

}  // namespace hasm
