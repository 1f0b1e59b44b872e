#include "hasm/state.hpp"

#include "hasm/errors.hpp"

namespace hasm {

State::State(std::shared_ptr<const Vocabulary> vocab)
    : vocab_(std::move(vocab)), maps_(vocab_->size()) {}

Value State::read(const Location& loc) const {
  const auto& m = maps_.at(loc.sym);
  auto it = m.find(loc.args);
  if (it != m.end()) return it->second;
  return default_value((*vocab_)[loc.sym].sort);
}

void State::set(const Location& loc, const Value& v) {
  const DynSymbol& sym = (*vocab_)[loc.sym];
  if (static_cast<int>(loc.args.size()) != sym.arity) {
    throw SortError("location arity mismatch for " + sym.name);
  }
  if (v.sort() != sym.sort) {
    throw SortError("sort mismatch writing " + sym.name);
  }
  auto& m = maps_[loc.sym];
  if (v == default_value(sym.sort)) {
    m.erase(loc.args);
  } else {
    m.insert_or_assign(loc.args, v);
  }
}

std::vector<Location> State::support() const {
  std::vector<Location> out;
  for (SymbolId id = 0; id < maps_.size(); ++id) {
    for (const auto& [args, v] : maps_[id]) {
      out.push_back(Location{id, args});
    }
  }
  return out;
}

bool operator==(const State& a, const State& b) {
  return *a.vocab_ == *b.vocab_ && a.maps_ == b.maps_;
}

State apply_updates(const State& state, const std::vector<Update>& updates) {
  State out = state;
  for (const auto& u : updates) out.set(u.loc, u.value);
  return out;
}

State apply_updates(const State& state, const std::map<Location, Value>& updates) {
  State out = state;
  for (const auto& [loc, v] : updates) out.set(loc, v);
  return out;
}

std::vector<Update> state_diff(const State& after, const State& before) {
  std::vector<Update> out;
  std::map<Location, bool> seen;
  for (const auto& loc : after.support()) seen[loc] = true;
  for (const auto& loc : before.support()) seen[loc] = true;
  for (const auto& [loc, _] : seen) {
    Value va = after.read(loc);
    if (!(va == before.read(loc))) out.push_back(Update{loc, va});
  }
  return out;
}

}  // namespace hasm
