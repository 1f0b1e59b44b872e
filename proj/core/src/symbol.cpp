#include "hasm/symbol.hpp"

#include "hasm/errors.hpp"

namespace hasm {

SymbolId Vocabulary::add(std::string name, int arity, Sort sort) {
  auto key = std::make_pair(name, arity);
  if (index_.count(key)) {
    throw Error("duplicate symbol " + name + "/" + std::to_string(arity));
  }
  SymbolId id = static_cast<SymbolId>(symbols_.size());
  symbols_.push_back(DynSymbol{std::move(name), arity, sort});
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<SymbolId> Vocabulary::lookup(const std::string& name, int arity) const {
  auto it = index_.find(std::make_pair(name, arity));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<SymbolId> Vocabulary::lookup_name(const std::string& name) const {
  std::vector<SymbolId> out;
  for (const auto& [key, id] : index_) {
    if (key.first == name) out.push_back(id);
  }
  return out;
}

bool operator==(const Vocabulary& a, const Vocabulary& b) {
  if (a.symbols_.size() != b.symbols_.size()) return false;
  for (size_t i = 0; i < a.symbols_.size(); ++i) {
    const auto& x = a.symbols_[i];
    const auto& y = b.symbols_[i];
    if (x.name != y.name || x.arity != y.arity || x.sort != y.sort) return false;
  }
  return true;
}

}  // namespace hasm
