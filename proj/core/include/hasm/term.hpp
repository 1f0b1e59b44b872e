#pragma once

<system-warning>Context low. Current usage: 169,931 tokens (85.0%). Files: /root/proj/core/include/hasm/errors.hpp (76 lines), /root/proj/core/include/hasm/value.hpp (87 lines)</system-warning>

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hasm/symbol.hpp"
#include "hasm/value.hpp"

namespace hasm {

/// Interpreted static operations of the background structure.
enum class Op : uint8_t { Add, Sub, Mul, Div, Neg, Eq, Lt, Le, And, Or, Not };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// A ground first-order term. Leaves are literals or nullary dynamic
/// applications; there are no variables anywhere in the syntax.
struct Term {
  struct RealLit {
    double v;
  };
  struct BoolLit {
    bool v;
  };
  struct StaticApp {
    Op op;
    std::vector<TermPtr> args;
  };
  struct DynApp {
    SymbolId sym;
    std::vector<TermPtr> args;
  };

  std::variant<RealLit, BoolLit, StaticApp, DynApp> node;
  Sort sort = Sort::Real;

  bool is_dyn_app() const { return std::holds_alternative<DynApp>(node); }
  const DynApp* dyn() const { return std::get_if<DynApp>(&node); }
  const StaticApp* static_app() const { return std::get_if<StaticApp>(&node); }
  const RealLit* real_lit() const { return std::get_if<RealLit>(&node); }
  const BoolLit* bool_lit() const { return std::get_if<BoolLit>(&node); }

  /// True for =, <, <= applications over real operands: the atoms the
  /// engine watches for zero crossings during flow.
  bool is_comparison_atom() const;
};

// Builders. Each checks operand sorts and computes the result sort.
TermPtr mk_real(double v);
TermPtr mk_bool(bool v);
TermPtr mk_static(Op op, std::vector<TermPtr> args);
TermPtr mk_dyn(const Vocabulary& vocab, SymbolId sym, std::vector<TermPtr> args);

bool structural_equal(const Term& a, const Term& b);
inline bool structural_equal(const TermPtr& a, const TermPtr& b) {
  return structural_equal(*a, *b);
}
size_t term_hash(const Term& t);

/// Pre-order (outside-in), left-to-right traversal of t and all subterms.
void visit_subterms(const TermPtr& t, const std::function<void(const TermPtr&)>& f);

int op_arity(Op op);
const char* op_spelling(Op op);

}  // namespace hasm
