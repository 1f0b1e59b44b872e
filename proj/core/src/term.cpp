#include "hasm/term.hpp"

#include "hasm/errors.hpp"

namespace hasm {

int op_arity(Op op) {
  switch (op) {
    case Op::Neg:
    case Op::Not:
      return 1;
    default:
      return 2;
  }
}

const char* op_spelling(Op op) {
  switch (op) {
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    case Op::Neg: return "-";
    case Op::Eq: return "=";
    case Op::Lt: return "<";
    case Op::Le: return "<=";
    case Op::And: return "and";
    case Op::Or: return "or";
    case Op::Not: return "not";
  }
  return "?";
}

bool Term::is_comparison_atom() const {
  const auto* s = static_app();
  if (!s) return false;
  if (s->op != Op::Eq && s->op != Op::Lt && s->op != Op::Le) return false;
  return s->args[0]->sort == Sort::Real;
}

TermPtr mk_real(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite real literal");
  auto t = std::make_shared<Term>();
  t->node = Term::RealLit{v};
  t->sort = Sort::Real;
  return t;
}

TermPtr mk_bool(bool v) {
  auto t = std::make_shared<Term>();
  t->node = Term::BoolLit{v};
  t->sort = Sort::Bool;
  return t;
}

TermPtr mk_static(Op op, std::vector<TermPtr> args) {
  if (static_cast<int>(args.size()) != op_arity(op)) {
    throw SortError(std::string("wrong argument count for ") + op_spelling(op));
  }
  Sort result = Sort::Real;
  switch (op) {
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div:
    case Op::Neg:
      for (const auto& a : args) {
        if (a->sort != Sort::Real)
          throw SortError(std::string(op_spelling(op)) + " expects real operands");
      }
      result = Sort::Real;
      break;
    case Op::Eq:
      if (args[0]->sort != args[1]->sort)
        throw SortError("= expects operands of one sort");
      result = Sort::Bool;
      break;
    case Op::Lt:
    case Op::Le:
      if (args[0]->sort != Sort::Real || args[1]->sort != Sort::Real)
        throw SortError(std::string(op_spelling(op)) + " expects real operands");
      result = Sort::Bool;
      break;
    case Op::And:
    case Op::Or:
    case Op::Not:
      for (const auto& a : args) {
        if (a->sort != Sort::Bool)
          throw SortError(std::string(op_spelling(op)) + " expects boolean operands");
      }
      result = Sort::Bool;
      break;
  }
  auto t = std::make_shared<Term>();
  t->node = Term::StaticApp{op, std::move(args)};
  t->sort = result;
  return t;
}

TermPtr mk_dyn(const Vocabulary& vocab, SymbolId sym, std::vector<TermPtr> args) {
  const DynSymbol& s = vocab[sym];
  if (static_cast<int>(args.size()) != s.arity) {
    throw SortError("wrong argument count for " + s.name);
  }
  auto t = std::make_shared<Term>();
  t->node = Term::DynApp{sym, std::move(args)};
  t->sort = s.sort;
  return t;
}

bool structural_equal(const Term& a, const Term& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* ra = a.real_lit()) {
    return std::bit_cast<uint64_t>(ra->v) == std::bit_cast<uint64_t>(b.real_lit()->v);
  }
  if (const auto* ba = a.bool_lit()) {
    return ba->v == b.bool_lit()->v;
  }
  if (const auto* sa = a.static_app()) {
    const auto* sb = b.static_app();
    if (sa->op != sb->op || sa->args.size() != sb->args.size()) return false;
    for (size_t i = 0; i < sa->args.size(); ++i) {
      if (!structural_equal(*sa->args[i], *sb->args[i])) return false;
    }
    return true;
  }
  const auto* da = a.dyn();
  const auto* db = b.dyn();
  if (da->sym != db->sym || da->args.size() != db->args.size()) return false;
  for (size_t i = 0; i < da->args.size(); ++i) {
    if (!structural_equal(*da->args[i], *db->args[i])) return false;
  }
  return true;
}

static size_t mix(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

size_t term_hash(const Term& t) {
  size_t h = t.node.index();
  if (const auto* r = t.real_lit()) return mix(h, std::bit_cast<uint64_t>(r->v));
  if (const auto* b = t.bool_lit()) return mix(h, b->v);
  if (const auto* s = t.static_app()) {
    h = mix(h, static_cast<size_t>(s->op));
    for (const auto& a : s->args) h = mix(h, term_hash(*a));
    return h;
  }
  const auto* d = t.dyn();
  h = mix(h, d->sym);
  for (const auto& a : d->args) h = mix(h, term_hash(*a));
  return h;
}

void visit_subterms(const TermPtr& t, const std::function<void(const TermPtr&)>& f) {
  f(t);
  if (const auto* s = t->static_app()) {
    for (const auto& a : s->args) visit_subterms(a, f);
  } else if (const auto* d = t->dyn()) {
    for (const auto& a : d->args) visit_subterms(a, f);
  }
}

}  // namespace hasm
