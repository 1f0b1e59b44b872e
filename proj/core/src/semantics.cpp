#include "hasm/semantics.hpp"

namespace hasm {

ClashError::ClashError(ClashReport report)
    : Error("clashing updates at a location: " + report.first.str() + " from " +
            report.first_path + " vs " + report.second.str() + " from " +
            report.second_path),
      report_(std::move(report)) {}

bool operator==(const TaggedGenerator& a, const TaggedGenerator& b) {
  if (a.tag != b.tag) return false;
  if (a.tag == TaggedGenerator::Tag::Jump) return a.updates == b.updates;
  if (a.derivs.size() != b.derivs.size()) return false;
  auto it = b.derivs.begin();
  for (const auto& [loc, d] : a.derivs) {
    if (!(it->first == loc)) return false;
    if (std::bit_cast<uint64_t>(it->second) != std::bit_cast<uint64_t>(d)) return false;
    ++it;
  }
  return true;
}

namespace {

Location eval_target(const Term& target, const State& state, const EvalOptions& opts) {
  const auto* d = target.dyn();
  Location loc;
  loc.sym = d->sym;
  loc.args.reserve(d->args.size());
  for (const auto& a : d->args) loc.args.push_back(eval_term(*a, state, opts));
  return loc;
}

struct RuleEval {
  const State& state;
  const EvalOptions& opts;

  void merge_update(std::map<Location, Value>& acc, Location loc, Value v,
                    std::map<Location, std::string>& origin, const std::string& path) {
    auto it = acc.find(loc);
    if (it == acc.end()) {
      origin.emplace(loc, path);
      acc.emplace(std::move(loc), v);
      return;
    }
    if (!(it->second == v)) {
      throw ClashError(ClashReport{loc, it->second, v, origin[loc], path});
    }
  }

  TaggedGenerator eval(const Rule& r, const std::string& path) {
    TaggedGenerator gen;
    if (const auto* u = std::get_if<Rule::Update>(&r.node)) {
      gen.tag = TaggedGenerator::Tag::Jump;
      gen.updates.emplace(eval_target(*u->u.target, state, opts),
                          eval_term(*u->u.rhs, state, opts));
      return gen;
    }
    if (const auto* p = std::get_if<Rule::Par>(&r.node)) {
      gen.tag = TaggedGenerator::Tag::Jump;
      std::map<Location, std::string> origin;
      for (size_t i = 0; i < p->updates.size(); ++i) {
        const auto& u = p->updates[i];
        std::string here = path + "par[" + std::to_string(i) + "]";
        merge_update(gen.updates, eval_target(*u.target, state, opts),
                     eval_term(*u.rhs, state, opts), origin, here);
      }
      return gen;
    }
    if (const auto* d = std::get_if<Rule::Dynamic>(&r.node)) {
      gen.tag = TaggedGenerator::Tag::Flow;
      gen.derivs.emplace(eval_target(*d->d.target, state, opts),
                         eval_term(*d->d.rhs, state, opts).as_real());
      return gen;
    }
    if (const auto* f = std::get_if<Rule::Flow>(&r.node)) {
      gen.tag = TaggedGenerator::Tag::Flow;
      std::map<Location, std::string> origin;
      for (size_t i = 0; i < f->dynamics.size(); ++i) {
        const auto& u = f->dynamics[i];
        std::string here = path + "flow[" + std::to_string(i) + "]";
        Location loc = eval_target(*u.target, state, opts);
        double v = eval_term(*u.rhs, state, opts).as_real();
        auto it = gen.derivs.find(loc);
        if (it == gen.derivs.end()) {
          gen.derivs.emplace(loc, v);
          origin.emplace(loc, here);
        } else if (std::bit_cast<uint64_t>(it->second) != std::bit_cast<uint64_t>(v)) {
          throw ClashError(ClashReport{loc, Value::real(it->second), Value::real(v),
                                       origin[loc], here});
        }
      }
      return gen;
    }
    if (const auto* c = std::get_if<Rule::If>(&r.node)) {
      bool g = eval_term(*c->guard, state, opts).as_bool();
      return eval(g ? *c->then_rule : *c->else_rule,
                  path + (g ? "if.then." : "if.else."));
    }
    gen.tag = TaggedGenerator::Tag::Jump;  // skip: the empty update set
    return gen;
  }
};

}  // namespace

TaggedGenerator evaluate_rule(const Rule& rule, const State& state,
                              const EvalOptions& opts) {
  RuleEval re{state, opts};
  return re.eval(rule, "");
}

TaggedGenerator evaluate_rule(const Rule& rule, const State& state) {
  EvalOptions opts;
  return evaluate_rule(rule, state, opts);
}

StateClass classify(const Program& p, const State& state, const EvalOptions& opts) {
  return evaluate_rule(*p.body, state, opts).is_jump() ? StateClass::JumpState
                                                       : StateClass::FlowState;
}

StateClass classify(const Program& p, const State& state) {
  EvalOptions opts;
  return classify(p, state, opts);
}

}  // namespace hasm
