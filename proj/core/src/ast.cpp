#include "hasm/ast.hpp"

#include "hasm/errors.hpp"

namespace hasm {

static void check_update_spec(const UpdateSpec& u, bool dynamic_rule) {
  const auto* d = u.target->dyn();
  if (!d) throw SortError("update target must be a dynamic application");
  if (dynamic_rule) {
    if (u.target->sort != Sort::Real || u.rhs->sort != Sort::Real) {
      throw SortError("Dynamic takes a real target and a real right-hand side");
    }
  } else if (u.target->sort != u.rhs->sort) {
    throw SortError("update value sort must match the target");
  }
}

RulePtr mk_update(UpdateSpec u) {
  check_update_spec(u, false);
  auto r = std::make_shared<Rule>();
  r->node = Rule::Update{std::move(u)};
  return r;
}

RulePtr mk_par(std::vector<UpdateSpec> updates) {
  if (updates.empty()) throw SortError("par block must be nonempty");
  for (const auto& u : updates) check_update_spec(u, false);
  auto r = std::make_shared<Rule>();
  r->node = Rule::Par{std::move(updates)};
  return r;
}

RulePtr mk_dynamic(UpdateSpec d) {
  check_update_spec(d, true);
  auto r = std::make_shared<Rule>();
  r->node = Rule::Dynamic{std::move(d)};
  return r;
}

RulePtr mk_flow(std::vector<UpdateSpec> dynamics) {
  if (dynamics.empty()) throw SortError("flow block must be nonempty");
  for (const auto& d : dynamics) check_update_spec(d, true);
  auto r = std::make_shared<Rule>();
  r->node = Rule::Flow{std::move(dynamics)};
  return r;
}

RulePtr mk_if(TermPtr guard, RulePtr then_rule, RulePtr else_rule) {
  if (guard->sort != Sort::Bool) throw SortError("guard must be boolean");
  auto r = std::make_shared<Rule>();
  r->node = Rule::If{std::move(guard), std::move(then_rule), std::move(else_rule)};
  return r;
}

RulePtr mk_skip() {
  auto r = std::make_shared<Rule>();
  r->node = Rule::Skip{};
  return r;
}

static bool spec_equal(const UpdateSpec& a, const UpdateSpec& b) {
  return structural_equal(*a.target, *b.target) && structural_equal(*a.rhs, *b.rhs);
}

bool structural_equal(const Rule& a, const Rule& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* u = std::get_if<Rule::Update>(&a.node)) {
    return spec_equal(u->u, std::get<Rule::Update>(b.node).u);
  }
  if (const auto* p = std::get_if<Rule::Par>(&a.node)) {
    const auto& q = std::get<Rule::Par>(b.node);
    if (p->updates.size() != q.updates.size()) return false;
    for (size_t i = 0; i < p->updates.size(); ++i) {
      if (!spec_equal(p->updates[i], q.updates[i])) return false;
    }
    return true;
  }
  if (const auto* d = std::get_if<Rule::Dynamic>(&a.node)) {
    return spec_equal(d->d, std::get<Rule::Dynamic>(b.node).d);
  }
  if (const auto* f = std::get_if<Rule::Flow>(&a.node)) {
    const auto& g = std::get<Rule::Flow>(b.node);
    if (f->dynamics.size() != g.dynamics.size()) return false;
    for (size_t i = 0; i < f->dynamics.size(); ++i) {
      if (!spec_equal(f->dynamics[i], g.dynamics[i])) return false;
    }
    return true;
  }
  if (const auto* c = std::get_if<Rule::If>(&a.node)) {
    const auto& d2 = std::get<Rule::If>(b.node);
    return structural_equal(*c->guard, *d2.guard) &&
           structural_equal(*c->then_rule, *d2.then_rule) &&
           structural_equal(*c->else_rule, *d2.else_rule);
  }
  return true;  // Skip
}

bool structural_equal(const Program& a, const Program& b) {
  return *a.vocabulary == *b.vocabulary && structural_equal(*a.body, *b.body);
}

namespace {

struct TermCollector {
  std::vector<TermPtr> out;

  void add(const TermPtr& t) {
    visit_subterms(t, [this](const TermPtr& s) {
      for (const auto& have : out) {
        if (structural_equal(*have, *s)) return;
      }
      out.push_back(s);
    });
  }

  void walk(const Rule& r) {
    if (const auto* u = std::get_if<Rule::Update>(&r.node)) {
      add(u->u.target);
      add(u->u.rhs);
    } else if (const auto* p = std::get_if<Rule::Par>(&r.node)) {
      for (const auto& s : p->updates) {
        add(s.target);
        add(s.rhs);
      }
    } else if (const auto* d = std::get_if<Rule::Dynamic>(&r.node)) {
      add(d->d.target);
      add(d->d.rhs);
    } else if (const auto* f = std::get_if<Rule::Flow>(&r.node)) {
      for (const auto& s : f->dynamics) {
        add(s.target);
        add(s.rhs);
      }
    } else if (const auto* c = std::get_if<Rule::If>(&r.node)) {
      add(c->guard);
      walk(*c->then_rule);
      walk(*c->else_rule);
    }
  }
};

}  // namespace

std::vector<TermPtr> ground_subterms(const Program& p) {
  TermCollector c;
  c.walk(*p.body);
  c.add(mk_bool(true));
  return std::move(c.out);
}

static void collect_atoms(const TermPtr& t, std::vector<TermPtr>& out) {
  visit_subterms(t, [&out](const TermPtr& s) {
    if (!s->is_comparison_atom()) return;
    for (const auto& have : out) {
      if (structural_equal(*have, *s)) return;
    }
    out.push_back(s);
  });
}

static void walk_guards(const Rule& r, std::vector<TermPtr>& out) {
  if (const auto* c = std::get_if<Rule::If>(&r.node)) {
    collect_atoms(c->guard, out);
    walk_guards(*c->then_rule, out);
    walk_guards(*c->else_rule, out);
  }
}

std::vector<TermPtr> guard_atoms(const Program& p) {
  std::vector<TermPtr> out;
  walk_guards(*p.body, out);
  return out;
}

}  // namespace hasm
