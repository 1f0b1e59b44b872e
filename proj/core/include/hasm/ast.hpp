#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "hasm/term.hpp"

namespace hasm {

struct Rule;
using RulePtr = std::shared_ptr<const Rule>;

/// Shared shape of `target := rhs` and `Dynamic(target, rhs)`: a dynamic
/// application on the left, a ground term on the right.
struct UpdateSpec {
  TermPtr target;  // DynApp
  TermPtr rhs;
};

struct Rule {
  struct Update {
    UpdateSpec u;
  };
  struct Par {
    std::vector<UpdateSpec> updates;  // nonempty
  };
  struct Dynamic {
    UpdateSpec d;  // target and rhs real-sorted
  };
  struct Flow {
    std::vector<UpdateSpec> dynamics;  // nonempty
  };
  struct If {
    TermPtr guard;  // Bool-sorted
    RulePtr then_rule;
    RulePtr else_rule;
  };
  struct Skip {};

  std::variant<Update, Par, Dynamic, Flow, If, Skip> node;
};

RulePtr mk_update(UpdateSpec u);
RulePtr mk_par(std::vector<UpdateSpec> updates);
RulePtr mk_dynamic(UpdateSpec d);
RulePtr mk_flow(std::vector<UpdateSpec> dynamics);
RulePtr mk_if(TermPtr guard, RulePtr then_rule, RulePtr else_rule);
RulePtr mk_skip();

struct Program {
  std::shared_ptr<const Vocabulary> vocabulary;
  RulePtr body;
};

bool structural_equal(const Rule& a, const Rule& b);
bool structural_equal(const Program& a, const Program& b);

/// All ground terms occurring in the program (guards, targets as terms,
/// right-hand sides), closed under subterms, ordered by first occurrence
/// in a left-to-right outside-in traversal; the literal `true` is always
/// a member.
std::vector<TermPtr> ground_subterms(const Program& p);

/// Structurally distinct =, <, <= applications over reals occurring inside
/// if-guards, in traversal order. These are the event surfaces watched
/// during flow.
std::vector<TermPtr> guard_atoms(const Program& p);

}  // namespace hasm
