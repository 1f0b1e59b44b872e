#pragma once

#include <vector>

#include "hasm/semantics.hpp"

namespace hasm {

/// The equivalence relation E_X on an ordered critical-term set: block ids
/// are normalized by first occurrence, so two relations over the same T
/// are equal iff their block vectors are.
struct EqualityRelation {
  std::vector<TermPtr> terms;
  std::vector<int> block_of;  // terms.size() entries

  friend bool operator==(const EqualityRelation& a, const EqualityRelation& b) {
    return a.block_of == b.block_of;
  }
};

class NonCriticalValue : public Error {
public:
  using Error::Error;
};

/// The bounded-exploration term set of a program (alias of ground_subterms).
std::vector<TermPtr> critical_terms(const Program& p);

EqualityRelation equality_relation(const State& state, const std::vector<TermPtr>& terms);

bool t_similar(const State& a, const State& b, const std::vector<TermPtr>& terms);

/// A Boolean term true in Y iff Y is T-similar to the state the relation
/// came from: the conjunction, over same-sort pairs (t_i, t_j) with i < j,
/// of t_i = t_j or its negation according to the blocks.
TermPtr guard_term(const EqualityRelation& rel);

/// Rebuilds a rule denoting `gen` at `state`, representing every value by
/// the first term of T that evaluates to it. Jump sets become par blocks
/// (empty: skip), flow sets become flow blocks.
RulePtr rule_from_generator(const TaggedGenerator& gen, const std::vector<TermPtr>& terms,
                            const State& state);

/// The characterization construction: one branch per T-similarity class of
/// the samples (duplicates dropped, first kept), jump classes first, the
/// last branch unguarded.
Program synthesize(const std::vector<State>& samples, const Program& p);

}  // namespace hasm
