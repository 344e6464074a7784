#pragma once

#include <set>

#include "laycheck/checker.hpp"
#include "laycheck/horn.hpp"
#include "laycheck/layout.hpp"

namespace laycheck {

// Direct rendering of forward chaining: iterate every rule against the
// current fact set until a full pass adds nothing. No counters, no worklist.
// The differential oracle for infer().
std::set<Fact> naive_closure(const KnowledgeBase& kb);

struct UnwindingMember {
  LabeledLayout layout;
  Status verdict = Status::Deserializable;
};

struct UnwindingCrossCheck {
  Status checked_verdict = Status::Deserializable;
  std::vector<UnwindingMember> members;
  // Members whose NonDeserializable verdict contradicts a Deserializable
  // check(l): a soundness violation. The converse direction is only
  // informational.
  std::vector<size_t> violations;
  bool sound() const { return violations.empty(); }
};

// Runs check_flat on every member of unwind(layout, max_copies) and compares
// against check(layout).
UnwindingCrossCheck cross_check_unwindings(const LabeledLayout& layout,
                                           uint32_t max_copies,
                                           size_t cap = 1000);

}  // namespace laycheck
