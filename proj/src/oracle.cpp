#include "laycheck/oracle.hpp"

#include <algorithm>

namespace laycheck {

std::set<Fact> naive_closure(const KnowledgeBase& kb) {
  std::set<Fact> facts;
  for (const InitialFact& f : kb.facts) facts.insert(f.fact);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const GroundRule& rule : kb.rules) {
      bool applicable = std::all_of(
          rule.premises.begin(), rule.premises.end(),
          [&](const Fact& p) { return facts.count(p) != 0; });
      if (!applicable) continue;
      for (const Fact& h : rule.heads)
        if (facts.insert(h).second) changed = true;
    }
  }
  return facts;
}

UnwindingCrossCheck cross_check_unwindings(const LabeledLayout& layout,
                                           uint32_t max_copies, size_t cap) {
  UnwindingCrossCheck out;
  out.checked_verdict = check(layout).status;
  std::vector<LabeledLayout> flats = unwind(layout, max_copies, cap);
  for (size_t i = 0; i < flats.size(); ++i) {
    Status v = check_flat(flats[i]).status;
    out.members.push_back({flats[i], v});
    if (out.checked_verdict == Status::Deserializable &&
        v == Status::NonDeserializable)
      out.violations.push_back(i);
  }
  return out;
}

}  // namespace laycheck
