#include "laycheck/checker.hpp"

namespace laycheck {

namespace {

void require_valid(const LabeledLayout& layout, const char* who) {
  ValidationReport report = validate(layout);
  if (!report.valid)
    throw LayoutError(std::string(who) + ": layout does not validate");
}

// Maps a label of the duplicated layout back to the source layout: inside a
// duplicated repetition body of original size m, components m..2m-1 are the
// second copy of 0..m-1.
Label back_map(const Label& label, const LabeledLayout& original) {
  Label src;
  Label scope;
  for (uint32_t c : label.path) {
    ptrdiff_t m = original.scope_size(scope);
    uint32_t mapped = c;
    if (m > 0 && c >= static_cast<uint32_t>(m)) mapped = c - static_cast<uint32_t>(m);
    src.path.push_back(mapped);
    scope = src;
  }
  return src;
}

Verdict run(const LabeledLayout& checked, const LabeledLayout& original,
            bool require_replen) {
  KnowledgeBase kb = ground_axioms(checked);
  InferenceResult inferred = infer(std::move(kb));

  Verdict verdict;
  verdict.checked = checked;
  for (const LabeledItem& it : checked.items()) {
    if (it.type == ItemType::Var && !inferred.contains(Fact::len(it.label)))
      verdict.missing.push_back({it.label, MissingKind::VarfieldLen,
                                 back_map(it.label, original)});
    if (require_replen && it.type == ItemType::Repetition &&
        !inferred.contains(Fact::replen(it.label)))
      verdict.missing.push_back({it.label, MissingKind::RepetitionRepLen,
                                 back_map(it.label, original)});
  }
  verdict.status = verdict.missing.empty() ? Status::Deserializable
                                           : Status::NonDeserializable;
  verdict.facts_derived = inferred.graph.derived.size();
  verdict.rules_fired = inferred.graph.firings.size();
  verdict.closure = std::move(inferred.closure);
  verdict.graph = std::move(inferred.graph);
  return verdict;
}

}  // namespace

Verdict check_flat(const LabeledLayout& layout) {
  require_valid(layout, "check_flat");
  if (layout.has_repetitions())
    throw LayoutError("check_flat: layout contains repetitions, use check");
  return run(layout, layout, /*require_replen=*/false);
}

Verdict check(const LabeledLayout& layout) {
  require_valid(layout, "check");
  LabeledLayout duplicated = duplicate_repetitions(layout);
  return run(duplicated, layout, /*require_replen=*/true);
}

Verdict check_flat_unsound(const LabeledLayout& layout) {
  require_valid(layout, "check_flat_unsound");
  return run(layout, layout, /*require_replen=*/false);
}

BoundingReport necessary_condition(const LabeledLayout& layout) {
  BoundingReport report;
  for (const LabeledItem& it : layout.items()) {
    if (it.type != ItemType::Var && it.type != ItemType::Repetition) continue;
    BoundingEntry entry;
    entry.target = it.label;
    entry.kind = it.type == ItemType::Var ? MissingKind::VarfieldLen
                                          : MissingKind::RepetitionRepLen;
    for (const LabeledItem& p : layout.items()) {
      if (p.type != ItemType::Pointer) continue;
      for (const Label& covered : pointer_range(p.offset, p.span))
        if (covered == it.label) {
          entry.bounding_pointers.push_back(p.label);
          break;
        }
    }
    if (entry.bounding_pointers.empty()) report.satisfied = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace laycheck
