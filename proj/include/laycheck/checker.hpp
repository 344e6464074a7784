#pragma once

#include "laycheck/axioms.hpp"
#include "laycheck/horn.hpp"
#include "laycheck/layout.hpp"

namespace laycheck {

enum class Status { Deserializable, NonDeserializable };

inline std::string to_string(Status s) {
  return s == Status::Deserializable ? "deserializable" : "non-deserializable";
}

enum class MissingKind { VarfieldLen, RepetitionRepLen };

struct Missing {
  Label label;        // in the checked (possibly duplicated) layout
  MissingKind kind;
  Label source_label;  // back-mapped to the input layout
};

struct Verdict {
  Status status = Status::Deserializable;
  std::vector<Missing> missing;
  LabeledLayout checked;  // the layout the knowledge base was built from
  std::vector<Fact> closure;
  InferenceGraph graph;
  size_t facts_derived = 0;
  size_t rules_fired = 0;
};

// Theorem 1/2 diagnostic: per varfield/repetition, the pointers whose
// range contains it. A violated condition implies NonDeserializable; the
// converse never holds.
struct BoundingEntry {
  Label target;
  MissingKind kind;
  std::vector<Label> bounding_pointers;
};

struct BoundingReport {
  std::vector<BoundingEntry> entries;
  bool satisfied = true;
};

// Algorithm 1: repetition-free layouts only (throws LayoutError otherwise).
Verdict check_flat(const LabeledLayout& layout);

// Algorithm 2: duplicates repetition bodies, then checks len of every
// varfield and replen of every repetition.
Verdict check(const LabeledLayout& layout);

// Algorithm 1 on the lifted axioms without duplication. Unsound for
// repetitions; kept to reproduce that demonstration.
Verdict check_flat_unsound(const LabeledLayout& layout);

BoundingReport necessary_condition(const LabeledLayout& layout);

}  // namespace laycheck
