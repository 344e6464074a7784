#pragma once

#include "laycheck/horn.hpp"
#include "laycheck/layout.hpp"

namespace laycheck {

// Compiles a validated layout into its ground knowledge base. The fact
// universe holds beg/len/val at every label of every scope including the
// one-past-end boundary label, replen at repetition labels, one span atom
// per pointer and one rep atom per repetition. Arithmetic on labels is
// evaluated here, so the result is purely propositional.
// Throws LayoutError when the layout does not validate.
KnowledgeBase ground_axioms(const LabeledLayout& layout);

// Exact size of the fact universe above; used by the linearity benchmark.
size_t fact_universe_size(const LabeledLayout& layout);

}  // namespace laycheck
