#pragma once

#include "laycheck/layout.hpp"

namespace laycheck {

// Shrinks every top-level pointer range to the minimal subinterval that
// starts and ends at a variable-length field or repetition. Pointers whose
// range covers none are left alone (see prune_pointers). Single linear pass.
LabeledLayout shrink_pointers(const LabeledLayout& layout);

// Replaces pointers that span no variable-length field or repetition with
// fixed fields; they still occupy stream bits.
LabeledLayout prune_pointers(const LabeledLayout& layout);

// True iff no pointer points backwards: every pointer's own position within
// its offset's scope is <= the offset head.
bool is_forward_only(const LabeledLayout& layout);

}  // namespace laycheck
