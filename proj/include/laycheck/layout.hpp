#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "laycheck/label.hpp"

namespace laycheck {

// Raised when an operation is handed a layout that violates its contract
// (invalid layout, repetition where a flat layout is required, ...).
class LayoutError : public std::runtime_error {
 public:
  explicit LayoutError(const std::string& what) : std::runtime_error(what) {}
};

class UnwindCapExceeded : public LayoutError {
 public:
  explicit UnwindCapExceeded(const std::string& what) : LayoutError(what) {}
};

enum class ItemType { Fixed, Var, Const, Pointer, Repetition };

// One layout item. `offset`/`span` are meaningful for pointers, `body` for
// repetitions. Pointer offsets are absolute label paths relative to the root
// of the tree the item sits in.
struct Item {
  ItemType type = ItemType::Fixed;
  Label offset;
  uint64_t span = 0;
  std::vector<Item> body;

  static Item fixed() { return {ItemType::Fixed, {}, 0, {}}; }
  static Item var() { return {ItemType::Var, {}, 0, {}}; }
  static Item constant() { return {ItemType::Const, {}, 0, {}}; }
  static Item pointer(Label offset, uint64_t span) {
    return {ItemType::Pointer, std::move(offset), span, {}};
  }
  static Item repetition(std::vector<Item> body) {
    return {ItemType::Repetition, {}, 0, std::move(body)};
  }

  bool operator==(const Item&) const = default;
};

struct LayoutTree {
  std::vector<Item> items;

  bool operator==(const LayoutTree&) const = default;
};

// A labeled item in document order. `body_size` is the direct child count
// for repetitions.
struct LabeledItem {
  Label label;
  ItemType type = ItemType::Fixed;
  Label offset;     // pointers
  uint64_t span = 0;  // pointers
  size_t body_size = 0;  // repetitions
};

// A scope is the top level (empty path) or the inside of a repetition
// (the repetition's label); `size` is its direct child count.
struct ScopeFrame {
  Label scope;
  size_t size = 0;
};

// The image of the labeling function on a layout tree: items in document
// order carrying full-path labels, plus the scope map.
class LabeledLayout {
 public:
  LabeledLayout() = default;
  LabeledLayout(LayoutTree tree, std::vector<LabeledItem> items,
                std::vector<ScopeFrame> scopes)
      : tree_(std::move(tree)),
        items_(std::move(items)),
        scopes_(std::move(scopes)) {}

  const LayoutTree& tree() const { return tree_; }
  const std::vector<LabeledItem>& items() const { return items_; }
  const std::vector<ScopeFrame>& scopes() const { return scopes_; }

  // Direct child count of a scope, or -1 if no such scope exists.
  ptrdiff_t scope_size(const Label& scope) const {
    for (const auto& s : scopes_)
      if (s.scope == scope) return static_cast<ptrdiff_t>(s.size);
    return -1;
  }

  const LabeledItem* find(const Label& label) const {
    for (const auto& it : items_)
      if (it.label == label) return &it;
    return nullptr;
  }

  bool has_repetitions() const {
    for (const auto& it : items_)
      if (it.type == ItemType::Repetition) return true;
    return false;
  }

 private:
  LayoutTree tree_;
  std::vector<LabeledItem> items_;
  std::vector<ScopeFrame> scopes_;
};

enum class ConstraintId {
  BoundsL,      // flat bound o < |l|, s <= |l| - o
  Nesting1,     // offset must live in the pointer's scope or name its parent
  RepSpan2,     // span bound inside a repetition scope
  TopSpan3,     // span bound at top level of a nested layout
};

std::string to_string(ConstraintId id);

struct Violation {
  Label label;
  ConstraintId constraint;
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
  // Non-fatal notes (ancestor-path offsets are accepted but flagged).
  std::vector<std::string> warnings;
};

// Assigns every item its position-path label and collects the scope map.
// Total: never fails, accepts empty trees and empty repetition bodies.
LabeledLayout label_layout(const LayoutTree& tree);

// Checks pointer bounds and the nesting discipline. Violations are reported,
// never thrown. A span-0 pointer may carry a one-past-end offset.
ValidationReport validate(const LabeledLayout& layout);

// The labels bounded by a pointer: siblings of the offset, half-open span.
std::vector<Label> pointer_range(const Label& offset, uint64_t span);
std::vector<Label> pointer_range(const Item& pointer);

// Reverses the top-level item order; repetitions move wholesale. A top-level
// pointer with offset head a and span b gets offset head |l|-(a+b); offsets
// nested inside a moved repetition have their head follow the repetition.
// Throws LayoutError if a nested offset does not point inside its own
// top-level frame.
LabeledLayout reverse(const LabeledLayout& layout);

// Increases the head of every offset in the fragment by n. The fragment is
// labeled relative to position 0 of its own frame.
std::vector<Item> shift(std::vector<Item> fragment, uint32_t n);

// Replaces every repetition body r with r . shift(r, |r|), innermost first,
// then relabels. Offsets naming an enclosing scope are copied verbatim.
LabeledLayout duplicate_repetitions(const LabeledLayout& layout);

// All flat layouts obtained by replacing each repetition with 0..max_copies
// copies of its body, flattening labels and rebasing pointer offsets and
// spans. Throws UnwindCapExceeded when more than `cap` layouts would result.
std::vector<LabeledLayout> unwind(const LabeledLayout& layout,
                                  uint32_t max_copies, size_t cap = 1000);

}  // namespace laycheck
