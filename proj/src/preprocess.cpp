#include "laycheck/preprocess.hpp"

namespace laycheck {

namespace {

bool is_shrink_target(const Item& it) {
  return it.type == ItemType::Var || it.type == ItemType::Repetition;
}

bool range_has_target(const std::vector<Item>& scope_items, uint64_t pos,
                      uint64_t span) {
  for (uint64_t j = pos; j < pos + span && j < scope_items.size(); ++j)
    if (is_shrink_target(scope_items[j])) return true;
  return false;
}

}  // namespace

LabeledLayout shrink_pointers(const LabeledLayout& layout) {
  LayoutTree tree = layout.tree();
  auto& items = tree.items;
  for (Item& it : items) {
    if (it.type != ItemType::Pointer || it.offset.size() != 1) continue;
    uint64_t o = it.offset.head();
    ptrdiff_t lo = -1, hi = -1;
    for (uint64_t j = o; j < o + it.span && j < items.size(); ++j) {
      if (is_shrink_target(items[j])) {
        if (lo < 0) lo = static_cast<ptrdiff_t>(j);
        hi = static_cast<ptrdiff_t>(j);
      }
    }
    if (lo < 0) continue;  // nothing to bound; prune_pointers handles it
    it.offset.path[0] = static_cast<uint32_t>(lo);
    it.span = static_cast<uint64_t>(hi - lo + 1);
  }
  return label_layout(tree);
}

namespace {

// Replaces useless pointers within one frame. `depth` is the index of the
// label component that positions items in this frame.
void prune_frame(std::vector<Item>& items, size_t depth) {
  for (Item& it : items) {
    if (it.type == ItemType::Repetition) {
      prune_frame(it.body, depth + 1);
      continue;
    }
    if (it.type != ItemType::Pointer) continue;
    bool useful;
    if (it.offset.size() == depth + 1) {
      useful = range_has_target(items, it.offset.last(), it.span);
    } else {
      // Ancestor-form offset: the range starts at the enclosing repetition,
      // a variable-size item, so the pointer always bounds something.
      useful = it.span > 0;
    }
    if (!useful) it = Item::fixed();
  }
}

}  // namespace

LabeledLayout prune_pointers(const LabeledLayout& layout) {
  LayoutTree tree = layout.tree();
  prune_frame(tree.items, 0);
  return label_layout(tree);
}

bool is_forward_only(const LabeledLayout& layout) {
  for (const LabeledItem& it : layout.items()) {
    if (it.type != ItemType::Pointer) continue;
    Label offset_scope = it.offset.parent();
    if (it.label.size() <= offset_scope.size()) continue;  // invalid shape
    uint32_t own_position = it.label.path[offset_scope.size()];
    if (own_position > it.offset.last()) return false;
  }
  return true;
}

}  // namespace laycheck
