#include "laycheck/layout.hpp"

#include <algorithm>
#include <numeric>

namespace laycheck {

std::string to_string(ConstraintId id) {
  switch (id) {
    case ConstraintId::BoundsL: return "bounds-L";
    case ConstraintId::Nesting1: return "nesting-(1)";
    case ConstraintId::RepSpan2: return "rep-span-(2)";
    case ConstraintId::TopSpan3: return "top-span-(3)";
  }
  return "?";
}

namespace {

void label_walk(const std::vector<Item>& items, const Label& scope,
                std::vector<LabeledItem>& out, std::vector<ScopeFrame>& scopes) {
  scopes.push_back({scope, items.size()});
  for (size_t i = 0; i < items.size(); ++i) {
    const Item& it = items[i];
    Label lab = scope.child(static_cast<uint32_t>(i));
    out.push_back({lab, it.type, it.offset, it.span, it.body.size()});
    if (it.type == ItemType::Repetition) label_walk(it.body, lab, out, scopes);
  }
}

}  // namespace

LabeledLayout label_layout(const LayoutTree& tree) {
  std::vector<LabeledItem> items;
  std::vector<ScopeFrame> scopes;
  label_walk(tree.items, Label{}, items, scopes);
  return LabeledLayout(tree, std::move(items), std::move(scopes));
}

ValidationReport validate(const LabeledLayout& layout) {
  ValidationReport report;
  bool nested_model = layout.has_repetitions();
  for (const LabeledItem& it : layout.items()) {
    if (it.type != ItemType::Pointer) continue;
    const Label& at = it.label;
    Label scope = at.parent();
    const Label& o = it.offset;

    if (o.empty()) {
      report.violations.push_back(
          {at, ConstraintId::Nesting1, "pointer offset is empty"});
      continue;
    }

    Label offset_scope;
    if (o.parent() == scope) {
      offset_scope = scope;  // same level
    } else if (!scope.empty() && o == scope) {
      // Ancestor form: the offset names the enclosing repetition itself.
      offset_scope = scope.parent();
      report.warnings.push_back("pointer " + to_string(at) +
                                " uses an ancestor-path offset " + to_string(o));
    } else {
      report.violations.push_back(
          {at, ConstraintId::Nesting1,
           "offset " + to_string(o) + " is not in the pointer's scope"});
      continue;
    }

    ptrdiff_t size = layout.scope_size(offset_scope);
    if (size < 0) {
      report.violations.push_back(
          {at, ConstraintId::Nesting1,
           "offset " + to_string(o) + " names a nonexistent scope"});
      continue;
    }
    uint64_t l = static_cast<uint64_t>(size);
    uint64_t pos = o.last();

    // A span-0 pointer bounds nothing; a one-past-end offset is tolerated
    // for it (unwinding a repetition to zero copies produces such pointers).
    bool pos_ok = it.span == 0 ? pos <= l : pos < l;
    bool span_ok = pos_ok && it.span <= l - pos;
    if (pos_ok && span_ok) continue;

    ConstraintId id;
    if (!offset_scope.empty())
      id = ConstraintId::RepSpan2;
    else
      id = nested_model ? ConstraintId::TopSpan3 : ConstraintId::BoundsL;
    report.violations.push_back(
        {at, id,
         "pointer " + to_string(at) + " with offset " + to_string(o) +
             " span " + std::to_string(it.span) +
             " exceeds the bounds of its offset's scope (size " +
             std::to_string(l) + ")"});
  }
  report.valid = report.violations.empty();
  return report;
}

std::vector<Label> pointer_range(const Label& offset, uint64_t span) {
  std::vector<Label> out;
  out.reserve(static_cast<size_t>(span));
  for (uint64_t k = 0; k < span; ++k)
    out.push_back(offset.sibling(static_cast<uint32_t>(offset.last() + k)));
  return out;
}

std::vector<Label> pointer_range(const Item& pointer) {
  return pointer_range(pointer.offset, pointer.span);
}

namespace {

// Rewrites the head of every offset in a subtree that is about to move from
// top-level position `from` to `to`. All offsets inside a valid repetition
// start with the repetition's own top-level index.
void rehead_offsets(std::vector<Item>& items, uint32_t from, uint32_t to) {
  for (Item& it : items) {
    if (it.type == ItemType::Pointer) {
      if (it.offset.empty() || it.offset.head() != from)
        throw LayoutError(
            "reverse: a nested pointer offset targets a position outside "
            "its own repetition frame");
      it.offset.path[0] = to;
    }
    if (it.type == ItemType::Repetition) rehead_offsets(it.body, from, to);
  }
}

}  // namespace

LabeledLayout reverse(const LabeledLayout& layout) {
  const auto& src = layout.tree().items;
  size_t n = src.size();
  std::vector<Item> out(n);
  for (size_t i = 0; i < n; ++i) {
    Item it = src[i];
    uint32_t j = static_cast<uint32_t>(n - 1 - i);
    if (it.type == ItemType::Pointer) {
      uint64_t a = it.offset.head();
      uint64_t b = it.span;
      // |l| - (a + b); a degenerate span-0 pointer at offset 0 keeps its
      // offset so the result stays in bounds.
      it.offset.path[0] =
          a + b == 0 ? 0 : static_cast<uint32_t>(n - (a + b));
    } else if (it.type == ItemType::Repetition) {
      rehead_offsets(it.body, static_cast<uint32_t>(i), j);
    }
    out[j] = std::move(it);
  }
  return label_layout(LayoutTree{std::move(out)});
}

std::vector<Item> shift(std::vector<Item> fragment, uint32_t n) {
  for (Item& it : fragment) {
    if (it.type == ItemType::Pointer && !it.offset.empty())
      it.offset.path[0] += n;
    if (it.type == ItemType::Repetition) it.body = shift(std::move(it.body), n);
  }
  return fragment;
}

namespace {

// Adds `delta` to the offset component at `depth` for every pointer in the
// subtree whose offset reaches that deep. Shorter offsets name an enclosing
// scope and are left verbatim.
void bump_offsets(std::vector<Item>& items, size_t depth, uint32_t delta) {
  for (Item& it : items) {
    if (it.type == ItemType::Pointer && it.offset.size() > depth)
      it.offset.path[depth] += delta;
    if (it.type == ItemType::Repetition) bump_offsets(it.body, depth, delta);
  }
}

// `depth` is the index of the label component that positions items in this
// frame (0 at top level).
void duplicate_rec(std::vector<Item>& items, size_t depth) {
  for (Item& it : items) {
    if (it.type != ItemType::Repetition) continue;
    duplicate_rec(it.body, depth + 1);
    uint32_t m = static_cast<uint32_t>(it.body.size());
    std::vector<Item> second = it.body;
    bump_offsets(second, depth + 1, m);
    it.body.insert(it.body.end(), std::make_move_iterator(second.begin()),
                   std::make_move_iterator(second.end()));
  }
}

}  // namespace

LabeledLayout duplicate_repetitions(const LabeledLayout& layout) {
  LayoutTree tree = layout.tree();
  duplicate_rec(tree.items, 0);
  return label_layout(tree);
}

namespace {

// Flattened item with its pointer reference either resolved in this frame's
// flat coordinates (Local) or still expressed in the parent frame's item
// units (Up, from an ancestor-form offset).
struct FlatItem {
  ItemType type = ItemType::Fixed;
  enum class Ref { None, Local, Up } ref = Ref::None;
  uint64_t pos = 0;
  uint64_t span = 0;
};
using FlatFrame = std::vector<FlatItem>;

struct Expander {
  uint32_t max_copies;
  size_t cap;

  std::vector<FlatFrame> expand(const std::vector<Item>& frame, size_t depth) {
    // Per item: the list of alternative flat blocks it can become.
    std::vector<std::vector<FlatFrame>> alternatives;
    // Frame-level pointers are resolved per combination below; blocks for
    // them carry the pending item-unit reference.
    for (const Item& it : frame) {
      std::vector<FlatFrame> alts;
      switch (it.type) {
        case ItemType::Fixed:
        case ItemType::Var:
        case ItemType::Const:
          alts.push_back({FlatItem{it.type}});
          break;
        case ItemType::Pointer: {
          FlatItem fi{ItemType::Pointer};
          if (it.offset.size() == depth + 1) {
            fi.ref = FlatItem::Ref::Local;  // item units, resolved later
          } else if (it.offset.size() == depth && depth > 0) {
            fi.ref = FlatItem::Ref::Up;
          } else {
            throw LayoutError("unwind: offset " + to_string(it.offset) +
                              " does not match its scope depth");
          }
          fi.pos = it.offset.last();
          fi.span = it.span;
          alts.push_back({fi});
          break;
        }
        case ItemType::Repetition: {
          std::vector<FlatFrame> bodies = expand(it.body, depth + 1);
          alts.push_back({});  // zero copies, once
          for (uint32_t c = 1; c <= max_copies; ++c) {
            for (const FlatFrame& body : bodies) {
              FlatFrame block;
              for (uint32_t i = 0; i < c; ++i) {
                for (FlatItem fi : body) {
                  // Copy-internal references follow their own copy.
                  if (fi.ref == FlatItem::Ref::Local)
                    fi.pos += static_cast<uint64_t>(i) * body.size();
                  block.push_back(fi);
                }
              }
              block_sanity(block);
              if (alts.size() > cap)
                throw UnwindCapExceeded("unwind: combination cap exceeded");
              alts.push_back(std::move(block));
            }
          }
          break;
        }
      }
      alternatives.push_back(std::move(alts));
    }

    size_t total = 1;
    for (const auto& alts : alternatives) {
      total *= alts.size();
      if (total > cap)
        throw UnwindCapExceeded("unwind: more than " + std::to_string(cap) +
                                " flat layouts would be generated");
    }

    std::vector<FlatFrame> results;
    std::vector<size_t> odo(alternatives.size(), 0);
    for (size_t r = 0; r < total; ++r) {
      results.push_back(assemble(frame, alternatives, odo));
      // odometer increment
      for (size_t k = 0; k < odo.size(); ++k) {
        if (++odo[k] < alternatives[k].size()) break;
        odo[k] = 0;
      }
    }
    return results;
  }

 private:
  static void block_sanity(const FlatFrame&) {}

  // Builds the flat frame for one choice of per-repetition blocks, resolving
  // this frame's item-unit references against the chosen block sizes.
  FlatFrame assemble(const std::vector<Item>& frame,
                     const std::vector<std::vector<FlatFrame>>& alternatives,
                     const std::vector<size_t>& odo) {
    size_t n = frame.size();
    std::vector<uint64_t> start(n + 1, 0);
    for (size_t j = 0; j < n; ++j)
      start[j + 1] = start[j] + alternatives[j][odo[j]].size();

    auto resolve_pos = [&](uint64_t pos) {
      return start[std::min<uint64_t>(pos, n)];
    };
    auto resolve_span = [&](uint64_t pos, uint64_t span) {
      uint64_t hi = std::min<uint64_t>(pos + span, n);
      uint64_t lo = std::min<uint64_t>(pos, n);
      return start[hi] - start[lo];
    };

    FlatFrame out;
    out.reserve(start[n]);
    for (size_t j = 0; j < n; ++j) {
      const FlatFrame& block = alternatives[j][odo[j]];
      uint64_t base = start[j];
      bool is_rep = frame[j].type == ItemType::Repetition;
      for (FlatItem fi : block) {
        if (fi.ref == FlatItem::Ref::Local) {
          if (is_rep) {
            // Already in block-local flat coordinates.
            fi.pos += base;
          } else {
            // This frame's own pointer: item units of this frame.
            uint64_t p = fi.pos;
            fi.span = resolve_span(p, fi.span);
            fi.pos = resolve_pos(p);
          }
        } else if (fi.ref == FlatItem::Ref::Up && is_rep) {
          // Ancestor-form offset naming the repetition: resolve against
          // this frame.
          uint64_t p = fi.pos;
          fi.span = resolve_span(p, fi.span);
          fi.pos = resolve_pos(p);
          fi.ref = FlatItem::Ref::Local;
        }
        out.push_back(fi);
      }
    }
    return out;
  }
};

}  // namespace

std::vector<LabeledLayout> unwind(const LabeledLayout& layout,
                                  uint32_t max_copies, size_t cap) {
  Expander ex{max_copies, cap};
  std::vector<FlatFrame> frames = ex.expand(layout.tree().items, 0);
  std::vector<LabeledLayout> out;
  out.reserve(frames.size());
  for (const FlatFrame& frame : frames) {
    LayoutTree tree;
    for (const FlatItem& fi : frame) {
      if (fi.type == ItemType::Pointer) {
        if (fi.ref != FlatItem::Ref::Local)
          throw LayoutError("unwind: unresolved ancestor offset at top level");
        tree.items.push_back(
            Item::pointer(Label{{static_cast<uint32_t>(fi.pos)}}, fi.span));
      } else {
        tree.items.push_back(Item{fi.type, {}, 0, {}});
      }
    }
    out.push_back(label_layout(tree));
  }
  return out;
}

}  // namespace laycheck
