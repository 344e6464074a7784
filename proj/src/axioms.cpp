#include "laycheck/axioms.hpp"

namespace laycheck {

namespace {

std::string rule_at(const std::string& name, const Label& l) {
  return name + "@" + to_string(l);
}

std::string jump_id(const std::string& name, const Label& o, uint64_t s,
                    const Label& i) {
  return name + "@(" + to_string(o) + "," + std::to_string(s) + "," +
         to_string(i) + ")";
}

}  // namespace

KnowledgeBase ground_axioms(const LabeledLayout& layout) {
  ValidationReport report = validate(layout);
  if (!report.valid)
    throw LayoutError("ground_axioms: layout does not validate (" +
                      std::to_string(report.violations.size()) +
                      " violation(s), first at " +
                      to_string(report.violations.front().label) + ")");

  KnowledgeBase kb;
  size_t items = layout.items().size();
  kb.universe.reserve(3 * (items + layout.scopes().size()) + 2 * items);
  kb.facts.reserve(2 * items + 1);
  kb.rules.reserve(3 * (items + layout.scopes().size()) + 3 * items);

  // Universe: unary predicates over every label plus the one-past-end
  // boundary of each scope.
  for (const ScopeFrame& s : layout.scopes()) {
    for (uint32_t a = 0; a <= s.size; ++a) {
      Label l = s.scope.child(a);
      kb.universe.push_back(Fact::beg(l));
      kb.universe.push_back(Fact::len(l));
      kb.universe.push_back(Fact::val(l));
    }
  }
  for (const LabeledItem& it : layout.items()) {
    if (it.type == ItemType::Repetition) {
      kb.universe.push_back(Fact::replen(it.label));
      kb.universe.push_back(Fact::rep(it.label, it.body_size));
    } else if (it.type == ItemType::Pointer) {
      kb.universe.push_back(Fact::span(it.offset, it.span, it.label));
    }
  }

  // Initial facts.
  kb.facts.push_back({Fact::beg(Label{{0}}), "Begin"});
  for (const LabeledItem& it : layout.items()) {
    switch (it.type) {
      case ItemType::Fixed:
      case ItemType::Pointer:
      case ItemType::Const:
        kb.facts.push_back({Fact::len(it.label), rule_at("FieldAx", it.label)});
        break;
      default:
        break;
    }
    if (it.type == ItemType::Const)
      kb.facts.push_back({Fact::beg(it.label), rule_at("ConstAx", it.label)});
    if (it.type == ItemType::Pointer)
      kb.facts.push_back({Fact::span(it.offset, it.span, it.label),
                          jump_id("PtrAx", it.offset, it.span, it.label)});
    if (it.type == ItemType::Repetition)
      kb.facts.push_back(
          {Fact::rep(it.label, it.body_size), rule_at("RepAx", it.label)});
  }

  // Forward / Backward / Join per position of every scope.
  for (const ScopeFrame& s : layout.scopes()) {
    for (uint32_t a = 0; a < s.size; ++a) {
      Label u = s.scope.child(a);
      Label nx = s.scope.child(a + 1);
      kb.rules.push_back({rule_at("Forward", u),
                          {Fact::beg(u), Fact::len(u)},
                          {Fact::val(u), Fact::beg(nx)}});
      kb.rules.push_back({rule_at("Backward", u),
                          {Fact::beg(nx), Fact::len(u)},
                          {Fact::beg(u), Fact::val(u)}});
      kb.rules.push_back({rule_at("Join", u),
                          {Fact::beg(u), Fact::beg(nx)},
                          {Fact::len(u)}});
    }
  }

  // Jump rules per pointer.
  for (const LabeledItem& it : layout.items()) {
    if (it.type != ItemType::Pointer) continue;
    Fact span = Fact::span(it.offset, it.span, it.label);
    Label o = it.offset;
    Label oe = o.sibling(static_cast<uint32_t>(o.last() + it.span));
    kb.rules.push_back({jump_id("JumpRight", o, it.span, it.label),
                        {span, Fact::val(it.label), Fact::beg(o)},
                        {Fact::beg(oe)}});
    kb.rules.push_back({jump_id("JumpLeft", o, it.span, it.label),
                        {span, Fact::val(it.label), Fact::beg(oe)},
                        {Fact::beg(o)}});
  }

  // Repetition rules.
  for (const LabeledItem& it : layout.items()) {
    if (it.type != ItemType::Repetition) continue;
    Label u = it.label;
    Label nx = u.sibling(u.last() + 1);
    Fact rep = Fact::rep(u, it.body_size);
    kb.rules.push_back({rule_at("RepLenAx", u),
                        {rep, Fact::beg(u), Fact::beg(nx)},
                        {Fact::replen(u)}});
    kb.rules.push_back(
        {rule_at("RepHead", u), {rep, Fact::beg(u)}, {Fact::beg(u.child(0))}});
    kb.rules.push_back(
        {rule_at("RepTail", u),
         {rep, Fact::beg(nx)},
         {Fact::beg(u.child(static_cast<uint32_t>(it.body_size)))}});
  }

  return kb;
}

size_t fact_universe_size(const LabeledLayout& layout) {
  size_t n = 0;
  for (const ScopeFrame& s : layout.scopes()) n += 3 * (s.size + 1);
  for (const LabeledItem& it : layout.items()) {
    if (it.type == ItemType::Repetition) n += 2;  // replen + rep atom
    if (it.type == ItemType::Pointer) n += 1;     // span atom
  }
  return n;
}

}  // namespace laycheck
