#pragma once

#include <random>
#include <vector>

#include "laycheck/horn.hpp"
#include "laycheck/layout.hpp"

namespace gen {

using laycheck::Fact;
using laycheck::Item;
using laycheck::LayoutTree;

// Random flat layout with valid-by-construction pointers.
inline LayoutTree random_flat(std::mt19937& rng, size_t min_items = 1,
                              size_t max_items = 10) {
  std::uniform_int_distribution<size_t> size_dist(min_items, max_items);
  size_t n = size_dist(rng);
  std::uniform_int_distribution<int> kind(0, 99);
  LayoutTree tree;
  for (size_t i = 0; i < n; ++i) {
    int k = kind(rng);
    if (k < 47) {
      tree.items.push_back(Item::fixed());
    } else if (k < 75) {
      tree.items.push_back(Item::var());
    } else {
      std::uniform_int_distribution<uint32_t> off(0, uint32_t(n - 1));
      uint32_t o = off(rng);
      std::uniform_int_distribution<uint64_t> span(0, n - o);
      tree.items.push_back(Item::pointer(laycheck::Label{{o}}, span(rng)));
    }
  }
  return tree;
}

// Random layout mixing 40% f / 25% v / 25% pointer / 10% repetition,
// repetition depth capped at 2. Pointers are same-scope and in bounds.
inline std::vector<Item> random_items(std::mt19937& rng,
                                      const std::vector<uint32_t>& scope,
                                      size_t min_items, size_t max_items,
                                      int depth) {
  std::uniform_int_distribution<size_t> size_dist(min_items, max_items);
  size_t n = size_dist(rng);
  std::uniform_int_distribution<int> kind(0, 99);
  std::vector<Item> items;
  for (size_t i = 0; i < n; ++i) {
    int k = kind(rng);
    if (k < 40) {
      items.push_back(Item::fixed());
    } else if (k < 65) {
      items.push_back(Item::var());
    } else if (k < 90 || depth >= 2) {
      std::uniform_int_distribution<uint32_t> off(0, uint32_t(n - 1));
      uint32_t o = off(rng);
      std::uniform_int_distribution<uint64_t> span(0, n - o);
      laycheck::Label offset{scope};
      offset.path.push_back(o);
      items.push_back(Item::pointer(offset, span(rng)));
    } else {
      std::vector<uint32_t> child_scope = scope;
      child_scope.push_back(uint32_t(i));
      items.push_back(Item::repetition(
          random_items(rng, child_scope, 1, 4, depth + 1)));
    }
  }
  return items;
}

inline LayoutTree random_nested(std::mt19937& rng, size_t min_items = 1,
                                size_t max_items = 8) {
  return LayoutTree{random_items(rng, {}, min_items, max_items, 0)};
}

// Random layout guaranteed to contain at least one repetition.
inline LayoutTree random_with_repetition(std::mt19937& rng,
                                         size_t max_items = 6) {
  for (;;) {
    LayoutTree t = random_nested(rng, 2, max_items);
    for (const Item& it : t.items)
      if (it.type == laycheck::ItemType::Repetition) return t;
  }
}

// Random repetition-free fragment of size 1..8 for the metamorphic suite.
inline LayoutTree random_fragment(std::mt19937& rng) {
  return random_flat(rng, 1, 8);
}

// Random ground knowledge base over <= max_atoms propositional atoms,
// encoded as beg(i) facts so it fits the Fact representation.
inline laycheck::KnowledgeBase random_kb(std::mt19937& rng,
                                         uint32_t max_atoms = 40,
                                         size_t max_rules = 120) {
  std::uniform_int_distribution<uint32_t> natoms_dist(1, max_atoms);
  uint32_t natoms = natoms_dist(rng);
  auto atom = [&](uint32_t i) { return Fact::beg(laycheck::Label{{i}}); };
  std::uniform_int_distribution<uint32_t> pick(0, natoms - 1);

  laycheck::KnowledgeBase kb;
  for (uint32_t i = 0; i < natoms; ++i) kb.universe.push_back(atom(i));

  std::uniform_int_distribution<size_t> nfacts_dist(0, natoms / 4 + 1);
  size_t nfacts = nfacts_dist(rng);
  for (size_t i = 0; i < nfacts; ++i)
    kb.facts.push_back({atom(pick(rng)), "Given@" + std::to_string(i)});

  std::uniform_int_distribution<size_t> nrules_dist(0, max_rules);
  size_t nrules = nrules_dist(rng);
  std::uniform_int_distribution<size_t> npremises(0, 3);
  std::uniform_int_distribution<size_t> nheads(1, 2);
  for (size_t i = 0; i < nrules; ++i) {
    laycheck::GroundRule rule;
    rule.id = "R" + std::to_string(i);
    size_t np = npremises(rng);
    for (size_t j = 0; j < np; ++j) rule.premises.push_back(atom(pick(rng)));
    size_t nh = nheads(rng);
    for (size_t j = 0; j < nh; ++j) rule.heads.push_back(atom(pick(rng)));
    kb.rules.push_back(std::move(rule));
  }
  return kb;
}

// Random layout tree for DSL round-trip tests: unconstrained offsets/spans.
inline std::vector<Item> random_tree_items(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<size_t> size_dist(0, 5);
  size_t n = size_dist(rng);
  std::uniform_int_distribution<int> kind(0, depth >= 3 ? 3 : 4);
  std::uniform_int_distribution<uint32_t> nat(0, 30);
  std::uniform_int_distribution<size_t> path_len(1, 3);
  std::vector<Item> items;
  for (size_t i = 0; i < n; ++i) {
    switch (kind(rng)) {
      case 0: items.push_back(Item::fixed()); break;
      case 1: items.push_back(Item::var()); break;
      case 2: items.push_back(Item::constant()); break;
      case 3: {
        laycheck::Label offset;
        size_t len = path_len(rng);
        for (size_t j = 0; j < len; ++j) offset.path.push_back(nat(rng));
        items.push_back(Item::pointer(offset, nat(rng)));
        break;
      }
      default:
        items.push_back(Item::repetition(random_tree_items(rng, depth + 1)));
    }
  }
  return items;
}

inline LayoutTree random_tree(std::mt19937& rng) {
  return LayoutTree{random_tree_items(rng, 0)};
}

}  // namespace gen
