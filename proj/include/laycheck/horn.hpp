#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "laycheck/label.hpp"

namespace laycheck {

enum class Pred { Beg, Len, Val, RepLen, Span, Rep };

std::string to_string(Pred p);

// A ground atom. Beg/Len/Val/RepLen carry one label (`at`). Span carries the
// pointer's offset label, span count and own label. Rep carries the
// repetition's label and its direct child count.
struct Fact {
  Pred pred = Pred::Beg;
  Label at;
  Label offset;      // Span only
  uint64_t count = 0;  // Span: span; Rep: body size

  static Fact beg(Label l) { return {Pred::Beg, std::move(l), {}, 0}; }
  static Fact len(Label l) { return {Pred::Len, std::move(l), {}, 0}; }
  static Fact val(Label l) { return {Pred::Val, std::move(l), {}, 0}; }
  static Fact replen(Label l) { return {Pred::RepLen, std::move(l), {}, 0}; }
  static Fact span(Label offset, uint64_t s, Label at) {
    return {Pred::Span, std::move(at), std::move(offset), s};
  }
  static Fact rep(Label at, uint64_t body_size) {
    return {Pred::Rep, std::move(at), {}, body_size};
  }

  bool operator==(const Fact&) const = default;
  auto operator<=>(const Fact&) const = default;
};

std::string to_string(const Fact& f);

struct FactHash {
  size_t operator()(const Fact& f) const {
    LabelHash lh;
    size_t h = static_cast<size_t>(f.pred);
    h = h * 0x9e3779b97f4a7c15ull ^ lh(f.at);
    h = h * 0x9e3779b97f4a7c15ull ^ lh(f.offset);
    h = h * 0x9e3779b97f4a7c15ull ^ f.count;
    return h;
  }
};

// A ground definite Horn rule: premises => heads, heads non-empty.
struct GroundRule {
  std::string id;
  std::vector<Fact> premises;
  std::vector<Fact> heads;
};

// An initial fact together with the name of the axiom that contributed it.
struct InitialFact {
  Fact fact;
  std::string id;
};

struct KnowledgeBase {
  std::vector<InitialFact> facts;
  std::vector<GroundRule> rules;
  // Declared fact universe; may be left empty for ad-hoc knowledge bases,
  // in which case the universe is whatever the facts and rules mention.
  std::vector<Fact> universe;
};

struct Derivation {
  std::string rule_id;
  std::vector<Fact> premises;
};

// A derived fact as a pair of dense indices: the fact's id in the graph's
// fact array and the rule (in the rule snapshot) whose first firing
// produced it.
struct DerivedFact {
  uint32_t fact = 0;
  uint32_t rule = 0;
};

// One rule firing: the rule index and the half-open range of entries it
// contributed to the graph's derived array.
struct FiringStep {
  uint32_t rule = 0;
  uint32_t first = 0;
  uint32_t last = 0;
};

// Records, for each derived fact, the axiom instance and premise facts of its
// first derivation. Entries are stored in derivation order, so premises
// always precede conclusions.
struct InferenceGraph {
  std::vector<InitialFact> axiomatic;
  std::shared_ptr<const std::vector<GroundRule>> rules;
  std::vector<Fact> facts;  // every fact mentioned, in dense-id order
  std::vector<DerivedFact> derived;
  std::vector<FiringStep> firings;

  const Fact& fact_of(uint32_t id) const { return facts[id]; }
  const GroundRule& rule_of(uint32_t idx) const { return (*rules)[idx]; }

  std::optional<Derivation> derivation_of(const Fact& f) const {
    for (const DerivedFact& d : derived)
      if (facts[d.fact] == f)
        return Derivation{rule_of(d.rule).id, rule_of(d.rule).premises};
    return std::nullopt;
  }
};

// Open-addressed index mapping facts to dense ids. The facts themselves
// live in an external vector so the probe array stays flat and compact.
// Slots are placed by a locality key (the sum of the fact's label
// components) rather than by hash: rules mention facts of neighbouring
// layout positions, so key-ordered placement keeps the probed cache lines
// hot while a hash fingerprint still discriminates within a bucket.
class FactIndex {
 public:
  // High word: hash fingerprint; low word: locality key.
  static uint64_t hash(const Fact& f);

  void reset(size_t expected);
  uint32_t intern(const Fact& f, uint64_t h, std::vector<Fact>& facts);
  uint32_t intern(const Fact& f, std::vector<Fact>& facts) {
    return intern(f, hash(f), facts);
  }
  // Returns the fact's dense id, or -1 if it was never interned.
  int64_t find(const Fact& f, const std::vector<Fact>& facts) const;

 private:
  struct Slot {
    uint32_t fingerprint = 0;  // high word of the fact's hash
    uint32_t id = 0;           // dense id + 1, 0 = empty
  };

  size_t base_slot(uint64_t h) const {
    return (static_cast<uint32_t>(h) * size_t{8}) & mask_;
  }
  void rehash();

  std::vector<Slot> slots_;
  std::vector<uint64_t> hashes_;  // per dense id, for rehashing only
  size_t mask_ = 0;
  size_t used_ = 0;
};

struct InferenceResult {
  std::vector<Fact> closure;  // initial facts first, then derivation order
  InferenceGraph graph;
  std::vector<char> truth;  // parallel to graph.facts: 1 iff in the closure
  FactIndex index;

  bool contains(const Fact& f) const {
    int64_t id = index.find(f, graph.facts);
    return id >= 0 && truth[static_cast<size_t>(id)];
  }
};

// Least fixpoint of modus ponens, O(total rule size): each rule carries an
// unsatisfied-premise counter and fires when it reaches zero.
InferenceResult infer(KnowledgeBase kb);

// A derivation order where premises precede conclusions; deterministic given
// the knowledge base's rule order.
std::vector<FiringStep> topological_order(const InferenceGraph& graph);

}  // namespace laycheck
