#include "laycheck/horn.hpp"

#include <algorithm>
#include <unordered_map>

namespace laycheck {

std::string to_string(Pred p) {
  switch (p) {
    case Pred::Beg: return "beg";
    case Pred::Len: return "len";
    case Pred::Val: return "val";
    case Pred::RepLen: return "replen";
    case Pred::Span: return "span";
    case Pred::Rep: return "rep";
  }
  return "?";
}

std::string to_string(const Fact& f) {
  switch (f.pred) {
    case Pred::Span:
      return "span(" + to_string(f.offset) + "," + std::to_string(f.count) +
             "," + to_string(f.at) + ")";
    case Pred::Rep:
      return "rep(" + to_string(f.at) + "," + std::to_string(f.count) + ")";
    default:
      return to_string(f.pred) + "(" + to_string(f.at) + ")";
  }
}

void FactIndex::reset(size_t expected) {
  size_t slots = 16;
  while (slots < expected * 2) slots <<= 1;
  slots_.assign(slots, Slot{});
  hashes_.clear();
  hashes_.reserve(expected);
  mask_ = slots - 1;
  used_ = 0;
}

uint64_t FactIndex::hash(const Fact& f) {
  uint64_t h = static_cast<uint64_t>(f.pred) + 0x9e3779b97f4a7c15ull;
  auto mix = [&](uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
  };
  uint32_t key = 0;
  for (uint32_t c : f.at.path) { mix(c + 1); key += c; }
  mix(0xabcdull);
  for (uint32_t c : f.offset.path) { mix(c + 1); key += c; }
  mix(f.count);
  return (h & ~0xffffffffull) | key;
}

uint32_t FactIndex::intern(const Fact& f, uint64_t h,
                           std::vector<Fact>& facts) {
  if ((used_ + 1) * 2 > mask_ + 1) rehash();
  uint32_t fp = static_cast<uint32_t>(h >> 32);
  size_t slot = base_slot(h);
  while (slots_[slot].id != 0) {
    if (slots_[slot].fingerprint == fp && facts[slots_[slot].id - 1] == f)
      return slots_[slot].id - 1;
    slot = (slot + 1) & mask_;
  }
  uint32_t id = static_cast<uint32_t>(facts.size());
  facts.push_back(f);
  hashes_.push_back(h);
  slots_[slot] = {fp, id + 1};
  ++used_;
  return id;
}

int64_t FactIndex::find(const Fact& f, const std::vector<Fact>& facts) const {
  if (slots_.empty()) return -1;
  uint64_t h = hash(f);
  uint32_t fp = static_cast<uint32_t>(h >> 32);
  size_t slot = base_slot(h);
  while (slots_[slot].id != 0) {
    if (slots_[slot].fingerprint == fp && facts[slots_[slot].id - 1] == f)
      return slots_[slot].id - 1;
    slot = (slot + 1) & mask_;
  }
  return -1;
}

void FactIndex::rehash() {
  size_t slots = slots_.empty() ? 16 : slots_.size() * 2;
  slots_.assign(slots, Slot{});
  mask_ = slots - 1;
  // Probe positions derive from the full hash, which the slots do not keep;
  // reinsert every id from the per-id hash record instead.
  for (uint32_t id = 0; id < hashes_.size(); ++id) {
    uint64_t h = hashes_[id];
    size_t slot = base_slot(h);
    while (slots_[slot].id != 0) slot = (slot + 1) & mask_;
    slots_[slot] = {static_cast<uint32_t>(h >> 32), id + 1};
  }
}

InferenceResult infer(KnowledgeBase kb) {
  size_t capacity = kb.universe.size() + kb.facts.size() + 16;

  InferenceResult result;
  result.index.reset(capacity);
  std::vector<Fact>& fact_of = result.graph.facts;
  fact_of.reserve(capacity);

  // Direct-mapped front cache: neighbouring rules mention the same facts
  // over and over, and serving those repeats from a cache that fits in L1
  // keeps interning off the big probe table.
  struct CacheEntry {
    Fact fact;
    uint32_t id = 0;
    bool used = false;
  };
  constexpr size_t kCacheSlots = 256;
  std::vector<CacheEntry> cache(kCacheSlots);
  auto intern = [&](const Fact& f) -> uint32_t {
    uint64_t h = FactIndex::hash(f);
    CacheEntry& e = cache[h & (kCacheSlots - 1)];
    if (e.used && e.fact == f) return e.id;
    uint32_t id = result.index.intern(f, h, fact_of);
    e.fact = f;
    e.id = id;
    e.used = true;
    return id;
  };

  size_t nrules = kb.rules.size();
  std::vector<uint32_t> remaining(nrules, 0);

  // Heads per rule, flattened: heads[head_start[r] .. head_start[r+1]).
  std::vector<uint32_t> head_start(nrules + 1, 0);
  std::vector<uint32_t> heads;
  // Deduplicated premise ids per rule, flattened the same way.
  std::vector<uint32_t> premise_start(nrules + 1, 0);
  std::vector<uint32_t> premises;

  for (size_t r = 0; r < nrules; ++r) {
    const GroundRule& rule = kb.rules[r];
    size_t before = premises.size();
    for (const Fact& p : rule.premises) {
      uint32_t id = intern(p);
      bool seen = false;
      for (size_t i = before; i < premises.size(); ++i)
        if (premises[i] == id) { seen = true; break; }
      if (!seen) premises.push_back(id);
    }
    premise_start[r + 1] = static_cast<uint32_t>(premises.size());
    remaining[r] = static_cast<uint32_t>(premises.size() - before);
    for (const Fact& h : rule.heads) heads.push_back(intern(h));
    head_start[r + 1] = static_cast<uint32_t>(heads.size());
  }

  // Give every initial fact an id before sizing the watch lists.
  for (const InitialFact& f : kb.facts) intern(f.fact);

  // Watch lists: fact id -> rules that hold it as a premise (CSR layout).
  std::vector<uint32_t> watch_start(fact_of.size() + 2, 0);
  for (uint32_t p : premises) ++watch_start[p + 1];
  for (size_t i = 1; i < watch_start.size(); ++i)
    watch_start[i] += watch_start[i - 1];
  std::vector<uint32_t> watchers(premises.size());
  {
    std::vector<uint32_t> cursor(watch_start.begin(), watch_start.end() - 1);
    for (size_t r = 0; r < nrules; ++r)
      for (uint32_t i = premise_start[r]; i < premise_start[r + 1]; ++i)
        watchers[cursor[premises[i]]++] = static_cast<uint32_t>(r);
  }

  std::vector<char>& truth = result.truth;
  truth.assign(fact_of.size(), 0);
  result.closure.reserve(fact_of.size());
  result.graph.derived.reserve(fact_of.size());
  result.graph.firings.reserve(fact_of.size());
  std::vector<uint32_t> queue;
  queue.reserve(fact_of.size());

  auto assert_initial = [&](const InitialFact& f) {
    uint32_t id = intern(f.fact);
    if (truth.size() <= id) truth.resize(id + 1, 0);
    if (truth[id]) return;
    truth[id] = 1;
    result.closure.push_back(f.fact);
    result.graph.axiomatic.push_back(f);
    queue.push_back(id);
  };
  for (const InitialFact& f : kb.facts) assert_initial(f);
  truth.resize(fact_of.size(), 0);

  auto fire = [&](uint32_t rule_idx) {
    uint32_t first = static_cast<uint32_t>(result.graph.derived.size());
    for (uint32_t i = head_start[rule_idx]; i < head_start[rule_idx + 1];
         ++i) {
      uint32_t h = heads[i];
      if (truth[h]) continue;
      truth[h] = 1;
      result.closure.push_back(fact_of[h]);
      result.graph.derived.push_back({h, rule_idx});
      queue.push_back(h);
    }
    uint32_t last = static_cast<uint32_t>(result.graph.derived.size());
    if (last != first)
      result.graph.firings.push_back({rule_idx, first, last});
  };

  for (size_t r = 0; r < nrules; ++r)
    if (remaining[r] == 0) fire(static_cast<uint32_t>(r));

  for (size_t qi = 0; qi < queue.size(); ++qi) {
    uint32_t f = queue[qi];
    for (uint32_t i = watch_start[f]; i < watch_start[f + 1]; ++i) {
      uint32_t r = watchers[i];
      if (--remaining[r] == 0) fire(r);
    }
  }

  result.graph.rules =
      std::make_shared<const std::vector<GroundRule>>(std::move(kb.rules));
  return result;
}

std::vector<FiringStep> topological_order(const InferenceGraph& graph) {
  return graph.firings;
}

}  // namespace laycheck
