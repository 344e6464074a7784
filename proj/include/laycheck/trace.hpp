#pragma once

#include <string>
#include <vector>

#include "laycheck/checker.hpp"
#include "laycheck/horn.hpp"
#include "laycheck/layout.hpp"

namespace laycheck {

// One snapshot of the parsing state after an axiom application. Fields whose
// val is known are consumed; fields with beg known at both ends but val
// unknown are buffered.
struct TraceRow {
  size_t step = 0;
  std::string rule_id;
  std::vector<Fact> derived;
  std::vector<Label> beg_known;
  std::vector<Label> val_known;
};

std::vector<TraceRow> render_trace(const InferenceGraph& graph,
                                   const LabeledLayout& layout);

// Text table of a trace; with `art`, per-row bars over the top-level fields:
// '=' consumed, '#' buffered, '.' unknown.
std::string format_trace(const std::vector<TraceRow>& rows,
                         const LabeledLayout& layout, bool art);

enum class GraphFormat { Dot, Json };

// DOT: facts as nodes, derivations as edges labeled by rule id.
// JSON: {"facts":[{id, predicate, args, derivedBy, premises[]}]}.
std::string export_graph(const InferenceGraph& graph, GraphFormat format);

// Stable key sets documented in the README.
std::string verdict_to_json(const Verdict& verdict);
std::string kb_to_json(const KnowledgeBase& kb);

}  // namespace laycheck
