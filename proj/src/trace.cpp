#include "laycheck/trace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace laycheck {

using nlohmann::json;

std::vector<TraceRow> render_trace(const InferenceGraph& graph,
                                   const LabeledLayout& layout) {
  (void)layout;
  std::set<Label> beg, val;
  for (const InitialFact& f : graph.axiomatic) {
    if (f.fact.pred == Pred::Beg) beg.insert(f.fact.at);
    if (f.fact.pred == Pred::Val) val.insert(f.fact.at);
  }
  std::vector<TraceRow> rows;
  size_t step = 0;
  for (const FiringStep& firing : topological_order(graph)) {
    std::vector<Fact> derived;
    for (uint32_t i = firing.first; i < firing.last; ++i)
      derived.push_back(graph.fact_of(graph.derived[i].fact));
    for (const Fact& f : derived) {
      if (f.pred == Pred::Beg) beg.insert(f.at);
      if (f.pred == Pred::Val) val.insert(f.at);
    }
    TraceRow row;
    row.step = step++;
    row.rule_id = graph.rule_of(firing.rule).id;
    row.derived = std::move(derived);
    row.beg_known.assign(beg.begin(), beg.end());
    row.val_known.assign(val.begin(), val.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string art_bar(const TraceRow& row, const LabeledLayout& layout) {
  std::string bar;
  auto has = [](const std::vector<Label>& v, const Label& l) {
    return std::binary_search(v.begin(), v.end(), l);
  };
  size_t n = layout.tree().items.size();
  for (uint32_t i = 0; i < n; ++i) {
    Label at{{i}};
    Label next{{i + 1}};
    if (has(row.val_known, at))
      bar += '=';
    else if (has(row.beg_known, at) && has(row.beg_known, next))
      bar += '#';
    else
      bar += '.';
  }
  return bar;
}

}  // namespace

std::string format_trace(const std::vector<TraceRow>& rows,
                         const LabeledLayout& layout, bool art) {
  std::ostringstream out;
  for (const TraceRow& row : rows) {
    out << row.step << "\t" << row.rule_id << "\t";
    for (size_t i = 0; i < row.derived.size(); ++i) {
      if (i) out << " ";
      out << to_string(row.derived[i]);
    }
    if (art) out << "\t" << art_bar(row, layout);
    out << "\n";
  }
  return out.str();
}

namespace {

json fact_json(const Fact& f) {
  json args = json::array();
  switch (f.pred) {
    case Pred::Span:
      args.push_back(to_string(f.offset));
      args.push_back(f.count);
      args.push_back(to_string(f.at));
      break;
    case Pred::Rep:
      args.push_back(to_string(f.at));
      args.push_back(f.count);
      break;
    default:
      args.push_back(to_string(f.at));
      break;
  }
  return json{{"id", to_string(f)}, {"predicate", to_string(f.pred)},
              {"args", args}};
}

}  // namespace

std::string export_graph(const InferenceGraph& graph, GraphFormat format) {
  if (format == GraphFormat::Json) {
    json facts = json::array();
    for (const InitialFact& f : graph.axiomatic) {
      json j = fact_json(f.fact);
      j["derivedBy"] = f.id;
      j["premises"] = json::array();
      facts.push_back(std::move(j));
    }
    for (const DerivedFact& d : graph.derived) {
      const GroundRule& rule = graph.rule_of(d.rule);
      json j = fact_json(graph.fact_of(d.fact));
      j["derivedBy"] = rule.id;
      json premises = json::array();
      for (const Fact& p : rule.premises) premises.push_back(to_string(p));
      j["premises"] = std::move(premises);
      facts.push_back(std::move(j));
    }
    return json{{"facts", std::move(facts)}}.dump(2);
  }

  std::ostringstream out;
  out << "digraph inference {\n";
  auto node = [](const Fact& f) { return "\"" + to_string(f) + "\""; };
  for (const InitialFact& f : graph.axiomatic)
    out << "  " << node(f.fact) << " [shape=box];\n";
  for (const DerivedFact& d : graph.derived) {
    const GroundRule& rule = graph.rule_of(d.rule);
    for (const Fact& p : rule.premises)
      out << "  " << node(p) << " -> " << node(graph.fact_of(d.fact))
          << " [label=\"" << rule.id << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string verdict_to_json(const Verdict& verdict) {
  json missing = json::array();
  for (const Missing& m : verdict.missing) {
    missing.push_back(
        {{"label", to_string(m.label)},
         {"kind", m.kind == MissingKind::VarfieldLen ? "varfield-len"
                                                     : "repetition-replen"},
         {"sourceLabel", to_string(m.source_label)}});
  }
  return json{{"status", to_string(verdict.status)},
              {"missing", std::move(missing)},
              {"factsDerived", verdict.facts_derived},
              {"rulesFired", verdict.rules_fired}}
      .dump(2);
}

std::string kb_to_json(const KnowledgeBase& kb) {
  json facts = json::array();
  for (const InitialFact& f : kb.facts)
    facts.push_back({{"id", to_string(f.fact)}, {"axiom", f.id}});
  json rules = json::array();
  for (const GroundRule& r : kb.rules) {
    json premises = json::array();
    for (const Fact& p : r.premises) premises.push_back(to_string(p));
    json heads = json::array();
    for (const Fact& h : r.heads) heads.push_back(to_string(h));
    rules.push_back({{"id", r.id},
                     {"premises", std::move(premises)},
                     {"heads", std::move(heads)}});
  }
  return json{{"facts", std::move(facts)}, {"rules", std::move(rules)}}.dump(2);
}

}  // namespace laycheck
