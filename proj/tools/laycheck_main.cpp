#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "laycheck/checker.hpp"
#include "laycheck/dsl.hpp"
#include "laycheck/oracle.hpp"
#include "laycheck/preprocess.hpp"
#include "laycheck/trace.hpp"

namespace {

constexpr int kExitDeserializable = 0;
constexpr int kExitNonDeserializable = 1;
constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;
constexpr int kExitOracleMismatch = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(kExitValidation);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

laycheck::LayoutTree parse_file(const std::string& path) {
  try {
    return laycheck::parse_dsl(slurp(path));
  } catch (const laycheck::ParseError& e) {
    std::cerr << path << ":" << e.span.begin << ": parse error: " << e.message
              << " (expected " << e.expected << ")\n";
    std::exit(kExitParse);
  }
}

laycheck::LabeledLayout label_and_validate(const std::string& path) {
  laycheck::LabeledLayout layout =
      laycheck::label_layout(parse_file(path));
  laycheck::ValidationReport report = laycheck::validate(layout);
  for (const std::string& w : report.warnings)
    std::cerr << "warning: " << w << "\n";
  if (!report.valid) {
    for (const laycheck::Violation& v : report.violations)
      std::cerr << path << ": invalid layout at " << to_string(v.label) << " ["
                << to_string(v.constraint) << "]: " << v.message << "\n";
    std::exit(kExitValidation);
  }
  return layout;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decides whether a bit-layout is unambiguously deserializable"};
  app.require_subcommand(1);

  std::string file;
  bool flat = false, unsound = false, oracle = false, as_json = false;
  auto* cmd_check = app.add_subcommand("check", "Check deserializability");
  cmd_check->add_option("file", file)->required();
  cmd_check->add_flag("--flat", flat, "Algorithm for repetition-free layouts");
  cmd_check->add_flag("--unsound", unsound,
                      "Skip the duplication transform (unsound on repetitions)");
  cmd_check->add_flag("--oracle", oracle,
                      "Cross-check the closure against naive forward chaining");
  cmd_check->add_flag("--json", as_json, "Emit the verdict as JSON");

  bool art = false;
  auto* cmd_trace = app.add_subcommand("trace", "Render the derivation trace");
  cmd_trace->add_option("file", file)->required();
  cmd_trace->add_flag("--art", art, "Append consumed/buffered bars");

  std::string format = "dot";
  auto* cmd_graph = app.add_subcommand("graph", "Export the inference graph");
  cmd_graph->add_option("file", file)->required();
  cmd_graph->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  bool do_shrink = false, do_prune = false, fwd_only = false;
  auto* cmd_pre = app.add_subcommand("preprocess", "Layout preprocessing passes");
  cmd_pre->add_option("file", file)->required();
  cmd_pre->add_flag("--shrink", do_shrink, "Shrink pointer ranges");
  cmd_pre->add_flag("--prune", do_prune, "Prune useless pointers");
  cmd_pre->add_flag("--forward-only", fwd_only,
                    "Report whether all pointers point forward");

  uint32_t copies = 2;
  auto* cmd_unwind = app.add_subcommand("unwind", "Enumerate flat unwindings");
  cmd_unwind->add_option("file", file)->required();
  cmd_unwind->add_option("-n,--copies", copies, "Max copies per repetition");

  auto* cmd_fmt = app.add_subcommand("fmt", "Canonical layout rendering");
  cmd_fmt->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_check->parsed()) {
      laycheck::LabeledLayout layout = label_and_validate(file);
      if (flat && layout.has_repetitions()) {
        std::cerr << "error: --flat requires a repetition-free layout\n";
        return kExitValidation;
      }
      laycheck::Verdict verdict = flat      ? laycheck::check_flat(layout)
                                  : unsound ? laycheck::check_flat_unsound(layout)
                                            : laycheck::check(layout);
      bool oracle_ok = true;
      if (oracle) {
        laycheck::KnowledgeBase kb = laycheck::ground_axioms(verdict.checked);
        std::set<laycheck::Fact> naive = laycheck::naive_closure(kb);
        laycheck::InferenceResult fast = laycheck::infer(kb);
        oracle_ok = naive == std::set<laycheck::Fact>(fast.closure.begin(),
                                                      fast.closure.end());
        if (!oracle_ok)
          std::cerr << "oracle: closure mismatch between infer and naive "
                       "forward chaining\n";
      }
      if (as_json) {
        std::cout << laycheck::verdict_to_json(verdict) << "\n";
      } else {
        std::cout << to_string(verdict.status) << "\n";
        for (const laycheck::Missing& m : verdict.missing)
          std::cout << "  missing "
                    << (m.kind == laycheck::MissingKind::VarfieldLen
                            ? "len"
                            : "replen")
                    << " at " << to_string(m.label) << " (source "
                    << to_string(m.source_label) << ")\n";
      }
      if (!oracle_ok) return kExitOracleMismatch;
      return verdict.status == laycheck::Status::Deserializable
                 ? kExitDeserializable
                 : kExitNonDeserializable;
    }

    if (cmd_trace->parsed()) {
      laycheck::LabeledLayout layout = label_and_validate(file);
      laycheck::Verdict verdict = laycheck::check(layout);
      auto rows = laycheck::render_trace(verdict.graph, verdict.checked);
      std::cout << laycheck::format_trace(rows, verdict.checked, art);
      return 0;
    }

    if (cmd_graph->parsed()) {
      laycheck::LabeledLayout layout = label_and_validate(file);
      laycheck::Verdict verdict = laycheck::check(layout);
      std::cout << laycheck::export_graph(verdict.graph,
                                          format == "dot"
                                              ? laycheck::GraphFormat::Dot
                                              : laycheck::GraphFormat::Json);
      return 0;
    }

    if (cmd_pre->parsed()) {
      laycheck::LabeledLayout layout = label_and_validate(file);
      if (fwd_only) {
        std::cout << "forward-only: "
                  << (laycheck::is_forward_only(layout) ? "true" : "false")
                  << "\n";
        return 0;
      }
      if (!do_shrink && !do_prune) do_shrink = do_prune = true;
      if (do_shrink) layout = laycheck::shrink_pointers(layout);
      if (do_prune) layout = laycheck::prune_pointers(layout);
      std::cout << laycheck::print_dsl(layout.tree()) << "\n";
      return 0;
    }

    if (cmd_unwind->parsed()) {
      laycheck::LabeledLayout layout = label_and_validate(file);
      for (const laycheck::LabeledLayout& flat_layout :
           laycheck::unwind(layout, copies))
        std::cout << laycheck::print_dsl(flat_layout.tree()) << "\n";
      return 0;
    }

    if (cmd_fmt->parsed()) {
      std::cout << laycheck::print_dsl(parse_file(file)) << "\n";
      return 0;
    }
  } catch (const laycheck::LayoutError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
