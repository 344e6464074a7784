#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laycheck/checker.hpp"

namespace laycheck {

struct Expectation {
  std::optional<Status> check;               // verdict of the full check
  std::optional<Status> check_flat_unsound;  // when it differs
  std::optional<bool> necessary_condition;
};

struct CorpusEntry {
  std::string name;
  std::string file;
  std::string dsl;
  std::string paper_ref;
  Expectation expectation;
};

// Loads the manifest.json + .lay corpus from a directory.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

}  // namespace laycheck
