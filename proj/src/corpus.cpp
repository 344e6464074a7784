#include "laycheck/corpus.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace laycheck {

using nlohmann::json;

namespace {

Status status_from(const std::string& s) {
  if (s == "deserializable") return Status::Deserializable;
  if (s == "non-deserializable") return Status::NonDeserializable;
  throw std::runtime_error("corpus: unknown verdict '" + s + "'");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("corpus: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  json manifest = json::parse(slurp(dir + "/manifest.json"));
  std::vector<CorpusEntry> entries;
  for (const json& e : manifest) {
    CorpusEntry entry;
    entry.name = e.at("name").get<std::string>();
    entry.file = e.at("file").get<std::string>();
    entry.paper_ref = e.at("paperRef").get<std::string>();
    const json& x = e.at("expectation");
    if (x.contains("check"))
      entry.expectation.check = status_from(x["check"].get<std::string>());
    if (x.contains("checkFlatUnsound"))
      entry.expectation.check_flat_unsound =
          status_from(x["checkFlatUnsound"].get<std::string>());
    if (x.contains("necessaryCondition"))
      entry.expectation.necessary_condition = x["necessaryCondition"].get<bool>();
    entry.dsl = slurp(dir + "/" + entry.file);
    while (!entry.dsl.empty() && std::isspace(uint8_t(entry.dsl.back())))
      entry.dsl.pop_back();
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace laycheck
