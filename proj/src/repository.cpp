#include "roc/repository.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "roc/dsl.hpp"

namespace roc::cbr {

namespace {

Repository from_workspace(Workspace&& ws) {
  Repository repo;
  repo.cases = std::move(ws.cases);
  std::sort(repo.cases.begin(), repo.cases.end(),
            [](const Case& a, const Case& b) { return a.id < b.id; });
  repo.configured_weights = ws.weights;
  return repo;
}

void write_file(const Repository& repo, const std::string& path) {
  Workspace ws;
  ws.cases = repo.cases;
  ws.weights = repo.configured_weights;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write repository file '" + path + "'");
  out << dsl::print(ws);
  if (!out.flush()) throw Error("cannot write repository file '" + path + "'");
}

}  // namespace

Repository load_repository(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read repository file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();

  auto result = dsl::parse(buffer.str());
  if (!result.ok()) {
    std::string msg = "repository file '" + path + "' is invalid";
    for (const auto& d : result.diagnostics)
      if (d.severity == dsl::Severity::Error) msg += "\n  " + dsl::format(d, path);
    throw Error(msg);
  }
  return from_workspace(std::move(result.workspace));
}

Repository load_repository_or_empty(const std::string& path) {
  if (!std::filesystem::exists(path)) return {};
  return load_repository(path);
}

void retain(Repository& repo, const Case& learned, const std::string& path) {
  if (repo.find(learned.id))
    throw Error("retain: repository already holds a case '" + learned.id + "'");
  if (learned.asis_fragments.empty() || learned.tobe_fragments.empty())
    throw Error("retain: case '" + learned.id + "' is unsolved (fragment lists must be nonempty)");
  if (learned.component_map.empty())
    throw Error("retain: case '" + learned.id + "' has no component map");

  Repository updated = repo;
  updated.cases.push_back(learned);
  std::sort(updated.cases.begin(), updated.cases.end(),
            [](const Case& a, const Case& b) { return a.id < b.id; });
  write_file(updated, path);
  repo = std::move(updated);
}

}  // namespace roc::cbr
