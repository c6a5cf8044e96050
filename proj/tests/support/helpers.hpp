#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "roc/dsl.hpp"

namespace test_support {

inline std::string fixture_path(const std::string& name) {
  return std::string(ROC_FIXTURE_DIR) + "/" + name;
}

inline std::string test_fixture_path(const std::string& name) {
  return std::string(ROC_TEST_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "roc-test-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return path_ + "/" + name; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

inline roc::Workspace parse_fixture(std::initializer_list<std::string> names) {
  std::string all;
  for (const auto& name : names) {
    all += read_file(fixture_path(name));
    if (!all.empty() && all.back() != '\n') all.push_back('\n');
  }
  auto result = roc::dsl::parse(all);
  if (!result.ok()) {
    std::string msg = "fixture parse failed:";
    for (const auto& d : result.diagnostics) msg += "\n  " + roc::dsl::format(d);
    throw std::runtime_error(msg);
  }
  return std::move(result.workspace);
}

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline std::string shell_quote(const std::string& arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'')
      out += "'\\''";
    else
      out.push_back(c);
  }
  out += "'";
  return out;
}

// Runs the CLI binary; stderr is discarded unless merge_stderr is set.
inline CliResult run_cli(const std::vector<std::string>& args, bool merge_stderr = false,
                         const std::string& extra_env = "") {
  std::string cmd;
  if (!extra_env.empty()) cmd += extra_env + " ";
  cmd += shell_quote(ROC_CLI_PATH);
  for (const auto& arg : args) cmd += " " + shell_quote(arg);
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";

  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  CliResult result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace test_support
