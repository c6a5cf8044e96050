#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "roc/dsl.hpp"
#include "roc/net_engine.hpp"
#include "roc/repository.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kUsage = 2;

// ---------------------------------------------------------------------------
// workspace loading

struct FileSpan {
  std::string path;
  int first_line;  // 1-based, in the concatenated text
  int line_count;
};

struct Loader {
  roc::Workspace workspace;
  std::vector<FileSpan> spans;
  int status = kOk;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Parses the given files as one workspace. Diagnostics go to stdout with the
// originating file name; the returned status follows the exit-code contract.
Loader load_files(const std::vector<std::string>& paths) {
  Loader loader;
  std::string all;
  int line = 1;
  for (const auto& path : paths) {
    auto text = read_file(path);
    if (!text) {
      std::cerr << "error: cannot read '" << path << "'\n";
      loader.status = kUsage;
      return loader;
    }
    if (!text->empty() && text->back() != '\n') text->push_back('\n');
    int count = static_cast<int>(std::count(text->begin(), text->end(), '\n'));
    loader.spans.push_back({path, line, count});
    line += count;
    all += *text;
  }

  auto result = roc::dsl::parse(all);
  for (const auto& d : result.diagnostics) {
    const FileSpan* span = nullptr;
    for (const auto& s : loader.spans)
      if (d.line >= s.first_line) span = &s;
    roc::dsl::ParseDiagnostic local = d;
    std::string file;
    if (span) {
      local.line = d.line - span->first_line + 1;
      file = span->path;
    }
    std::cout << roc::dsl::format(local, file) << "\n";
  }
  loader.workspace = std::move(result.workspace);
  if (!result.ok()) loader.status = kFindings;
  return loader;
}

roc::AliasMap effective_aliases(const roc::Workspace& ws, const std::string& aliases_file,
                                int& status) {
  std::vector<roc::AliasMap> maps = ws.alias_maps;
  if (!aliases_file.empty()) {
    Loader extra = load_files({aliases_file});
    if (extra.status != kOk) {
      status = extra.status;
      return {};
    }
    maps.insert(maps.end(), extra.workspace.alias_maps.begin(), extra.workspace.alias_maps.end());
  }
  return roc::merge_aliases(maps);
}

// ---------------------------------------------------------------------------
// table rendering

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line.append(widths[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += "\n";
  }
  return out;
}

std::string render_tsv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "\t";
      line += row[i];
    }
    while (!line.empty() && (line.back() == '\t' || line.back() == ' ')) line.pop_back();
    out += line;
    out += "\n";
  }
  return out;
}

std::string render(const std::vector<std::vector<std::string>>& rows, const std::string& format) {
  return format == "tsv" ? render_tsv(rows) : render_table(rows);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// ---------------------------------------------------------------------------
// commands

int cmd_validate(const std::vector<std::string>& files) {
  Loader loader = load_files(files);
  return loader.status;
}

int cmd_fragments(const std::vector<std::string>& files, const std::string& model_id,
                  const std::string& format) {
  Loader loader = load_files(files);
  if (loader.status != kOk) return loader.status;
  const roc::ProcessModel* model = loader.workspace.find_model(model_id);
  if (!model) {
    std::cerr << "error: unknown model '" << model_id << "'\n";
    return kUsage;
  }
  std::vector<std::vector<std::string>> rows{{"id", "source", "target", "strategy", "polarity"}};
  for (const auto& f : roc::extract_fragments(*model))
    rows.push_back({f.id, f.source_raw, f.target_raw, f.strategy.raw_label,
                    roc::to_string(f.strategy.polarity)});
  std::cout << render(rows, format);
  return kOk;
}

bool report_has_findings(const roc::AlignmentReport& report) {
  for (const auto& p : report.pairs)
    if (p.gap != roc::GapClass::NoGap) return true;
  return !report.unmatched_asis.empty() || !report.unmatched_reference.empty() ||
         !report.uncovered_reference.empty();
}

void print_alignment_text(const roc::AlignmentReport& report, bool with_components) {
  std::cout << "pairs:\n";
  if (report.pairs.empty()) std::cout << "  none\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : report.pairs) {
    std::string flags = std::string("[") + roc::to_string(p.gap) + "]";
    if (p.alternative) flags += " (alternative)";
    rows.push_back({"  " + p.asis.id, p.asis.source_raw + " -> " + p.asis.target_raw,
                    p.asis.strategy.raw_label, "=>", p.reference.id, p.reference.strategy.raw_label,
                    flags});
  }
  if (!rows.empty()) std::cout << render_table(rows);

  std::cout << "unmatched as-is:\n";
  if (report.unmatched_asis.empty()) std::cout << "  none\n";
  for (const auto& f : report.unmatched_asis)
    std::cout << "  " << f.id << "  " << f.source_raw << " -> " << f.target_raw << "  "
              << f.strategy.raw_label << "\n";
  std::cout << "unmatched reference:\n";
  if (report.unmatched_reference.empty()) std::cout << "  none\n";
  for (const auto& f : report.unmatched_reference)
    std::cout << "  " << f.id << "  " << f.source_raw << " -> " << f.target_raw << "  "
              << f.strategy.raw_label << "\n";

  if (with_components) {
    std::cout << "component map:\n";
    if (report.component_map.empty()) std::cout << "  none\n";
    std::vector<std::vector<std::string>> map_rows;
    for (const auto& [fid, component] : report.component_map)
      map_rows.push_back({"  " + fid, component});
    if (!map_rows.empty()) std::cout << render_table(map_rows);
    std::cout << "uncovered reference:\n";
    if (report.uncovered_reference.empty()) std::cout << "  none\n";
    for (const auto& fid : report.uncovered_reference) std::cout << "  " << fid << "\n";
  }
  std::cout << "coverage: " << fixed(report.coverage, 2) << "\n";
}

void print_alignment_tsv(const roc::AlignmentReport& report) {
  std::vector<std::vector<std::string>> rows{
      {"id", "source", "target", "asis_strategy", "ref_strategy", "gap", "components"}};
  auto components_of = [&](const std::string& fid) {
    std::string joined;
    for (const auto& [id, component] : report.component_map) {
      if (id != fid) continue;
      if (!joined.empty()) joined += ", ";
      joined += component;
    }
    return joined;
  };
  for (const auto& p : report.pairs)
    rows.push_back({p.asis.id, p.asis.source_raw, p.asis.target_raw, p.asis.strategy.raw_label,
                    p.reference.strategy.raw_label, roc::to_string(p.gap),
                    components_of(p.reference.id)});
  for (const auto& f : report.unmatched_asis)
    rows.push_back({f.id, f.source_raw, f.target_raw, f.strategy.raw_label, "", "Unmatched", ""});
  for (const auto& f : report.unmatched_reference)
    rows.push_back({f.id, f.source_raw, f.target_raw, "", f.strategy.raw_label, "Unmatched",
                    components_of(f.id)});
  std::cout << render_tsv(rows);
}

int cmd_align(const std::vector<std::string>& files, const std::string& asis_id,
              const std::string& reference_id, const std::string& catalog_id,
              const std::string& aliases_file, const std::string& format) {
  Loader loader = load_files(files);
  if (loader.status != kOk) return loader.status;
  const roc::Workspace& ws = loader.workspace;

  const roc::ProcessModel* asis = ws.find_model(asis_id);
  const roc::ProcessModel* reference = ws.find_model(reference_id);
  if (!asis || !reference) {
    std::cerr << "error: unknown model '" << (asis ? reference_id : asis_id) << "'\n";
    return kUsage;
  }
  const roc::ComponentCatalog* catalog = nullptr;
  if (!catalog_id.empty()) {
    catalog = ws.find_catalog(catalog_id);
    if (!catalog) {
      std::cerr << "error: unknown catalog '" << catalog_id << "'\n";
      return kUsage;
    }
  }
  int status = kOk;
  roc::AliasMap aliases = effective_aliases(ws, aliases_file, status);
  if (status != kOk) return status;

  auto asis_fragments = roc::extract_fragments(*asis);
  auto reference_fragments = roc::extract_fragments(*reference);
  roc::AlignmentReport report =
      catalog ? roc::align_with_catalog(asis_fragments, reference_fragments, *catalog, aliases)
              : roc::align(asis_fragments, reference_fragments, aliases);

  if (format == "tsv")
    print_alignment_tsv(report);
  else
    print_alignment_text(report, catalog != nullptr);
  return report_has_findings(report) ? kFindings : kOk;
}

std::optional<roc::net::Marking> parse_marking(const roc::ProcessModel& model,
                                               const std::string& labels) {
  roc::net::Marking marking;
  std::string cur;
  std::vector<std::string> parts;
  for (char c : labels) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  for (const auto& part : parts) {
    std::string norm = roc::normalize_state_label(part);
    if (norm.empty()) continue;
    const roc::Place* place = model.find_place_by_label(norm);
    if (!place) {
      std::cerr << "error: unknown place label '" << part << "'\n";
      return std::nullopt;
    }
    marking.insert(place->id);
  }
  return marking;
}

int cmd_simulate(const std::vector<std::string>& files, const std::string& model_id,
                 const std::string& from_labels, const std::string& to_labels, std::size_t bound) {
  Loader loader = load_files(files);
  if (loader.status != kOk) return loader.status;
  const roc::ProcessModel* model = loader.workspace.find_model(model_id);
  if (!model) {
    std::cerr << "error: unknown model '" << model_id << "'\n";
    return kUsage;
  }
  auto from = parse_marking(*model, from_labels);
  auto to = parse_marking(*model, to_labels);
  if (!from || !to) return kUsage;

  auto result = roc::net::reachable(*model, *from, *to, bound);
  switch (result.status) {
    case roc::net::ReachStatus::Reachable: {
      std::cout << "reachable (" << result.witness.size() << " steps)\n";
      for (const auto& tid : result.witness) {
        const roc::Transition* t = model->find_transition(tid);
        std::cout << "  " << tid << "  " << (t ? t->strategy.raw_label : "") << "\n";
      }
      return kOk;
    }
    case roc::net::ReachStatus::Unreachable:
      std::cout << "unreachable\n";
      return kFindings;
    case roc::net::ReachStatus::Truncated:
      std::cout << "truncated\n";
      return kFindings;
  }
  return kFindings;
}

int cmd_export_dot(const std::vector<std::string>& files, const std::string& model_id,
                   const std::string& goals_id);

// --- case subcommands ------------------------------------------------------

std::string repo_path_or_fail(const std::string& flag_value, int& status) {
  if (!flag_value.empty()) return flag_value;
  const char* env = std::getenv("ROC_REPO");
  if (env && *env) return env;
  std::cerr << "error: no repository given (use --repo or set ROC_REPO)\n";
  status = kUsage;
  return {};
}

const roc::cbr::Case* pick_case(const roc::Workspace& ws, const std::string& case_id, int& status) {
  if (!case_id.empty()) {
    const roc::cbr::Case* c = ws.find_case(case_id);
    if (!c) {
      std::cerr << "error: unknown case '" << case_id << "'\n";
      status = kUsage;
    }
    return c;
  }
  if (ws.cases.size() == 1) return &ws.cases.front();
  std::cerr << "error: the query file declares " << ws.cases.size()
            << " cases; pick one with --case\n";
  status = kUsage;
  return nullptr;
}

int cmd_case_retrieve(const std::string& repo_flag, const std::string& query_file,
                      const std::string& case_id, std::size_t top) {
  int status = kOk;
  std::string path = repo_path_or_fail(repo_flag, status);
  if (status != kOk) return status;
  Loader loader = load_files({query_file});
  if (loader.status != kOk) return loader.status;
  const roc::cbr::Case* query = pick_case(loader.workspace, case_id, status);
  if (!query) return status;

  roc::cbr::Repository repo;
  try {
    repo = roc::cbr::load_repository_or_empty(path);
  } catch (const roc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFindings;
  }
  auto ranked = roc::cbr::retrieve(repo, *query, top);
  std::vector<std::vector<std::string>> rows{
      {"rank", "case", "total", "fragments", "goals", "components"}};
  int rank = 1;
  for (const auto& r : ranked)
    rows.push_back({std::to_string(rank++), r.retrieved->id, fixed(r.score.total, 4),
                    fixed(r.score.fragment_sim, 4), fixed(r.score.goal_sim, 4),
                    fixed(r.score.component_sim, 4)});
  std::cout << render_table(rows);
  return kOk;
}

int cmd_case_retain(const std::string& repo_flag, const std::string& case_file,
                    const std::string& case_id) {
  int status = kOk;
  std::string path = repo_path_or_fail(repo_flag, status);
  if (status != kOk) return status;
  Loader loader = load_files({case_file});
  if (loader.status != kOk) return loader.status;
  const roc::cbr::Case* learned = pick_case(loader.workspace, case_id, status);
  if (!learned) return status;

  try {
    auto repo = roc::cbr::load_repository_or_empty(path);
    roc::cbr::retain(repo, *learned, path);
    std::cout << "retained '" << learned->id << "' (" << repo.cases.size() << " cases)\n";
    return kOk;
  } catch (const roc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFindings;
  }
}

int cmd_case_adapt(const std::string& repo_flag, const std::string& solved_id,
                   const std::string& query_file, const std::string& case_id,
                   const std::string& aliases_file) {
  int status = kOk;
  std::string path = repo_path_or_fail(repo_flag, status);
  if (status != kOk) return status;
  Loader loader = load_files({query_file});
  if (loader.status != kOk) return loader.status;
  const roc::cbr::Case* query = pick_case(loader.workspace, case_id, status);
  if (!query) return status;
  roc::AliasMap aliases = effective_aliases(loader.workspace, aliases_file, status);
  if (status != kOk) return status;

  try {
    auto repo = roc::cbr::load_repository(path);
    const roc::cbr::Case* solved = repo.find(solved_id);
    if (!solved) {
      std::cerr << "error: unknown case '" << solved_id << "' in repository\n";
      return kUsage;
    }
    auto result = roc::cbr::adapt(*solved, *query, aliases);
    std::cout << "transferred:\n";
    if (result.proposed.empty()) std::cout << "  none\n";
    for (const auto& f : result.proposed)
      std::cout << "  " << f.id << "  " << f.source_raw << " -> " << f.target_raw << "  "
                << f.strategy.raw_label << "\n";
    std::cout << "non-transferable:\n";
    if (result.non_transferable.empty()) std::cout << "  none\n";
    for (const auto& f : result.non_transferable)
      std::cout << "  " << f.id << "  " << f.source_raw << " -> " << f.target_raw << "  "
                << f.strategy.raw_label << "\n";
    return result.non_transferable.empty() ? kOk : kFindings;
  } catch (const roc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFindings;
  }
}

int cmd_case_test(const std::string& repo_flag, const std::string& solved_id,
                  const std::string& query_file, const std::string& case_id,
                  const std::string& catalog_file, const std::string& catalog_id,
                  const std::string& aliases_file) {
  int status = kOk;
  std::string path = repo_path_or_fail(repo_flag, status);
  if (status != kOk) return status;

  std::vector<std::string> files{query_file};
  if (!catalog_file.empty()) files.push_back(catalog_file);
  Loader loader = load_files(files);
  if (loader.status != kOk) return loader.status;
  const roc::cbr::Case* query = pick_case(loader.workspace, case_id, status);
  if (!query) return status;
  const roc::ComponentCatalog* catalog = loader.workspace.find_catalog(catalog_id);
  if (!catalog) {
    std::cerr << "error: unknown catalog '" << catalog_id << "'\n";
    return kUsage;
  }
  roc::AliasMap aliases = effective_aliases(loader.workspace, aliases_file, status);
  if (status != kOk) return status;

  try {
    auto repo = roc::cbr::load_repository(path);
    const roc::cbr::Case* solved = repo.find(solved_id);
    if (!solved) {
      std::cerr << "error: unknown case '" << solved_id << "' in repository\n";
      return kUsage;
    }
    auto adapted = roc::cbr::adapt(*solved, *query, aliases);
    auto report = roc::cbr::test_solution(adapted.proposed, *query, *catalog, aliases);
    print_alignment_text(report, true);
    return report_has_findings(report) ? kFindings : kOk;
  } catch (const roc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFindings;
  }
}

// --- DOT export -------------------------------------------------------------

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void dot_model(std::ostream& out, const roc::ProcessModel& m) {
  out << "digraph \"" << dot_escape(m.id) << "\" {\n";
  std::vector<const roc::Place*> places;
  for (const auto& p : m.places) places.push_back(&p);
  std::sort(places.begin(), places.end(),
            [](const roc::Place* a, const roc::Place* b) { return a->id < b->id; });
  for (const roc::Place* p : places) {
    out << "  \"" << dot_escape(p->id) << "\" [shape="
        << (p->kind == roc::PlaceKind::Exit ? "doublecircle" : "circle");
    if (p->kind == roc::PlaceKind::Start) out << ", penwidth=2";
    out << ", label=\"" << dot_escape(p->label) << "\"];\n";
  }
  std::vector<const roc::Transition*> transitions;
  for (const auto& t : m.transitions) transitions.push_back(&t);
  std::sort(transitions.begin(), transitions.end(),
            [](const roc::Transition* a, const roc::Transition* b) { return a->id < b->id; });
  for (const roc::Transition* t : transitions)
    out << "  \"t:" << dot_escape(t->id) << "\" [shape=box, label=\""
        << dot_escape(t->strategy.raw_label) << "\"];\n";
  for (const roc::Transition* t : transitions) {
    std::vector<std::string> inputs = t->inputs, outputs = t->outputs;
    std::sort(inputs.begin(), inputs.end());
    std::sort(outputs.begin(), outputs.end());
    for (const auto& pid : inputs)
      out << "  \"" << dot_escape(pid) << "\" -> \"t:" << dot_escape(t->id) << "\";\n";
    for (const auto& pid : outputs)
      out << "  \"t:" << dot_escape(t->id) << "\" -> \"" << dot_escape(pid) << "\";\n";
  }
  out << "}\n";
}

void dot_goals(std::ostream& out, const roc::GoalGraph& g) {
  out << "digraph \"" << dot_escape(g.id) << "\" {\n";
  struct NodeLine {
    std::string id;
    std::string attrs;
  };
  std::vector<NodeLine> nodes;
  for (const auto& n : g.nodes) {
    std::string shape;
    switch (n.kind) {
      case roc::GoalKind::Need: shape = "shape=ellipse, style=bold"; break;
      case roc::GoalKind::StrategicGoal: shape = "shape=box"; break;
      case roc::GoalKind::OperationalGoal: shape = "shape=box, style=rounded"; break;
      case roc::GoalKind::ChangeGoal: shape = "shape=box, style=dashed"; break;
      case roc::GoalKind::Objective: shape = "shape=diamond"; break;
      case roc::GoalKind::Requirement: shape = "shape=note"; break;
    }
    nodes.push_back({n.id, shape + ", label=\"" + dot_escape(n.label) + "\""});
  }
  for (const auto& s : g.stakeholders)
    nodes.push_back({s.id, "shape=hexagon, label=\"" + dot_escape(s.name) + "\""});
  std::sort(nodes.begin(), nodes.end(),
            [](const NodeLine& a, const NodeLine& b) { return a.id < b.id; });
  for (const auto& n : nodes) out << "  \"" << dot_escape(n.id) << "\" [" << n.attrs << "];\n";

  std::set<std::string> refs;
  for (const auto& [_, targets] : g.realizations)
    for (const auto& ref : targets) refs.insert(ref.to_string());
  for (const auto& ref : refs)
    out << "  \"ref:" << dot_escape(ref) << "\" [shape=component, label=\"" << dot_escape(ref)
        << "\"];\n";

  std::vector<roc::GoalEdge> edges = g.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) {
    const char* style = e.kind == roc::EdgeKind::Derives    ? "solid"
                        : e.kind == roc::EdgeKind::Supports ? "dashed"
                                                            : "dotted";
    out << "  \"" << dot_escape(e.from) << "\" -> \"" << dot_escape(e.to) << "\" [style=" << style
        << ", label=\"" << roc::to_string(e.kind) << "\"];\n";
  }
  for (const auto& [goal_id, targets] : g.realizations) {
    std::vector<roc::RealizationRef> sorted_refs = targets;
    std::sort(sorted_refs.begin(), sorted_refs.end());
    for (const auto& ref : sorted_refs)
      out << "  \"" << dot_escape(goal_id) << "\" -> \"ref:" << dot_escape(ref.to_string())
          << "\" [style=dashed, label=\"realized_by\"];\n";
  }
  out << "}\n";
}

int cmd_export_dot(const std::vector<std::string>& files, const std::string& model_id,
                   const std::string& goals_id) {
  Loader loader = load_files(files);
  if (loader.status != kOk) return loader.status;
  if (model_id.empty() == goals_id.empty()) {
    std::cerr << "error: pass exactly one of --model or --goals\n";
    return kUsage;
  }
  if (!model_id.empty()) {
    const roc::ProcessModel* model = loader.workspace.find_model(model_id);
    if (!model) {
      std::cerr << "error: unknown model '" << model_id << "'\n";
      return kUsage;
    }
    dot_model(std::cout, *model);
    return kOk;
  }
  const roc::GoalGraph* goals = loader.workspace.find_goals(goals_id);
  if (!goals) {
    std::cerr << "error: unknown goal graph '" << goals_id << "'\n";
    return kUsage;
  }
  dot_goals(std::cout, *goals);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ROC toolkit: goal graphs, strategy-labeled Petri nets, fragment alignment, "
               "and case-based reuse for ERP implementations"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string model_id, asis_id, reference_id, catalog_id, goals_id;
  std::string aliases_file, format = "text";
  std::string from_labels, to_labels;
  std::size_t bound = roc::net::kDefaultBound;

  auto* validate = app.add_subcommand("validate", "Parse and validate workspace files");
  validate->add_option("files", files, "Workspace files (.roc)")->required()->expected(-1);

  auto* fragments = app.add_subcommand("fragments", "List the process fragments of a model");
  fragments->add_option("files", files)->required()->expected(-1);
  fragments->add_option("--model", model_id, "Model id")->required();
  fragments->add_option("--format", format)->check(CLI::IsMember({"text", "tsv"}));

  auto* align = app.add_subcommand("align", "Align an as-is model against a reference model");
  align->add_option("files", files)->required()->expected(-1);
  align->add_option("--asis", asis_id, "As-is model id")->required();
  align->add_option("--reference", reference_id, "Reference (to-be) model id")->required();
  align->add_option("--catalog", catalog_id, "Component catalog id for the component map");
  align->add_option("--aliases", aliases_file, "Extra alias file");
  align->add_option("--format", format)->check(CLI::IsMember({"text", "tsv"}));

  auto* simulate = app.add_subcommand("simulate", "Token-game reachability between markings");
  simulate->add_option("files", files)->required()->expected(-1);
  simulate->add_option("--model", model_id, "Model id")->required();
  simulate->add_option("--from", from_labels, "Comma-separated place labels")->required();
  simulate->add_option("--to", to_labels, "Comma-separated place labels")->required();
  simulate->add_option("--bound", bound, "Marking exploration bound");

  std::string repo_flag, query_file, case_id, case_file, solved_id, catalog_file;
  std::size_t top = 5;

  auto* case_cmd = app.add_subcommand("case", "Case-based reasoning over stored cases");
  case_cmd->require_subcommand(1);

  auto* retrieve = case_cmd->add_subcommand("retrieve", "Rank stored cases against a query");
  retrieve->add_option("--repo", repo_flag, "Repository file (overrides ROC_REPO)");
  retrieve->add_option("--query", query_file, "Workspace file holding the query case")->required();
  retrieve->add_option("--case", case_id, "Query case id");
  retrieve->add_option("--top", top, "Number of cases to list");

  auto* retain = case_cmd->add_subcommand("retain", "Store a solved case in the repository");
  retain->add_option("--repo", repo_flag);
  retain->add_option("--case-file", case_file, "Workspace file holding the case")->required();
  retain->add_option("--case", case_id);

  auto* adapt = case_cmd->add_subcommand("adapt", "Reuse a solved case's to-be fragments");
  adapt->add_option("--repo", repo_flag);
  adapt->add_option("--solved", solved_id, "Solved case id in the repository")->required();
  adapt->add_option("--query", query_file)->required();
  adapt->add_option("--case", case_id);
  adapt->add_option("--aliases", aliases_file);

  auto* test = case_cmd->add_subcommand("test", "Adapt a solved case and align it to the query");
  test->add_option("--repo", repo_flag);
  test->add_option("--solved", solved_id)->required();
  test->add_option("--query", query_file)->required();
  test->add_option("--case", case_id);
  test->add_option("--catalog", catalog_id, "Catalog id")->required();
  test->add_option("--catalog-file", catalog_file, "Extra workspace file with the catalog");
  test->add_option("--aliases", aliases_file);

  auto* dot = app.add_subcommand("export-dot", "Export a model or goal graph as DOT");
  dot->add_option("files", files)->required()->expected(-1);
  dot->add_option("--model", model_id);
  dot->add_option("--goals", goals_id);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(files);
    if (app.got_subcommand(fragments)) return cmd_fragments(files, model_id, format);
    if (app.got_subcommand(align))
      return cmd_align(files, asis_id, reference_id, catalog_id, aliases_file, format);
    if (app.got_subcommand(simulate))
      return cmd_simulate(files, model_id, from_labels, to_labels, bound);
    if (app.got_subcommand(dot)) return cmd_export_dot(files, model_id, goals_id);
    if (app.got_subcommand(case_cmd)) {
      if (case_cmd->got_subcommand(retrieve))
        return cmd_case_retrieve(repo_flag, query_file, case_id, top);
      if (case_cmd->got_subcommand(retain)) return cmd_case_retain(repo_flag, case_file, case_id);
      if (case_cmd->got_subcommand(adapt))
        return cmd_case_adapt(repo_flag, solved_id, query_file, case_id, aliases_file);
      if (case_cmd->got_subcommand(test))
        return cmd_case_test(repo_flag, solved_id, query_file, case_id, catalog_file, catalog_id,
                             aliases_file);
    }
  } catch (const roc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFindings;
  }
  return kUsage;
}
