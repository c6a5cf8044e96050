#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "roc/dsl.hpp"

namespace roc::dsl {

const char* to_string(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
  }
  return "?";
}

std::string format(const ParseDiagnostic& d, const std::string& file) {
  std::string out;
  if (!file.empty()) {
    out += file;
    out += ":";
  }
  out += std::to_string(d.line);
  out += ":";
  out += std::to_string(d.column);
  out += ": ";
  out += to_string(d.severity);
  out += ": ";
  out += d.message;
  return out;
}

bool ParseResult::ok() const {
  return std::none_of(diagnostics.begin(), diagnostics.end(),
                      [](const ParseDiagnostic& d) { return d.severity == Severity::Error; });
}

namespace {

struct Token {
  enum Kind { Word, String, Comma, Equals };
  Kind kind;
  std::string text;
  int column;
};

struct Pos {
  int line = 0;
  int column = 1;
};

class Diagnostics {
 public:
  explicit Diagnostics(std::vector<ParseDiagnostic>& sink) : sink_(sink) {}

  void error(Pos pos, const std::string& message) {
    sink_.push_back({Severity::Error, pos.line, pos.column, message});
  }

 private:
  std::vector<ParseDiagnostic>& sink_;
};

std::vector<Token> lex_line(const std::string& line, int line_no, Diagnostics& diags) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;
    int column = static_cast<int>(i) + 1;
    if (c == '"') {
      std::string value;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char d = line[i];
        if (d == '\\' && i + 1 < line.size() && (line[i + 1] == '"' || line[i + 1] == '\\')) {
          value.push_back(line[i + 1]);
          i += 2;
          continue;
        }
        if (d == '"') {
          closed = true;
          ++i;
          break;
        }
        value.push_back(d);
        ++i;
      }
      if (!closed) diags.error({line_no, column}, "unterminated string literal");
      tokens.push_back({Token::String, value, column});
      continue;
    }
    if (c == ',') {
      tokens.push_back({Token::Comma, ",", column});
      ++i;
      continue;
    }
    if (c == '=') {
      tokens.push_back({Token::Equals, "=", column});
      ++i;
      continue;
    }
    std::string word;
    while (i < line.size()) {
      char d = line[i];
      if (d == ' ' || d == '\t' || d == '\r' || d == ',' || d == '=' || d == '"' || d == '#') break;
      word.push_back(d);
      ++i;
    }
    tokens.push_back({Token::Word, word, column});
  }
  return tokens;
}

// Token cursor over one line; consumption failures produce one diagnostic.
class Cursor {
 public:
  Cursor(const std::vector<Token>& tokens, int line, Diagnostics& diags)
      : tokens_(tokens), line_(line), diags_(diags) {}

  bool done() const { return pos_ >= tokens_.size(); }

  Pos here() const {
    if (pos_ < tokens_.size()) return {line_, tokens_[pos_].column};
    int col = tokens_.empty() ? 1 : tokens_.back().column + static_cast<int>(tokens_.back().text.size());
    return {line_, col};
  }

  std::optional<std::string> word(const std::string& what) {
    if (done() || tokens_[pos_].kind != Token::Word) {
      diags_.error(here(), "expected " + what);
      return std::nullopt;
    }
    return tokens_[pos_++].text;
  }

  std::optional<std::string> string(const std::string& what) {
    if (done() || tokens_[pos_].kind != Token::String) {
      diags_.error(here(), "expected quoted " + what);
      return std::nullopt;
    }
    return tokens_[pos_++].text;
  }

  bool accept_word(const std::string& text) {
    if (!done() && tokens_[pos_].kind == Token::Word && tokens_[pos_].text == text) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_comma() {
    if (!done() && tokens_[pos_].kind == Token::Comma) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool expect_equals() {
    if (!done() && tokens_[pos_].kind == Token::Equals) {
      ++pos_;
      return true;
    }
    diags_.error(here(), "expected '='");
    return false;
  }

  // key=<word> or key=<string>
  std::optional<std::string> keyed_value(const std::string& key) {
    if (!accept_word(key)) {
      diags_.error(here(), "expected '" + key + "='");
      return std::nullopt;
    }
    if (!expect_equals()) return std::nullopt;
    if (done() || (tokens_[pos_].kind != Token::Word && tokens_[pos_].kind != Token::String)) {
      diags_.error(here(), "expected value for '" + key + "'");
      return std::nullopt;
    }
    return tokens_[pos_++].text;
  }

  bool end_of_line() {
    if (done()) return true;
    diags_.error(here(), "unexpected trailing input '" + tokens_[pos_].text + "'");
    return false;
  }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  int line_;
  Diagnostics& diags_;
};

struct AliasBlock {
  std::string id;
  std::vector<std::pair<std::string, std::string>> pairs;
  Pos pos;
};

enum class BlockKind { None, Net, Goals, Catalog, Aliases, Case };

std::optional<double> parse_number(const std::string& text) {
  if (text.empty()) return std::nullopt;
  char* end = nullptr;
  double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

ParseResult parse(std::string_view text) {
  ParseResult result;
  Diagnostics diags(result.diagnostics);
  Workspace& ws = result.workspace;

  std::vector<AliasBlock> alias_blocks;
  BlockKind block = BlockKind::None;
  ProcessModel* net = nullptr;
  GoalGraph* goals = nullptr;
  ComponentCatalog* catalog = nullptr;
  AliasBlock* aliases = nullptr;
  cbr::Case* current_case = nullptr;

  // Positions of block headers and elements, for mapping validator output.
  std::map<std::string, Pos> positions;
  auto remember = [&](const std::string& key, Pos pos) { positions.emplace(key, pos); };

  auto require_block = [&](BlockKind want, const std::string& keyword, Pos pos) {
    if (block == want) return true;
    diags.error(pos, "'" + keyword + "' outside of a " +
                         (want == BlockKind::Net      ? "net"
                          : want == BlockKind::Goals  ? "goals"
                          : want == BlockKind::Catalog ? "catalog"
                          : want == BlockKind::Case   ? "case"
                                                      : "aliases") +
                         " block");
    return false;
  };

  // Split into lines, keeping 1-based numbering.
  std::vector<std::string> lines;
  {
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
  }

  for (int line_no = 1; line_no <= static_cast<int>(lines.size()); ++line_no) {
    auto tokens = lex_line(lines[line_no - 1], line_no, diags);
    if (tokens.empty()) continue;
    Cursor cur(tokens, line_no, diags);
    Pos head = cur.here();
    auto keyword = cur.word("a keyword");
    if (!keyword) continue;

    if (*keyword == "net") {
      auto id = cur.word("a net id");
      if (!id) continue;
      auto level = cur.keyed_value("level");
      if (!level) continue;
      ProcessModel m;
      m.id = *id;
      if (*level == "intentional") m.level = Level::Intentional;
      else if (*level == "strategy") m.level = Level::Strategy;
      else if (*level == "operational") m.level = Level::Operational;
      else {
        diags.error(head, "unknown level '" + *level + "' (expected intentional, strategy or operational)");
        continue;
      }
      if (!cur.end_of_line()) continue;
      ws.models.push_back(std::move(m));
      net = &ws.models.back();
      block = BlockKind::Net;
      remember("net " + *id, head);
      continue;
    }

    if (*keyword == "place") {
      if (!require_block(BlockKind::Net, "place", head)) continue;
      auto id = cur.word("a place id");
      if (!id) continue;
      auto label = cur.string("label");
      if (!label) continue;
      Place p{*id, *label, PlaceKind::Intermediate};
      if (cur.accept_word("start")) p.kind = PlaceKind::Start;
      else if (cur.accept_word("exit")) p.kind = PlaceKind::Exit;
      if (!cur.end_of_line()) continue;
      net->places.push_back(std::move(p));
      remember("net " + net->id + " " + *id, head);
      continue;
    }

    if (*keyword == "trans") {
      if (!require_block(BlockKind::Net, "trans", head)) continue;
      auto id = cur.word("a transition id");
      if (!id) continue;
      auto strategy_text = cur.string("strategy");
      if (!strategy_text) continue;
      Transition t;
      t.id = *id;
      try {
        t.strategy = normalize_strategy(*strategy_text);
      } catch (const Error& e) {
        diags.error(head, std::string("transition '") + *id + "': " + e.what());
        continue;
      }
      bool bad = false;
      auto id_list = [&](std::vector<std::string>& out, const char* what) {
        do {
          auto pid = cur.word(what);
          if (!pid) {
            bad = true;
            return;
          }
          out.push_back(*pid);
        } while (cur.accept_comma());
      };
      id_list(t.inputs, "an input place id");
      if (bad) continue;
      if (!cur.accept_word("->")) {
        diags.error(cur.here(), "expected '->'");
        continue;
      }
      id_list(t.outputs, "an output place id");
      if (bad) continue;
      if (!cur.end_of_line()) continue;
      remember("net " + net->id + " " + t.id, head);
      net->transitions.push_back(std::move(t));
      continue;
    }

    if (*keyword == "goals") {
      auto id = cur.word("a goal graph id");
      if (!id || !cur.end_of_line()) continue;
      GoalGraph g;
      g.id = *id;
      ws.goal_graphs.push_back(std::move(g));
      goals = &ws.goal_graphs.back();
      block = BlockKind::Goals;
      remember("goals " + *id, head);
      continue;
    }

    if (*keyword == "node") {
      if (!require_block(BlockKind::Goals, "node", head)) continue;
      auto id = cur.word("a node id");
      if (!id) continue;
      auto kind = cur.word("a node kind");
      if (!kind) continue;
      GoalNode n;
      n.id = *id;
      if (*kind == "need") n.kind = GoalKind::Need;
      else if (*kind == "strategic_goal") n.kind = GoalKind::StrategicGoal;
      else if (*kind == "operational_goal") n.kind = GoalKind::OperationalGoal;
      else if (*kind == "objective") n.kind = GoalKind::Objective;
      else if (*kind == "requirement") n.kind = GoalKind::Requirement;
      else if (*kind == "change_goal") n.kind = GoalKind::ChangeGoal;
      else {
        diags.error(head, "unknown node kind '" + *kind + "'");
        continue;
      }
      auto label = cur.string("label");
      if (!label) continue;
      n.label = *label;
      if (!cur.done()) {
        auto horizon = cur.keyed_value("horizon");
        if (!horizon) continue;
        if (*horizon == "strategic") n.horizon = Horizon::Strategic;
        else if (*horizon == "operational") n.horizon = Horizon::Operational;
        else {
          diags.error(head, "unknown horizon '" + *horizon + "'");
          continue;
        }
      }
      if (!cur.end_of_line()) continue;
      goals->nodes.push_back(std::move(n));
      remember("goals " + goals->id + " " + *id, head);
      continue;
    }

    if (*keyword == "stakeholder") {
      if (!require_block(BlockKind::Goals, "stakeholder", head)) continue;
      auto id = cur.word("a stakeholder id");
      if (!id) continue;
      auto name = cur.string("name");
      if (!name) continue;
      Stakeholder s{*id, *name, ""};
      if (!cur.done()) {
        auto role = cur.string("role");
        if (!role) continue;
        s.role = *role;
      }
      if (!cur.end_of_line()) continue;
      goals->stakeholders.push_back(std::move(s));
      remember("goals " + goals->id + " " + *id, head);
      continue;
    }

    if (*keyword == "edge") {
      if (!require_block(BlockKind::Goals, "edge", head)) continue;
      auto from = cur.word("a source id");
      if (!from) continue;
      auto kind = cur.word("an edge kind");
      if (!kind) continue;
      auto to = cur.word("a target id");
      if (!to) continue;
      if (!cur.end_of_line()) continue;
      if (*kind == "realized_by") {
        goals->realizations[*from].push_back(RealizationRef::parse(*to));
        remember("goals " + goals->id + " realized_by " + *from + " " + *to, head);
        continue;
      }
      GoalEdge e;
      e.from = *from;
      e.to = *to;
      if (*kind == "derives") e.kind = EdgeKind::Derives;
      else if (*kind == "supports") e.kind = EdgeKind::Supports;
      else if (*kind == "determines") e.kind = EdgeKind::Determines;
      else {
        diags.error(head, "unknown edge kind '" + *kind + "'");
        continue;
      }
      goals->edges.push_back(e);
      continue;
    }

    if (*keyword == "catalog") {
      auto id = cur.word("a catalog id");
      if (!id || !cur.end_of_line()) continue;
      ComponentCatalog c;
      c.id = *id;
      ws.catalogs.push_back(std::move(c));
      catalog = &ws.catalogs.back();
      block = BlockKind::Catalog;
      remember("catalog " + *id, head);
      continue;
    }

    if (*keyword == "component") {
      if (!require_block(BlockKind::Catalog, "component", head)) continue;
      auto name = cur.string("component name");
      if (!name) continue;
      auto module = cur.keyed_value("module");
      if (!module) continue;
      Component comp;
      comp.name = *name;
      comp.module = *module;
      if (!cur.accept_word("provides")) {
        diags.error(cur.here(), "expected 'provides='");
        continue;
      }
      if (!cur.expect_equals()) continue;
      bool bad = false;
      do {
        auto p = cur.string("strategy");
        if (!p) {
          bad = true;
          break;
        }
        comp.provides.push_back(*p);
      } while (cur.accept_comma());
      if (bad || !cur.end_of_line()) continue;
      remember("catalog " + catalog->id + " " + comp.name, head);
      catalog->components.push_back(std::move(comp));
      continue;
    }

    if (*keyword == "aliases") {
      auto id = cur.word("an alias map id");
      if (!id || !cur.end_of_line()) continue;
      alias_blocks.push_back({*id, {}, head});
      aliases = &alias_blocks.back();
      block = BlockKind::Aliases;
      remember("aliases " + *id, head);
      continue;
    }

    if (*keyword == "alias") {
      auto a = cur.string("label");
      if (!a) continue;
      if (!cur.done() && !cur.expect_equals()) continue;
      auto b = cur.string("label");
      if (!b) continue;
      if (!cur.end_of_line()) continue;
      if (block == BlockKind::Aliases && aliases) {
        aliases->pairs.emplace_back(*a, *b);
      } else {
        // Top-level alias lines accumulate in the "default" map.
        AliasBlock* def = nullptr;
        for (auto& ab : alias_blocks)
          if (ab.id == "default") def = &ab;
        if (!def) {
          alias_blocks.push_back({"default", {}, head});
          def = &alias_blocks.back();
          remember("aliases default", head);
        }
        def->pairs.emplace_back(*a, *b);
        block = BlockKind::None;
      }
      continue;
    }

    if (*keyword == "weights") {
      cbr::SimilarityWeights w;
      auto f = cur.keyed_value("fragment");
      if (!f) continue;
      auto g = cur.keyed_value("goal");
      if (!g) continue;
      auto c = cur.keyed_value("component");
      if (!c) continue;
      if (!cur.end_of_line()) continue;
      auto fv = parse_number(*f), gv = parse_number(*g), cv = parse_number(*c);
      if (!fv || !gv || !cv) {
        diags.error(head, "weights must be numbers");
        continue;
      }
      if (*fv < 0 || *gv < 0 || *cv < 0 || *fv + *gv + *cv <= 0) {
        diags.error(head, "weights must be nonnegative and sum to a positive value");
        continue;
      }
      double sum = *fv + *gv + *cv;
      if (sum > 1 + 1e-9 || sum < 1 - 1e-9) {
        w.fragment = *fv / sum;
        w.goal = *gv / sum;
        w.component = *cv / sum;
      } else {
        w.fragment = *fv;
        w.goal = *gv;
        w.component = *cv;
      }
      if (ws.weights) {
        diags.error(head, "duplicate weights declaration");
        continue;
      }
      ws.weights = w;
      block = BlockKind::None;
      continue;
    }

    if (*keyword == "case") {
      auto id = cur.word("a case id");
      if (!id || !cur.end_of_line()) continue;
      cbr::Case c;
      c.id = *id;
      ws.cases.push_back(std::move(c));
      current_case = &ws.cases.back();
      block = BlockKind::Case;
      remember("case " + *id, head);
      continue;
    }

    if (*keyword == "enterprise_type" || *keyword == "targeted_process" ||
        *keyword == "project_type" || *keyword == "notes") {
      if (!require_block(BlockKind::Case, *keyword, head)) continue;
      auto value = cur.string("text");
      if (!value || !cur.end_of_line()) continue;
      if (*keyword == "enterprise_type") current_case->enterprise_type = *value;
      else if (*keyword == "targeted_process") current_case->targeted_process = *value;
      else if (*keyword == "project_type") current_case->project_type = *value;
      else current_case->notes = *value;
      continue;
    }

    if (*keyword == "goal") {
      if (!require_block(BlockKind::Case, "goal", head)) continue;
      auto label = cur.string("goal label");
      if (!label || !cur.end_of_line()) continue;
      std::string norm = normalize_label(*label);
      if (norm.empty()) {
        diags.error(head, "empty goal label");
        continue;
      }
      current_case->goal_labels.insert(norm);
      continue;
    }

    if (*keyword == "asis" || *keyword == "tobe") {
      if (!require_block(BlockKind::Case, *keyword, head)) continue;
      auto id = cur.word("a fragment id");
      if (!id) continue;
      auto src = cur.string("source state");
      if (!src) continue;
      auto dst = cur.string("target state");
      if (!dst) continue;
      auto strategy_text = cur.string("strategy");
      if (!strategy_text || !cur.end_of_line()) continue;
      Fragment f;
      f.id = *id;
      f.source_raw = *src;
      f.target_raw = *dst;
      f.source = normalize_state_label(*src);
      f.target = normalize_state_label(*dst);
      try {
        f.strategy = normalize_strategy(*strategy_text);
      } catch (const Error& e) {
        diags.error(head, std::string("fragment '") + *id + "': " + e.what());
        continue;
      }
      if (f.source.empty() || f.target.empty()) {
        diags.error(head, "fragment '" + *id + "' has an empty state label");
        continue;
      }
      auto& list = *keyword == "asis" ? current_case->asis_fragments : current_case->tobe_fragments;
      for (const auto& existing : list)
        if (existing.id == f.id)
          diags.error(head, "duplicate " + *keyword + " fragment id '" + f.id + "'");
      list.push_back(std::move(f));
      continue;
    }

    if (*keyword == "map") {
      if (!require_block(BlockKind::Case, "map", head)) continue;
      auto id = cur.word("a fragment id");
      if (!id) continue;
      auto component = cur.string("component name");
      if (!component || !cur.end_of_line()) continue;
      current_case->component_map.emplace_back(*id, *component);
      remember("case " + current_case->id + " map " + *id, head);
      continue;
    }

    diags.error(head, "unknown keyword '" + *keyword + "'");
  }

  for (auto& ab : alias_blocks) ws.alias_maps.emplace_back(ab.id, std::move(ab.pairs));

  // ---- semantic checks ------------------------------------------------

  auto pos_of = [&](const std::string& key, const std::string& fallback) {
    auto it = positions.find(key);
    if (it != positions.end()) return it->second;
    it = positions.find(fallback);
    if (it != positions.end()) return it->second;
    return Pos{1, 1};
  };

  auto check_unique = [&](const char* category, auto get_id, const auto& items) {
    std::set<std::string> ids;
    for (const auto& item : items) {
      std::string id = get_id(item);
      if (!ids.insert(id).second) {
        std::string key = std::string(category) + " " + id;
        diags.error(pos_of(key, key), std::string("duplicate ") + category + " id '" + id + "'");
      }
    }
  };
  check_unique("net", [](const ProcessModel& m) { return m.id; }, ws.models);
  check_unique("goals", [](const GoalGraph& g) { return g.id; }, ws.goal_graphs);
  check_unique("catalog", [](const ComponentCatalog& c) { return c.id; }, ws.catalogs);
  check_unique("aliases", [](const AliasMap& a) { return a.id(); }, ws.alias_maps);
  check_unique("case", [](const cbr::Case& c) { return c.id; }, ws.cases);

  for (const auto& m : ws.models) {
    std::string block_key = "net " + m.id;
    for (const auto& v : validate_model(m))
      diags.error(pos_of(block_key + " " + v.element, block_key),
                  std::string(to_string(v.code)) + ": " + v.message);
  }
  for (const auto& g : ws.goal_graphs) {
    std::string block_key = "goals " + g.id;
    for (const auto& v : validate_goals(g))
      diags.error(pos_of(block_key + " " + v.element, block_key),
                  std::string(to_string(v.code)) + ": " + v.message);
  }
  for (const auto& c : ws.catalogs) {
    std::string block_key = "catalog " + c.id;
    for (const auto& v : validate_catalog(c))
      diags.error(pos_of(block_key + " " + v.element, block_key),
                  std::string(to_string(v.code)) + ": " + v.message);
  }

  // Realization targets must resolve against the workspace.
  for (const auto& g : ws.goal_graphs) {
    for (const auto& [goal_id, refs] : g.realizations) {
      for (const auto& ref : refs) {
        std::string key = "goals " + g.id + " realized_by " + goal_id + " " + ref.to_string();
        const ProcessModel* m = ws.find_model(ref.model_id);
        if (!m) {
          diags.error(pos_of(key, "goals " + g.id),
                      "realization of '" + goal_id + "' references unknown model '" + ref.model_id + "'");
          continue;
        }
        if (ref.fragment_id.empty() || !validate_model(*m).empty()) continue;
        auto fragments = extract_fragments(*m);
        bool found = std::any_of(fragments.begin(), fragments.end(),
                                 [&](const Fragment& f) { return f.id == ref.fragment_id; });
        if (!found)
          diags.error(pos_of(key, "goals " + g.id),
                      "realization of '" + goal_id + "' references unknown fragment '" +
                          ref.to_string() + "'");
      }
    }
  }

  // Case component maps point at the case's own to-be fragments.
  for (const auto& c : ws.cases) {
    std::set<std::string> tobe_ids;
    for (const auto& f : c.tobe_fragments) tobe_ids.insert(f.id);
    for (const auto& [fid, component] : c.component_map) {
      if (!tobe_ids.count(fid))
        diags.error(pos_of("case " + c.id + " map " + fid, "case " + c.id),
                    "case '" + c.id + "' maps unknown to-be fragment '" + fid + "'");
    }
  }

  std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                   [](const ParseDiagnostic& a, const ParseDiagnostic& b) {
                     if (a.line != b.line) return a.line < b.line;
                     return a.column < b.column;
                   });
  return result;
}

}  // namespace roc::dsl
