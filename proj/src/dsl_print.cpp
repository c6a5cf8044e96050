#include <algorithm>
#include <cstdio>
#include <set>

#include "roc/dsl.hpp"

namespace roc::dsl {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

template <typename T, typename Key>
std::vector<const T*> sorted_by(const std::vector<T>& items, Key key) {
  std::vector<const T*> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(&item);
  std::sort(out.begin(), out.end(), [&](const T* a, const T* b) { return key(*a) < key(*b); });
  return out;
}

void print_net(std::string& out, const ProcessModel& m) {
  out += "net " + m.id + " level=" + to_string(m.level) + "\n";
  for (const Place* p : sorted_by(m.places, [](const Place& p) { return p.id; })) {
    out += "  place " + p->id + " " + quote(p->label);
    if (p->kind == PlaceKind::Start) out += " start";
    if (p->kind == PlaceKind::Exit) out += " exit";
    out += "\n";
  }
  // Transition order is semantic (fragment numbering); never reorder.
  for (const auto& t : m.transitions) {
    auto join = [](std::vector<std::string> ids) {
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      std::string s;
      for (const auto& id : ids) {
        if (!s.empty()) s += ",";
        s += id;
      }
      return s;
    };
    out += "  trans " + t.id + " " + quote(t.strategy.raw_label) + " " + join(t.inputs) + " -> " +
           join(t.outputs) + "\n";
  }
}

void print_goals(std::string& out, const GoalGraph& g) {
  out += "goals " + g.id + "\n";
  for (const Stakeholder* s : sorted_by(g.stakeholders, [](const Stakeholder& s) { return s.id; })) {
    out += "  stakeholder " + s->id + " " + quote(s->name);
    if (!s->role.empty()) out += " " + quote(s->role);
    out += "\n";
  }
  for (const GoalNode* n : sorted_by(g.nodes, [](const GoalNode& n) { return n.id; })) {
    out += "  node " + n->id + " " + to_string(n->kind) + " " + quote(n->label);
    if (n->horizon != Horizon::None) out += std::string(" horizon=") + to_string(n->horizon);
    out += "\n";
  }
  std::vector<GoalEdge> edges = g.edges;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& e : edges)
    out += "  edge " + e.from + " " + to_string(e.kind) + " " + e.to + "\n";
  for (const auto& [goal_id, refs] : g.realizations) {
    std::vector<RealizationRef> sorted_refs = refs;
    std::sort(sorted_refs.begin(), sorted_refs.end());
    sorted_refs.erase(std::unique(sorted_refs.begin(), sorted_refs.end()), sorted_refs.end());
    for (const auto& ref : sorted_refs)
      out += "  edge " + goal_id + " realized_by " + ref.to_string() + "\n";
  }
}

void print_catalog(std::string& out, const ComponentCatalog& c) {
  out += "catalog " + c.id + "\n";
  for (const Component* comp : sorted_by(c.components, [](const Component& c) { return c.name; })) {
    out += "  component " + quote(comp->name) + " module=" + quote(comp->module) + " provides=";
    std::vector<std::string> provides = comp->provides;
    std::sort(provides.begin(), provides.end());
    provides.erase(std::unique(provides.begin(), provides.end()), provides.end());
    for (std::size_t i = 0; i < provides.size(); ++i) {
      if (i) out += ", ";
      out += quote(provides[i]);
    }
    out += "\n";
  }
}

void print_aliases(std::string& out, const AliasMap& a) {
  out += "aliases " + a.id() + "\n";
  std::vector<std::pair<std::string, std::string>> pairs = a.pairs();
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& [lhs, rhs] : pairs)
    out += "  alias " + quote(lhs) + " = " + quote(rhs) + "\n";
}

void print_case(std::string& out, const cbr::Case& c) {
  out += "case " + c.id + "\n";
  if (!c.enterprise_type.empty()) out += "  enterprise_type " + quote(c.enterprise_type) + "\n";
  if (!c.targeted_process.empty()) out += "  targeted_process " + quote(c.targeted_process) + "\n";
  if (!c.project_type.empty()) out += "  project_type " + quote(c.project_type) + "\n";
  for (const auto& label : c.goal_labels) out += "  goal " + quote(label) + "\n";
  for (const auto& f : c.asis_fragments)
    out += "  asis " + f.id + " " + quote(f.source_raw) + " " + quote(f.target_raw) + " " +
           quote(f.strategy.raw_label) + "\n";
  for (const auto& f : c.tobe_fragments)
    out += "  tobe " + f.id + " " + quote(f.source_raw) + " " + quote(f.target_raw) + " " +
           quote(f.strategy.raw_label) + "\n";
  std::vector<std::pair<std::string, std::string>> map = c.component_map;
  std::sort(map.begin(), map.end());
  map.erase(std::unique(map.begin(), map.end()), map.end());
  for (const auto& [fid, component] : map) out += "  map " + fid + " " + quote(component) + "\n";
  if (!c.notes.empty()) out += "  notes " + quote(c.notes) + "\n";
}

}  // namespace

std::string print(const Workspace& w) {
  std::string out;
  bool first = true;
  auto separate = [&] {
    if (!first) out += "\n";
    first = false;
  };

  if (w.weights) {
    separate();
    out += "weights fragment=" + number(w.weights->fragment) + " goal=" + number(w.weights->goal) +
           " component=" + number(w.weights->component) + "\n";
  }
  for (const AliasMap* a : sorted_by(w.alias_maps, [](const AliasMap& a) { return a.id(); })) {
    separate();
    print_aliases(out, *a);
  }
  for (const ComponentCatalog* c : sorted_by(w.catalogs, [](const ComponentCatalog& c) { return c.id; })) {
    separate();
    print_catalog(out, *c);
  }
  for (const GoalGraph* g : sorted_by(w.goal_graphs, [](const GoalGraph& g) { return g.id; })) {
    separate();
    print_goals(out, *g);
  }
  for (const ProcessModel* m : sorted_by(w.models, [](const ProcessModel& m) { return m.id; })) {
    separate();
    print_net(out, *m);
  }
  for (const cbr::Case* c : sorted_by(w.cases, [](const cbr::Case& c) { return c.id; })) {
    separate();
    print_case(out, *c);
  }
  return out;
}

bool structurally_equal(const Workspace& a, const Workspace& b) { return print(a) == print(b); }

}  // namespace roc::dsl
