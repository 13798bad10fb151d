#include "emltab/dot.hpp"

#include <map>
#include <sstream>

namespace emltab {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const TableauGraph& g, bool show_eliminated) {
  const ClosureIndex& idx = g.index();
  std::map<std::uint32_t, const Elimination*> removed_by;
  for (const Elimination& e : g.log) removed_by[e.state] = &e;

  auto visible = [&](std::uint32_t s) { return g.alive[s] || show_eliminated; };

  std::ostringstream out;
  out << "digraph " << to_string(g.phase) << " {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::uint32_t p = 0; p < g.prestates.size(); ++p) {
    out << "  P" << p << " [style=dashed, label=\"P" << p << " " << escape(print_label(idx, g.prestates[p]))
        << "\"];\n";
  }
  for (std::uint32_t s = 0; s < g.states.size(); ++s) {
    if (!visible(s)) continue;
    out << "  S" << s << " [label=\"S" << s << " " << escape(print_label(idx, g.states[s]));
    if (!g.alive[s]) {
      const Elimination* e = removed_by.count(s) ? removed_by[s] : nullptr;
      if (e) {
        out << "\\n" << to_string(e->rule);
        if (e->eventuality) out << " " << escape(idx.print(*e->eventuality));
      }
      out << "\", color=grey, fontcolor=grey];\n";
    } else {
      out << "\"];\n";
    }
  }
  for (std::uint32_t p = 0; p < g.dashed.size(); ++p) {
    for (std::uint32_t s : g.dashed[p]) out << "  P" << p << " -> S" << s << " [style=dashed];\n";
  }
  for (const SolidEdge& e : g.edges) {
    const bool to_state = e.to.kind == NodeKind::State;
    if (!visible(e.from) || (to_state && !visible(e.to.index))) continue;
    out << "  S" << e.from << " -> " << (to_state ? "S" : "P") << e.to.index << " [label=\""
        << escape(idx.print(e.chi)) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace emltab
