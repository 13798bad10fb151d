#include <cctype>
#include <sstream>

#include "emltab/kripke.hpp"

namespace emltab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ModelError("model line " + std::to_string(line) + ": " + msg);
}

struct Pending {
  std::size_t line;
  std::string who;
  std::string blocks;
  bool coalition;
};

std::vector<std::vector<std::uint32_t>> parse_blocks(const KripkeStructure& m, std::string_view text,
                                                     std::size_t line) {
  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<bool> used(m.size(), false);
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    if (text[i] != '{') fail(line, "expected '{'");
    std::size_t close = text.find('}', i);
    if (close == std::string_view::npos) fail(line, "missing '}'");
    std::vector<std::uint32_t> block;
    for (const std::string& w : words(text.substr(i + 1, close - i - 1))) {
      auto s = m.find_state(w);
      if (!s) fail(line, "unknown state '" + w + "'");
      if (used[*s]) fail(line, "state '" + w + "' appears in two blocks");
      used[*s] = true;
      block.push_back(*s);
    }
    blocks.push_back(std::move(block));
    i = close + 1;
  }
  return blocks;
}

}  // namespace

KripkeStructure read_model(std::string_view text, FormulaFactory& factory) {
  std::vector<std::string> states;
  std::vector<Pending> rels;
  std::vector<std::pair<std::size_t, std::string>> vals;
  bool have_states = false;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(line_no, "expected ':'");
    auto head = words(line.substr(0, colon));
    std::string_view rest = line.substr(colon + 1);
    if (head.empty()) fail(line_no, "missing keyword");
    if (head[0] == "states" && head.size() == 1) {
      if (have_states) fail(line_no, "duplicate states declaration");
      have_states = true;
      states = words(rest);
      if (states.empty()) fail(line_no, "no states");
    } else if ((head[0] == "agent" || head[0] == "coalition") && head.size() == 2) {
      rels.push_back(Pending{line_no, head[1], std::string(rest), head[0] == "coalition"});
    } else if (head[0] == "val" && head.size() == 2) {
      vals.emplace_back(line_no, std::string(line.substr(4)));
    } else {
      fail(line_no, "unknown declaration '" + std::string(line.substr(0, colon)) + "'");
    }
  }
  if (!have_states) throw ModelError("model has no states declaration");

  bool pseudo = false;
  for (const Pending& p : rels) pseudo |= p.coalition;
  KripkeStructure m(pseudo ? Flavor::PseudoCmaem : Flavor::Cmaem);
  for (const std::string& s : states) {
    if (m.find_state(s)) throw ModelError("duplicate state '" + s + "'");
    m.add_state(s);
  }

  for (const Pending& p : rels) {
    Relation r = Relation::from_blocks(m.size(), parse_blocks(m, p.blocks, p.line));
    if (p.coalition) {
      Coalition c;
      std::string names = p.who;
      for (std::size_t start = 0; start <= names.size();) {
        std::size_t comma = names.find(',', start);
        if (comma == std::string::npos) comma = names.size();
        std::string name = names.substr(start, comma - start);
        if (name.empty()) fail(p.line, "empty agent name");
        c = c | Coalition::singleton(factory.agent(name));
        start = comma + 1;
      }
      m.set_coalition(c, std::move(r));
    } else {
      m.set_agent(factory.agent(p.who), std::move(r));
    }
  }

  for (const auto& [line, body] : vals) {
    auto colon = body.find(':');
    auto head = words(std::string_view(body).substr(0, colon));
    if (head.size() != 1) fail(line, "expected 'val <state>: atoms'");
    auto s = m.find_state(head[0]);
    if (!s) fail(line, "unknown state '" + head[0] + "'");
    for (const std::string& a : words(std::string_view(body).substr(colon + 1))) m.set_atom(*s, factory.atom_id(a));
  }

  if (pseudo) {
    // Monotonicity: a larger coalition never relates more states.
    for (const auto& [c1, r1] : m.coalition_relations()) {
      for (const auto& [c2, r2] : m.coalition_relations()) {
        if (c2 != c1 && c2.subset_of(c1) && !r1.subset_of(r2)) {
          throw ModelError("coalition relations are not monotone for {" + factory.coalition_text(c1) + "} and {" +
                           factory.coalition_text(c2) + "}");
        }
      }
      for (AgentId x : c1.members()) {
        if (m.agent_relations().count(x) != 0 && !r1.subset_of(m.relation(Coalition::singleton(x)))) {
          throw ModelError("coalition relation for {" + factory.coalition_text(c1) +
                           "} is not contained in the relation of agent " + factory.agent_name(x));
        }
      }
    }
  }
  return m;
}

std::string write_model(const KripkeStructure& m, const FormulaFactory& factory) {
  std::ostringstream out;
  out << "states:";
  for (std::uint32_t s = 0; s < m.size(); ++s) out << ' ' << m.name(s);
  out << '\n';
  auto emit_blocks = [&](const Relation& r) {
    if (!r.equivalence()) throw ModelError("only equivalence relations can be written");
    for (const auto& b : r.blocks()) {
      out << " {";
      for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << m.name(b[i]);
      out << '}';
    }
    out << '\n';
  };
  for (const auto& [a, r] : m.agent_relations()) {
    out << "agent " << factory.agent_name(a) << ':';
    emit_blocks(r);
  }
  for (const auto& [c, r] : m.coalition_relations()) {
    out << "coalition " << factory.coalition_text(c) << ':';
    emit_blocks(r);
  }
  for (std::uint32_t s = 0; s < m.size(); ++s) {
    auto atoms = m.true_atoms(s);
    if (atoms.empty()) continue;
    out << "val " << m.name(s) << ':';
    for (AtomId p : atoms) out << ' ' << factory.atom_name(p);
    out << '\n';
  }
  return out.str();
}

}  // namespace emltab
