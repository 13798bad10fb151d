#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "emltab/bench.hpp"
#include "emltab/dot.hpp"
#include "emltab/generator.hpp"
#include "emltab/hintikka.hpp"
#include "emltab/kripke.hpp"
#include "emltab/oracle.hpp"
#include "emltab/parser.hpp"
#include "emltab/tableau.hpp"

namespace emltab::cli {

namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string formula;
  std::string file;
  std::string mode = "restricted";
  bool json = false;
  bool model = false;
  bool trace = false;
  std::string dot_phase;
  bool show_eliminated = false;
  std::string out_file;
  std::string kripke_file;
  std::string state;
  std::size_t max_states = 3;

  // bench
  std::string corpus_file;
  std::size_t generate = 0;
  std::uint64_t seed = 42;
  int depth = 4;
  std::string agents = "a,b,c";
  std::string atoms = "p,q";
  std::string modes = "restricted,unrestricted";
  unsigned threads = 1;
  long timeout_ms = 10000;
  bool csv = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

// Non-empty, non-comment lines.
std::vector<std::string> formula_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

std::vector<Formula> read_input(const Options& o, FormulaFactory& factory, std::ostream& err) {
  std::vector<std::string> texts;
  if (!o.file.empty()) {
    texts = formula_lines(read_file(o.file));
  } else {
    texts.push_back(o.formula);
  }
  if (texts.empty()) throw InputError("no formulas in input");
  std::vector<Formula> out;
  for (const auto& t : texts) {
    try {
      out.push_back(parse(t, factory));
    } catch (const ParseError& e) {
      err << e.what() << '\n' << "  " << t << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
      throw;
    }
  }
  return out;
}

CutMode mode_of(const Options& o) {
  auto m = parse_cut_mode(o.mode);
  if (!m) throw InputError("unknown mode '" + o.mode + "'");
  return *m;
}

void warn_nocut(CutMode m, std::ostream& err) {
  if (m == CutMode::NoCut) {
    err << "warning: no-cut mode is unsound; the verdict is diagnostic only\n";
  }
}

// Writes to --out when given, else to out.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_file);
  if (!f) throw InputError("cannot write '" + o.out_file + "'");
  f << text;
}

json stats_json(const Stats& s) {
  return json{{"ecl_size", s.ecl_size},           {"prestates", s.prestates},
              {"states", s.states},               {"root_states", s.root_states},
              {"solid_edges", s.solid_edges},     {"eliminated_e1", s.eliminated_e1},
              {"eliminated_e2", s.eliminated_e2}, {"cycles", s.cycles}};
}

// Pseudo-model states are named after tableau states: S7 becomes s7.
std::string model_text(const TableauRun& run, const FormulaFactory& factory) {
  return write_model(pseudo_model_from_hintikka(hintikka_from_tableau(run.final_graph)), factory);
}

TableauGraph const& phase_graph(const TableauRun& run, const std::string& phase) {
  if (phase == "pretableau") return run.pretableau;
  if (phase == "initial") return run.initial;
  if (phase == "final") return run.final_graph;
  throw InputError("unknown phase '" + phase + "' (pretableau, initial, final)");
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  FormulaFactory factory;
  std::vector<Formula> theta = read_input(o, factory, err);

  if (!o.kripke_file.empty()) {
    KripkeStructure m = read_model(read_file(o.kripke_file), factory);
    StateSet truth(m.size());
    truth.set();
    for (Formula f : theta) truth &= evaluate(m, f);
    if (!o.state.empty()) {
      auto s = m.find_state(o.state);
      if (!s) throw InputError("unknown state '" + o.state + "'");
      out << (truth.test(*s) ? "true" : "false") << '\n';
      return truth.test(*s) ? kExitSat : kExitUnsat;
    }
    for (std::uint32_t s = 0; s < m.size(); ++s) out << m.name(s) << ' ' << (truth.test(s) ? "true" : "false") << '\n';
    return truth.any() ? kExitSat : kExitUnsat;
  }

  const CutMode mode = mode_of(o);
  warn_nocut(mode, err);
  TableauRun run = run_tableau(factory, theta, mode);
  const Verdict& v = run.verdict;
  const ClosureIndex& idx = run.final_graph.index();

  std::string model;
  if (o.model && v.sat) model = model_text(run, factory);

  if (o.json) {
    json j;
    j["verdict"] = v.sat ? "sat" : "unsat";
    j["mode"] = to_string(mode);
    j["diagnostic"] = v.diagnostic;
    if (v.sat) {
      json w = json::array();
      for (Formula f : label_formulas(idx, run.final_graph.states[*v.witness])) w.push_back(print(f, factory));
      j["witness_label"] = w;
    } else {
      j["witness_label"] = nullptr;
    }
    j["stats"] = stats_json(v.stats);
    if (o.trace) {
      json t = json::array();
      for (const Elimination& e : run.final_graph.log) {
        json r{{"state", e.state},
               {"rule", to_string(e.rule)},
               {"cycle", e.cycle},
               {"label", print_label(idx, run.final_graph.states[e.state])}};
        r["eventuality"] = e.eventuality ? json(idx.print(*e.eventuality)) : json(nullptr);
        t.push_back(r);
      }
      j["trace"] = t;
    }
    if (o.model) {
      j["model"] = v.sat ? json(model) : json(nullptr);
      if (v.sat) j["model_state"] = "s" + std::to_string(*v.witness);
    }
    out << j.dump(2) << '\n';
  } else {
    out << (v.sat ? "sat" : "unsat") << '\n';
    if (v.sat) out << "witness: S" << *v.witness << ' ' << print_label(idx, run.final_graph.states[*v.witness]) << '\n';
    const Stats& s = v.stats;
    out << "states " << s.states << ", prestates " << s.prestates << ", eliminated " << s.eliminated_e1 << " (E1) "
        << s.eliminated_e2 << " (E2), closure " << s.ecl_size << '\n';
    if (o.trace) {
      for (const Elimination& e : run.final_graph.log) {
        out << "cycle " << e.cycle << ": " << to_string(e.rule) << " removes S" << e.state << ' '
            << print_label(idx, run.final_graph.states[e.state]);
        if (e.eventuality) out << " for " << idx.print(*e.eventuality);
        out << '\n';
      }
    }
    if (o.model && v.sat) out << "# pseudo-model, witness state s" << run.verdict.witness.value() << '\n' << model;
  }
  if (!o.dot_phase.empty()) {
    std::ofstream f(o.out_file);
    if (!f) throw InputError("cannot write '" + o.out_file + "'");
    f << to_dot(phase_graph(run, o.dot_phase), o.show_eliminated);
  }
  return v.sat ? kExitSat : kExitUnsat;
}

int cmd_model(const Options& o, std::ostream& out, std::ostream& err) {
  FormulaFactory factory;
  std::vector<Formula> theta = read_input(o, factory, err);
  const CutMode mode = mode_of(o);
  warn_nocut(mode, err);
  TableauRun run = run_tableau(factory, theta, mode);
  if (!run.verdict.sat) {
    out << "unsat\n";
    return kExitUnsat;
  }
  emit(o, out, "# witness: s" + std::to_string(*run.verdict.witness) + "\n" + model_text(run, factory));
  return kExitSat;
}

int cmd_dot(const Options& o, std::ostream& out, std::ostream& err) {
  FormulaFactory factory;
  std::vector<Formula> theta = read_input(o, factory, err);
  const CutMode mode = mode_of(o);
  warn_nocut(mode, err);
  TableauRun run = run_tableau(factory, theta, mode);
  emit(o, out, to_dot(phase_graph(run, o.dot_phase.empty() ? "final" : o.dot_phase), o.show_eliminated));
  return run.verdict.sat ? kExitSat : kExitUnsat;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  FormulaFactory factory;
  std::vector<Formula> theta = read_input(o, factory, err);
  if (o.max_states < 1 || o.max_states > kOracleMaxStates) throw InputError("--max-states must be between 1 and 4");
  auto hit = brute_force_sat(factory.conj_all(theta), o.max_states);
  if (!hit) {
    out << "no model with at most " << o.max_states << " states\n";
    return kExitUnsat;
  }
  emit(o, out, "# satisfied at " + hit->model.name(hit->state) + "\n" + write_model(hit->model, factory));
  return kExitSat;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> corpus;
  if (!o.corpus_file.empty()) {
    corpus = formula_lines(read_file(o.corpus_file));
  } else {
    GenParams p;
    p.max_depth = o.depth;
    p.seed = o.seed;
    p.agents = split(o.agents, ',');
    p.atoms = split(o.atoms, ',');
    if (p.agents.empty() || p.atoms.empty()) throw InputError("--agents and --atoms must be non-empty");
    corpus = generate_corpus(p, o.generate);
  }
  BenchOptions bo;
  bo.modes.clear();
  for (const auto& m : split(o.modes, ',')) {
    auto cm = parse_cut_mode(m);
    if (!cm) throw InputError("unknown mode '" + m + "'");
    warn_nocut(*cm, err);
    bo.modes.push_back(*cm);
  }
  if (bo.modes.empty()) throw InputError("no modes given");
  long timeout = o.timeout_ms;
  if (const char* env = std::getenv("EMLTAB_TIMEOUT_MS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) throw InputError("EMLTAB_TIMEOUT_MS must be a positive integer");
    timeout = v;
  }
  bo.timeout = std::chrono::milliseconds(timeout);
  bo.threads = o.threads;
  BenchReport rep = run_bench(corpus, bo);
  if (o.csv) {
    emit(o, out, rep.csv());
  } else {
    if (!o.out_file.empty()) emit(o, out, rep.csv());
    out << rep.table();
  }
  for (const auto& f : rep.disagreements) err << "disagreement: " << f << '\n';
  return rep.disagreements.empty() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Satisfiability checker for epistemic logic with common and distributed knowledge", "emltab"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    auto* pos = sub->add_option("formula", o.formula, "Formula to decide");
    auto* file = sub->add_option("--file", o.file, "File with one formula per line, read as a set")->check(CLI::ExistingFile);
    pos->excludes(file);
    file->excludes(pos);
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "Cut mode")
        ->check(CLI::IsMember({"restricted", "unrestricted", "no-cut"}))
        ->capture_default_str();
  };
  const std::vector<std::string> phases{"pretableau", "initial", "final"};

  CLI::App* check = app.add_subcommand("check", "Decide satisfiability, or evaluate on a model with --kripke");
  add_input(check);
  add_mode(check);
  auto* json_flag = check->add_flag("--json", o.json, "JSON output");
  check->add_flag("--model", o.model, "Print the extracted pseudo-model");
  check->add_flag("--trace", o.trace, "Print the elimination log");
  auto* dot_opt = check->add_option("--dot", o.dot_phase, "Also write this phase as DOT to --out")->check(CLI::IsMember(phases));
  check->add_flag("--show-eliminated", o.show_eliminated, "Draw eliminated states in DOT output");
  auto* out_opt = check->add_option("--out", o.out_file, "DOT output file");
  dot_opt->needs(out_opt);
  auto* kripke = check->add_option("--kripke", o.kripke_file, "Model file to evaluate the formula on")->check(CLI::ExistingFile);
  check->add_option("--state", o.state, "State of the model file")->needs(kripke);
  kripke->excludes(json_flag)->excludes(dot_opt);

  CLI::App* model = app.add_subcommand("model", "Print a pseudo-model of a satisfiable input");
  add_input(model);
  add_mode(model);
  model->add_option("--out", o.out_file, "Output file");

  CLI::App* dot = app.add_subcommand("dot", "Print a tableau phase in DOT format");
  add_input(dot);
  add_mode(dot);
  dot->add_option("--dot,--phase", o.dot_phase, "Phase")->check(CLI::IsMember(phases));
  dot->add_flag("--show-eliminated", o.show_eliminated, "Draw eliminated states");
  dot->add_option("--out", o.out_file, "Output file");

  CLI::App* oracle = app.add_subcommand("oracle", "Search small models exhaustively");
  add_input(oracle);
  oracle->add_option("--max-states", o.max_states, "State bound (1-4)")->capture_default_str();
  oracle->add_option("--out", o.out_file, "Output file");

  CLI::App* bench = app.add_subcommand("bench", "Run a corpus in several modes");
  auto* corpus = bench->add_option("--corpus", o.corpus_file, "File with one formula per line")->check(CLI::ExistingFile);
  auto* gen = bench->add_option("--generate", o.generate, "Number of random formulas");
  corpus->excludes(gen);
  gen->excludes(corpus);
  bench->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  bench->add_option("--depth", o.depth, "Generator depth bound")->capture_default_str();
  bench->add_option("--agents", o.agents, "Comma-separated agents")->capture_default_str();
  bench->add_option("--atoms", o.atoms, "Comma-separated atoms")->capture_default_str();
  bench->add_option("--modes", o.modes, "Comma-separated cut modes")->capture_default_str();
  bench->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
  bench->add_option("--timeout-ms", o.timeout_ms, "Per-run time limit")->capture_default_str();
  bench->add_flag("--csv", o.csv, "Print CSV instead of the summary table");
  bench->add_option("--out", o.out_file, "Write CSV to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  auto need_input = [&](CLI::App* sub) {
    if (o.formula.empty() && o.file.empty()) throw InputError(sub->get_name() + ": give a formula or --file");
  };

  try {
    if (check->parsed()) {
      need_input(check);
      return cmd_check(o, out, err);
    }
    if (model->parsed()) {
      need_input(model);
      return cmd_model(o, out, err);
    }
    if (dot->parsed()) {
      need_input(dot);
      return cmd_dot(o, out, err);
    }
    if (oracle->parsed()) {
      need_input(oracle);
      return cmd_oracle(o, out, err);
    }
    if (bench->parsed()) {
      if (o.corpus_file.empty() && bench->count("--generate") == 0) throw InputError("bench: give --corpus or --generate");
      return cmd_bench(o, out, err);
    }
  } catch (const ParseError&) {
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LogicError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace emltab::cli
