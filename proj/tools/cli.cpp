#include "cli.hpp"

#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "autgrp/action.hpp"
#include "autgrp/construct.hpp"
#include "autgrp/error.hpp"
#include "autgrp/io.hpp"
#include "autgrp/verify.hpp"
#include "autgrp/word_problem.hpp"

namespace autgrp::cli {

namespace {

struct Invocation {
  std::string command;
  std::string builtin_name;
  std::string file;
  std::vector<std::string> words;
  std::vector<std::string> inputs;
  std::string vertex;
  std::size_t levels = 2;
  std::string variant = "corrected";
  std::size_t cap = 100;
  std::size_t budget = kDefaultBudget;
  std::string out;
  std::string format = "table";
  std::string sep;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Automaton load(Invocation const& inv) {
  if (!inv.builtin_name.empty() && !inv.file.empty()) {
    throw UsageError("give exactly one of --builtin and --file");
  }
  if (!inv.builtin_name.empty()) return builtin(inv.builtin_name);
  if (inv.file.empty()) throw UsageError("an automaton is required (--builtin NAME or --file PATH)");
  std::ifstream in(inv.file);
  if (!in) throw UsageError("cannot open '" + inv.file + "'");
  std::stringstream text;
  text << in.rdbuf();
  return parse_automaton(text.str());
}

GroupWord single_word(Invocation const& inv, Automaton const& a) {
  if (inv.words.size() != 1) throw UsageError(inv.command + " needs exactly one --word");
  return parse_word(inv.words.front(), a);
}

InputWord letters(std::string const& text, std::size_t degree, Invocation const& inv) {
  return parse_letters(text, degree, inv.sep);
}

std::string single_input(Invocation const& inv) {
  if (inv.inputs.size() != 1) throw UsageError(inv.command + " needs exactly one --input");
  return inv.inputs.front();
}

std::string format_decomposition(Decomposition const& dec, Automaton const& a) {
  std::string out = to_string(dec.root) + " (";
  for (std::size_t i = 0; i < dec.coords.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(dec.coords[i], a);
  }
  return out + ")";
}

int report_verdict(TrivialityVerdict const& v, std::string_view yes, std::string_view no,
                   Invocation const& inv, std::ostream& out) {
  switch (v.kind) {
    case TrivialityVerdict::Kind::trivial:
      out << yes << '\n';
      return kOk;
    case TrivialityVerdict::Kind::nontrivial:
      out << no << ' ' << format_letters(v.witness, inv.sep) << '\n';
      return kClaimFailed;
    case TrivialityVerdict::Kind::budget_exceeded:
      out << "budget-exceeded after " << v.explored << " states\n";
      return kBudget;
  }
  return kUsage;
}

int dispatch(Invocation const& inv, std::ostream& out) {
  auto const& cmd = inv.command;

  if (cmd == "verify-paper") {
    if (inv.format != "table" && inv.format != "records") {
      throw UsageError("--format must be table or records");
    }
    bool ok = true;
    bool first = true;
    for (auto const& report : verify_all(inv.budget)) {
      if (inv.format == "records") {
        print_records(out, report);
      } else {
        if (!first) out << '\n';
        print_table(out, report);
      }
      first = false;
      ok = ok && report.passed();
    }
    return ok ? kOk : kClaimFailed;
  }

  if (cmd == "interleave") {
    if (inv.inputs.empty()) throw UsageError("interleave needs at least one --input");
    std::size_t degree = 9;
    if (!inv.builtin_name.empty() || !inv.file.empty()) degree = load(inv).degree();
    std::vector<InputWord> streams;
    for (auto const& text : inv.inputs) streams.push_back(letters(text, degree, inv));
    out << format_letters(interleave(streams), inv.sep) << '\n';
    return kOk;
  }

  auto const a = load(inv);
  std::size_t const d = a.degree();

  if (cmd == "act") {
    auto const w = letters(single_input(inv), d, inv);
    out << format_letters(act(a, single_word(inv, a), w), inv.sep) << '\n';
  } else if (cmd == "transition") {
    auto const g = single_word(inv, a);
    if (g.size() > 1 || (g.size() == 1 && g.letters().front().inverse)) {
      throw UsageError("transition needs a single state as --word");
    }
    StateId const q = g.empty() ? kIdentity : g.letters().front().state;
    auto const w = letters(single_input(inv), d, inv);
    out << a.name(transition(a, q, w)) << '\n';
  } else if (cmd == "restrict") {
    auto const v = letters(inv.vertex, d, inv);
    out << to_string(restriction(a, single_word(inv, a), v), a) << '\n';
  } else if (cmd == "decompose") {
    out << format_decomposition(decompose(a, single_word(inv, a)), a) << '\n';
  } else if (cmd == "root-perm") {
    out << to_string(root_perm(a, single_word(inv, a))) << '\n';
  } else if (cmd == "trivial") {
    return report_verdict(is_trivial(a, single_word(inv, a), inv.budget), "trivial",
                          "nontrivial", inv, out);
  } else if (cmd == "equal") {
    if (inv.words.size() != 2) throw UsageError("equal needs exactly two --word options");
    auto const g = parse_word(inv.words[0], a);
    auto const h = parse_word(inv.words[1], a);
    return report_verdict(are_equal(a, g, h, inv.budget), "equal", "not-equal", inv, out);
  } else if (cmd == "order") {
    auto const order = element_order(a, single_word(inv, a), inv.cap, inv.budget);
    if (order) {
      out << *order << '\n';
    } else {
      out << "exceeds cap " << inv.cap << '\n';
    }
  } else if (cmd == "minimize") {
    auto const result = minimize(a);
    out << print_automaton(result.automaton);
    for (auto const& def : a.states()) {
      out << "# " << def.name << " -> " << result.mapping.at(def.name) << '\n';
    }
  } else if (cmd == "inverse") {
    out << print_automaton(inverse_automaton(a));
  } else if (cmd == "power") {
    out << print_automaton(direct_power(a, inv.levels, parse_power_variant(inv.variant)));
  } else if (cmd == "dot") {
    out << export_dot(a);
  } else if (cmd == "print") {
    out << print_automaton(a);
  } else {
    throw UsageError("unknown command '" + cmd + "'");
  }
  return kOk;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Workbench for groups generated by invertible Mealy automata", "autgrp"};
  app.require_subcommand(1, 1);

  auto source = [&](CLI::App* sub) {
    sub->add_option("--builtin", inv.builtin_name, "Builtin automaton: adding, gabc or gab");
    sub->add_option("--file", inv.file, "Automaton DSL file");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", inv.out, "Write output to PATH instead of stdout");
    sub->add_option("--sep", inv.sep, "Separator between letters of input words");
  };

  struct Spec {
    char const* name;
    char const* help;
    bool word, input, vertex, budget, cap, power;
  };
  std::array<Spec, 15> const specs{{
      {"act", "Apply a group word to an input word", true, true, false, false, false, false},
      {"transition", "State reached from a state after reading a word", true, true, false, false, false, false},
      {"restrict", "Restriction of a group word at a vertex", true, false, true, false, false, false},
      {"decompose", "Wreath decomposition of a group word", true, false, false, false, false, false},
      {"root-perm", "Action of a group word on the first level", true, false, false, false, false, false},
      {"trivial", "Decide whether a group word is the identity", true, false, false, true, false, false},
      {"equal", "Decide whether two group words are equal", true, false, false, true, false, false},
      {"order", "Order of a group word up to --cap", true, false, false, true, true, false},
      {"minimize", "Merge states that act identically", false, false, false, false, false, false},
      {"inverse", "Automaton of inverse states", false, false, false, false, false, false},
      {"power", "Automaton for a direct power of the group", false, false, false, false, false, true},
      {"interleave", "Interleave equal-length input words", false, true, false, false, false, false},
      {"dot", "Moore diagram in DOT", false, false, false, false, false, false},
      {"print", "Canonical DSL document", false, false, false, false, false, false},
      {"verify-paper", "Run every claim suite", false, false, false, true, false, false},
  }};

  for (auto const& spec : specs) {
    auto* sub = app.add_subcommand(spec.name, spec.help);
    sub->callback([&inv, name = std::string(spec.name)] { inv.command = name; });
    if (std::string_view(spec.name) != "verify-paper") source(sub);
    common(sub);
    if (spec.word) sub->add_option("--word", inv.words, "Group word, e.g. a*b^2*c^-1");
    if (spec.input) sub->add_option("--input", inv.inputs, "Input word over 1..d");
    if (spec.vertex) sub->add_option("--vertex", inv.vertex, "Vertex of the tree")->required();
    if (spec.budget) {
      sub->add_option("--budget", inv.budget, "Maximum product states visited")
          ->check(CLI::PositiveNumber);
    }
    if (spec.cap) sub->add_option("--cap", inv.cap, "Largest order tried")->check(CLI::PositiveNumber);
    if (spec.power) {
      sub->add_option("--levels", inv.levels, "Power L")->check(CLI::PositiveNumber);
      sub->add_option("--variant", inv.variant, "corrected or paper-literal");
    }
    if (std::string_view(spec.name) == "verify-paper") {
      sub->add_option("--format", inv.format, "table or records");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buffer;
  int status = kUsage;
  try {
    status = dispatch(inv, buffer);
  } catch (UsageError const& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (Error const& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return e.kind() == ErrorKind::budget_exceeded ? kBudget : kUsage;
  }

  if (inv.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(inv.out);
    if (!file) {
      err << "error: cannot write '" << inv.out << "'\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace autgrp::cli
