// gcalc: evaluate tangle programs, compute Alexander-type invariants and run
// the randomized identity suites.
//
// Exit status: 0 when everything checked holds, 1 when a check fails, 2 on
// bad input or usage.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gcalc/verify.hpp"
#include "json.hpp"

using namespace gcalc;

namespace {

struct InputError : Error {
  using Error::Error;
};

struct Options {
  std::string input;
  std::string program_text;
  bool structured = false;
  std::string var;
  std::string braid;
  int strands = 0;
  uint64_t seed = 1;
  size_t cases = 100;
  bool serial = false;
  std::string suite;
};

std::string read_input(const Options& o) {
  if (!o.program_text.empty()) return o.program_text;
  if (o.input.empty()) throw InputError("no input: give a file, '-' for standard input, or --program");
  std::ostringstream ss;
  if (o.input == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(o.input);
    if (!f) throw InputError("cannot read '" + o.input + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

TangleProgram read_program(const Options& o) { return parse_program(read_input(o)); }

BraidWord read_braid(const Options& o) {
  if (o.strands < 1) throw InputError("--strands must be at least 1");
  return parse_braid_word(o.braid);
}

void print_polynomial(const Options& o, const std::string& kind, const RationalFn& f, const RenderOptions& ro = {}) {
  if (o.structured) {
    nlohmann::json j;
    j["kind"] = kind;
    j["value"] = render_laurent(f, ro);
    j["normalized"] = render_laurent(doteq_normal(f), ro);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << kind << ": " << render_laurent(f, ro) << "\n";
    std::cout << "normalized: " << render_laurent(doteq_normal(f), ro) << "\n";
  }
}

void print_claim(const Options& o, const Claim& c) { std::cout << (o.structured ? dump_structured(c) + "\n" : render(c)); }

int cmd_eval(const Options& o) {
  Evaluation e = evaluate(read_program(o));
  bool identify = o.var == "t";
  if (!e.closed.empty()) {
    RationalFn w = traced_omega(e);
    if (identify) w = identify_all(w);
    if (o.structured) {
      nlohmann::json j;
      j["kind"] = "trace";
      j["closed"] = e.closed;
      j["omega"] = render(w);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "closed: ";
      for (const auto& x : e.closed) std::cout << x << " ";
      std::cout << "\nomega: " << render(w) << "\n";
    }
    return 0;
  }
  GammaElement z = identify ? identify_all(e.tangle.gamma) : e.tangle.gamma;
  if (o.structured) {
    std::cout << dump_structured(z) << "\n";
  } else {
    std::cout << render(z);
    if (!identify) std::cout << "sigma: " << render(e.tangle.sigma) << "\n";
  }
  return 0;
}

int cmd_alexander(const Options& o) {
  RationalFn d;
  if (!o.braid.empty()) {
    d = alexander_braid_closure(read_braid(o), o.strands);
  } else {
    d = alexander_long_knot(read_program(o));
  }
  print_polynomial(o, "alexander", d);
  return 0;
}

int cmd_link_delta(const Options& o) {
  LinkPresentation l;
  if (!o.braid.empty()) {
    l = link_from_braid(read_braid(o), o.strands);
  } else {
    l.program = read_program(o);
    l.writhe = writhe(l.program);
  }
  print_polynomial(o, "delta", link_delta(l), s_variable());
  return 0;
}

int cmd_gassner(const Options& o) {
  StringLink s = braid_to_program(read_braid(o), o.strands);
  RfMatrix m = gassner_matrix(s);
  if (o.var == "t") m = m.map([](const RationalFn& f) { return identify_all(f); });
  if (o.structured) {
    nlohmann::json j;
    j["kind"] = "gassner";
    j["bottom"] = s.bottom;
    j["top"] = s.top;
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (size_t k = 0; k < m.cols(); ++k) row.push_back(render(m(i, k)));
      rows.push_back(row);
    }
    j["entries"] = rows;
    std::cout << j.dump() << "\n";
  } else {
    for (size_t i = 0; i < m.rows(); ++i) {
      for (size_t k = 0; k < m.cols(); ++k) std::cout << (k ? "  " : "") << render(m(i, k));
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_ribbon_check(const Options& o) {
  UpDownTangle u;
  if (!o.braid.empty()) {
    StringLink s = braid_to_program(read_braid(o), o.strands);
    if (!s.is_pure()) s = compose(s, sorting_braid(s));
    u = double_link(s);
  } else {
    u.program = read_program(o);
    size_t m = evaluate(u.program).tangle.gamma.size();
    if (m == 0 || m % 2 != 0) throw InputError("an up-down tangle needs an even, nonzero number of strands");
    u.n = static_cast<int>(m / 2);
  }
  RibbonCertificate c;
  try {
    c = fox_milnor_check(u);
  } catch (const NotRibbonWitness& e) {
    std::cerr << "gcalc: " << e.what() << "\n";
    return 1;
  }
  print_claim(o, c.f_routes);
  print_claim(o, c.fox_milnor);
  if (!o.structured) std::cout << "f: " << render_laurent(identify_all(c.f)) << "\n";
  return c.f_routes.holds && c.fox_milnor.holds ? 0 : 1;
}

int cmd_verify(const Options& o) {
  if (o.cases < 1) throw InputError("--cases must be at least 1");
  SuiteReport r = run_suite(o.suite, o.seed, o.cases, o.serial ? Execution::Serial : Execution::Parallel);
  for (const auto& c : r.cases) {
    if (o.structured) {
      nlohmann::json j;
      j["kind"] = "case";
      j["suite"] = r.suite;
      j["index"] = c.index;
      j["verdict"] = c.pass ? "pass" : "fail";
      j["detail"] = c.detail;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "case " << c.index << ": " << (c.pass ? "PASS" : "FAIL") << "  " << c.detail << "\n";
    }
  }
  if (o.structured) {
    nlohmann::json j;
    j["kind"] = "summary";
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["passed"] = r.passed();
    j["cases"] = r.cases.size();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << r.suite << ": " << r.passed() << "/" << r.cases.size() << " passed (seed " << r.seed << ")\n";
  }
  return r.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gamma-calculus engine for tangle invariants"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* c) {
    auto* pretty = c->add_flag("--pretty", "human-readable output (default)");
    c->add_flag("--structured", o.structured, "one JSON record per line")->excludes(pretty);
  };
  auto add_input = [&](CLI::App* c) {
    c->add_option("input", o.input, "program file, or - for standard input");
    c->add_option("-p,--program", o.program_text, "program text given inline");
  };
  auto add_braid = [&](CLI::App* c, bool required) {
    auto* b = c->add_option("--braid", o.braid, "braid word such as \"1 -2 1 -2\"");
    auto* n = c->add_option("--strands", o.strands, "number of strands");
    if (required) {
      b->required();
      n->required();
    } else {
      b->needs(n);
    }
  };

  auto* eval = app.add_subcommand("eval", "evaluate a tangle program");
  add_input(eval);
  add_output(eval);
  eval->add_option("--var", o.var, "identify all strand variables with this one")->check(CLI::IsMember({"t"}));

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a long knot program or a braid closure");
  add_input(alex);
  add_braid(alex, false);
  add_output(alex);

  auto* delta = app.add_subcommand("link-delta", "normalized link polynomial in s, with t = s^2");
  add_input(delta);
  add_braid(delta, false);
  add_output(delta);

  auto* gass = app.add_subcommand("gassner", "Gassner matrix of a braid");
  add_braid(gass, true);
  add_output(gass);
  gass->add_option("--var", o.var, "identify all strand variables (Burau matrix)")->check(CLI::IsMember({"t"}));

  auto* ribbon = app.add_subcommand("ribbon-check", "Fox-Milnor certificate for an up-down tangle");
  add_input(ribbon);
  add_braid(ribbon, false);
  ribbon->footer("With --braid the tangle is the double of the braid, made pure first if needed.");
  add_output(ribbon);

  auto* verify = app.add_subcommand("verify", "run a randomized identity suite");
  verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed, "seed for the case generators")->capture_default_str();
  verify->add_option("--cases", o.cases, "number of cases")->capture_default_str();
  verify->add_flag("--serial", o.serial, "run the cases on one thread");
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*alex) return cmd_alexander(o);
    if (*delta) return cmd_link_delta(o);
    if (*gass) return cmd_gassner(o);
    if (*ribbon) return cmd_ribbon_check(o);
    if (*verify) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "gcalc: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
