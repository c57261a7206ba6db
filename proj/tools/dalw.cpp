// dalw: command-line front end.
// Exit codes: 0 valid/true/accepted, 1 invalid/false/countermodel, 2 error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dal/decide.hpp"
#include "dal/duality.hpp"
#include "dal/formats.hpp"
#include "dal/proof.hpp"

namespace {

using namespace dal;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    auto b = item.find_first_not_of(' ');
    auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

struct Globals {
  std::string logic = "dal";
  std::string alphabet;

  Language language() const {
    Language lang(parse_variant(logic));
    if (!alphabet.empty()) lang.alphabet = split(alphabet, ',');
    return lang;
  }
};

std::string value_label(const FiniteLattice& l, Elem x) {
  if (x == l.top()) return "top";
  if (x == l.bot()) return "bot";
  return l.name(x);
}

int cmd_parse(const Globals& g, const std::string& text, bool action) {
  const Language lang = g.language();
  std::cout << (action ? print_action(parse_action(text, lang)) : print_formula(parse_formula(text, lang))) << "\n";
  return 0;
}

int cmd_eval_model(const Globals& g, const std::string& model_path, const std::string& text) {
  auto [m, v] = read_model(slurp(model_path));
  const bool ok = sat(m, v, parse_formula(text, g.language()));
  std::cout << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int cmd_eval_algebra(const Globals& g, const std::string& algebra_path, const std::string& interp,
                     const std::string& text) {
  DeonticAlgebra d = read_algebra(slurp(algebra_path));
  const Formula f = parse_formula(text, g.language());
  const Interpretation h = parse_interpretation(interp, d, symbols(f));
  const Elem x = evaluate(d, h, f);
  std::cout << value_label(d.formulas(), x) << "\n";
  return x == d.formulas().top() ? 0 : 1;
}

int cmd_decide(const Globals& g, const std::string& text, std::size_t budget) {
  const Language lang = g.language();
  DecideOptions opts;
  opts.node_budget = budget;
  auto r = decide_classical(parse_formula(text, lang), lang, opts);
  if (r.valid) {
    std::cout << "valid\n";
    return 0;
  }
  std::cout << "countermodel\n" << write_model(*r.model, *r.valuation);
  return 1;
}

int cmd_countermodel(const Globals& g, const std::string& text, const HeytingBudget& budget) {
  const Language lang = g.language();
  auto r = countermodel_heyting(parse_formula(text, lang), lang, budget);
  if (!r.refuted) {
    std::cout << "unknown: " << r.note << " after " << r.algebras_tried << " algebras\n";
    return 0;
  }
  std::cout << "countermodel\n" << write_algebra(*r.algebra);
  std::cout << "# interpretation: " << describe(*r.algebra, *r.interpretation) << "\n";
  return 1;
}

int cmd_check_algebra(const std::string& path, int ndal) {
  std::optional<DeonticAlgebra> parsed;
  try {
    parsed = read_algebra(slurp(path));
  } catch (const ConditionViolated& e) {
    std::cout << e.what() << "\n";
    return 1;
  }
  const DeonticAlgebra& d = *parsed;
  int status = 0;
  for (const auto* side : {&d.actions(), &d.formulas()}) {
    for (const auto& v : validate(*side, side->kind())) {
      std::cout << (side == &d.actions() ? "actions" : "formulas") << ": law " << v.law << " fails\n";
      status = 1;
    }
  }
  const auto ideals = preimage_ideals(d);
  std::cout << "flavor " << to_string(d.flavor()) << "\n";
  std::cout << "permitted ideal: " << ideals.permitted.size() << " elements, forbidden ideal: "
            << ideals.forbidden.size() << " elements, shared: " << ideals.intersection.size() << "\n";
  if (ndal > 0) {
    std::vector<Elem> gens;
    for (const auto& [name, x] : d.actions().generators()) gens.push_back(x);
    if (gens.empty())
      for (Elem a : d.actions().atoms()) gens.push_back(a);
    const bool in = in_ndal_class(d, gens, ndal);
    std::cout << "ndal" << ndal << ": " << (in ? "yes" : "no") << "\n";
    if (!in) status = 1;
  }
  if (status == 0) std::cout << "ok\n";
  return status;
}

int cmd_check_proof(const std::string& path) {
  const Proof p = parse_proof(slurp(path));
  const ProofCheck c = check_proof(p);
  if (c.ok) {
    std::cout << "ok: " << p.lines.size() << " lines\n";
    return 0;
  }
  std::cout << "line " << c.line << ": " << c.reason << "\n";
  return 1;
}

int cmd_quotient(const std::string& descriptor, const std::string& partition) {
  const FiniteLattice l = lattice_from_descriptor(descriptor);
  Partition classes;
  for (const auto& block : split(partition, '|')) {
    std::vector<Elem> c;
    for (const auto& ref : split(block, ';')) c.push_back(resolve_element(l, ref));
    classes.push_back(std::move(c));
  }
  try {
    const FiniteLattice q = quotient(l, classes);
    std::cout << "quotient: " << q.size() << " elements, " << to_string(q.kind()) << "\n";
    for (Elem x = 0; x < q.size(); ++x) std::cout << "  " << q.name(x) << "\n";
    return 0;
  } catch (const NotACongruence& e) {
    auto [x, y] = e.witness();
    std::cout << e.what() << " (" << l.name(x) << ", " << l.name(y) << ")\n";
    return 1;
  }
}

int cmd_convert(const std::string& to_algebra_path, const std::string& to_model_path, const std::string& interp) {
  if (!to_algebra_path.empty()) {
    auto [m, v] = read_model(slurp(to_algebra_path));
    auto a = to_algebra(m, v);
    std::cout << write_algebra(a.concrete.algebra);
    std::cout << "# interpretation: " << describe(a.concrete.algebra, a.h) << "\n";
    return 0;
  }
  DeonticAlgebra d = read_algebra(slurp(to_model_path));
  SymbolSet none;
  const Interpretation h = parse_interpretation(interp, d, none);
  const Stoneified s = stoneify(d);
  auto [m, v] = to_model(s.concrete, transport(s, h));
  std::cout << write_model(m, v);
  return 0;
}

int cmd_catalog(const std::string& kind, std::size_t max_size) {
  std::vector<FiniteLattice> ls;
  if (kind == "heyting") {
    ls = heyting_algebras_up_to(max_size);
  } else if (kind == "boolean") {
    std::vector<std::string> atoms;
    while ((std::size_t{1} << atoms.size()) <= max_size) {
      ls.push_back(powerset_algebra(atoms));
      atoms.push_back("u" + std::to_string(atoms.size() + 1));
    }
  } else {
    throw FormatError("unknown catalog '" + kind + "' (heyting, boolean)");
  }
  for (const auto& l : ls) std::cout << l.size() << "\t" << to_string(l.kind()) << "\t" << l.descriptor() << "\n";
  return 0;
}

int cmd_dot(const std::string& algebra_path, const std::string& descriptor) {
  if (!algebra_path.empty()) {
    std::cout << to_dot(read_algebra(slurp(algebra_path)));
  } else {
    std::cout << to_dot(lattice_from_descriptor(descriptor));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for deontic action logics"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--logic", g.logic, "dal, ndal1..ndal5, dal_prop, dal_ipl, dal_ial, dal_int");
  app.add_option("--alphabet", g.alphabet, "declared basic actions, comma separated");
  app.fallthrough();

  std::string formula, model_path, algebra_path, interp, descriptor, partition, kind = "heyting";
  std::string to_algebra_path, to_model_path, file;
  bool action = false;
  std::size_t budget = 50'000'000, max_size = 8;
  int ndal = 0;
  HeytingBudget hb;
  int status = 2;

  auto* parse = app.add_subcommand("parse", "print the canonical form");
  parse->add_option("term", formula)->required();
  parse->add_flag("--action", action, "parse an action term");
  parse->callback([&] { status = cmd_parse(g, formula, action); });

  auto* em = app.add_subcommand("eval-model", "evaluate a formula in a model file");
  em->add_option("--model", model_path)->required();
  em->add_option("formula", formula)->required();
  em->callback([&] { status = cmd_eval_model(g, model_path, formula); });

  auto* ea = app.add_subcommand("eval-algebra", "evaluate a formula in an algebra file");
  ea->add_option("--algebra", algebra_path)->required();
  ea->add_option("--interp", interp, "name=element,...");
  ea->add_option("formula", formula)->required();
  ea->callback([&] { status = cmd_eval_algebra(g, algebra_path, interp, formula); });

  auto* dc = app.add_subcommand("decide", "decide validity (classical variants)");
  dc->add_option("formula", formula)->required();
  dc->add_option("--budget", budget, "search node budget");
  dc->callback([&] { status = cmd_decide(g, formula, budget); });

  auto* cm = app.add_subcommand("countermodel", "search a countermodel (intuitionistic variants)");
  cm->add_option("formula", formula)->required();
  cm->add_option("--max-action-size", hb.max_action_size);
  cm->add_option("--max-formula-size", hb.max_formula_size);
  cm->add_option("--max-algebras", hb.max_algebras);
  cm->add_option("--max-interpretations", hb.max_interpretations);
  cm->add_flag("--graded", hb.graded_equality, "use the graded equality instead of the crisp one");
  cm->callback([&] { status = cmd_countermodel(g, formula, hb); });

  auto* ca = app.add_subcommand("check-algebra", "validate an algebra file");
  ca->add_option("file", file)->required();
  ca->add_option("--ndal", ndal, "also test membership in the NDALk class")->check(CLI::Range(1, 5));
  ca->callback([&] { status = cmd_check_algebra(file, ndal); });

  auto* cp = app.add_subcommand("check-proof", "check a proof file");
  cp->add_option("file", file)->required();
  cp->callback([&] { status = cmd_check_proof(file); });

  auto* qt = app.add_subcommand("quotient", "quotient a lattice by a partition");
  qt->add_option("--lattice", descriptor, "e.g. \"chain 4\"")->required();
  qt->add_option("--partition", partition, "classes separated by '|', elements by ';'")->required();
  qt->callback([&] { status = cmd_quotient(descriptor, partition); });

  auto* cv = app.add_subcommand("convert", "translate between models and algebras");
  auto* ta = cv->add_option("--to-algebra", to_algebra_path, "model file");
  auto* tm = cv->add_option("--to-model", to_model_path, "Boolean algebra file");
  ta->excludes(tm);
  cv->add_option("--interp", interp, "interpretation for --to-model");
  cv->require_option(1);
  cv->callback([&] { status = cmd_convert(to_algebra_path, to_model_path, interp); });

  auto* cg = app.add_subcommand("catalog", "list finite algebras");
  cg->add_option("--kind", kind, "heyting or boolean");
  cg->add_option("--max-size", max_size);
  cg->callback([&] { status = cmd_catalog(kind, max_size); });

  auto* dt = app.add_subcommand("dot", "Hasse diagram in DOT");
  auto* da = dt->add_option("--algebra", algebra_path);
  auto* dl = dt->add_option("--lattice", descriptor);
  da->excludes(dl);
  dt->require_option(1);
  dt->callback([&] { status = cmd_dot(algebra_path, descriptor); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
