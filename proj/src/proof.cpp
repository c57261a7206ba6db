#include "dal/proof.hpp"

#include <algorithm>
#include <sstream>

namespace dal {

namespace {

struct SchemaText {
  const char* id;
  const char* text;
};

constexpr SchemaText kActionGroup[] = {
    {"A1", "X * (Y * Z) == (X * Y) * Z"},
    {"A2", "X * Y == Y * X"},
    {"A3", "X * X == X"},
    {"A4", "X * (X + Y) == X"},
    {"A5", "X * (Y + Z) == X * Y + X * Z"},
    {"A6", "X * 0 == 0"},
    {"A7", "X * ~X == 0"},
    {"A8", "X + (Y + Z) == (X + Y) + Z"},
    {"A9", "X + Y == Y + X"},
    {"A10", "X + X == X"},
    {"A11", "X + X * Y == X"},
    {"A12", "X + Y * Z == (X + Y) * (X + Z)"},
    {"A13", "X + 1 == 1"},
};

constexpr SchemaText kActionLem = {"LEM", "X + ~X == 1"};

// Heyting axioms on actions: the standard law X*(X~>Y) = X*Y replaces the
// first Heyting equation, and complement is tied to implication.
constexpr SchemaText kActionHeyting[] = {
    {"AH1", "X * (X ~> Y) == X * Y"},
    {"AH2", "((X * Y) ~> X) * Z == Z"},
    {"AH3", "X * (Y ~> Z) == X * ((X * Y) ~> (X * Z))"},
    {"AHC", "~X == X ~> 0"},
};

constexpr SchemaText kFormulaGroup[] = {
    {"A1'", "P & (Q & R) <-> (P & Q) & R"},
    {"A2'", "P & Q <-> Q & P"},
    {"A3'", "P & P <-> P"},
    {"A4'", "P & (P | Q) <-> P"},
    {"A5'", "P & (Q | R) <-> (P & Q) | (P & R)"},
    {"A6'", "P & false <-> false"},
    {"A7'", "P & !P <-> false"},
    {"A8'", "P | (Q | R) <-> (P | Q) | R"},
    {"A9'", "P | Q <-> Q | P"},
    {"A10'", "P | P <-> P"},
    {"A11'", "P | (P & Q) <-> P"},
    {"A12'", "P | (Q & R) <-> (P | Q) & (P | R)"},
    {"A13'", "P | true <-> true"},
    {"LEM'", "P | !P <-> true"},
};

constexpr SchemaText kIntuitionistic[] = {
    {"H1", "P -> P | Q"},
    {"H2", "P -> Q | P"},
    {"H3", "P & Q -> P"},
    {"H4", "P & Q -> Q"},
    {"H5", "(P -> false) -> !P"},
    {"H6", "!P -> (P -> false)"},
    {"H7", "false -> P"},
    {"H8", "P -> true"},
    {"H9", "P -> (Q -> P)"},
    {"H10", "P -> (Q -> P & Q)"},
    {"H11", "(P -> R) -> ((Q -> R) -> (P | Q -> R))"},
    {"H12", "(P -> (Q -> R)) -> ((P -> Q) -> (P -> R))"},
};

constexpr SchemaText kEquality[] = {
    {"E1", "X == X"},
    {"E2", "(X == Y & P) -> Q"},
};

constexpr SchemaText kDeontic[] = {
    {"D1", "perm(X + Y) <-> perm(X) & perm(Y)"},
    {"D2", "forb(X + Y) <-> forb(X) & forb(Y)"},
    {"D3", "perm(X) & forb(X) <-> X == 0"},
};

AxiomSchema schema(const SchemaText& s, LogicVariant v) {
  AxiomSchema a{s.id, detail::parse_schema(s.text, v), AxiomSchema::Kind::Plain, {}};
  if (std::string(s.id) == "E2") a.kind = AxiomSchema::Kind::Substitution;
  return a;
}

Action meet_all(const std::vector<Action>& xs) {
  Action m = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) m = Action::meet(m, xs[i]);
  return m;
}

Action join_all(const std::vector<Action>& xs) {
  Action m = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) m = Action::join(m, xs[i]);
  return m;
}

Formula closed(const Action& a) { return Formula::disj(Formula::perm(a), Formula::forb(a)); }

bool match(const Action& pat, const Action& a, Bindings& b) {
  if (pat.kind() == Action::Kind::Basic && detail::is_metavariable(pat.name())) {
    auto [it, fresh] = b.actions.emplace(pat.name(), a);
    return fresh || it->second == a;
  }
  if (pat.kind() != a.kind()) return false;
  switch (pat.kind()) {
    case Action::Kind::Basic: return pat.name() == a.name();
    case Action::Kind::Zero:
    case Action::Kind::One: return true;
    case Action::Kind::Compl: return match(pat.left(), a.left(), b);
    default: return match(pat.left(), a.left(), b) && match(pat.right(), a.right(), b);
  }
}

bool match(const Formula& pat, const Formula& f, Bindings& b) {
  if (pat.kind() == Formula::Kind::Prop && detail::is_metavariable(pat.name())) {
    auto [it, fresh] = b.formulas.emplace(pat.name(), f);
    return fresh || it->second == f;
  }
  if (pat.kind() != f.kind()) return false;
  switch (pat.kind()) {
    case Formula::Kind::Eq:
      return match(pat.action(), f.action(), b) && match(pat.action_right(), f.action_right(), b);
    case Formula::Kind::Perm:
    case Formula::Kind::Forb: return match(pat.action(), f.action(), b);
    case Formula::Kind::Prop: return pat.name() == f.name();
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return true;
    case Formula::Kind::Not: return match(pat.left(), f.left(), b);
    default: return match(pat.left(), f.left(), b) && match(pat.right(), f.right(), b);
  }
}

}  // namespace

std::vector<AxiomSchema> axiom_table(const Language& lang) {
  const LogicVariant v = lang.variant;
  if (requires_alphabet(v) && lang.alphabet.empty())
    throw VariantError(to_string(v) + " requires a declared basic-action alphabet");
  std::vector<AxiomSchema> out;
  for (const auto& s : kActionGroup) out.push_back(schema(s, v));
  if (admits_action_implication(v)) {
    for (const auto& s : kActionHeyting) out.push_back(schema(s, v));
  } else {
    out.push_back(schema(kActionLem, v));
  }
  if (has_primitive_implication(v)) {
    for (const auto& s : kIntuitionistic) out.push_back(schema(s, v));
  } else {
    for (const auto& s : kFormulaGroup) out.push_back(schema(s, v));
  }
  for (const auto& s : kEquality) out.push_back(schema(s, v));
  for (const auto& s : kDeontic) out.push_back(schema(s, v));

  const int level = ndal_level(v);
  if (level == 0) return out;
  std::vector<Action> gens;
  for (const auto& a : lang.alphabet) gens.push_back(Action::basic(a));
  if (level != 4) {
    AxiomSchema n1{"N1", closed(Action::basic("?X")), AxiomSchema::Kind::Plain, {"?X"}};
    out.push_back(n1);
  }
  if (level == 2 || level == 3 || level == 5) {
    std::vector<Action> comps;
    for (const auto& g : gens) comps.push_back(Action::complement(g));
    out.push_back({"N2", closed(meet_all(comps)), AxiomSchema::Kind::Plain, {}});
  }
  if (level == 3 || level == 5)
    out.push_back({"N3", Formula::eq(join_all(gens), Action::one()), AxiomSchema::Kind::Plain, {}});
  if (level == 4 || level == 5) {
    if (gens.size() > 6) throw BudgetExceeded("atom axioms support at most 6 basic actions");
    for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
      std::vector<Action> lits;
      for (std::size_t i = 0; i < gens.size(); ++i)
        lits.push_back(mask >> i & 1u ? gens[i] : Action::complement(gens[i]));
      out.push_back({"N4", closed(meet_all(lits)), AxiomSchema::Kind::Plain, {}});
    }
  }
  return out;
}

std::optional<Bindings> match_schema(const Formula& f, const AxiomSchema& s) {
  Bindings b;
  if (!match(s.pattern, f, b)) return std::nullopt;
  for (const auto& name : s.basic_only) {
    auto it = b.actions.find(name);
    if (it != b.actions.end() && it->second.kind() != Action::Kind::Basic) return std::nullopt;
  }
  if (s.kind == AxiomSchema::Kind::Substitution) {
    if (!is_substitution_instance(b.formulas.at("?Q"), b.formulas.at("?P"), b.actions.at("?X"),
                                  b.actions.at("?Y")))
      return std::nullopt;
  }
  return b;
}

ProofCheck check_proof(const Proof& p) {
  const auto table = axiom_table(p.language);
  const bool primitive = has_primitive_implication(p.language.variant);
  auto fail = [](std::size_t line, std::string reason) { return ProofCheck{false, line, std::move(reason)}; };

  for (std::size_t k = 0; k < p.lines.size(); ++k) {
    const ProofLine& line = p.lines[k];
    const std::size_t n = k + 1;
    if (line.number != n)
      return fail(line.number, "line numbers must be consecutive from 1 (expected " + std::to_string(n) + ")");
    if (const auto* ax = std::get_if<AxiomRef>(&line.why)) {
      bool known = false, matched = false;
      for (const auto& s : table) {
        if (s.id != ax->id) continue;
        known = true;
        if (match_schema(line.formula, s)) {
          matched = true;
          break;
        }
      }
      if (!known) return fail(n, "axiom " + ax->id + " is not part of " + to_string(p.language.variant));
      if (!matched) return fail(n, "formula is not an instance of " + ax->id);
      continue;
    }
    const auto& mp = std::get<ModusPonens>(line.why);
    if (mp.minor < 1 || mp.minor >= n || mp.major < 1 || mp.major >= n)
      return fail(n, "modus ponens must cite earlier lines");
    const Formula& minor = p.lines[mp.minor - 1].formula;
    const Formula& major = p.lines[mp.major - 1].formula;
    const Formula expected = primitive ? Formula::implies(minor, line.formula)
                                       : Formula::disj(Formula::neg(minor), line.formula);
    if (major != expected)
      return fail(n, "line " + std::to_string(mp.major) + " is not an implication from line " +
                         std::to_string(mp.minor) + " to this line");
  }
  return {};
}

// ---------------------------------------------------------------------------
// Proof files

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string strip_comment(const std::string& s) {
  auto hash = s.find('#');
  return hash == std::string::npos ? s : s.substr(0, hash);
}

std::size_t to_index(const std::string& s, std::size_t line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) throw FormatError("expected a line number", line);
  return std::stoul(s);
}

}  // namespace

Proof parse_proof(std::string_view text) {
  Proof p;
  bool have_logic = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw FormatError("expected 'key: value' or 'n: formula [why]'", lineno);
    std::string head = trim(line.substr(0, colon));
    std::string rest = trim(line.substr(colon + 1));
    if (head == "logic") {
      p.language.variant = parse_variant(rest);
      have_logic = true;
      continue;
    }
    if (head == "alphabet") {
      std::string name;
      std::istringstream names(rest);
      while (std::getline(names, name, ',')) {
        name = trim(name);
        if (!name.empty()) p.language.alphabet.push_back(name);
      }
      continue;
    }
    if (!have_logic) throw FormatError("proof must start with 'logic: <variant>'", lineno);
    std::size_t number = to_index(head, lineno);
    auto open = rest.rfind('[');
    if (open == std::string::npos || rest.back() != ']')
      throw FormatError("expected a justification in brackets", lineno);
    std::string why = trim(rest.substr(open + 1, rest.size() - open - 2));
    std::string formula_text = trim(rest.substr(0, open));
    Formula f = Formula::top();
    try {
      f = parse_formula(formula_text, p.language);
    } catch (const SyntaxError& e) {
      throw FormatError(e.what(), lineno);
    } catch (const VariantError& e) {
      throw FormatError(e.what(), lineno);
    }
    std::istringstream ws(why);
    std::vector<std::string> words;
    for (std::string w; ws >> w;) words.push_back(w);
    if (words.size() == 3 && (words[0] == "mp" || words[0] == "MP")) {
      p.lines.push_back({number, f, ModusPonens{to_index(words[1], lineno), to_index(words[2], lineno)}});
    } else if (words.size() == 1) {
      p.lines.push_back({number, f, AxiomRef{words[0]}});
    } else {
      throw FormatError("justification must be an axiom id or 'mp i j'", lineno);
    }
  }
  if (!have_logic) throw FormatError("missing 'logic: <variant>' line");
  return p;
}

std::string write_proof(const Proof& p) {
  std::ostringstream out;
  out << "logic: " << to_string(p.language.variant) << "\n";
  if (!p.language.alphabet.empty()) {
    out << "alphabet: ";
    for (std::size_t i = 0; i < p.language.alphabet.size(); ++i) out << (i ? ", " : "") << p.language.alphabet[i];
    out << "\n";
  }
  for (const auto& l : p.lines) {
    out << l.number << ": " << print_formula(l.formula) << " [";
    if (const auto* ax = std::get_if<AxiomRef>(&l.why)) {
      out << ax->id;
    } else {
      const auto& mp = std::get<ModusPonens>(l.why);
      out << "mp " << mp.minor << " " << mp.major;
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace dal
