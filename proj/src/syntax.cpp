#include "dal/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>

namespace dal {

// ---------------------------------------------------------------------------
// Variants

bool admits_propositions(LogicVariant v) {
  switch (v) {
    case LogicVariant::DAL_PROP:
    case LogicVariant::DAL_IPL:
    case LogicVariant::DAL_IAL:
    case LogicVariant::DAL_INT:
      return true;
    default:
      return false;
  }
}

bool admits_action_implication(LogicVariant v) {
  return v == LogicVariant::DAL_IAL || v == LogicVariant::DAL_INT;
}

bool has_primitive_implication(LogicVariant v) {
  return v == LogicVariant::DAL_IPL || v == LogicVariant::DAL_INT;
}

int ndal_level(LogicVariant v) {
  switch (v) {
    case LogicVariant::NDAL1: return 1;
    case LogicVariant::NDAL2: return 2;
    case LogicVariant::NDAL3: return 3;
    case LogicVariant::NDAL4: return 4;
    case LogicVariant::NDAL5: return 5;
    default: return 0;
  }
}

bool is_ndal(LogicVariant v) { return ndal_level(v) != 0; }

bool requires_alphabet(LogicVariant v) { return ndal_level(v) >= 2; }

std::string to_string(LogicVariant v) {
  switch (v) {
    case LogicVariant::DAL: return "dal";
    case LogicVariant::NDAL1: return "ndal1";
    case LogicVariant::NDAL2: return "ndal2";
    case LogicVariant::NDAL3: return "ndal3";
    case LogicVariant::NDAL4: return "ndal4";
    case LogicVariant::NDAL5: return "ndal5";
    case LogicVariant::DAL_PROP: return "dal_prop";
    case LogicVariant::DAL_IPL: return "dal_ipl";
    case LogicVariant::DAL_IAL: return "dal_ial";
    case LogicVariant::DAL_INT: return "dal_int";
  }
  return "?";
}

LogicVariant parse_variant(std::string_view name) {
  std::string n;
  for (char c : name) {
    if (c == '-' || c == '(') c = '_';
    if (c == ')') continue;
    n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (auto v : {LogicVariant::DAL, LogicVariant::NDAL1, LogicVariant::NDAL2, LogicVariant::NDAL3,
                 LogicVariant::NDAL4, LogicVariant::NDAL5, LogicVariant::DAL_PROP, LogicVariant::DAL_IPL,
                 LogicVariant::DAL_IAL, LogicVariant::DAL_INT}) {
    if (to_string(v) == n) return v;
  }
  throw FormatError("unknown logic variant '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Term nodes

struct Action::Node {
  Kind kind;
  std::string name;
  std::optional<Action> lhs, rhs;
};

struct Formula::Node {
  Kind kind;
  std::string name;
  std::optional<Action> act_l, act_r;
  std::optional<Formula> lhs, rhs;
};

namespace {
const std::string kEmpty;
}

Action Action::basic(std::string name) {
  return Action(std::make_shared<const Node>(Node{Kind::Basic, std::move(name), {}, {}}));
}
Action Action::zero() {
  static const Action z(std::make_shared<const Node>(Node{Kind::Zero, {}, {}, {}}));
  return z;
}
Action Action::one() {
  static const Action o(std::make_shared<const Node>(Node{Kind::One, {}, {}, {}}));
  return o;
}
Action Action::join(Action l, Action r) {
  return Action(std::make_shared<const Node>(Node{Kind::Union, {}, std::move(l), std::move(r)}));
}
Action Action::meet(Action l, Action r) {
  return Action(std::make_shared<const Node>(Node{Kind::Inter, {}, std::move(l), std::move(r)}));
}
Action Action::complement(Action t) {
  return Action(std::make_shared<const Node>(Node{Kind::Compl, {}, std::move(t), {}}));
}
Action Action::implies(Action l, Action r) {
  return Action(std::make_shared<const Node>(Node{Kind::Impl, {}, std::move(l), std::move(r)}));
}

Action::Kind Action::kind() const { return node_->kind; }
const std::string& Action::name() const { return node_->name; }
const Action& Action::left() const { return *node_->lhs; }
const Action& Action::right() const { return *node_->rhs; }

bool operator==(const Action& a, const Action& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Action::Kind::Basic: return a.name() == b.name();
    case Action::Kind::Zero:
    case Action::Kind::One: return true;
    case Action::Kind::Compl: return a.left() == b.left();
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

bool operator<(const Action& a, const Action& b) {
  if (a.node_ == b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case Action::Kind::Basic: return a.name() < b.name();
    case Action::Kind::Zero:
    case Action::Kind::One: return false;
    case Action::Kind::Compl: return a.left() < b.left();
    default:
      if (a.left() != b.left()) return a.left() < b.left();
      return a.right() < b.right();
  }
}

Formula Formula::eq(Action l, Action r) {
  return Formula(std::make_shared<const Node>(Node{Kind::Eq, {}, std::move(l), std::move(r), {}, {}}));
}
Formula Formula::perm(Action a) {
  return Formula(std::make_shared<const Node>(Node{Kind::Perm, {}, std::move(a), {}, {}, {}}));
}
Formula Formula::forb(Action a) {
  return Formula(std::make_shared<const Node>(Node{Kind::Forb, {}, std::move(a), {}, {}, {}}));
}
Formula Formula::prop(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::Prop, std::move(name), {}, {}, {}, {}}));
}
Formula Formula::disj(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, {}, {}, std::move(l), std::move(r)}));
}
Formula Formula::conj(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {}, {}, std::move(l), std::move(r)}));
}
Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, {}, std::move(f), {}}));
}
Formula Formula::implies(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Kind::Impl, {}, {}, {}, std::move(l), std::move(r)}));
}
Formula Formula::bottom() {
  static const Formula b(std::make_shared<const Node>(Node{Kind::Bot, {}, {}, {}, {}, {}}));
  return b;
}
Formula Formula::top() {
  static const Formula t(std::make_shared<const Node>(Node{Kind::Top, {}, {}, {}, {}, {}}));
  return t;
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Action& Formula::action() const { return *node_->act_l; }
const Action& Formula::action_right() const { return *node_->act_r; }
const Formula& Formula::left() const { return *node_->lhs; }
const Formula& Formula::right() const { return *node_->rhs; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Eq: return a.action() == b.action() && a.action_right() == b.action_right();
    case Formula::Kind::Perm:
    case Formula::Kind::Forb: return a.action() == b.action();
    case Formula::Kind::Prop: return a.name() == b.name();
    case Formula::Kind::Not: return a.left() == b.left();
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return true;
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case Formula::Kind::Eq:
      if (a.action() != b.action()) return a.action() < b.action();
      return a.action_right() < b.action_right();
    case Formula::Kind::Perm:
    case Formula::Kind::Forb: return a.action() < b.action();
    case Formula::Kind::Prop: return a.name() < b.name();
    case Formula::Kind::Not: return a.left() < b.left();
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return false;
    default:
      if (a.left() != b.left()) return a.left() < b.left();
      return a.right() < b.right();
  }
}

Formula implication(Formula l, Formula r, LogicVariant v) {
  if (has_primitive_implication(v)) return Formula::implies(std::move(l), std::move(r));
  return Formula::disj(Formula::neg(std::move(l)), std::move(r));
}

Formula biconditional(Formula l, Formula r, LogicVariant v) {
  return Formula::conj(implication(l, r, v), implication(r, l, v));
}

Formula obligation(Action a) { return Formula::forb(Action::complement(std::move(a))); }

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  Ident, Meta, Zero, One, True, False, Perm, Forb, Obl,
  LParen, RParen, Tilde, Star, Plus, AImpl, Bang, Amp, Bar, Arrow, Iff, EqEq, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view s, bool schema_mode) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(s.substr(start, len)), start});
      i += len;
    };
    if (std::islower(static_cast<unsigned char>(c)) ||
        (schema_mode && std::isupper(static_cast<unsigned char>(c)))) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      Tok k = Tok::Ident;
      if (std::isupper(static_cast<unsigned char>(c))) k = Tok::Meta;
      else if (word == "true") k = Tok::True;
      else if (word == "false") k = Tok::False;
      else if (word == "perm") k = Tok::Perm;
      else if (word == "forb") k = Tok::Forb;
      else if (word == "obl") k = Tok::Obl;
      out.push_back({k, word, start});
      i = j;
      continue;
    }
    auto rest = s.substr(i);
    if (rest.starts_with("<->")) { push(Tok::Iff, 3); continue; }
    if (rest.starts_with("->")) { push(Tok::Arrow, 2); continue; }
    if (rest.starts_with("~>")) { push(Tok::AImpl, 2); continue; }
    if (rest.starts_with("==")) { push(Tok::EqEq, 2); continue; }
    switch (c) {
      case '0': push(Tok::Zero, 1); continue;
      case '1': push(Tok::One, 1); continue;
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '~': push(Tok::Tilde, 1); continue;
      case '*': push(Tok::Star, 1); continue;
      case '+': push(Tok::Plus, 1); continue;
      case '!': push(Tok::Bang, 1); continue;
      case '&': push(Tok::Amp, 1); continue;
      case '|': push(Tok::Bar, 1); continue;
      default: break;
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "'", i);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent; an atom `α == β` is tried before the other
// formula atoms and abandoned on a syntax error.

class Parser {
 public:
  Parser(std::string_view text, LogicVariant v, bool schema_mode)
      : toks_(tokenize(text, schema_mode)), variant_(v) {}

  Formula whole_formula() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  Action whole_action() {
    Action a = action();
    expect(Tok::End, "end of input");
    return a;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw SyntaxError(std::string("expected ") + what + ", found " + describe(peek()), peek().pos);
  }

  Formula formula() {
    Formula f = implication_level();
    while (accept(Tok::Iff)) f = biconditional(f, implication_level(), variant_);
    return f;
  }

  Formula implication_level() {
    Formula f = disjunction();
    if (accept(Tok::Arrow)) return implication(f, implication_level(), variant_);
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Bar)) f = Formula::disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::Amp)) f = Formula::conj(f, unary());
    return f;
  }

  Formula unary() {
    if (accept(Tok::Bang)) return Formula::neg(unary());
    return primary();
  }

  Formula primary() {
    std::size_t saved = pos_;
    try {
      Action lhs = action();
      if (accept(Tok::EqEq)) return Formula::eq(lhs, action());
    } catch (const SyntaxError&) {
    }
    pos_ = saved;

    const Token& t = peek();
    switch (t.kind) {
      case Tok::True: ++pos_; return Formula::top();
      case Tok::False: ++pos_; return Formula::bottom();
      case Tok::Perm: ++pos_; return Formula::perm(deontic_argument());
      case Tok::Forb: ++pos_; return Formula::forb(deontic_argument());
      case Tok::Obl: ++pos_; return obligation(deontic_argument());
      case Tok::Ident: ++pos_; return Formula::prop(t.text);
      case Tok::Meta: ++pos_; return Formula::prop("?" + t.text);
      case Tok::LParen: {
        ++pos_;
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        throw SyntaxError("expected a formula, found " + describe(t), t.pos);
    }
  }

  Action deontic_argument() {
    expect(Tok::LParen, "'('");
    Action a = action();
    expect(Tok::RParen, "')'");
    return a;
  }

  Action action() {
    Action a = union_level();
    if (accept(Tok::AImpl)) return Action::implies(a, action());
    return a;
  }

  Action union_level() {
    Action a = inter_level();
    while (accept(Tok::Plus)) a = Action::join(a, inter_level());
    return a;
  }

  Action inter_level() {
    Action a = complement_level();
    while (accept(Tok::Star)) a = Action::meet(a, complement_level());
    return a;
  }

  Action complement_level() {
    if (accept(Tok::Tilde)) return Action::complement(complement_level());
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Zero: ++pos_; return Action::zero();
      case Tok::One: ++pos_; return Action::one();
      case Tok::Ident: ++pos_; return Action::basic(t.text);
      case Tok::Meta: ++pos_; return Action::basic("?" + t.text);
      case Tok::LParen: {
        ++pos_;
        Action a = action();
        expect(Tok::RParen, "')'");
        return a;
      }
      default:
        throw SyntaxError("expected an action, found " + describe(t), t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  LogicVariant variant_;
};

}  // namespace

void check_language(const Action& a, const Language& lang) {
  switch (a.kind()) {
    case Action::Kind::Basic:
      if (detail::is_metavariable(a.name())) return;
      if (!lang.alphabet.empty() &&
          std::find(lang.alphabet.begin(), lang.alphabet.end(), a.name()) == lang.alphabet.end())
        throw VariantError("basic action '" + a.name() + "' is not in the declared alphabet");
      return;
    case Action::Kind::Zero:
    case Action::Kind::One: return;
    case Action::Kind::Compl: check_language(a.left(), lang); return;
    case Action::Kind::Impl:
      if (!admits_action_implication(lang.variant))
        throw VariantError("action implication '~>' is not admitted in " + to_string(lang.variant));
      [[fallthrough]];
    default:
      check_language(a.left(), lang);
      check_language(a.right(), lang);
  }
}

void check_language(const Formula& f, const Language& lang) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      check_language(f.action(), lang);
      check_language(f.action_right(), lang);
      return;
    case Formula::Kind::Perm:
    case Formula::Kind::Forb: check_language(f.action(), lang); return;
    case Formula::Kind::Prop:
      if (detail::is_metavariable(f.name())) return;
      if (!admits_propositions(lang.variant))
        throw VariantError("proposition '" + f.name() + "' is not admitted in " + to_string(lang.variant) +
                           " (identifiers at formula level are propositions)");
      return;
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return;
    case Formula::Kind::Not: check_language(f.left(), lang); return;
    case Formula::Kind::Impl:
      if (!has_primitive_implication(lang.variant))
        throw VariantError("primitive implication is not admitted in " + to_string(lang.variant));
      [[fallthrough]];
    default:
      check_language(f.left(), lang);
      check_language(f.right(), lang);
  }
}

namespace {
void check_alphabet_declared(const Language& lang) {
  if (requires_alphabet(lang.variant) && lang.alphabet.empty())
    throw VariantError(to_string(lang.variant) + " requires a declared basic-action alphabet");
}
}  // namespace

Formula parse_formula(std::string_view text, const Language& lang) {
  check_alphabet_declared(lang);
  Formula f = Parser(text, lang.variant, false).whole_formula();
  check_language(f, lang);
  return f;
}

Action parse_action(std::string_view text, const Language& lang) {
  check_alphabet_declared(lang);
  Action a = Parser(text, lang.variant, false).whole_action();
  check_language(a, lang);
  return a;
}

namespace detail {
Formula parse_schema(std::string_view text, LogicVariant v) { return Parser(text, v, true).whole_formula(); }
bool is_metavariable(const std::string& name) { return !name.empty() && name[0] == '?'; }
}  // namespace detail

// ---------------------------------------------------------------------------
// Printer. Precedence levels: larger binds tighter.

namespace {

constexpr int kAtom = 50;

int level(const Action& a) {
  switch (a.kind()) {
    case Action::Kind::Impl: return 10;
    case Action::Kind::Union: return 20;
    case Action::Kind::Inter: return 30;
    case Action::Kind::Compl: return 40;
    default: return kAtom;
  }
}

void print_to(std::string& out, const Action& a, int ctx) {
  int lv = level(a);
  bool paren = lv < ctx;
  if (paren) out += '(';
  switch (a.kind()) {
    case Action::Kind::Basic: out += a.name(); break;
    case Action::Kind::Zero: out += '0'; break;
    case Action::Kind::One: out += '1'; break;
    case Action::Kind::Compl:
      out += '~';
      print_to(out, a.left(), 40);
      break;
    case Action::Kind::Impl:
      print_to(out, a.left(), 11);
      out += " ~> ";
      print_to(out, a.right(), 10);
      break;
    case Action::Kind::Union:
      print_to(out, a.left(), 20);
      out += " + ";
      print_to(out, a.right(), 21);
      break;
    case Action::Kind::Inter:
      print_to(out, a.left(), 30);
      out += " * ";
      print_to(out, a.right(), 31);
      break;
  }
  if (paren) out += ')';
}

int level(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Impl: return 10;
    case Formula::Kind::Or: return 20;
    case Formula::Kind::And: return 30;
    case Formula::Kind::Not: return 40;
    default: return kAtom;
  }
}

void print_to(std::string& out, const Formula& f, int ctx) {
  int lv = level(f);
  bool paren = lv < ctx;
  if (paren) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Eq:
      print_to(out, f.action(), 0);
      out += " == ";
      print_to(out, f.action_right(), 0);
      break;
    case Formula::Kind::Perm:
    case Formula::Kind::Forb:
      out += f.kind() == Formula::Kind::Perm ? "perm(" : "forb(";
      print_to(out, f.action(), 0);
      out += ')';
      break;
    case Formula::Kind::Prop: out += f.name(); break;
    case Formula::Kind::Bot: out += "false"; break;
    case Formula::Kind::Top: out += "true"; break;
    case Formula::Kind::Not:
      out += '!';
      print_to(out, f.left(), 40);
      break;
    case Formula::Kind::Impl:
      print_to(out, f.left(), 11);
      out += " -> ";
      print_to(out, f.right(), 10);
      break;
    case Formula::Kind::Or:
      print_to(out, f.left(), 20);
      out += " | ";
      print_to(out, f.right(), 21);
      break;
    case Formula::Kind::And:
      print_to(out, f.left(), 30);
      out += " & ";
      print_to(out, f.right(), 31);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string print_action(const Action& a) {
  std::string out;
  print_to(out, a, 0);
  return out;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_to(out, f, 0);
  return out;
}

std::string print(const Term& t) {
  return std::visit([](const auto& x) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Action>) return print_action(x);
    else return print_formula(x);
  }, t);
}

// ---------------------------------------------------------------------------
// Structural utilities

namespace {

void collect(const Action& a, SymbolSet& s) {
  switch (a.kind()) {
    case Action::Kind::Basic: s.basic_actions.insert(a.name()); return;
    case Action::Kind::Zero:
    case Action::Kind::One: return;
    case Action::Kind::Compl: collect(a.left(), s); return;
    default:
      collect(a.left(), s);
      collect(a.right(), s);
  }
}

void collect(const Formula& f, SymbolSet& s) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      collect(f.action(), s);
      collect(f.action_right(), s);
      return;
    case Formula::Kind::Perm:
    case Formula::Kind::Forb: collect(f.action(), s); return;
    case Formula::Kind::Prop: s.propositions.insert(f.name()); return;
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return;
    case Formula::Kind::Not: collect(f.left(), s); return;
    default:
      collect(f.left(), s);
      collect(f.right(), s);
  }
}

bool substitution_match(const Action& cand, const Action& src, const Action& from, const Action& to) {
  if (src == from && cand == to) return true;
  if (cand.kind() != src.kind()) return false;
  switch (src.kind()) {
    case Action::Kind::Basic: return cand.name() == src.name();
    case Action::Kind::Zero:
    case Action::Kind::One: return true;
    case Action::Kind::Compl: return substitution_match(cand.left(), src.left(), from, to);
    default:
      return substitution_match(cand.left(), src.left(), from, to) &&
             substitution_match(cand.right(), src.right(), from, to);
  }
}

bool substitution_match(const Formula& cand, const Formula& src, const Action& from, const Action& to) {
  if (cand.kind() != src.kind()) return false;
  switch (src.kind()) {
    case Formula::Kind::Eq:
      return substitution_match(cand.action(), src.action(), from, to) &&
             substitution_match(cand.action_right(), src.action_right(), from, to);
    case Formula::Kind::Perm:
    case Formula::Kind::Forb: return substitution_match(cand.action(), src.action(), from, to);
    case Formula::Kind::Prop: return cand.name() == src.name();
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return true;
    case Formula::Kind::Not: return substitution_match(cand.left(), src.left(), from, to);
    default:
      return substitution_match(cand.left(), src.left(), from, to) &&
             substitution_match(cand.right(), src.right(), from, to);
  }
}

}  // namespace

SymbolSet symbols(const Formula& f) {
  SymbolSet s;
  collect(f, s);
  return s;
}

SymbolSet symbols(const Action& a) {
  SymbolSet s;
  collect(a, s);
  return s;
}

SymbolSet symbols(const Term& t) {
  return std::visit([](const auto& x) { return symbols(x); }, t);
}

bool is_substitution_instance(const Formula& candidate, const Formula& source, const Action& from,
                              const Action& to) {
  return substitution_match(candidate, source, from, to);
}

std::size_t depth(const Action& a) {
  switch (a.kind()) {
    case Action::Kind::Basic:
    case Action::Kind::Zero:
    case Action::Kind::One: return 1;
    case Action::Kind::Compl: return 1 + depth(a.left());
    default: return 1 + std::max(depth(a.left()), depth(a.right()));
  }
}

std::size_t depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return 1 + std::max(depth(f.action()), depth(f.action_right()));
    case Formula::Kind::Perm:
    case Formula::Kind::Forb: return 1 + depth(f.action());
    case Formula::Kind::Prop:
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return 1;
    case Formula::Kind::Not: return 1 + depth(f.left());
    default: return 1 + std::max(depth(f.left()), depth(f.right()));
  }
}

}  // namespace dal
