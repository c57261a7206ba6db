#ifndef DAL_SYNTAX_HPP_
#define DAL_SYNTAX_HPP_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dal/error.hpp"

namespace dal {

enum class LogicVariant {
  DAL,
  NDAL1,
  NDAL2,
  NDAL3,
  NDAL4,
  NDAL5,
  DAL_PROP,
  DAL_IPL,
  DAL_IAL,
  DAL_INT,
};

bool admits_propositions(LogicVariant v);
bool admits_action_implication(LogicVariant v);   // `~>` on actions
bool has_primitive_implication(LogicVariant v);   // `->` is not sugar
bool requires_alphabet(LogicVariant v);           // NDAL2..NDAL5
bool is_ndal(LogicVariant v);
int ndal_level(LogicVariant v);                   // 1..5, 0 if not an NDAL variant

std::string to_string(LogicVariant v);
// Accepts the lower-case names printed by to_string ("dal", "ndal3", "dal_ipl", ...).
LogicVariant parse_variant(std::string_view name);

// Action terms: immutable, shared structure.
class Action {
 public:
  enum class Kind { Basic, Union, Inter, Compl, Impl, Zero, One };

  static Action basic(std::string name);
  static Action zero();
  static Action one();
  static Action join(Action l, Action r);
  static Action meet(Action l, Action r);
  static Action complement(Action t);
  static Action implies(Action l, Action r);

  Kind kind() const;
  const std::string& name() const;  // Basic only
  const Action& left() const;       // Union, Inter, Impl; Compl operand
  const Action& right() const;      // Union, Inter, Impl

  bool is_binary() const { return kind() == Kind::Union || kind() == Kind::Inter || kind() == Kind::Impl; }

  friend bool operator==(const Action& a, const Action& b);
  friend bool operator!=(const Action& a, const Action& b) { return !(a == b); }
  friend bool operator<(const Action& a, const Action& b);

 private:
  struct Node;
  explicit Action(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind { Eq, Perm, Forb, Prop, Or, And, Not, Impl, Bot, Top };

  static Formula eq(Action l, Action r);
  static Formula perm(Action a);
  static Formula forb(Action a);
  static Formula prop(std::string name);
  static Formula disj(Formula l, Formula r);
  static Formula conj(Formula l, Formula r);
  static Formula neg(Formula f);
  // Primitive implication node. Use implication() to respect a variant's sugar.
  static Formula implies(Formula l, Formula r);
  static Formula bottom();
  static Formula top();

  Kind kind() const;
  const std::string& name() const;     // Prop only
  const Action& action() const;        // Perm, Forb; Eq left side
  const Action& action_right() const;  // Eq right side
  const Formula& left() const;         // Or, And, Impl; Not operand
  const Formula& right() const;        // Or, And, Impl

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using Term = std::variant<Action, Formula>;

// Sugar, resolved per variant: classical variants expand φ -> ψ to !φ | ψ.
Formula implication(Formula l, Formula r, LogicVariant v);
Formula biconditional(Formula l, Formula r, LogicVariant v);
// obl(α) is forb(~α).
Formula obligation(Action a);

// Variant plus the optional declared alphabet of basic actions.
struct Language {
  LogicVariant variant = LogicVariant::DAL;
  std::vector<std::string> alphabet;  // empty: undeclared

  Language() = default;
  Language(LogicVariant v) : variant(v) {}  // NOLINT: implicit on purpose
  Language(LogicVariant v, std::vector<std::string> a) : variant(v), alphabet(std::move(a)) {}
};

Formula parse_formula(std::string_view text, const Language& lang);
Action parse_action(std::string_view text, const Language& lang);

std::string print_formula(const Formula& f);
std::string print_action(const Action& a);
std::string print(const Term& t);

struct SymbolSet {
  std::set<std::string> basic_actions;
  std::set<std::string> propositions;

  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;
};

SymbolSet symbols(const Formula& f);
SymbolSet symbols(const Action& a);
SymbolSet symbols(const Term& t);

// True iff `candidate` arises from `source` by replacing zero or more
// occurrences of the action subterm `from` by `to`.
bool is_substitution_instance(const Formula& candidate, const Formula& source, const Action& from,
                              const Action& to);

std::size_t depth(const Formula& f);
std::size_t depth(const Action& a);

// Throws VariantError if `f` uses a construct outside `lang`.
void check_language(const Formula& f, const Language& lang);
void check_language(const Action& a, const Language& lang);

namespace detail {
// Schema patterns: identifiers starting with an upper-case letter are
// metavariables, stored as Basic/Prop nodes named "?X".
Formula parse_schema(std::string_view text, LogicVariant v);
bool is_metavariable(const std::string& name);
}  // namespace detail

}  // namespace dal

#endif  // DAL_SYNTAX_HPP_
