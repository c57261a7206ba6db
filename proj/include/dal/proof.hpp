#ifndef DAL_PROOF_HPP_
#define DAL_PROOF_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dal/syntax.hpp"

namespace dal {

struct AxiomSchema {
  enum class Kind {
    Plain,
    Substitution,  // E2: the consequent must be a substitution instance of the antecedent formula
  };

  std::string id;
  Formula pattern;  // metavariables are Basic/Prop nodes named "?X"
  Kind kind = Kind::Plain;
  std::set<std::string> basic_only;  // action metavariables restricted to basic actions
};

struct Bindings {
  std::map<std::string, Action> actions;
  std::map<std::string, Formula> formulas;
};

// Deterministic schema list for the language; NDAL2-5 need the alphabet.
std::vector<AxiomSchema> axiom_table(const Language& lang);

std::optional<Bindings> match_schema(const Formula& f, const AxiomSchema& schema);

struct AxiomRef {
  std::string id;
};
struct ModusPonens {
  std::size_t minor;  // line of psi_i
  std::size_t major;  // line of psi_i -> psi_k
};
using Justification = std::variant<AxiomRef, ModusPonens>;

struct ProofLine {
  std::size_t number;  // 1-based, consecutive
  Formula formula;
  Justification why;
};

struct Proof {
  Language language;
  std::vector<ProofLine> lines;
};

struct ProofCheck {
  bool ok = true;
  std::size_t line = 0;  // first offending line when !ok
  std::string reason;
};

ProofCheck check_proof(const Proof& p);

// "logic: <variant>", optional "alphabet: a, b", then "n: <formula> [<id>]"
// or "n: <formula> [mp i j]". Throws FormatError carrying the file line, also
// for formulas that do not parse under the declared variant.
Proof parse_proof(std::string_view text);
std::string write_proof(const Proof& p);

}  // namespace dal

#endif  // DAL_PROOF_HPP_
