#ifndef DAL_DEONTIC_ALGEBRA_HPP_
#define DAL_DEONTIC_ALGEBRA_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dal/lattice.hpp"
#include "dal/syntax.hpp"

namespace dal {

// First letter: action algebra, second: formula algebra (Boolean or Heyting).
enum class Flavor { BB, BH, HB, HH };

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& s);
bool action_side_heyting(Flavor f);
bool formula_side_heyting(Flavor f);

struct Violation {
  int condition;  // 1..6
  std::vector<Elem> witness;
  std::string message;
};

class ConditionViolated : public Error {
 public:
  explicit ConditionViolated(Violation v) : Error(v.message), violation_(std::move(v)) {}
  int condition() const { return violation_.condition; }
  const std::vector<Elem>& witness() const { return violation_.witness; }

 private:
  Violation violation_;
};

class FlavorMismatch : public Error {
 public:
  using Error::Error;
};

class DeonticAlgebra {
 public:
  // Validates conditions 1-6. Without `eq` the crisp equality is installed.
  // `eq` is row-major, actions.size()^2 entries. Lattices without an
  // implication get the computed one. Throws ConditionViolated.
  static DeonticAlgebra build(FiniteLattice actions, FiniteLattice formulas, std::vector<Elem> perm,
                              std::vector<Elem> forb, std::optional<std::vector<Elem>> eq = std::nullopt,
                              std::optional<Flavor> flavor = std::nullopt);

  const FiniteLattice& actions() const { return actions_; }
  const FiniteLattice& formulas() const { return formulas_; }
  Flavor flavor() const { return flavor_; }

  Elem P(Elem a) const { return perm_[a]; }
  Elem F(Elem a) const { return forb_[a]; }
  Elem E(Elem a, Elem b) const {
    if (eq_.empty()) return a == b ? formulas_.top() : formulas_.bot();
    return eq_[a * actions_.size() + b];
  }
  bool crisp() const { return eq_.empty(); }

  const std::vector<Elem>& perm_map() const { return perm_; }
  const std::vector<Elem>& forb_map() const { return forb_; }

 private:
  DeonticAlgebra(FiniteLattice a, FiniteLattice f) : actions_(std::move(a)), formulas_(std::move(f)) {}

  FiniteLattice actions_, formulas_;
  std::vector<Elem> perm_, forb_, eq_;
  Flavor flavor_ = Flavor::BB;
};

// First violated condition (in order 1..6), if any. An empty `eq` means crisp.
std::optional<Violation> check_conditions(const FiniteLattice& actions, const FiniteLattice& formulas,
                                          const std::vector<Elem>& perm, const std::vector<Elem>& forb,
                                          const std::vector<Elem>& eq = {});

// Least graded equality compatible with condition 3: E(a,a)=top,
// E(a,0)=E(0,a)=P(a)*F(a), bot elsewhere.
std::vector<Elem> graded_equality(const FiniteLattice& actions, const FiniteLattice& formulas,
                                  const std::vector<Elem>& perm, const std::vector<Elem>& forb);

struct Interpretation {
  std::map<std::string, Elem> actions;
  std::map<std::string, Elem> props;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

std::string describe(const DeonticAlgebra& d, const Interpretation& h);

Elem evaluate(const DeonticAlgebra& d, const Interpretation& h, const Action& a);
Elem evaluate(const DeonticAlgebra& d, const Interpretation& h, const Formula& f);
Elem evaluate(const DeonticAlgebra& d, const Interpretation& h, const Term& t);

// D,h |= lhs = rhs. Both terms must have the same sort.
bool satisfies(const DeonticAlgebra& d, const Interpretation& h, const Term& lhs, const Term& rhs);

struct Validity {
  bool valid = true;
  std::optional<Interpretation> witness;  // a falsifying interpretation
};

constexpr std::size_t kDefaultInterpretationBudget = 10'000'000;

// Quantifies over every interpretation of the symbols occurring in lhs/rhs.
Validity valid_in(const DeonticAlgebra& d, const Term& lhs, const Term& rhs,
                  std::size_t budget = kDefaultInterpretationBudget);

// For all h: h(a) = h(b) iff E(h(a), h(b)) = top.
Validity act_eq_iff_form_eq(const DeonticAlgebra& d, const Action& a, const Action& b,
                            std::size_t budget = kDefaultInterpretationBudget);

// Calls `visit` on every interpretation of `syms`; stops when it returns false.
// Returns false iff stopped early. Throws BudgetExceeded.
bool for_each_interpretation(const DeonticAlgebra& d, const SymbolSet& syms, std::size_t budget,
                             const std::function<bool(const Interpretation&)>& visit);

struct PreimageIdeals {
  ElemSet permitted, forbidden, intersection;
};

PreimageIdeals preimage_ideals(const DeonticAlgebra& d);

// The k-th class condition alone: 1 generators closed, 2 all-complements
// meet closed, 3 generators join to top, 4 atoms closed, 5 = 3 and 4.
// Throws if `generators` do not generate the action algebra.
bool check_ndal(const DeonticAlgebra& d, const std::vector<Elem>& generators, int k);
// Membership in the algebra class of NDALk (the conditions accumulate:
// NDAL2 adds to NDAL1, NDAL3 to NDAL2, NDAL4 stands alone, NDAL5 is 3 and 4).
bool in_ndal_class(const DeonticAlgebra& d, const std::vector<Elem>& generators, int k);

struct Embedding {
  std::vector<Elem> actions;   // sub action element -> action element
  std::vector<Elem> formulas;  // sub formula element -> formula element
};

bool subalgebra_check(const DeonticAlgebra& sub, const DeonticAlgebra& d, const Embedding& e);

// The subalgebra on a subset of the action carrier, if the subset is closed
// under the action operations (same formula algebra).
std::optional<std::pair<DeonticAlgebra, Embedding>> restrict_actions(const DeonticAlgebra& d,
                                                                     const ElemSet& subset);

}  // namespace dal

#endif  // DAL_DEONTIC_ALGEBRA_HPP_
