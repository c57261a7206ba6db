#ifndef DAL_DECIDE_HPP_
#define DAL_DECIDE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dal/deontic_algebra.hpp"
#include "dal/models.hpp"
#include "dal/syntax.hpp"

namespace dal {

enum class RegionStatus { Empty, Permitted, Forbidden, Neutral };

std::string to_string(RegionStatus s);

// A status for each Boolean region over `actions` (region r lies inside
// action i iff bit i of r is set) and a truth value per proposition.
struct AtomAssignment {
  std::vector<std::string> actions;
  std::vector<RegionStatus> regions;
  std::map<std::string, bool> props;
};

// One point per non-empty region, P and F per status.
std::pair<DeonticModel, Valuation> induced_model(const AtomAssignment& a);

struct ClassicalVerdict {
  bool valid = true;
  std::optional<AtomAssignment> assignment;  // set when !valid
  std::optional<DeonticModel> model;
  std::optional<Valuation> valuation;
};

struct DecideOptions {
  std::size_t node_budget = 50'000'000;
};

// Variants: DAL, DAL_PROP, NDAL1..NDAL5. Throws BudgetExceeded, VariantError.
ClassicalVerdict decide_classical(const Formula& f, const Language& lang, const DecideOptions& opts = {});

struct HeytingBudget {
  std::size_t max_action_size = 8;
  std::size_t max_formula_size = 8;
  std::size_t max_algebras = 20'000;
  std::size_t max_interpretations = 20'000'000;  // summed over all algebras
  bool graded_equality = false;  // E(a,0) = P(a)*F(a) instead of the crisp equality
  std::optional<std::vector<FiniteLattice>> action_catalog;   // overrides the default catalog
  std::optional<std::vector<FiniteLattice>> formula_catalog;  // overrides the default catalog
};

struct HeytingVerdict {
  bool refuted = false;  // false: unknown (the search never claims validity)
  std::optional<DeonticAlgebra> algebra;
  std::optional<Interpretation> interpretation;
  std::size_t algebras_tried = 0;
  std::size_t interpretations_tried = 0;
  std::string note;  // why the search stopped without a countermodel
};

// Variants: DAL_IPL (Boolean actions, Heyting formulas), DAL_IAL (Heyting
// actions, formulas in 2), DAL_INT (Heyting both).
HeytingVerdict countermodel_heyting(const Formula& f, const Language& lang, const HeytingBudget& budget = {});

// The default catalogs used by countermodel_heyting.
std::vector<FiniteLattice> action_catalog(LogicVariant v, std::size_t max_size);
std::vector<FiniteLattice> formula_catalog(LogicVariant v, std::size_t max_size);

// Calls `visit` on every validated algebra (in deterministic order) with the
// given lattices and P/F generated from values on join-irreducibles.
// Stops when `visit` returns false; returns the number of algebras visited.
std::size_t for_each_deontic_algebra(const FiniteLattice& actions, const FiniteLattice& formulas, Flavor flavor,
                                     bool graded, std::size_t limit,
                                     const std::function<bool(const DeonticAlgebra&)>& visit);

struct FenceWitness {
  DeonticAlgebra algebra;
  Interpretation h;
  std::size_t candidates_tried;
};

// The four cottage-regulation formulas, in DAL with propositions.
std::vector<Formula> fence_formulas();
std::optional<FenceWitness> fence_scenario_search(std::size_t max_candidates = 200);

}  // namespace dal

#endif  // DAL_DECIDE_HPP_
