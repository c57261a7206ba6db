#ifndef DAL_FORMATS_HPP_
#define DAL_FORMATS_HPP_

#include <string>
#include <string_view>
#include <utility>

#include "dal/deontic_algebra.hpp"
#include "dal/models.hpp"

namespace dal {

// Line-oriented text formats; '#' starts a comment. Readers throw
// FormatError with the offending line.

// elements: e1 e2 / permitted: ... / forbidden: ... / val <action>: ...
// true: <props> / false: <props>
std::pair<DeonticModel, Valuation> read_model(std::string_view text);
std::string write_model(const DeonticModel& m, const Valuation& v);

// "powerset p q", "free a b", "chain n", "downsets x y z x<y y<z".
FiniteLattice lattice_from_descriptor(const std::string& descriptor);

// An element by name, "top"/"bot", "{atoms}", or an action term over the
// lattice's generators (powerset atoms and poset points count as generators).
Elem resolve_element(const FiniteLattice& l, const std::string& ref);

// actions: <descriptor> / formulas: <descriptor> / [flavor: bh]
// P default = v / P <elem> = v / F ... / E <elem> <elem> = v
DeonticAlgebra read_algebra(std::string_view text);
std::string write_algebra(const DeonticAlgebra& d);

// "name=elem,name=elem": names among syms.propositions go to the formula
// algebra, all others to the action algebra.
Interpretation parse_interpretation(const std::string& text, const DeonticAlgebra& d, const SymbolSet& syms);

// Hasse diagrams (covering edges, bottom up). For deontic algebras nodes
// carry their P/F values; P-top nodes are green, F-top nodes red.
std::string to_dot(const FiniteLattice& l);
std::string to_dot(const DeonticAlgebra& d);

}  // namespace dal

#endif  // DAL_FORMATS_HPP_
