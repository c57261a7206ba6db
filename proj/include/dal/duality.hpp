#ifndef DAL_DUALITY_HPP_
#define DAL_DUALITY_HPP_

#include <string>
#include <vector>

#include "dal/deontic_algebra.hpp"
#include "dal/models.hpp"

namespace dal {

// A deontic action algebra whose action elements are sets of points.
struct ConcreteAlgebra {
  DeonticAlgebra algebra;
  std::vector<std::string> universe;
  std::vector<PointSet> extension;  // action element -> its set of points
};

struct AlgebraOfModel {
  ConcreteAlgebra concrete;
  Interpretation h;
};

// Field of sets over E generated by the valuation images, formula algebra 2,
// P(X) = top iff X is inside P, F likewise, crisp E.
AlgebraOfModel to_algebra(const DeonticModel& m, const Valuation& v);

// E = union of the carrier, P (F) = union of the P-permitted (F-forbidden)
// elements, valuation = h on basic actions. Needs a two-element formula algebra.
std::pair<DeonticModel, Valuation> to_model(const ConcreteAlgebra& c, const Interpretation& h);

struct Stoneified {
  ConcreteAlgebra concrete;
  std::vector<Elem> action_iso;   // original action element -> concrete element
  std::vector<Elem> formula_iso;  // original formula element -> concrete element
};

// Each Boolean lattice becomes the powerset of its atoms via x -> {atoms below x}.
// A two-element formula algebra is kept as is. Needs flavor BB.
Stoneified stoneify(const DeonticAlgebra& d);

// Transports an interpretation along a stoneify isomorphism.
Interpretation transport(const Stoneified& s, const Interpretation& h);

struct RoundTripReport {
  bool model_exact = true;    // m(a(M, v)) == (M, v)
  bool algebra_exact = true;  // a(m(D, h)) == (D, h) for D, h = a(M, v)
  std::vector<std::string> mismatches;
};

RoundTripReport round_trip_report(const DeonticModel& m, const Valuation& v);

}  // namespace dal

#endif  // DAL_DUALITY_HPP_
