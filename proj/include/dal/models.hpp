#ifndef DAL_MODELS_HPP_
#define DAL_MODELS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dal/syntax.hpp"

namespace dal {

using PointSet = std::uint64_t;  // bit i = points[i]

// <E, P, F> with P and F disjoint subsets of E (at most 64 points).
struct DeonticModel {
  std::vector<std::string> points;
  PointSet permitted = 0;
  PointSet forbidden = 0;

  PointSet all() const { return points.size() >= 64 ? ~PointSet{0} : (PointSet{1} << points.size()) - 1; }
  // Throws Error unless P, F are disjoint subsets of E.
  void validate() const;
  std::optional<std::size_t> index(const std::string& point) const;
  std::string show(PointSet s) const;  // "{e1 e2}"

  friend bool operator==(const DeonticModel&, const DeonticModel&) = default;
};

struct Valuation {
  std::map<std::string, PointSet> actions;
  std::map<std::string, bool> props;  // classical propositions (DAL with propositions)

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

// v*: the homomorphic extension of v to action terms. `~>` is rejected.
PointSet extend(const DeonticModel& m, const Valuation& v, const Action& a);
bool sat(const DeonticModel& m, const Valuation& v, const Formula& f);

struct OracleResult {
  bool tautology = true;  // no countermodel up to the bound
  std::optional<std::pair<DeonticModel, Valuation>> countermodel;
};

// Exhaustive search over every model with at most `max_points` points,
// every disjoint P/F and every valuation of the occurring symbols.
OracleResult taut_oracle(const Formula& f, std::size_t max_points = 4, std::size_t budget = 50'000'000);

}  // namespace dal

#endif  // DAL_MODELS_HPP_
