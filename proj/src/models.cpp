#include "dal/models.hpp"

#include <cmath>

namespace dal {

void DeonticModel::validate() const {
  if (points.size() > 64) throw Error("models support at most 64 points");
  if ((permitted | forbidden) & ~all()) throw Error("P and F must be subsets of E");
  if (permitted & forbidden) throw Error("P and F must be disjoint");
}

std::optional<std::size_t> DeonticModel::index(const std::string& point) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == point) return i;
  return std::nullopt;
}

std::string DeonticModel::show(PointSet s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(s >> i & 1u)) continue;
    if (!first) out += ' ';
    out += points[i];
    first = false;
  }
  return out + "}";
}

PointSet extend(const DeonticModel& m, const Valuation& v, const Action& a) {
  switch (a.kind()) {
    case Action::Kind::Basic: {
      auto it = v.actions.find(a.name());
      if (it == v.actions.end()) throw SymbolError("valuation does not cover basic action '" + a.name() + "'");
      return it->second & m.all();
    }
    case Action::Kind::Zero: return 0;
    case Action::Kind::One: return m.all();
    case Action::Kind::Compl: return m.all() & ~extend(m, v, a.left());
    case Action::Kind::Union: return extend(m, v, a.left()) | extend(m, v, a.right());
    case Action::Kind::Inter: return extend(m, v, a.left()) & extend(m, v, a.right());
    case Action::Kind::Impl: throw VariantError("action implication has no model semantics");
  }
  throw Error("unreachable action kind");
}

bool sat(const DeonticModel& m, const Valuation& v, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return extend(m, v, f.action()) == extend(m, v, f.action_right());
    case Formula::Kind::Perm: return (extend(m, v, f.action()) & ~m.permitted) == 0;
    case Formula::Kind::Forb: return (extend(m, v, f.action()) & ~m.forbidden) == 0;
    case Formula::Kind::Prop: {
      auto it = v.props.find(f.name());
      if (it == v.props.end()) throw SymbolError("valuation does not cover proposition '" + f.name() + "'");
      return it->second;
    }
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Top: return true;
    case Formula::Kind::Not: return !sat(m, v, f.left());
    case Formula::Kind::Or: return sat(m, v, f.left()) || sat(m, v, f.right());
    case Formula::Kind::And: return sat(m, v, f.left()) && sat(m, v, f.right());
    case Formula::Kind::Impl: throw VariantError("primitive implication has no model semantics");
  }
  throw Error("unreachable formula kind");
}

OracleResult taut_oracle(const Formula& f, std::size_t max_points, std::size_t budget) {
  if (max_points > 6) throw BudgetExceeded("the oracle supports at most 6 points");
  const SymbolSet syms = symbols(f);
  const std::vector<std::string> acts(syms.basic_actions.begin(), syms.basic_actions.end());
  const std::vector<std::string> props(syms.propositions.begin(), syms.propositions.end());

  double total = 0;
  for (std::size_t n = 0; n <= max_points; ++n)
    total += std::pow(3.0, n) * std::pow(2.0, static_cast<double>(n * acts.size() + props.size()));
  if (total > static_cast<double>(budget)) throw BudgetExceeded("oracle search space exceeds the budget");

  OracleResult out;
  for (std::size_t n = 0; n <= max_points; ++n) {
    DeonticModel m;
    for (std::size_t i = 0; i < n; ++i) m.points.push_back("e" + std::to_string(i + 1));
    std::size_t splits = 1;
    for (std::size_t i = 0; i < n; ++i) splits *= 3;
    const std::size_t val_bits = n * acts.size() + props.size();
    for (std::size_t s = 0; s < splits; ++s) {
      m.permitted = m.forbidden = 0;
      std::size_t code = s;
      for (std::size_t i = 0; i < n; ++i, code /= 3) {
        if (code % 3 == 1) m.permitted |= PointSet{1} << i;
        if (code % 3 == 2) m.forbidden |= PointSet{1} << i;
      }
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << val_bits); ++bits) {
        Valuation v;
        for (std::size_t k = 0; k < acts.size(); ++k)
          v.actions[acts[k]] = (bits >> (k * n)) & ((PointSet{1} << n) - 1);
        for (std::size_t k = 0; k < props.size(); ++k) v.props[props[k]] = bits >> (acts.size() * n + k) & 1u;
        if (!sat(m, v, f)) {
          out.tautology = false;
          out.countermodel = std::make_pair(m, v);
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace dal
