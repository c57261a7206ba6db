// Generators and reference implementations shared by the test binaries.
#ifndef DAL_TESTS_SUPPORT_HPP_
#define DAL_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dal/deontic_algebra.hpp"
#include "dal/models.hpp"
#include "dal/proof.hpp"

namespace support {

using namespace dal;

inline std::string data_dir() { return DAL_TEST_DATA; }

// Random P/F built from values on join-irreducibles, with P(j)*F(j) = bot
// so condition 3 holds for the crisp equality; validated by build().
inline std::optional<DeonticAlgebra> try_random_algebra(std::mt19937& rng, const FiniteLattice& A,
                                                        const FiniteLattice& L, Flavor flavor) {
  const auto ji = A.join_irreducibles();
  std::vector<Elem> gp(ji.size()), gf(ji.size());
  for (std::size_t i = 0; i < ji.size(); ++i) {
    gp[i] = static_cast<Elem>(rng() % L.size());
    std::vector<Elem> disjoint;
    for (Elem y = 0; y < L.size(); ++y)
      if (L.meet(gp[i], y) == L.bot()) disjoint.push_back(y);
    gf[i] = disjoint[rng() % disjoint.size()];
  }
  auto extend = [&](const std::vector<Elem>& g) {
    std::vector<Elem> m(A.size(), L.top());
    for (Elem x = 0; x < A.size(); ++x)
      for (std::size_t i = 0; i < ji.size(); ++i)
        if (A.leq(ji[i], x)) m[x] = L.meet(m[x], g[i]);
    return m;
  };
  try {
    return DeonticAlgebra::build(A, L, extend(gp), extend(gf), std::nullopt, flavor);
  } catch (const ConditionViolated&) {
    return std::nullopt;
  }
}

inline DeonticAlgebra random_algebra(std::mt19937& rng, const FiniteLattice& A, const FiniteLattice& L,
                                     Flavor flavor) {
  for (int attempt = 0; attempt < 1000; ++attempt)
    if (auto d = try_random_algebra(rng, A, L, flavor)) return *d;
  throw Error("no valid random algebra found");
}

// BB algebra: action powerset with up to `max_atoms` atoms, formulas 2 or
// powerset(2).
inline DeonticAlgebra random_bb_algebra(std::mt19937& rng, std::size_t max_atoms = 4) {
  std::vector<std::string> atoms;
  const std::size_t k = 1 + rng() % max_atoms;
  for (std::size_t i = 0; i < k; ++i) atoms.push_back("x" + std::to_string(i));
  const FiniteLattice L = rng() % 2 ? chain(2) : powerset_algebra({"w1", "w2"});
  return random_algebra(rng, powerset_algebra(atoms), L, Flavor::BB);
}

inline Action random_action(std::mt19937& rng, const std::vector<std::string>& names, int depth,
                            bool allow_impl = false) {
  const int pick = depth <= 1 ? static_cast<int>(rng() % 8) : static_cast<int>(rng() % (allow_impl ? 12 : 11));
  if (depth <= 1 || pick < 4) {
    if (pick == 0) return Action::zero();
    if (pick == 1) return Action::one();
    return Action::basic(names[rng() % names.size()]);
  }
  if (pick < 6) return Action::complement(random_action(rng, names, depth - 1, allow_impl));
  if (pick < 8) return Action::join(random_action(rng, names, depth - 1, allow_impl),
                                    random_action(rng, names, depth - 1, allow_impl));
  if (pick < 11) return Action::meet(random_action(rng, names, depth - 1, allow_impl),
                                     random_action(rng, names, depth - 1, allow_impl));
  return Action::implies(random_action(rng, names, depth - 1, allow_impl),
                         random_action(rng, names, depth - 1, allow_impl));
}

// Formulas of depth <= `depth` (leaves have depth 1) in the given variant.
inline Formula random_formula(std::mt19937& rng, const std::vector<std::string>& actions,
                              const std::vector<std::string>& props, int depth,
                              LogicVariant v = LogicVariant::DAL) {
  const bool impl = has_primitive_implication(v);
  const bool aimpl = admits_action_implication(v);
  if (depth <= 1 || rng() % 4 == 0) {
    const int k = static_cast<int>(rng() % (props.empty() ? 5 : 6));
    const int adepth = std::max(1, depth - 1);
    switch (k) {
      case 0: return Formula::perm(random_action(rng, actions, adepth, aimpl));
      case 1: return Formula::forb(random_action(rng, actions, adepth, aimpl));
      case 2:
        return Formula::eq(random_action(rng, actions, adepth, aimpl), random_action(rng, actions, adepth, aimpl));
      case 3: return rng() % 2 ? Formula::top() : Formula::bottom();
      case 4: return Formula::perm(Action::basic(actions[rng() % actions.size()]));
      default: return Formula::prop(props[rng() % props.size()]);
    }
  }
  switch (rng() % (impl ? 4 : 3)) {
    case 0: return Formula::neg(random_formula(rng, actions, props, depth - 1, v));
    case 1:
      return Formula::conj(random_formula(rng, actions, props, depth - 1, v),
                           random_formula(rng, actions, props, depth - 1, v));
    case 2:
      return Formula::disj(random_formula(rng, actions, props, depth - 1, v),
                           random_formula(rng, actions, props, depth - 1, v));
    default:
      return Formula::implies(random_formula(rng, actions, props, depth - 1, v),
                              random_formula(rng, actions, props, depth - 1, v));
  }
}

inline std::pair<DeonticModel, Valuation> random_model(std::mt19937& rng, std::size_t max_points,
                                                       const std::vector<std::string>& actions,
                                                       const std::vector<std::string>& props = {}) {
  DeonticModel m;
  const std::size_t n = rng() % (max_points + 1);
  for (std::size_t i = 0; i < n; ++i) {
    m.points.push_back("e" + std::to_string(i + 1));
    switch (rng() % 3) {
      case 1: m.permitted |= PointSet{1} << i; break;
      case 2: m.forbidden |= PointSet{1} << i; break;
      default: break;
    }
  }
  Valuation v;
  for (const auto& a : actions) v.actions[a] = n == 0 ? 0 : rng() & m.all();
  for (const auto& p : props) v.props[p] = rng() % 2;
  return {m, v};
}

inline Action substitute(const Action& a, const std::map<std::string, Action>& b) {
  switch (a.kind()) {
    case Action::Kind::Basic: {
      auto it = b.find(a.name());
      return it == b.end() ? a : it->second;
    }
    case Action::Kind::Zero:
    case Action::Kind::One: return a;
    case Action::Kind::Compl: return Action::complement(substitute(a.left(), b));
    case Action::Kind::Union: return Action::join(substitute(a.left(), b), substitute(a.right(), b));
    case Action::Kind::Inter: return Action::meet(substitute(a.left(), b), substitute(a.right(), b));
    case Action::Kind::Impl: return Action::implies(substitute(a.left(), b), substitute(a.right(), b));
  }
  return a;
}

inline Formula instantiate(const Formula& f, const Bindings& b) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return Formula::eq(substitute(f.action(), b.actions), substitute(f.action_right(), b.actions));
    case Formula::Kind::Perm: return Formula::perm(substitute(f.action(), b.actions));
    case Formula::Kind::Forb: return Formula::forb(substitute(f.action(), b.actions));
    case Formula::Kind::Prop: {
      auto it = b.formulas.find(f.name());
      return it == b.formulas.end() ? f : it->second;
    }
    case Formula::Kind::Bot:
    case Formula::Kind::Top: return f;
    case Formula::Kind::Not: return Formula::neg(instantiate(f.left(), b));
    case Formula::Kind::Or: return Formula::disj(instantiate(f.left(), b), instantiate(f.right(), b));
    case Formula::Kind::And: return Formula::conj(instantiate(f.left(), b), instantiate(f.right(), b));
    case Formula::Kind::Impl: return Formula::implies(instantiate(f.left(), b), instantiate(f.right(), b));
  }
  return f;
}

// Every way of replacing occurrences of `from` by `to` inside `f`
// (reference enumeration, independent of is_substitution_instance).
inline std::vector<Formula> all_substitutions(const Formula& f, const Action& from, const Action& to);

inline std::vector<Action> all_substitutions(const Action& a, const Action& from, const Action& to) {
  std::vector<Action> out;
  auto combine = [&](auto make) {
    for (const auto& l : all_substitutions(a.left(), from, to))
      for (const auto& r : all_substitutions(a.right(), from, to)) out.push_back(make(l, r));
  };
  switch (a.kind()) {
    case Action::Kind::Basic:
    case Action::Kind::Zero:
    case Action::Kind::One: out.push_back(a); break;
    case Action::Kind::Compl:
      for (const auto& l : all_substitutions(a.left(), from, to)) out.push_back(Action::complement(l));
      break;
    case Action::Kind::Union: combine(Action::join); break;
    case Action::Kind::Inter: combine(Action::meet); break;
    case Action::Kind::Impl: combine(Action::implies); break;
  }
  if (a == from) out.push_back(to);
  return out;
}

inline std::vector<Formula> all_substitutions(const Formula& f, const Action& from, const Action& to) {
  std::vector<Formula> out;
  auto combine_f = [&](auto make) {
    for (const auto& l : all_substitutions(f.left(), from, to))
      for (const auto& r : all_substitutions(f.right(), from, to)) out.push_back(make(l, r));
  };
  switch (f.kind()) {
    case Formula::Kind::Eq:
      for (const auto& l : all_substitutions(f.action(), from, to))
        for (const auto& r : all_substitutions(f.action_right(), from, to)) out.push_back(Formula::eq(l, r));
      break;
    case Formula::Kind::Perm:
      for (const auto& a : all_substitutions(f.action(), from, to)) out.push_back(Formula::perm(a));
      break;
    case Formula::Kind::Forb:
      for (const auto& a : all_substitutions(f.action(), from, to)) out.push_back(Formula::forb(a));
      break;
    case Formula::Kind::Prop:
    case Formula::Kind::Bot:
    case Formula::Kind::Top: out.push_back(f); break;
    case Formula::Kind::Not:
      for (const auto& l : all_substitutions(f.left(), from, to)) out.push_back(Formula::neg(l));
      break;
    case Formula::Kind::Or: combine_f(Formula::disj); break;
    case Formula::Kind::And: combine_f(Formula::conj); break;
    case Formula::Kind::Impl: combine_f(Formula::implies); break;
  }
  return out;
}

// Instances of a schema whose metavariables range over basic actions from
// `actions` and formulas from `formulas`; E2 consequents range over all
// substitution variants.
inline std::vector<Formula> schema_instances(const AxiomSchema& s, const std::vector<std::string>& actions,
                                             const std::vector<Formula>& formulas) {
  std::set<std::string> avars, fvars;
  std::function<void(const Action&)> scan_a = [&](const Action& a) {
    if (a.kind() == Action::Kind::Basic) {
      if (detail::is_metavariable(a.name())) avars.insert(a.name());
    } else if (a.kind() == Action::Kind::Compl) {
      scan_a(a.left());
    } else if (a.is_binary()) {
      scan_a(a.left());
      scan_a(a.right());
    }
  };
  std::function<void(const Formula&)> scan = [&](const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Eq: scan_a(f.action()); scan_a(f.action_right()); break;
      case Formula::Kind::Perm:
      case Formula::Kind::Forb: scan_a(f.action()); break;
      case Formula::Kind::Prop:
        if (detail::is_metavariable(f.name())) fvars.insert(f.name());
        break;
      case Formula::Kind::Not: scan(f.left()); break;
      case Formula::Kind::Or:
      case Formula::Kind::And:
      case Formula::Kind::Impl: scan(f.left()); scan(f.right()); break;
      default: break;
    }
  };
  scan(s.pattern);
  const bool e2 = s.kind == AxiomSchema::Kind::Substitution;
  if (e2) fvars.erase("?Q");
  std::vector<std::string> av(avars.begin(), avars.end()), fv(fvars.begin(), fvars.end());

  std::vector<Formula> out;
  std::vector<std::size_t> ai(av.size(), 0), fi(fv.size(), 0);
  while (true) {
    Bindings b;
    for (std::size_t i = 0; i < av.size(); ++i) b.actions.emplace(av[i], Action::basic(actions[ai[i]]));
    for (std::size_t i = 0; i < fv.size(); ++i) b.formulas.emplace(fv[i], formulas[fi[i]]);
    if (e2) {
      for (const auto& q : all_substitutions(b.formulas.at("?P"), b.actions.at("?X"), b.actions.at("?Y"))) {
        Bindings c = b;
        c.formulas.emplace("?Q", q);
        out.push_back(instantiate(s.pattern, c));
      }
    } else {
      out.push_back(instantiate(s.pattern, b));
    }
    // odometer over both index vectors
    std::size_t k = 0;
    for (; k < ai.size(); ++k) {
      if (++ai[k] < actions.size()) break;
      ai[k] = 0;
    }
    if (k < ai.size()) continue;
    std::size_t m = 0;
    for (; m < fi.size(); ++m) {
      if (++fi[m] < formulas.size()) break;
      fi[m] = 0;
    }
    if (m == fi.size()) break;
  }
  return out;
}

// Exhaustive evaluation: true iff `f` is top under every interpretation.
inline bool holds_everywhere(const DeonticAlgebra& d, const Formula& f) {
  bool ok = true;
  for_each_interpretation(d, symbols(f), 100'000'000, [&](const Interpretation& h) {
    ok = evaluate(d, h, f) == d.formulas().top();
    return ok;
  });
  return ok;
}

}  // namespace support

#endif  // DAL_TESTS_SUPPORT_HPP_
