#include "dal/deontic_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace dal {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::BB: return "BB";
    case Flavor::BH: return "BH";
    case Flavor::HB: return "HB";
    case Flavor::HH: return "HH";
  }
  return "?";
}

Flavor parse_flavor(const std::string& s) {
  for (auto f : {Flavor::BB, Flavor::BH, Flavor::HB, Flavor::HH}) {
    std::string n = to_string(f);
    std::string lower = n;
    std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
    if (s == n || s == lower) return f;
  }
  throw FormatError("unknown flavor '" + s + "'");
}

bool action_side_heyting(Flavor f) { return f == Flavor::HB || f == Flavor::HH; }
bool formula_side_heyting(Flavor f) { return f == Flavor::BH || f == Flavor::HH; }

namespace {

std::string show(const FiniteLattice& l, Elem x) { return l.name(x); }

}  // namespace

std::optional<Violation> check_conditions(const FiniteLattice& A, const FiniteLattice& L,
                                          const std::vector<Elem>& perm, const std::vector<Elem>& forb,
                                          const std::vector<Elem>& eq) {
  const std::size_t n = A.size();
  if (n > 4096) throw BudgetExceeded("action algebra too large for exhaustive condition checks");
  auto E = [&](Elem a, Elem b) {
    if (eq.empty()) return a == b ? L.top() : L.bot();
    return eq[a * n + b];
  };
  const Elem zero = A.bot();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (perm[A.join(a, b)] != L.meet(perm[a], perm[b]))
        return Violation{1, {a, b}, "condition 1 fails: P(" + show(A, a) + " + " + show(A, b) + ") != P(" +
                                        show(A, a) + ") * P(" + show(A, b) + ")"};
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (forb[A.join(a, b)] != L.meet(forb[a], forb[b]))
        return Violation{2, {a, b}, "condition 2 fails: F(" + show(A, a) + " + " + show(A, b) + ") != F(" +
                                        show(A, a) + ") * F(" + show(A, b) + ")"};
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (L.meet(perm[a], forb[a]) != E(a, zero))
      return Violation{3, {a}, "condition 3 fails: P(" + show(A, a) + ") * F(" + show(A, a) + ") != E(" +
                                   show(A, a) + ", " + show(A, zero) + ")"};
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!L.leq(L.meet(E(a, b), perm[a]), perm[b]))
        return Violation{4, {a, b}, "condition 4 fails: E(" + show(A, a) + ", " + show(A, b) + ") * P(" +
                                        show(A, a) + ") is not below P(" + show(A, b) + ")"};
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!L.leq(L.meet(E(a, b), forb[a]), forb[b]))
        return Violation{5, {a, b}, "condition 5 fails: E(" + show(A, a) + ", " + show(A, b) + ") * F(" +
                                        show(A, a) + ") is not below F(" + show(A, b) + ")"};
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if ((a == b) != (E(a, b) == L.top()))
        return Violation{6, {a, b}, "condition 6 fails: E(" + show(A, a) + ", " + show(A, b) + ") = " +
                                        show(L, E(a, b)) + " but the elements are " +
                                        (a == b ? "equal" : "distinct")};
    }
  }
  return std::nullopt;
}

std::vector<Elem> graded_equality(const FiniteLattice& A, const FiniteLattice& L, const std::vector<Elem>& perm,
                                  const std::vector<Elem>& forb) {
  const std::size_t n = A.size();
  std::vector<Elem> eq(n * n, L.bot());
  for (Elem a = 0; a < n; ++a) {
    eq[a * n + a] = L.top();
    if (a == A.bot()) continue;
    Elem v = L.meet(perm[a], forb[a]);
    eq[a * n + A.bot()] = v;
    eq[A.bot() * n + a] = v;
  }
  return eq;
}

DeonticAlgebra DeonticAlgebra::build(FiniteLattice actions, FiniteLattice formulas, std::vector<Elem> perm,
                                     std::vector<Elem> forb, std::optional<std::vector<Elem>> eq,
                                     std::optional<Flavor> flavor) {
  if (!actions.has_implication()) actions = actions.with_computed_implication();
  if (!formulas.has_implication()) formulas = formulas.with_computed_implication();
  const std::size_t n = actions.size();
  if (perm.size() != n || forb.size() != n) throw Error("P and F must be total on the action carrier");
  auto in_range = [&](const std::vector<Elem>& v) {
    return std::all_of(v.begin(), v.end(), [&](Elem e) { return e < formulas.size(); });
  };
  if (!in_range(perm) || !in_range(forb)) throw Error("P/F value outside the formula carrier");
  if (eq && (eq->size() != n * n || !in_range(*eq))) throw Error("E must be a total map on pairs of actions");

  Flavor inferred = actions.is_boolean() ? (formulas.is_boolean() ? Flavor::BB : Flavor::BH)
                                         : (formulas.is_boolean() ? Flavor::HB : Flavor::HH);
  Flavor chosen = flavor.value_or(inferred);
  if (!action_side_heyting(chosen) && !actions.is_boolean())
    throw FlavorMismatch("flavor " + to_string(chosen) + " needs a Boolean action algebra");
  if (!formula_side_heyting(chosen) && !formulas.is_boolean())
    throw FlavorMismatch("flavor " + to_string(chosen) + " needs a Boolean formula algebra");

  std::vector<Elem> table = eq.value_or(std::vector<Elem>{});
  if (auto v = check_conditions(actions, formulas, perm, forb, table)) throw ConditionViolated(*v);

  DeonticAlgebra d(std::move(actions), std::move(formulas));
  d.perm_ = std::move(perm);
  d.forb_ = std::move(forb);
  // A supplied table that is already crisp is stored as crisp.
  bool crisp = true;
  for (Elem a = 0; a < n && crisp && !table.empty(); ++a)
    for (Elem b = 0; b < n && crisp; ++b)
      if (table[a * n + b] != (a == b ? d.formulas_.top() : d.formulas_.bot())) crisp = false;
  if (!crisp) d.eq_ = std::move(table);
  d.flavor_ = chosen;
  return d;
}

std::string describe(const DeonticAlgebra& d, const Interpretation& h) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, x] : h.actions) {
    out << (first ? "" : ", ") << name << "=" << d.actions().name(x);
    first = false;
  }
  for (const auto& [name, x] : h.props) {
    out << (first ? "" : ", ") << name << "=" << d.formulas().name(x);
    first = false;
  }
  return out.str();
}

Elem evaluate(const DeonticAlgebra& d, const Interpretation& h, const Action& a) {
  const FiniteLattice& A = d.actions();
  switch (a.kind()) {
    case Action::Kind::Basic: {
      auto it = h.actions.find(a.name());
      if (it == h.actions.end()) throw SymbolError("interpretation does not cover basic action '" + a.name() + "'");
      return it->second;
    }
    case Action::Kind::Zero: return A.bot();
    case Action::Kind::One: return A.top();
    case Action::Kind::Compl: return A.complement(evaluate(d, h, a.left()));
    case Action::Kind::Union: return A.join(evaluate(d, h, a.left()), evaluate(d, h, a.right()));
    case Action::Kind::Inter: return A.meet(evaluate(d, h, a.left()), evaluate(d, h, a.right()));
    case Action::Kind::Impl:
      if (!action_side_heyting(d.flavor()))
        throw FlavorMismatch("action implication needs a Heyting action algebra (flavor HB or HH)");
      return A.impl(evaluate(d, h, a.left()), evaluate(d, h, a.right()));
  }
  throw Error("unreachable action kind");
}

Elem evaluate(const DeonticAlgebra& d, const Interpretation& h, const Formula& f) {
  const FiniteLattice& L = d.formulas();
  switch (f.kind()) {
    case Formula::Kind::Eq: return d.E(evaluate(d, h, f.action()), evaluate(d, h, f.action_right()));
    case Formula::Kind::Perm: return d.P(evaluate(d, h, f.action()));
    case Formula::Kind::Forb: return d.F(evaluate(d, h, f.action()));
    case Formula::Kind::Prop: {
      auto it = h.props.find(f.name());
      if (it == h.props.end()) throw SymbolError("interpretation does not cover proposition '" + f.name() + "'");
      return it->second;
    }
    case Formula::Kind::Bot: return L.bot();
    case Formula::Kind::Top: return L.top();
    case Formula::Kind::Not: return L.complement(evaluate(d, h, f.left()));
    case Formula::Kind::Or: return L.join(evaluate(d, h, f.left()), evaluate(d, h, f.right()));
    case Formula::Kind::And: return L.meet(evaluate(d, h, f.left()), evaluate(d, h, f.right()));
    case Formula::Kind::Impl:
      if (!formula_side_heyting(d.flavor()))
        throw FlavorMismatch("primitive implication needs a Heyting formula algebra (flavor BH or HH)");
      return L.impl(evaluate(d, h, f.left()), evaluate(d, h, f.right()));
  }
  throw Error("unreachable formula kind");
}

Elem evaluate(const DeonticAlgebra& d, const Interpretation& h, const Term& t) {
  return std::visit([&](const auto& x) { return evaluate(d, h, x); }, t);
}

bool satisfies(const DeonticAlgebra& d, const Interpretation& h, const Term& lhs, const Term& rhs) {
  if (lhs.index() != rhs.index()) throw Error("sort mismatch: cannot equate an action with a formula");
  return evaluate(d, h, lhs) == evaluate(d, h, rhs);
}

bool for_each_interpretation(const DeonticAlgebra& d, const SymbolSet& syms, std::size_t budget,
                             const std::function<bool(const Interpretation&)>& visit) {
  std::vector<std::string> acts(syms.basic_actions.begin(), syms.basic_actions.end());
  std::vector<std::string> props(syms.propositions.begin(), syms.propositions.end());
  const std::size_t na = d.actions().size(), nf = d.formulas().size();
  double total = 1;
  for (std::size_t i = 0; i < acts.size(); ++i) total *= static_cast<double>(na);
  for (std::size_t i = 0; i < props.size(); ++i) total *= static_cast<double>(nf);
  if (total > static_cast<double>(budget))
    throw BudgetExceeded("interpretation space of " + std::to_string(static_cast<long double>(total)) +
                         " exceeds the budget of " + std::to_string(budget));
  const std::size_t k = acts.size() + props.size();
  std::vector<Elem> digits(k, 0);
  Interpretation h;
  for (const auto& a : acts) h.actions[a] = 0;
  for (const auto& p : props) h.props[p] = 0;
  while (true) {
    for (std::size_t i = 0; i < acts.size(); ++i) h.actions[acts[i]] = digits[i];
    for (std::size_t i = 0; i < props.size(); ++i) h.props[props[i]] = digits[acts.size() + i];
    if (!visit(h)) return false;
    std::size_t i = k;
    while (i > 0) {
      --i;
      const std::size_t radix = i < acts.size() ? na : nf;
      if (++digits[i] < radix) break;
      digits[i] = 0;
      if (i == 0) return true;
    }
    if (k == 0) return true;
  }
}

namespace {

SymbolSet merged(const SymbolSet& a, const SymbolSet& b) {
  SymbolSet s = a;
  s.basic_actions.insert(b.basic_actions.begin(), b.basic_actions.end());
  s.propositions.insert(b.propositions.begin(), b.propositions.end());
  return s;
}

}  // namespace

Validity valid_in(const DeonticAlgebra& d, const Term& lhs, const Term& rhs, std::size_t budget) {
  if (lhs.index() != rhs.index()) throw Error("sort mismatch: cannot equate an action with a formula");
  Validity out;
  for_each_interpretation(d, merged(symbols(lhs), symbols(rhs)), budget, [&](const Interpretation& h) {
    if (satisfies(d, h, lhs, rhs)) return true;
    out.valid = false;
    out.witness = h;
    return false;
  });
  return out;
}

Validity act_eq_iff_form_eq(const DeonticAlgebra& d, const Action& a, const Action& b, std::size_t budget) {
  Validity out;
  for_each_interpretation(d, merged(symbols(a), symbols(b)), budget, [&](const Interpretation& h) {
    Elem x = evaluate(d, h, a), y = evaluate(d, h, b);
    if ((x == y) == (d.E(x, y) == d.formulas().top())) return true;
    out.valid = false;
    out.witness = h;
    return false;
  });
  return out;
}

PreimageIdeals preimage_ideals(const DeonticAlgebra& d) {
  PreimageIdeals out;
  const Elem top = d.formulas().top();
  for (Elem a = 0; a < d.actions().size(); ++a) {
    if (d.P(a) == top) out.permitted.insert(a);
    if (d.F(a) == top) out.forbidden.insert(a);
    if (d.P(a) == top && d.F(a) == top) out.intersection.insert(a);
  }
  return out;
}

bool check_ndal(const DeonticAlgebra& d, const std::vector<Elem>& generators, int k) {
  const FiniteLattice& A = d.actions();
  const FiniteLattice& L = d.formulas();
  ElemSet gens(generators.begin(), generators.end());
  auto generated =
      generated_sublattice(A, gens, A.is_boolean() ? LatticeKind::Boolean : LatticeKind::Heyting);
  if (generated.size() != A.size()) throw Error("the given generators do not generate the action algebra");
  auto closed = [&](Elem x) { return L.join(d.F(x), d.P(x)) == L.top(); };
  switch (k) {
    case 1:
      return std::all_of(generators.begin(), generators.end(), closed);
    case 2: {
      Elem m = A.top();
      for (Elem g : generators) m = A.meet(m, A.complement(g));
      return closed(m);
    }
    case 3: {
      Elem j = A.bot();
      for (Elem g : generators) j = A.join(j, g);
      return j == A.top();
    }
    case 4: {
      auto atoms = A.atoms();
      return std::all_of(atoms.begin(), atoms.end(), closed);
    }
    case 5:
      return check_ndal(d, generators, 3) && check_ndal(d, generators, 4);
    default:
      throw Error("NDAL level must be between 1 and 5");
  }
}

bool in_ndal_class(const DeonticAlgebra& d, const std::vector<Elem>& generators, int k) {
  switch (k) {
    case 1: return check_ndal(d, generators, 1);
    case 2: return in_ndal_class(d, generators, 1) && check_ndal(d, generators, 2);
    case 3: return in_ndal_class(d, generators, 2) && check_ndal(d, generators, 3);
    case 4: return check_ndal(d, generators, 4);
    case 5: return in_ndal_class(d, generators, 3) && check_ndal(d, generators, 4);
    default: throw Error("NDAL level must be between 1 and 5");
  }
}

namespace {

bool is_embedding(const FiniteLattice& sub, const FiniteLattice& l, const std::vector<Elem>& e) {
  if (e.size() != sub.size()) return false;
  std::set<Elem> image;
  for (Elem x : e) {
    if (x >= l.size()) return false;
    image.insert(x);
  }
  if (image.size() != e.size()) return false;
  if (e[sub.bot()] != l.bot() || e[sub.top()] != l.top()) return false;
  const bool impl = sub.has_implication() && l.has_implication();
  for (Elem a = 0; a < sub.size(); ++a) {
    for (Elem b = 0; b < sub.size(); ++b) {
      if (e[sub.join(a, b)] != l.join(e[a], e[b])) return false;
      if (e[sub.meet(a, b)] != l.meet(e[a], e[b])) return false;
      if (impl && e[sub.impl(a, b)] != l.impl(e[a], e[b])) return false;
    }
  }
  return true;
}

}  // namespace

bool subalgebra_check(const DeonticAlgebra& sub, const DeonticAlgebra& d, const Embedding& e) {
  if (!is_embedding(sub.actions(), d.actions(), e.actions)) return false;
  if (!is_embedding(sub.formulas(), d.formulas(), e.formulas)) return false;
  for (Elem a = 0; a < sub.actions().size(); ++a) {
    if (e.formulas[sub.P(a)] != d.P(e.actions[a])) return false;
    if (e.formulas[sub.F(a)] != d.F(e.actions[a])) return false;
    for (Elem b = 0; b < sub.actions().size(); ++b)
      if (e.formulas[sub.E(a, b)] != d.E(e.actions[a], e.actions[b])) return false;
  }
  return true;
}

std::optional<std::pair<DeonticAlgebra, Embedding>> restrict_actions(const DeonticAlgebra& d,
                                                                     const ElemSet& subset) {
  const FiniteLattice& A = d.actions();
  if (!subset.contains(A.bot()) || !subset.contains(A.top())) return std::nullopt;
  std::vector<Elem> members(subset.begin(), subset.end());
  std::map<Elem, Elem> index;
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<Elem>(i);
  const std::size_t n = members.size();
  std::vector<Elem> join(n * n), meet(n * n), impl(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto jn = index.find(A.join(members[i], members[j]));
      auto mt = index.find(A.meet(members[i], members[j]));
      auto im = index.find(A.impl(members[i], members[j]));
      if (jn == index.end() || mt == index.end() || im == index.end()) return std::nullopt;
      join[i * n + j] = jn->second;
      meet[i * n + j] = mt->second;
      impl[i * n + j] = im->second;
    }
  }
  std::vector<std::string> names;
  std::vector<Elem> perm, forb;
  for (Elem x : members) {
    names.push_back(A.name(x));
    perm.push_back(d.P(x));
    forb.push_back(d.F(x));
  }
  auto sub = FiniteLattice::from_tables(n, std::move(join), std::move(meet), index.at(A.bot()), index.at(A.top()),
                                        std::move(names), std::move(impl));
  std::optional<std::vector<Elem>> eq;
  if (!d.crisp()) {
    eq.emplace(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) (*eq)[i * n + j] = d.E(members[i], members[j]);
  }
  auto algebra = DeonticAlgebra::build(std::move(sub), d.formulas(), std::move(perm), std::move(forb),
                                       std::move(eq), d.flavor());
  Embedding e;
  e.actions = members;
  for (Elem f = 0; f < d.formulas().size(); ++f) e.formulas.push_back(f);
  return std::make_pair(std::move(algebra), std::move(e));
}

}  // namespace dal
