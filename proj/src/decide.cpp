#include "dal/decide.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>

namespace dal {

std::string to_string(RegionStatus s) {
  switch (s) {
    case RegionStatus::Empty: return "empty";
    case RegionStatus::Permitted: return "permitted";
    case RegionStatus::Forbidden: return "forbidden";
    case RegionStatus::Neutral: return "neutral";
  }
  return "?";
}

std::pair<DeonticModel, Valuation> induced_model(const AtomAssignment& a) {
  DeonticModel m;
  Valuation v;
  for (const auto& name : a.actions) v.actions[name] = 0;
  for (std::size_t r = 0; r < a.regions.size(); ++r) {
    if (a.regions[r] == RegionStatus::Empty) continue;
    const PointSet bit = PointSet{1} << m.points.size();
    m.points.push_back("e" + std::to_string(m.points.size() + 1));
    if (a.regions[r] == RegionStatus::Permitted) m.permitted |= bit;
    if (a.regions[r] == RegionStatus::Forbidden) m.forbidden |= bit;
    for (std::size_t i = 0; i < a.actions.size(); ++i)
      if (r >> i & 1u) v.actions[a.actions[i]] |= bit;
  }
  v.props = a.props;
  return {std::move(m), std::move(v)};
}

namespace {

constexpr std::size_t kMaxActions = 4;
constexpr std::size_t kMaxProps = 8;

using Mask = std::uint32_t;  // a set of regions

// Formula compiled against the region layout.
struct Node {
  enum class Op { Top, Bot, Eq, Perm, Forb, Prop, Not, And, Or } op;
  Mask mask = 0;  // Perm/Forb: regions of the action; Eq: symmetric difference
  int a = -1, b = -1;  // children, or the proposition index
};

class Compiler {
 public:
  Compiler(const std::vector<std::string>& actions, const std::vector<std::string>& props)
      : actions_(actions), props_(props), full_((Mask{1} << (1u << actions.size())) - 1) {}

  Mask action(const Action& t) const {
    switch (t.kind()) {
      case Action::Kind::Basic: {
        auto it = std::find(actions_.begin(), actions_.end(), t.name());
        if (it == actions_.end()) throw SymbolError("basic action '" + t.name() + "' is not in the alphabet");
        const std::size_t i = static_cast<std::size_t>(it - actions_.begin());
        Mask m = 0;
        for (std::size_t r = 0; r < (std::size_t{1} << actions_.size()); ++r)
          if (r >> i & 1u) m |= Mask{1} << r;
        return m;
      }
      case Action::Kind::Zero: return 0;
      case Action::Kind::One: return full_;
      case Action::Kind::Compl: return full_ & ~action(t.left());
      case Action::Kind::Union: return action(t.left()) | action(t.right());
      case Action::Kind::Inter: return action(t.left()) & action(t.right());
      case Action::Kind::Impl: throw VariantError("action implication is not classical");
    }
    throw Error("unreachable action kind");
  }

  int formula(const Formula& f, std::vector<Node>& out) const {
    Node n{Node::Op::Top};
    switch (f.kind()) {
      case Formula::Kind::Top: break;
      case Formula::Kind::Bot: n.op = Node::Op::Bot; break;
      case Formula::Kind::Eq:
        n.op = Node::Op::Eq;
        n.mask = action(f.action()) ^ action(f.action_right());
        break;
      case Formula::Kind::Perm:
        n.op = Node::Op::Perm;
        n.mask = action(f.action());
        break;
      case Formula::Kind::Forb:
        n.op = Node::Op::Forb;
        n.mask = action(f.action());
        break;
      case Formula::Kind::Prop:
        n.op = Node::Op::Prop;
        n.a = static_cast<int>(std::find(props_.begin(), props_.end(), f.name()) - props_.begin());
        break;
      case Formula::Kind::Not:
        n.op = Node::Op::Not;
        n.a = formula(f.left(), out);
        break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
        n.op = f.kind() == Formula::Kind::And ? Node::Op::And : Node::Op::Or;
        n.a = formula(f.left(), out);
        n.b = formula(f.right(), out);
        break;
      case Formula::Kind::Impl: throw VariantError("primitive implication is not classical");
    }
    out.push_back(n);
    return static_cast<int>(out.size()) - 1;
  }

  Mask full() const { return full_; }

 private:
  const std::vector<std::string>& actions_;
  const std::vector<std::string>& props_;
  Mask full_;
};

// Partial assignment: regions in `known` have a status, the rest are open.
struct State {
  Mask known = 0, nonempty = 0, perm = 0, forb = 0;
  std::uint32_t props_known = 0, props_true = 0;
};

enum Tri : std::uint8_t { kFalse, kTrue, kOpen };

Tri eval(const std::vector<Node>& nodes, int i, const State& s) {
  const Node& n = nodes[i];
  switch (n.op) {
    case Node::Op::Top: return kTrue;
    case Node::Op::Bot: return kFalse;
    case Node::Op::Eq:
      if (n.mask & s.known & s.nonempty) return kFalse;
      return (n.mask & ~s.known) ? kOpen : kTrue;
    case Node::Op::Perm:
      if (n.mask & s.known & s.nonempty & ~s.perm) return kFalse;
      return (n.mask & ~s.known) ? kOpen : kTrue;
    case Node::Op::Forb:
      if (n.mask & s.known & s.nonempty & ~s.forb) return kFalse;
      return (n.mask & ~s.known) ? kOpen : kTrue;
    case Node::Op::Prop:
      if (!(s.props_known >> n.a & 1u)) return kOpen;
      return (s.props_true >> n.a & 1u) ? kTrue : kFalse;
    case Node::Op::Not: {
      Tri t = eval(nodes, n.a, s);
      return t == kOpen ? kOpen : (t == kTrue ? kFalse : kTrue);
    }
    case Node::Op::And: {
      Tri l = eval(nodes, n.a, s);
      if (l == kFalse) return kFalse;
      Tri r = eval(nodes, n.b, s);
      if (r == kFalse) return kFalse;
      return (l == kTrue && r == kTrue) ? kTrue : kOpen;
    }
    case Node::Op::Or: {
      Tri l = eval(nodes, n.a, s);
      if (l == kTrue) return kTrue;
      Tri r = eval(nodes, n.b, s);
      if (r == kTrue) return kTrue;
      return (l == kFalse && r == kFalse) ? kFalse : kOpen;
    }
  }
  return kOpen;
}

struct Search {
  std::vector<Node> nodes;
  int root = 0;
  std::size_t regions = 0, props = 0;
  std::vector<std::size_t> order;  // regions the formula can observe
  int level = 0;                 // NDAL level, 0 for none
  std::vector<Mask> generators;  // region masks of the alphabet
  std::size_t budget = 0;
  std::atomic<std::size_t>* spent = nullptr;
  std::atomic<int>* winner = nullptr;  // lowest branch holding a countermodel

  // The variant's frame condition on the regions assigned so far.
  bool admissible(const State& s) const {
    if (level == 0) return true;
    const Mask decided = s.known & s.nonempty;
    const Mask neutral = decided & ~s.perm & ~s.forb;
    if (level != 4) {
      for (Mask g : generators) {
        const Mask k = g & decided;
        if ((k & ~s.perm) && (k & ~s.forb)) return false;
      }
    }
    if ((level == 2 || level == 3 || level == 5) && (neutral & 1u)) return false;
    if ((level == 3 || level == 5) && (decided & 1u)) return false;
    if ((level == 4 || level == 5) && neutral) return false;
    return true;
  }

  // Depth-first over variables (relevant regions in `order`, then
  // propositions). Returns the falsifying completion, if any.
  std::optional<State> run(State s, std::size_t var, int branch) const {
    if (spent->fetch_add(1, std::memory_order_relaxed) >= budget)
      throw BudgetExceeded("decision budget of " + std::to_string(budget) + " nodes exhausted");
    const int w = winner->load(std::memory_order_relaxed);
    if (w >= 0 && w < branch) return std::nullopt;
    Tri t = eval(nodes, root, s);
    if (t == kTrue) return std::nullopt;
    if (t == kFalse) {
      // Open regions default to Empty, open propositions to false.
      s.known = (Mask{1} << regions) - 1;
      s.props_known = (std::uint32_t{1} << props) - 1;
      return s;
    }
    if (var < order.size()) {
      for (int status = 0; status < 4; ++status) {
        State c = with_status(s, order[var], status);
        if (!admissible(c)) continue;
        if (auto r = run(c, var + 1, branch)) return r;
      }
      return std::nullopt;
    }
    const std::uint32_t bit = std::uint32_t{1} << (var - order.size());
    for (int value = 0; value < 2; ++value) {
      State c = s;
      c.props_known |= bit;
      if (value) c.props_true |= bit;
      if (auto r = run(c, var + 1, branch)) return r;
    }
    return std::nullopt;
  }

  // Statuses are tried as Neutral, Permitted, Forbidden, Empty.
  static State with_status(State s, std::size_t region, int status) {
    const Mask bit = Mask{1} << region;
    s.known |= bit;
    if (status != 3) s.nonempty |= bit;
    if (status == 1) s.perm |= bit;
    if (status == 2) s.forb |= bit;
    return s;
  }
};

}  // namespace

ClassicalVerdict decide_classical(const Formula& f, const Language& lang, const DecideOptions& opts) {
  const LogicVariant v = lang.variant;
  if (v != LogicVariant::DAL && v != LogicVariant::DAL_PROP && !is_ndal(v))
    throw VariantError("decide_classical handles DAL, DAL_PROP and NDAL1..NDAL5, not " + to_string(v));
  check_language(f, lang);
  if (requires_alphabet(v) && lang.alphabet.empty())
    throw VariantError(to_string(v) + " needs a declared alphabet");

  const SymbolSet syms = symbols(f);
  std::vector<std::string> actions(syms.basic_actions.begin(), syms.basic_actions.end());
  if (is_ndal(v) && !lang.alphabet.empty()) {
    for (const auto& a : actions)
      if (std::find(lang.alphabet.begin(), lang.alphabet.end(), a) == lang.alphabet.end())
        throw SymbolError("basic action '" + a + "' is not in the declared alphabet");
    actions = lang.alphabet;
    std::sort(actions.begin(), actions.end());
    actions.erase(std::unique(actions.begin(), actions.end()), actions.end());
  }
  const std::vector<std::string> props(syms.propositions.begin(), syms.propositions.end());
  if (actions.size() > kMaxActions)
    throw BudgetExceeded("at most " + std::to_string(kMaxActions) + " basic actions are supported");
  if (props.size() > kMaxProps)
    throw BudgetExceeded("at most " + std::to_string(kMaxProps) + " propositions are supported");

  Search search;
  Compiler compiler(actions, props);
  search.root = compiler.formula(f, search.nodes);
  search.regions = std::size_t{1} << actions.size();
  search.props = props.size();
  search.level = ndal_level(v);
  for (const auto& a : actions) search.generators.push_back(compiler.action(Action::basic(a)));

  // Regions no atom observes stay Empty. Without frame conditions, regions
  // that every atom treats alike collapse onto their least member.
  std::vector<std::vector<bool>> signature(search.regions);
  for (const Node& n : search.nodes)
    if (n.op == Node::Op::Eq || n.op == Node::Op::Perm || n.op == Node::Op::Forb)
      for (std::size_t r = 0; r < search.regions; ++r) signature[r].push_back(n.mask >> r & 1u);
  std::vector<std::size_t> representative(search.regions);
  for (std::size_t r = 0; r < search.regions; ++r) {
    representative[r] = r;
    if (search.level == 0)
      for (std::size_t q = 0; q < r; ++q)
        if (signature[q] == signature[r]) {
          representative[r] = q;
          break;
        }
    const bool observed = std::find(signature[r].begin(), signature[r].end(), true) != signature[r].end();
    if (observed && representative[r] == r) search.order.push_back(r);
  }
  if (search.level == 0) {
    for (Node& n : search.nodes) {
      Mask projected = 0;
      for (std::size_t r : search.order)
        if (n.mask >> r & 1u) projected |= Mask{1} << r;
      n.mask = projected;
    }
  }

  search.budget = opts.node_budget;
  std::atomic<std::size_t> spent{0};
  std::atomic<int> winner{-1};
  search.spent = &spent;
  search.winner = &winner;

  // One worker per status of the first region; the lowest branch with a
  // countermodel wins, so the result matches the sequential order.
  std::vector<std::future<std::optional<State>>> workers;
  if (search.order.empty()) {
    workers.push_back(std::async(std::launch::deferred, [&search] { return search.run(State{}, 0, 0); }));
  } else {
    for (int status = 0; status < 4; ++status) {
      State s = Search::with_status(State{}, search.order[0], status);
      workers.push_back(std::async(std::launch::async, [&search, &winner, s, status]() -> std::optional<State> {
        if (!search.admissible(s)) return std::nullopt;
        auto r = search.run(s, 1, status);
        if (r) {
          int cur = winner.load();
          while ((cur < 0 || cur > status) && !winner.compare_exchange_weak(cur, status)) {
          }
        }
        return r;
      }));
    }
  }
  std::optional<State> found;
  std::exception_ptr failure;
  for (auto& w : workers) {
    try {
      auto r = w.get();
      if (r && !found && !failure) found = r;
    } catch (...) {
      if (!found && !failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  ClassicalVerdict out;
  if (!found) return out;
  out.valid = false;
  AtomAssignment a;
  a.actions = actions;
  for (std::size_t r = 0; r < search.regions; ++r) {
    const Mask bit = Mask{1} << r;
    if (!(found->nonempty & bit)) a.regions.push_back(RegionStatus::Empty);
    else if (found->perm & bit) a.regions.push_back(RegionStatus::Permitted);
    else if (found->forb & bit) a.regions.push_back(RegionStatus::Forbidden);
    else a.regions.push_back(RegionStatus::Neutral);
  }
  for (std::size_t i = 0; i < props.size(); ++i) a.props[props[i]] = found->props_true >> i & 1u;
  auto [m, val] = induced_model(a);
  if (sat(m, val, f)) throw Error("internal: induced countermodel satisfies the formula");
  out.assignment = std::move(a);
  out.model = std::move(m);
  out.valuation = std::move(val);
  return out;
}

std::vector<FiniteLattice> action_catalog(LogicVariant v, std::size_t max_size) {
  std::vector<FiniteLattice> out;
  if (v == LogicVariant::DAL_IPL) {
    std::vector<std::string> atoms;
    while ((std::size_t{1} << atoms.size()) <= max_size && atoms.size() <= 4) {
      out.push_back(powerset_algebra(atoms));
      atoms.push_back("u" + std::to_string(atoms.size() + 1));
    }
    return out;
  }
  if (v != LogicVariant::DAL_IAL && v != LogicVariant::DAL_INT)
    throw VariantError("no Heyting catalog for " + to_string(v));
  if (max_size >= 1) out.push_back(powerset_algebra({}));
  if (max_size >= 2)
    for (auto& l : heyting_algebras_up_to(max_size)) out.push_back(std::move(l));
  return out;
}

std::vector<FiniteLattice> formula_catalog(LogicVariant v, std::size_t max_size) {
  if (v == LogicVariant::DAL_IAL) return {chain(2)};
  if (v != LogicVariant::DAL_IPL && v != LogicVariant::DAL_INT)
    throw VariantError("no Heyting catalog for " + to_string(v));
  return max_size >= 2 ? heyting_algebras_up_to(max_size) : std::vector<FiniteLattice>{};
}

std::size_t for_each_deontic_algebra(const FiniteLattice& A, const FiniteLattice& L, Flavor flavor, bool graded,
                                     std::size_t limit,
                                     const std::function<bool(const DeonticAlgebra&)>& visit) {
  const std::vector<Elem> ji = A.join_irreducibles();
  const std::size_t k = ji.size();
  // P and F are determined by their values on join-irreducibles; only
  // antitone value vectors give distinct maps.
  std::vector<std::vector<Elem>> antitone;
  std::vector<Elem> g(k, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = 0; j < k && ok; ++j)
        if (i != j && A.leq(ji[i], ji[j]) && !L.leq(g[j], g[i])) ok = false;
    if (ok) antitone.push_back(g);
    std::size_t i = k;
    while (i > 0 && ++g[i - 1] == L.size()) g[--i] = 0;
    if (i == 0) break;
  }
  auto extend = [&](const std::vector<Elem>& vals) {
    std::vector<Elem> m(A.size(), L.top());
    for (Elem x = 0; x < A.size(); ++x)
      for (std::size_t i = 0; i < k; ++i)
        if (A.leq(ji[i], x)) m[x] = L.meet(m[x], vals[i]);
    return m;
  };
  std::vector<std::vector<Elem>> maps;
  for (const auto& vals : antitone) maps.push_back(extend(vals));

  std::size_t visited = 0;
  for (const auto& perm : maps) {
    for (const auto& forb : maps) {
      std::vector<Elem> eq;
      if (graded) eq = graded_equality(A, L, perm, forb);
      if (check_conditions(A, L, perm, forb, eq)) continue;
      if (visited >= limit) return visited;
      ++visited;
      std::optional<std::vector<Elem>> table;
      if (graded) table = std::move(eq);
      if (!visit(DeonticAlgebra::build(A, L, perm, forb, std::move(table), flavor))) return visited;
    }
  }
  return visited;
}

HeytingVerdict countermodel_heyting(const Formula& f, const Language& lang, const HeytingBudget& budget) {
  const LogicVariant v = lang.variant;
  Flavor flavor;
  switch (v) {
    case LogicVariant::DAL_IPL: flavor = Flavor::BH; break;
    case LogicVariant::DAL_IAL: flavor = Flavor::HB; break;
    case LogicVariant::DAL_INT: flavor = Flavor::HH; break;
    default: throw VariantError("countermodel_heyting handles DAL_IPL, DAL_IAL and DAL_INT, not " + to_string(v));
  }
  check_language(f, lang);
  const SymbolSet syms = symbols(f);
  const auto actions = budget.action_catalog ? *budget.action_catalog : action_catalog(v, budget.max_action_size);
  const auto formulas = budget.formula_catalog ? *budget.formula_catalog : formula_catalog(v, budget.max_formula_size);

  HeytingVerdict out;
  bool stop = false;
  for (const auto& A : actions) {
    for (const auto& L : formulas) {
      if (stop || out.refuted) break;
      for_each_deontic_algebra(A, L, flavor, budget.graded_equality, budget.max_algebras - out.algebras_tried,
                               [&](const DeonticAlgebra& d) {
        ++out.algebras_tried;
        double space = std::pow(static_cast<double>(A.size()), static_cast<double>(syms.basic_actions.size())) *
                       std::pow(static_cast<double>(L.size()), static_cast<double>(syms.propositions.size()));
        if (space > static_cast<double>(budget.max_interpretations - out.interpretations_tried)) {
          out.note = "interpretation budget exhausted";
          stop = true;
          return false;
        }
        for_each_interpretation(d, syms, budget.max_interpretations, [&](const Interpretation& h) {
          ++out.interpretations_tried;
          if (evaluate(d, h, f) == d.formulas().top()) return true;
          out.refuted = true;
          out.algebra = d;
          out.interpretation = h;
          return false;
        });
        return !out.refuted;
      });
      if (!out.refuted && out.algebras_tried >= budget.max_algebras) {
        out.note = "algebra budget exhausted";
        stop = true;
      }
    }
  }
  if (!out.refuted && out.note.empty()) out.note = "catalog exhausted";
  return out;
}

std::vector<Formula> fence_formulas() {
  const Language lang(LogicVariant::DAL_PROP);
  return {
      parse_formula("obl(~isfenced)", lang),
      parse_formula("isfenced == 1 -> obl(ispaintedwhite)", lang),
      parse_formula("isfenced == 1", lang),
      parse_formula("ispaintedwhite + isfenced == isfenced", lang),
  };
}

std::optional<FenceWitness> fence_scenario_search(std::size_t max_candidates) {
  const auto goals = fence_formulas();
  SymbolSet syms;
  for (const auto& g : goals) {
    auto s = symbols(g);
    syms.basic_actions.insert(s.basic_actions.begin(), s.basic_actions.end());
  }
  const std::vector<FiniteLattice> formula_algebras = {chain(2), powerset_algebra({"w1", "w2"})};
  std::optional<FenceWitness> found;
  std::size_t tried = 0;
  std::vector<std::string> atoms = {"u1"};
  for (; atoms.size() <= 3 && !found && tried < max_candidates; atoms.push_back("u" + std::to_string(atoms.size() + 1))) {
    const FiniteLattice A = powerset_algebra(atoms);
    for (const auto& L : formula_algebras) {
      if (found || tried >= max_candidates) break;
      for_each_deontic_algebra(A, L, Flavor::BB, false, max_candidates - tried, [&](const DeonticAlgebra& d) {
        ++tried;
        for_each_interpretation(d, syms, kDefaultInterpretationBudget, [&](const Interpretation& h) {
          for (const auto& g : goals)
            if (evaluate(d, h, g) != d.formulas().top()) return true;
          found = FenceWitness{d, h, tried};
          return false;
        });
        return !found;
      });
    }
  }
  return found;
}

}  // namespace dal
