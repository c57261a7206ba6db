#include "dal/duality.hpp"

#include <algorithm>
#include <map>

namespace dal {

namespace {

PointSet union_of(const std::vector<PointSet>& blocks, Elem mask) {
  PointSet s = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (mask >> b & 1u) s |= blocks[b];
  return s;
}

std::string join_names(const DeonticModel& m, PointSet s) {
  std::string out;
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    if (!(s >> i & 1u)) continue;
    if (!out.empty()) out += '_';
    out += m.points[i];
  }
  return out;
}

std::string atom_label(const FiniteLattice& l, Elem atom, std::size_t index) {
  std::string n = l.is_powerset() ? l.atom_names()[index] : l.name(atom);
  if (n.size() >= 2 && n.front() == '{' && n.back() == '}') n = n.substr(1, n.size() - 2);
  std::replace(n.begin(), n.end(), ' ', '_');
  return n.empty() ? "x" + std::to_string(index) : n;
}

}  // namespace

AlgebraOfModel to_algebra(const DeonticModel& m, const Valuation& v) {
  m.validate();
  // Regions: points grouped by membership in each valuation image.
  std::vector<std::vector<bool>> signatures;
  std::vector<PointSet> blocks;
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    std::vector<bool> sig;
    for (const auto& [name, set] : v.actions) sig.push_back(set >> i & 1u);
    auto it = std::find(signatures.begin(), signatures.end(), sig);
    if (it == signatures.end()) {
      signatures.push_back(sig);
      blocks.push_back(PointSet{1} << i);
    } else {
      blocks[it - signatures.begin()] |= PointSet{1} << i;
    }
  }
  if (blocks.size() > 12) throw BudgetExceeded("model generates more than 12 regions");
  std::vector<std::string> atom_names;
  for (PointSet b : blocks) atom_names.push_back(join_names(m, b));
  FiniteLattice actions = powerset_algebra(atom_names);
  FiniteLattice two = chain(2);

  std::vector<Elem> perm(actions.size()), forb(actions.size());
  std::vector<PointSet> extension(actions.size());
  for (Elem x = 0; x < actions.size(); ++x) {
    extension[x] = union_of(blocks, x);
    perm[x] = (extension[x] & ~m.permitted) == 0 ? two.top() : two.bot();
    forb[x] = (extension[x] & ~m.forbidden) == 0 ? two.top() : two.bot();
  }
  Interpretation h;
  for (const auto& [name, set] : v.actions) {
    Elem mask = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if ((blocks[b] & set) == blocks[b]) mask |= Elem{1} << b;
    h.actions[name] = mask;
  }
  for (const auto& [name, value] : v.props) h.props[name] = value ? two.top() : two.bot();

  auto d = DeonticAlgebra::build(std::move(actions), std::move(two), std::move(perm), std::move(forb));
  return {ConcreteAlgebra{std::move(d), m.points, std::move(extension)}, std::move(h)};
}

std::pair<DeonticModel, Valuation> to_model(const ConcreteAlgebra& c, const Interpretation& h) {
  const DeonticAlgebra& d = c.algebra;
  if (d.formulas().size() != 2) throw Error("to_model needs a two-element formula algebra; stoneify first");
  PointSet carrier = 0, p = 0, f = 0;
  for (Elem x = 0; x < d.actions().size(); ++x) {
    carrier |= c.extension[x];
    if (d.P(x) == d.formulas().top()) p |= c.extension[x];
    if (d.F(x) == d.formulas().top()) f |= c.extension[x];
  }
  // Keep only the points the carrier actually covers, re-indexed in order.
  std::vector<int> remap(c.universe.size(), -1);
  DeonticModel m;
  for (std::size_t i = 0; i < c.universe.size(); ++i) {
    if (!(carrier >> i & 1u)) continue;
    remap[i] = static_cast<int>(m.points.size());
    m.points.push_back(c.universe[i]);
  }
  auto compress = [&](PointSet s) {
    PointSet out = 0;
    for (std::size_t i = 0; i < c.universe.size(); ++i)
      if ((s >> i & 1u) && remap[i] >= 0) out |= PointSet{1} << remap[i];
    return out;
  };
  m.permitted = compress(p);
  m.forbidden = compress(f);
  m.validate();
  Valuation v;
  for (const auto& [name, x] : h.actions) v.actions[name] = compress(c.extension.at(x));
  for (const auto& [name, x] : h.props) v.props[name] = x == d.formulas().top();
  return {std::move(m), std::move(v)};
}

Stoneified stoneify(const DeonticAlgebra& d) {
  if (d.flavor() != Flavor::BB) throw FlavorMismatch("stoneify needs a Boolean/Boolean algebra");
  const FiniteLattice& A = d.actions();
  const FiniteLattice& L = d.formulas();

  auto concretize = [](const FiniteLattice& l, std::vector<Elem>& iso) {
    auto atoms = l.atoms();
    if (atoms.size() > 12) throw BudgetExceeded("too many atoms to concretize");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < atoms.size(); ++i) names.push_back(atom_label(l, atoms[i], i));
    iso.assign(l.size(), 0);
    for (Elem x = 0; x < l.size(); ++x)
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (l.leq(atoms[i], x)) iso[x] |= Elem{1} << i;
    return powerset_algebra(names);
  };

  Stoneified out{ConcreteAlgebra{d, {}, {}}, {}, {}};
  FiniteLattice actions = concretize(A, out.action_iso);
  FiniteLattice formulas = L;
  if (L.size() == 2) {
    out.formula_iso = {0, 1};
  } else {
    formulas = concretize(L, out.formula_iso);
  }
  const std::size_t n = A.size();
  std::vector<Elem> perm(n), forb(n);
  std::optional<std::vector<Elem>> eq;
  if (!d.crisp()) eq.emplace(n * n);
  for (Elem x = 0; x < n; ++x) {
    perm[out.action_iso[x]] = out.formula_iso[d.P(x)];
    forb[out.action_iso[x]] = out.formula_iso[d.F(x)];
    if (eq)
      for (Elem y = 0; y < n; ++y) (*eq)[out.action_iso[x] * n + out.action_iso[y]] = out.formula_iso[d.E(x, y)];
  }
  out.concrete.universe = actions.atom_names();
  out.concrete.extension.resize(n);
  for (Elem x = 0; x < n; ++x) out.concrete.extension[x] = x;
  out.concrete.algebra = DeonticAlgebra::build(std::move(actions), std::move(formulas), std::move(perm),
                                               std::move(forb), std::move(eq), Flavor::BB);
  return out;
}

Interpretation transport(const Stoneified& s, const Interpretation& h) {
  Interpretation out;
  for (const auto& [name, x] : h.actions) out.actions[name] = s.action_iso.at(x);
  for (const auto& [name, x] : h.props) out.props[name] = s.formula_iso.at(x);
  return out;
}

RoundTripReport round_trip_report(const DeonticModel& m, const Valuation& v) {
  RoundTripReport r;
  auto a = to_algebra(m, v);
  auto [m2, v2] = to_model(a.concrete, a.h);

  Valuation v_norm = v;
  for (auto& [name, set] : v_norm.actions) set &= m.all();
  if (m2.points != m.points) {
    r.model_exact = false;
    r.mismatches.push_back("E differs: " + std::to_string(m.points.size()) + " points became " +
                           std::to_string(m2.points.size()));
  }
  if (m2.points == m.points) {
    if (m2.permitted != m.permitted) {
      r.model_exact = false;
      r.mismatches.push_back("P differs: " + m.show(m.permitted) + " became " + m.show(m2.permitted));
    }
    if (m2.forbidden != m.forbidden) {
      r.model_exact = false;
      r.mismatches.push_back("F differs: " + m.show(m.forbidden) + " became " + m.show(m2.forbidden));
    }
    if (v2 != v_norm) {
      r.model_exact = false;
      r.mismatches.push_back("valuation differs");
    }
  }

  auto a2 = to_algebra(m2, v2);
  const DeonticAlgebra& d1 = a.concrete.algebra;
  const DeonticAlgebra& d2 = a2.concrete.algebra;
  bool same = d1.actions().size() == d2.actions().size() && d1.perm_map() == d2.perm_map() &&
              d1.forb_map() == d2.forb_map() && a.h == a2.h;
  if (same) {
    for (Elem x = 0; x < d1.actions().size(); ++x)
      if (d1.actions().name(x) != d2.actions().name(x)) same = false;
  }
  if (!same) {
    r.algebra_exact = false;
    r.mismatches.push_back("a(m(D, h)) differs from D, h");
  }
  return r;
}

}  // namespace dal
