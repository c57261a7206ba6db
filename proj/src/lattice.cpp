#include "dal/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace dal {

std::string to_string(LatticeKind k) {
  switch (k) {
    case LatticeKind::BDL: return "bdl";
    case LatticeKind::Heyting: return "heyting";
    case LatticeKind::Boolean: return "boolean";
  }
  return "?";
}

FiniteLattice FiniteLattice::from_tables(std::size_t size, std::vector<Elem> join, std::vector<Elem> meet, Elem bot,
                                         Elem top, std::vector<std::string> names,
                                         std::optional<std::vector<Elem>> impl) {
  if (size == 0) throw Error("a lattice needs at least one element");
  if (join.size() != size * size || meet.size() != size * size)
    throw Error("operation tables must have size*size entries");
  if (impl && impl->size() != size * size) throw Error("implication table must have size*size entries");
  if (bot >= size || top >= size) throw Error("bot/top out of range");
  auto in_range = [size](const std::vector<Elem>& t) {
    return std::all_of(t.begin(), t.end(), [size](Elem e) { return e < size; });
  };
  if (!in_range(join) || !in_range(meet) || (impl && !in_range(*impl)))
    throw Error("operation table entry out of range");
  if (names.empty()) {
    for (std::size_t i = 0; i < size; ++i) names.push_back("e" + std::to_string(i));
  } else if (names.size() != size) {
    throw Error("expected one name per element");
  }
  FiniteLattice l;
  l.size_ = size;
  l.join_ = std::move(join);
  l.meet_ = std::move(meet);
  l.bot_ = bot;
  l.top_ = top;
  l.names_ = std::move(names);
  if (impl) l.impl_ = std::move(*impl);
  l.classify();
  return l;
}

FiniteLattice FiniteLattice::powerset(std::vector<std::string> atom_names) {
  if (atom_names.size() > 16) throw BudgetExceeded("powerset algebras support at most 16 atoms");
  FiniteLattice l;
  l.powerset_ = true;
  l.size_ = std::size_t{1} << atom_names.size();
  l.bot_ = 0;
  l.top_ = static_cast<Elem>(l.size_ - 1);
  l.descriptor_ = "powerset";
  for (const auto& a : atom_names) l.descriptor_ += " " + a;
  l.atom_names_ = std::move(atom_names);
  l.kind_ = LatticeKind::Boolean;
  return l;
}

Elem FiniteLattice::impl(Elem a, Elem b) const {
  if (powerset_) return (~a | b) & top_;
  if (impl_.empty()) throw Error("lattice has no implication");
  return impl_[a * size_ + b];
}

void FiniteLattice::classify() {
  if (powerset_) {
    kind_ = LatticeKind::Boolean;
    return;
  }
  if (impl_.empty()) {
    kind_ = LatticeKind::BDL;
    return;
  }
  kind_ = LatticeKind::Boolean;
  for (Elem x = 0; x < size_; ++x) {
    if (join(x, complement(x)) != top_) {
      kind_ = LatticeKind::Heyting;
      return;
    }
  }
}

std::string FiniteLattice::name(Elem x) const {
  if (!powerset_) return names_.at(x);
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < atom_names_.size(); ++i) {
    if (!(x >> i & 1u)) continue;
    if (!first) out += ' ';
    out += atom_names_[i];
    first = false;
  }
  return out + "}";
}

std::optional<Elem> FiniteLattice::find(const std::string& name) const {
  if (name == "bot") return bot_;
  if (name == "top") return top_;
  if (!powerset_) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<Elem>(i);
    return std::nullopt;
  }
  if (name.size() < 2 || name.front() != '{' || name.back() != '}') return std::nullopt;
  std::istringstream in(name.substr(1, name.size() - 2));
  Elem mask = 0;
  std::string tok;
  while (in >> tok) {
    auto it = std::find(atom_names_.begin(), atom_names_.end(), tok);
    if (it == atom_names_.end()) return std::nullopt;
    mask |= Elem{1} << (it - atom_names_.begin());
  }
  return mask;
}

std::vector<Elem> FiniteLattice::atoms() const {
  std::vector<Elem> out;
  if (powerset_) {
    for (std::size_t i = 0; i < atom_names_.size(); ++i) out.push_back(Elem{1} << i);
    return out;
  }
  for (Elem x = 0; x < size_; ++x) {
    if (x == bot_) continue;
    bool minimal = true;
    for (Elem y = 0; y < size_ && minimal; ++y)
      if (y != x && y != bot_ && leq(y, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<std::pair<Elem, Elem>> FiniteLattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  if (powerset_) {
    for (Elem x = 0; x < size_; ++x)
      for (std::size_t i = 0; i < atom_names_.size(); ++i)
        if (!(x >> i & 1u)) out.emplace_back(x, x | (Elem{1} << i));
    std::sort(out.begin(), out.end());
    return out;
  }
  for (Elem x = 0; x < size_; ++x) {
    for (Elem y = 0; y < size_; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool cover = true;
      for (Elem z = 0; z < size_ && cover; ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
      if (cover) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<Elem> FiniteLattice::join_irreducibles() const {
  if (powerset_) return atoms();
  std::vector<std::size_t> lower(size_, 0);
  for (auto [x, y] : covers()) ++lower[y];
  std::vector<Elem> out;
  for (Elem x = 0; x < size_; ++x)
    if (lower[x] == 1) out.push_back(x);
  return out;
}

FiniteLattice FiniteLattice::with_computed_implication() const {
  if (has_implication()) return *this;
  FiniteLattice l = *this;
  l.impl_.assign(size_ * size_, 0);
  for (Elem a = 0; a < size_; ++a) {
    for (Elem b = 0; b < size_; ++b) {
      Elem best = bot_;
      for (Elem c = 0; c < size_; ++c)
        if (leq(meet(a, c), b)) best = join(best, c);
      l.impl_[a * size_ + b] = best;
    }
  }
  l.classify();
  return l;
}

namespace {
constexpr std::size_t kMaxMaterialized = 1024;
}

std::vector<Elem> FiniteLattice::join_table() const {
  if (!powerset_) return join_;
  if (size_ > kMaxMaterialized) throw BudgetExceeded("lattice too large to tabulate");
  std::vector<Elem> t(size_ * size_);
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b) t[a * size_ + b] = a | b;
  return t;
}

std::vector<Elem> FiniteLattice::meet_table() const {
  if (!powerset_) return meet_;
  if (size_ > kMaxMaterialized) throw BudgetExceeded("lattice too large to tabulate");
  std::vector<Elem> t(size_ * size_);
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b) t[a * size_ + b] = a & b;
  return t;
}

std::vector<Elem> FiniteLattice::impl_table() const {
  if (!powerset_) return impl_;
  if (size_ > kMaxMaterialized) throw BudgetExceeded("lattice too large to tabulate");
  std::vector<Elem> t(size_ * size_);
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b) t[a * size_ + b] = impl(a, b);
  return t;
}

FiniteLattice FiniteLattice::with_descriptor(std::string d, std::map<std::string, Elem> gens) const {
  FiniteLattice l = *this;
  l.descriptor_ = std::move(d);
  l.generators_ = std::move(gens);
  return l;
}

// ---------------------------------------------------------------------------

FiniteLattice powerset_algebra(const std::vector<std::string>& atom_names) {
  return FiniteLattice::powerset(atom_names);
}

FiniteLattice free_boolean(const std::vector<std::string>& generators) {
  const std::size_t n = generators.size();
  if (n > 4) throw BudgetExceeded("free Boolean algebras support at most 4 generators");
  std::vector<std::string> atoms;
  for (std::size_t j = 0; j < (std::size_t{1} << n); ++j) {
    std::string m;
    for (std::size_t i = 0; i < n; ++i) {
      if (i) m += '*';
      if (!(j >> i & 1u)) m += '~';
      m += generators[i];
    }
    atoms.push_back(n == 0 ? "1" : m);
  }
  FiniteLattice base = FiniteLattice::powerset(atoms);
  std::map<std::string, Elem> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Elem mask = 0;
    for (std::size_t j = 0; j < atoms.size(); ++j)
      if (j >> i & 1u) mask |= Elem{1} << j;
    gens[generators[i]] = mask;
  }
  std::string d = "free";
  for (const auto& g : generators) d += " " + g;
  return base.with_descriptor(d, std::move(gens));
}

FiniteLattice downset_algebra(const std::vector<std::string>& points,
                              const std::vector<std::pair<std::size_t, std::size_t>>& less) {
  const std::size_t m = points.size();
  if (m > 8) throw BudgetExceeded("downset algebras support posets of at most 8 points");
  std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
  for (auto [i, j] : less) {
    if (i >= m || j >= m) throw Error("poset relation refers to an unknown point");
    lt[i][j] = true;
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (lt[i][k] && lt[k][j]) lt[i][j] = true;
  for (std::size_t i = 0; i < m; ++i)
    if (lt[i][i]) throw Error("relation is not a strict order: cycle through '" + points[i] + "'");

  std::vector<Elem> below(m, 0);  // strict down-set of each point
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (lt[j][i]) below[i] |= Elem{1} << j;

  std::vector<Elem> downsets;
  for (Elem s = 0; s < (Elem{1} << m); ++s) {
    bool closed = true;
    for (std::size_t i = 0; i < m && closed; ++i)
      if ((s >> i & 1u) && (below[i] & ~s)) closed = false;
    if (closed) downsets.push_back(s);
  }
  const std::size_t n = downsets.size();
  std::map<Elem, Elem> index;
  for (std::size_t k = 0; k < n; ++k) index[downsets[k]] = static_cast<Elem>(k);

  std::vector<Elem> join(n * n), meet(n * n), impl(n * n);
  const Elem all = (Elem{1} << m) - 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      join[a * n + b] = index.at(downsets[a] | downsets[b]);
      meet[a * n + b] = index.at(downsets[a] & downsets[b]);
      Elem allowed = (~downsets[a] | downsets[b]) & all;
      Elem largest = 0;
      for (std::size_t i = 0; i < m; ++i) {
        Elem principal = below[i] | (Elem{1} << i);
        if ((principal & ~allowed) == 0) largest |= Elem{1} << i;
      }
      impl[a * n + b] = index.at(largest);
    }
  }
  std::vector<std::string> names;
  for (Elem s : downsets) {
    std::string nm = "{";
    bool first = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(s >> i & 1u)) continue;
      if (!first) nm += ' ';
      nm += points[i];
      first = false;
    }
    names.push_back(nm + "}");
  }
  // Descriptor: every point (fixing the order), then the covering pairs.
  std::string d = "downsets";
  for (const auto& p : points) d += " " + p;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!lt[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < m && cover; ++k)
        if (lt[i][k] && lt[k][j]) cover = false;
      if (cover) d += " " + points[i] + "<" + points[j];
    }
  }
  return FiniteLattice::from_tables(n, std::move(join), std::move(meet), 0, static_cast<Elem>(n - 1),
                                    std::move(names), std::move(impl))
      .with_descriptor(d);
}

FiniteLattice chain(std::size_t n) {
  if (n == 0) throw Error("chain length must be at least 1");
  std::vector<Elem> join(n * n), meet(n * n), impl(n * n);
  std::vector<std::string> names;
  for (Elem a = 0; a < n; ++a) {
    names.push_back("c" + std::to_string(a));
    for (Elem b = 0; b < n; ++b) {
      join[a * n + b] = std::max(a, b);
      meet[a * n + b] = std::min(a, b);
      impl[a * n + b] = a <= b ? static_cast<Elem>(n - 1) : b;
    }
  }
  return FiniteLattice::from_tables(n, std::move(join), std::move(meet), 0, static_cast<Elem>(n - 1),
                                    std::move(names), std::move(impl))
      .with_descriptor("chain " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Validation

std::vector<LawViolation> validate(const FiniteLattice& l, LatticeKind kind) {
  std::vector<LawViolation> out;
  if (l.is_powerset()) return out;  // set operations satisfy every law by construction
  const Elem n = static_cast<Elem>(l.size());
  const Elem z = l.bot(), o = l.top();
  auto J = [&](Elem a, Elem b) { return l.join(a, b); };
  auto M = [&](Elem a, Elem b) { return l.meet(a, b); };

  struct Ternary {
    const char* id;
    std::function<bool(Elem, Elem, Elem)> holds;
    int arity;
  };
  std::vector<Ternary> laws = {
      {"L1", [&](Elem a, Elem b, Elem c) { return J(a, J(b, c)) == J(J(a, b), c); }, 3},
      {"L2", [&](Elem a, Elem b, Elem) { return J(a, b) == J(b, a); }, 2},
      {"L3", [&](Elem a, Elem, Elem) { return J(a, a) == a; }, 1},
      {"L4", [&](Elem a, Elem b, Elem) { return J(a, M(a, b)) == a; }, 2},
      {"L5", [&](Elem a, Elem b, Elem c) { return J(a, M(b, c)) == M(J(a, b), J(a, c)); }, 3},
      {"L6", [&](Elem a, Elem, Elem) { return J(a, o) == o; }, 1},
      {"L7", [&](Elem a, Elem b, Elem c) { return M(a, M(b, c)) == M(M(a, b), c); }, 3},
      {"L8", [&](Elem a, Elem b, Elem) { return M(a, b) == M(b, a); }, 2},
      {"L9", [&](Elem a, Elem, Elem) { return M(a, a) == a; }, 1},
      {"L10", [&](Elem a, Elem b, Elem) { return M(a, J(a, b)) == a; }, 2},
      {"L11", [&](Elem a, Elem b, Elem c) { return M(a, J(b, c)) == J(M(a, b), M(a, c)); }, 3},
      {"L12", [&](Elem a, Elem, Elem) { return M(a, z) == z; }, 1},
  };
  bool heyting = kind != LatticeKind::BDL;
  if (heyting && !l.has_implication()) {
    out.push_back({"implication", {}});
    heyting = false;
  }
  if (heyting) {
    auto I = [&](Elem a, Elem b) { return l.impl(a, b); };
    laws.push_back({"residuation",
                    [&, I](Elem a, Elem b, Elem c) { return l.leq(M(a, c), b) == l.leq(c, I(a, b)); }, 3});
    laws.push_back({"H1std", [&, I](Elem a, Elem b, Elem) { return M(a, I(a, b)) == M(a, b); }, 2});
    laws.push_back({"H2", [&, I](Elem a, Elem b, Elem c) { return M(I(M(a, b), a), c) == c; }, 3});
    laws.push_back(
        {"H3", [&, I](Elem a, Elem b, Elem c) { return M(a, I(b, c)) == M(a, I(M(a, b), M(a, c))); }, 3});
    if (kind == LatticeKind::Boolean)
      laws.push_back({"LEM", [&, I](Elem a, Elem, Elem) { return J(a, I(a, z)) == o; }, 1});
  }

  for (const auto& law : laws) {
    const Elem nb = law.arity >= 2 ? n : 1, nc = law.arity >= 3 ? n : 1;
    bool found = false;
    for (Elem a = 0; a < n && !found; ++a)
      for (Elem b = 0; b < nb && !found; ++b)
        for (Elem c = 0; c < nc && !found; ++c)
          if (!law.holds(a, b, c)) {
            std::vector<Elem> w = {a, b, c};
            w.resize(law.arity);
            out.push_back({law.id, w});
            found = true;
          }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ideals and congruences

bool is_ideal(const FiniteLattice& l, const ElemSet& s) {
  if (!s.contains(l.bot())) return false;
  for (Elem x : s) {
    for (Elem y : s)
      if (!s.contains(l.join(x, y))) return false;
    for (Elem y = 0; y < l.size(); ++y)
      if (!s.contains(l.meet(x, y))) return false;
  }
  return true;
}

ElemSet principal_ideal(const FiniteLattice& l, Elem x) {
  ElemSet out;
  if (l.is_powerset()) {
    for (Elem s = x;; s = (s - 1) & x) {
      out.insert(s);
      if (s == 0) break;
    }
    return out;
  }
  for (Elem y = 0; y < l.size(); ++y)
    if (l.leq(y, x)) out.insert(y);
  return out;
}

std::vector<Elem> class_map(const FiniteLattice& l, const Partition& classes) {
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> cls(l.size(), kUnset);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].empty()) throw Error("partition has an empty class");
    for (Elem x : classes[k]) {
      if (x >= l.size()) throw Error("partition mentions an element outside the carrier");
      if (cls[x] != kUnset) throw Error("partition classes overlap at " + l.name(x));
      cls[x] = static_cast<Elem>(k);
    }
  }
  for (Elem x = 0; x < l.size(); ++x)
    if (cls[x] == kUnset) throw Error("partition does not cover " + l.name(x));
  return cls;
}

namespace {

std::optional<std::pair<Elem, Elem>> congruence_witness(const FiniteLattice& l, const Partition& classes,
                                                        const std::vector<Elem>& cls) {
  const bool impl = l.has_implication();
  for (const auto& c : classes) {
    Elem r = c.front();
    for (Elem x : c) {
      if (x == r) continue;
      for (Elem y = 0; y < l.size(); ++y) {
        bool ok = cls[l.join(x, y)] == cls[l.join(r, y)] && cls[l.meet(x, y)] == cls[l.meet(r, y)];
        if (ok && impl)
          ok = cls[l.impl(x, y)] == cls[l.impl(r, y)] && cls[l.impl(y, x)] == cls[l.impl(y, r)];
        if (!ok) return std::make_pair(x, r);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_congruence(const FiniteLattice& l, const Partition& classes) {
  auto cls = class_map(l, classes);
  return !congruence_witness(l, classes, cls).has_value();
}

FiniteLattice quotient(const FiniteLattice& l, const Partition& classes) {
  auto cls = class_map(l, classes);
  if (auto w = congruence_witness(l, classes, cls))
    throw NotACongruence("not a congruence: " + l.name(w->first) + " and " + l.name(w->second) +
                             " are related but their images under some operation are not",
                         w->first, w->second);
  const std::size_t k = classes.size();
  std::vector<Elem> join(k * k), meet(k * k), impl;
  if (l.has_implication()) impl.resize(k * k);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    Elem least = classes[i].front();
    for (Elem x : classes[i]) least = l.meet(least, x);
    names.push_back("[" + l.name(least) + "]");
    for (std::size_t j = 0; j < k; ++j) {
      Elem a = classes[i].front(), b = classes[j].front();
      join[i * k + j] = cls[l.join(a, b)];
      meet[i * k + j] = cls[l.meet(a, b)];
      if (!impl.empty()) impl[i * k + j] = cls[l.impl(a, b)];
    }
  }
  std::optional<std::vector<Elem>> impl_opt;
  if (!impl.empty()) impl_opt = std::move(impl);
  return FiniteLattice::from_tables(k, std::move(join), std::move(meet), cls[l.bot()], cls[l.top()],
                                    std::move(names), std::move(impl_opt));
}

// ---------------------------------------------------------------------------

ElemSet generated_sublattice(const FiniteLattice& l, const ElemSet& gens, LatticeKind kind) {
  for (Elem g : gens)
    if (g >= l.size()) throw Error("generator outside the carrier");
  if (l.is_powerset() && kind == LatticeKind::Boolean) {
    // The generated field of sets is all unions of the nonempty membership regions.
    std::map<std::vector<bool>, Elem> regions;
    for (std::size_t i = 0; i < l.atom_names().size(); ++i) {
      std::vector<bool> sig;
      for (Elem g : gens) sig.push_back(g >> i & 1u);
      regions[sig] |= Elem{1} << i;
    }
    std::vector<Elem> blocks;
    for (const auto& [sig, mask] : regions) blocks.push_back(mask);
    if (blocks.size() > 20) throw BudgetExceeded("generated subalgebra too large");
    ElemSet out;
    for (std::size_t s = 0; s < (std::size_t{1} << blocks.size()); ++s) {
      Elem m = 0;
      for (std::size_t b = 0; b < blocks.size(); ++b)
        if (s >> b & 1u) m |= blocks[b];
      out.insert(m);
    }
    return out;
  }
  const bool with_impl = kind != LatticeKind::BDL && l.has_implication();
  std::vector<char> in(l.size(), 0);
  std::vector<Elem> members;
  auto add = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(l.bot());
  add(l.top());
  for (Elem g : gens) add(g);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Elem a = members[i], b = members[j];
      add(l.join(a, b));
      add(l.meet(a, b));
      if (with_impl) {
        add(l.impl(a, b));
        add(l.impl(b, a));
      }
    }
  }
  return ElemSet(members.begin(), members.end());
}

// ---------------------------------------------------------------------------
// Isomorphism and the Heyting catalog

std::optional<std::vector<Elem>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  auto down_count = [](const FiniteLattice& l, Elem x) {
    std::size_t c = 0;
    for (Elem y = 0; y < l.size(); ++y) c += l.leq(y, x);
    return c;
  };
  std::vector<std::size_t> da(n), db(n);
  for (Elem x = 0; x < n; ++x) {
    da[x] = down_count(a, x);
    db[x] = down_count(b, x);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> f(n, kUnset);
  std::vector<char> used(n, 0);
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), 0);

  auto consistent = [&](Elem x) {
    for (Elem y = 0; y < n; ++y) {
      if (f[y] == kUnset) continue;
      if (a.leq(x, y) != b.leq(f[x], f[y]) || a.leq(y, x) != b.leq(f[y], f[x])) return false;
      Elem j = a.join(x, y), m = a.meet(x, y);
      if (f[j] != kUnset && f[j] != b.join(f[x], f[y])) return false;
      if (f[m] != kUnset && f[m] != b.meet(f[x], f[y])) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    Elem x = order[i];
    for (Elem y = 0; y < n; ++y) {
      if (used[y] || da[x] != db[y]) continue;
      if ((x == a.bot()) != (y == b.bot()) || (x == a.top()) != (y == b.top())) continue;
      f[x] = y;
      used[y] = 1;
      if (consistent(x) && go(i + 1)) return true;
      f[x] = kUnset;
      used[y] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return f;
}

std::vector<FiniteLattice> heyting_catalog(std::size_t max_points) {
  if (max_points > 5) throw BudgetExceeded("the Heyting catalog supports posets of at most 5 points");
  std::vector<FiniteLattice> out;
  for (std::size_t m = 1; m <= max_points; ++m) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    std::vector<std::size_t> perm(m);
    std::set<std::uint32_t> seen;
    for (std::uint32_t s = 0; s < (1u << pairs.size()); ++s) {
      std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if (s >> p & 1u) lt[pairs[p].first][pairs[p].second] = true;
      bool transitive = true;
      for (std::size_t i = 0; i < m && transitive; ++i)
        for (std::size_t j = 0; j < m && transitive; ++j)
          for (std::size_t k = 0; k < m && transitive; ++k)
            if (lt[i][j] && lt[j][k] && !lt[i][k]) transitive = false;
      if (!transitive) continue;
      // Canonical code: least relation bitmap over all relabellings.
      std::iota(perm.begin(), perm.end(), 0);
      std::uint32_t best = ~0u;
      do {
        std::uint32_t code = 0;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j)
            if (lt[i][j]) code |= 1u << (perm[i] * m + perm[j]);
        best = std::min(best, code);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!seen.insert(best).second) continue;
      std::vector<std::string> points;
      for (std::size_t i = 0; i < m; ++i) points.push_back("p" + std::to_string(i));
      std::vector<std::pair<std::size_t, std::size_t>> less;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if (s >> p & 1u) less.push_back(pairs[p]);
      out.push_back(downset_algebra(points, less));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const FiniteLattice& x, const FiniteLattice& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    auto jx = x.join_table(), jy = y.join_table();
    if (jx != jy) return jx < jy;
    return x.meet_table() < y.meet_table();
  });
  return out;
}

namespace {

struct PosetGrower {
  std::size_t max_size;
  std::vector<Elem> below;  // strict down-set of each point
  std::set<std::pair<std::size_t, std::uint64_t>> seen;
  std::vector<FiniteLattice> out;

  std::vector<Elem> downsets() const {
    std::vector<Elem> d;
    for (Elem s = 0; s < (Elem{1} << below.size()); ++s) {
      bool closed = true;
      for (std::size_t i = 0; i < below.size() && closed; ++i)
        if ((s >> i & 1u) && (below[i] & ~s)) closed = false;
      if (closed) d.push_back(s);
    }
    return d;
  }

  std::uint64_t canonical() const {
    const std::size_t m = below.size();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (below[j] >> i & 1u) code |= std::uint64_t{1} << (perm[i] * m + perm[j]);
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  void grow() {
    auto d = downsets();
    if (d.size() > max_size) return;
    if (!below.empty() && seen.insert({below.size(), canonical()}).second) {
      std::vector<std::string> points;
      std::vector<std::pair<std::size_t, std::size_t>> less;
      for (std::size_t i = 0; i < below.size(); ++i) {
        points.push_back("p" + std::to_string(i));
        for (std::size_t j = 0; j < below.size(); ++j)
          if (below[i] >> j & 1u) less.emplace_back(j, i);
      }
      out.push_back(downset_algebra(points, less));
    }
    if (below.size() + 2 > max_size || below.size() == 8) return;
    for (Elem s : d) {
      below.push_back(s);
      grow();
      below.pop_back();
    }
  }
};

}  // namespace

std::vector<FiniteLattice> heyting_algebras_up_to(std::size_t max_size) {
  if (max_size > 9) throw BudgetExceeded("finite Heyting algebras are enumerated up to 9 elements");
  PosetGrower g{max_size, {}, {}, {}};
  g.grow();
  std::stable_sort(g.out.begin(), g.out.end(), [](const FiniteLattice& x, const FiniteLattice& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    auto jx = x.join_table(), jy = y.join_table();
    if (jx != jy) return jx < jy;
    return x.meet_table() < y.meet_table();
  });
  return g.out;
}

}  // namespace dal
