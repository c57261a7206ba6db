#include "dal/formats.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace dal {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
    pos = end + 1;
  }
  return out;
}

// Splits on whitespace, keeping {...} and (...) groups whole.
std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '{' || c == '(') ++depth;
    if (c == '}' || c == ')') --depth;
    if ((c == ' ' || c == '\t') && depth <= 0) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::pair<std::string, std::string> key_value(const Line& l, char sep) {
  auto p = l.text.find(sep);
  if (p == std::string::npos) throw FormatError(std::string("expected '") + sep + "'", l.number);
  return {trim(std::string_view(l.text).substr(0, p)), trim(std::string_view(l.text).substr(p + 1))};
}

std::map<std::string, Elem> generator_map(const FiniteLattice& l) {
  if (!l.generators().empty()) return l.generators();
  std::map<std::string, Elem> gens;
  if (l.is_powerset()) {
    for (std::size_t i = 0; i < l.atom_names().size(); ++i) gens[l.atom_names()[i]] = Elem{1} << i;
  } else if (l.descriptor().rfind("downsets", 0) == 0) {
    // Point x denotes its principal downset: the meet of all downsets holding x.
    auto members = [&](Elem e) {
      const std::string n = l.name(e);
      return words(n.substr(1, n.size() - 2));
    };
    for (Elem e = 0; e < l.size(); ++e)
      for (const auto& x : members(e)) {
        auto it = gens.find(x);
        gens[x] = it == gens.end() ? e : l.meet(it->second, e);
      }
  }
  return gens;
}

Elem eval_term(const FiniteLattice& l, const std::map<std::string, Elem>& gens, const Action& a) {
  switch (a.kind()) {
    case Action::Kind::Basic: {
      auto it = gens.find(a.name());
      if (it == gens.end()) {
        if (auto e = l.find(a.name())) return *e;
        throw SymbolError("unknown element or generator '" + a.name() + "'");
      }
      return it->second;
    }
    case Action::Kind::Zero: return l.bot();
    case Action::Kind::One: return l.top();
    case Action::Kind::Compl: return l.complement(eval_term(l, gens, a.left()));
    case Action::Kind::Union: return l.join(eval_term(l, gens, a.left()), eval_term(l, gens, a.right()));
    case Action::Kind::Inter: return l.meet(eval_term(l, gens, a.left()), eval_term(l, gens, a.right()));
    case Action::Kind::Impl: return l.impl(eval_term(l, gens, a.left()), eval_term(l, gens, a.right()));
  }
  throw Error("unreachable action kind");
}

std::string value_name(const FiniteLattice& l, Elem x) {
  if (x == l.top()) return "top";
  if (x == l.bot()) return "bot";
  return l.name(x);
}

}  // namespace

std::pair<DeonticModel, Valuation> read_model(std::string_view text) {
  DeonticModel m;
  Valuation v;
  bool have_elements = false;
  std::size_t pf_line = 0;
  auto points_of = [&](const std::string& list, std::size_t line) {
    PointSet s = 0;
    for (const auto& w : words(list)) {
      auto i = m.index(w);
      if (!i) throw FormatError("unknown element '" + w + "'", line);
      s |= PointSet{1} << *i;
    }
    return s;
  };
  for (const auto& l : content_lines(text)) {
    auto [key, value] = key_value(l, ':');
    if (key == "elements") {
      if (have_elements) throw FormatError("duplicate elements line", l.number);
      have_elements = true;
      m.points = words(value);
      if (m.points.size() > 64) throw FormatError("at most 64 elements are supported", l.number);
      for (std::size_t i = 0; i < m.points.size(); ++i)
        if (std::find(m.points.begin(), m.points.begin() + i, m.points[i]) != m.points.begin() + i)
          throw FormatError("duplicate element '" + m.points[i] + "'", l.number);
      continue;
    }
    if (!have_elements) throw FormatError("the elements line must come first", l.number);
    if (key == "permitted") {
      m.permitted = points_of(value, l.number);
      pf_line = l.number;
    } else if (key == "forbidden") {
      m.forbidden = points_of(value, l.number);
      pf_line = l.number;
    } else if (key.rfind("val ", 0) == 0) {
      std::string name = trim(key.substr(4));
      if (name.empty()) throw FormatError("missing action name", l.number);
      v.actions[name] = points_of(value, l.number);
    } else if (key == "true" || key == "false") {
      for (const auto& p : words(value)) v.props[p] = key == "true";
    } else {
      throw FormatError("unknown key '" + key + "'", l.number);
    }
  }
  if (!have_elements) throw FormatError("missing elements line");
  try {
    m.validate();
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(e.what(), pf_line);
  }
  return {std::move(m), std::move(v)};
}

std::string write_model(const DeonticModel& m, const Valuation& v) {
  auto list = [&](PointSet s) {
    std::string out;
    for (std::size_t i = 0; i < m.points.size(); ++i)
      if (s >> i & 1u) out += " " + m.points[i];
    return out;
  };
  std::ostringstream out;
  out << "elements:" << list(m.all()) << "\n";
  out << "permitted:" << list(m.permitted) << "\n";
  out << "forbidden:" << list(m.forbidden) << "\n";
  for (const auto& [name, s] : v.actions) out << "val " << name << ":" << list(s & m.all()) << "\n";
  std::string t, f;
  for (const auto& [name, b] : v.props) (b ? t : f) += " " + name;
  if (!t.empty()) out << "true:" << t << "\n";
  if (!f.empty()) out << "false:" << f << "\n";
  return out.str();
}

FiniteLattice lattice_from_descriptor(const std::string& descriptor) {
  auto ws = words(descriptor);
  if (ws.empty()) throw FormatError("empty lattice descriptor");
  const std::string kind = ws[0];
  std::vector<std::string> args(ws.begin() + 1, ws.end());
  if (kind == "powerset") return powerset_algebra(args);
  if (kind == "free") return free_boolean(args);
  if (kind == "chain") {
    std::size_t n = 0;
    if (args.size() != 1 || std::from_chars(args[0].data(), args[0].data() + args[0].size(), n).ec != std::errc())
      throw FormatError("chain needs one size argument");
    return chain(n);
  }
  if (kind == "downsets") {
    std::vector<std::string> points;
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& a : args) {
      auto lt = a.find('<');
      if (lt == std::string::npos) {
        points.push_back(a);
      } else {
        edges.emplace_back(a.substr(0, lt), a.substr(lt + 1));
      }
    }
    auto index = [&](const std::string& p) {
      auto it = std::find(points.begin(), points.end(), p);
      if (it == points.end()) {
        points.push_back(p);
        return points.size() - 1;
      }
      return static_cast<std::size_t>(it - points.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> less;
    for (const auto& [x, y] : edges) {
      const std::size_t i = index(x);
      less.emplace_back(i, index(y));
    }
    return downset_algebra(points, less);
  }
  throw FormatError("unknown lattice kind '" + kind + "'");
}

Elem resolve_element(const FiniteLattice& l, const std::string& ref) {
  if (auto e = l.find(ref)) return *e;
  Action term = [&] {
    try {
      return parse_action(ref, Language(LogicVariant::DAL_IAL));
    } catch (const Error&) {
      throw FormatError("unknown element '" + ref + "'");
    }
  }();
  try {
    return eval_term(l, generator_map(l), term);
  } catch (const SymbolError& e) {
    throw FormatError(std::string(e.what()) + " in '" + ref + "'");
  }
}

DeonticAlgebra read_algebra(std::string_view text) {
  std::optional<FiniteLattice> actions, formulas;
  std::optional<Flavor> flavor;
  struct Assignment {
    std::size_t line;
    std::vector<std::string> refs;
    std::string value;
  };
  std::map<char, std::vector<Assignment>> maps;
  for (const auto& l : content_lines(text)) {
    const auto colon = l.text.find(':');
    const auto eq = l.text.find('=');
    if (colon != std::string::npos && (eq == std::string::npos || colon < eq)) {
      auto [key, value] = key_value(l, ':');
      try {
        if (key == "actions") {
          actions = lattice_from_descriptor(value);
        } else if (key == "formulas") {
          formulas = lattice_from_descriptor(value);
        } else if (key == "flavor") {
          flavor = parse_flavor(value);
        } else {
          throw FormatError("unknown key '" + key + "'", l.number);
        }
      } catch (const FormatError& e) {
        if (e.line() != 0) throw;
        throw FormatError(e.what(), l.number);
      } catch (const Error& e) {
        throw FormatError(e.what(), l.number);
      }
      continue;
    }
    auto [lhs, value] = key_value(l, '=');
    auto ws = words(lhs);
    if (ws.empty() || (ws[0] != "P" && ws[0] != "F" && ws[0] != "E"))
      throw FormatError("expected P, F or E", l.number);
    const char which = ws[0][0];
    std::vector<std::string> refs(ws.begin() + 1, ws.end());
    if (which != 'E' && refs.size() != 1) refs = {trim(lhs.substr(1))};
    if (which == 'E' && refs.size() != 2) throw FormatError("E needs two elements", l.number);
    maps[which].push_back({l.number, refs, value});
  }
  if (!actions) throw FormatError("missing actions line");
  if (!formulas) throw FormatError("missing formulas line");
  const FiniteLattice& A = *actions;
  const FiniteLattice& L = *formulas;

  auto resolve = [](const FiniteLattice& l, const std::string& ref, std::size_t line) {
    try {
      return resolve_element(l, ref);
    } catch (const Error& e) {
      throw FormatError(e.what(), line);
    }
  };
  auto build_map = [&](char which) {
    std::vector<Elem> out(A.size(), L.bot());
    std::vector<bool> set(A.size(), false);
    for (const auto& a : maps[which]) {
      const Elem v = resolve(L, a.value, a.line);
      if (a.refs[0] == "default") {
        for (Elem x = 0; x < A.size(); ++x)
          if (!set[x]) out[x] = v;
        continue;
      }
      const Elem x = resolve(A, a.refs[0], a.line);
      out[x] = v;
      set[x] = true;
    }
    return out;
  };
  std::vector<Elem> perm = build_map('P');
  std::vector<Elem> forb = build_map('F');
  std::optional<std::vector<Elem>> eq;
  if (!maps['E'].empty()) {
    const std::size_t n = A.size();
    eq.emplace(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) (*eq)[x * n + y] = x == y ? L.top() : L.bot();
    for (const auto& a : maps['E']) {
      const Elem x = resolve(A, a.refs[0], a.line), y = resolve(A, a.refs[1], a.line);
      (*eq)[x * n + y] = resolve(L, a.value, a.line);
    }
  }
  return DeonticAlgebra::build(A, L, std::move(perm), std::move(forb), std::move(eq), flavor);
}

std::string write_algebra(const DeonticAlgebra& d) {
  const FiniteLattice& A = d.actions();
  const FiniteLattice& L = d.formulas();
  if (A.descriptor().empty() || L.descriptor().empty()) throw FormatError("lattice has no textual descriptor");
  std::ostringstream out;
  out << "actions: " << A.descriptor() << "\n";
  out << "formulas: " << L.descriptor() << "\n";
  auto emit = [&](char which, const std::vector<Elem>& m) {
    std::map<Elem, std::size_t> counts;
    for (Elem v : m) ++counts[v];
    Elem common = std::max_element(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
                    return a.second < b.second;
                  })->first;
    out << which << " default = " << value_name(L, common) << "\n";
    for (Elem x = 0; x < A.size(); ++x)
      if (m[x] != common) out << which << " " << value_name(A, x) << " = " << value_name(L, m[x]) << "\n";
  };
  emit('P', d.perm_map());
  emit('F', d.forb_map());
  if (!d.crisp()) {
    for (Elem x = 0; x < A.size(); ++x)
      for (Elem y = 0; y < A.size(); ++y) {
        const Elem crisp = x == y ? L.top() : L.bot();
        if (d.E(x, y) != crisp)
          out << "E " << value_name(A, x) << " " << value_name(A, y) << " = " << value_name(L, d.E(x, y)) << "\n";
      }
  }
  return out.str();
}

Interpretation parse_interpretation(const std::string& text, const DeonticAlgebra& d, const SymbolSet& syms) {
  Interpretation h;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw FormatError("expected name=element in '" + item + "'");
    std::string name = trim(std::string_view(item).substr(0, eq));
    std::string ref = trim(std::string_view(item).substr(eq + 1));
    if (syms.propositions.count(name)) {
      h.props[name] = resolve_element(d.formulas(), ref);
    } else {
      h.actions[name] = resolve_element(d.actions(), ref);
    }
  }
  return h;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string dot_graph(const FiniteLattice& l, const std::function<std::string(Elem)>& attrs) {
  if (l.size() > 64) throw BudgetExceeded("DOT export supports at most 64 elements");
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (Elem x = 0; x < l.size(); ++x) out << "  n" << x << " [" << attrs(x) << "];\n";
  for (auto [lo, hi] : l.covers()) out << "  n" << lo << " -> n" << hi << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const FiniteLattice& l) {
  return dot_graph(l, [&](Elem x) { return "label=\"" + dot_escape(l.name(x)) + "\""; });
}

std::string to_dot(const DeonticAlgebra& d) {
  const FiniteLattice& A = d.actions();
  const FiniteLattice& L = d.formulas();
  return dot_graph(A, [&](Elem x) {
    std::string a = "label=\"" + dot_escape(A.name(x)) + "\\nP=" + dot_escape(value_name(L, d.P(x))) +
                    " F=" + dot_escape(value_name(L, d.F(x))) + "\"";
    const bool p = d.P(x) == L.top(), f = d.F(x) == L.top();
    if (p && f) a += ", style=striped, fillcolor=\"green:red\"";
    else if (p) a += ", style=filled, fillcolor=green";
    else if (f) a += ", style=filled, fillcolor=red";
    return a;
  });
}

}  // namespace dal
