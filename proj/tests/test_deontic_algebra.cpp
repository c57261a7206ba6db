#include <doctest.h>

#include <random>

#include "dal/deontic_algebra.hpp"
#include "dal/proof.hpp"
#include "support.hpp"

using namespace dal;

namespace {

DeonticAlgebra cottage() {
  const auto A = free_boolean({"a", "b"});
  const Elem b = A.generators().at("b"), nb = A.complement(b);
  std::vector<Elem> P(A.size()), F(A.size());
  for (Elem x = 0; x < A.size(); ++x) {
    P[x] = A.leq(x, nb) ? 1 : 0;
    F[x] = A.leq(x, b) ? 1 : 0;
  }
  return DeonticAlgebra::build(A, chain(2), P, F);
}

Interpretation cottage_h(const DeonticAlgebra& d) {
  const auto& A = d.actions();
  const Elem a = A.generators().at("a"), b = A.generators().at("b");
  return {{{"drinking", b}, {"driving", a}, {"parking", A.complement(b)}}, {}};
}

// Action 2 = {0, a}, formula algebra chain(3), P(a) = F(a) = 1/2, graded E.
DeonticAlgebra closure_algebra() {
  const auto A = powerset_algebra({"a"});
  const auto H = chain(3);
  const std::vector<Elem> P{2, 1}, F{2, 1};
  return DeonticAlgebra::build(A, H, P, F, graded_equality(A, H, P, F), Flavor::BH);
}

// Action 2 = {0, a}, formula algebra chain(3), F bot off 0, P top.
DeonticAlgebra driver_algebra() {
  return DeonticAlgebra::build(powerset_algebra({"a"}), chain(3), {2, 2}, {2, 0}, std::nullopt, Flavor::BH);
}

Elem eval(const DeonticAlgebra& d, const Interpretation& h, const std::string& text, LogicVariant v) {
  return evaluate(d, h, parse_formula(text, v));
}

const std::vector<Formula> kFormulaFillers{
    Formula::perm(Action::basic("a")), Formula::forb(Action::basic("b")),
    Formula::eq(Action::basic("a"), Action::basic("b"))};

}  // namespace

TEST_CASE("cottage algebra is accepted and evaluates as listed") {
  const auto d = cottage();
  CHECK(d.flavor() == Flavor::BB);
  const auto h = cottage_h(d);
  const Elem top = d.formulas().top();
  CHECK(eval(d, h, "forb(drinking * driving)", LogicVariant::DAL) == top);
  CHECK(eval(d, h, "perm(drinking * parking)", LogicVariant::DAL) == top);
  CHECK(eval(d, h, "perm(driving + parking)", LogicVariant::DAL) != top);
  // With the crisp equality ~b == a is false: b-bar and a are distinct elements.
  CHECK(eval(d, h, "~parking == driving", LogicVariant::DAL) == d.formulas().bot());
  CHECK(satisfies(d, h, parse_formula("forb(drinking*driving)", LogicVariant::DAL), Formula::top()));
}

TEST_CASE("build rejects violated conditions") {
  const auto A = powerset_algebra({"p", "q"});
  const std::vector<Elem> all_top(4, 1);
  try {
    DeonticAlgebra::build(A, chain(2), all_top, all_top);
    FAIL("expected ConditionViolated");
  } catch (const ConditionViolated& e) {
    CHECK(e.condition() == 3);
  }
  // P not antitone: condition 1
  CHECK_THROWS_AS(DeonticAlgebra::build(A, chain(2), {1, 0, 0, 1}, {1, 0, 0, 0}), ConditionViolated);
  // E(x, y) = top for x != y: condition 6
  std::vector<Elem> eq(16, 1);
  CHECK_THROWS_AS(DeonticAlgebra::build(A, chain(2), {1, 0, 0, 0}, {1, 0, 0, 0}, eq), ConditionViolated);
  // hell boundary: everything above 0 is neither permitted nor forbidden
  const auto d = DeonticAlgebra::build(powerset_algebra({"p"}), chain(2), {1, 0}, {1, 0});
  CHECK(d.crisp());
  CHECK_THROWS_AS(DeonticAlgebra::build(chain(3), chain(2), {1, 0, 0}, {1, 0, 0}, std::nullopt, Flavor::BB),
                  FlavorMismatch);
}

TEST_CASE("check_conditions agrees with build") {
  std::mt19937 rng(21);
  const auto A = powerset_algebra({"p", "q"});
  const auto L = chain(3);
  int accepted = 0;
  for (int i = 0; i < 400; ++i) {
    std::vector<Elem> P(4), F(4);
    for (auto& x : P) x = rng() % 3;
    for (auto& x : F) x = rng() % 3;
    const auto v = check_conditions(A, L, P, F);
    bool built = true;
    try {
      DeonticAlgebra::build(A, L, P, F);
    } catch (const ConditionViolated& e) {
      built = false;
      REQUIRE(v.has_value());
      CHECK(e.condition() == v->condition);
    }
    CHECK(built == !v.has_value());
    accepted += built;
  }
  CHECK(accepted > 0);
}

TEST_CASE("evaluate basics") {
  const auto d = cottage();
  CHECK(eval(d, {}, "0 == 0", LogicVariant::DAL) == d.formulas().top());
  CHECK(evaluate(d, cottage_h(d), parse_action("drinking + parking", LogicVariant::DAL)) == d.actions().top());
  CHECK_THROWS_AS(eval(d, {}, "perm(x)", LogicVariant::DAL), SymbolError);
  CHECK_THROWS_AS(evaluate(d, {}, parse_formula("true -> true", LogicVariant::DAL_IPL)), FlavorMismatch);
  CHECK_THROWS_AS(evaluate(d, {}, parse_action("0 ~> 1", LogicVariant::DAL_IAL)), FlavorMismatch);
}

TEST_CASE("deontic closure example") {
  const auto d = closure_algebra();
  const Interpretation h{{{"a", 1}}, {}};
  CHECK(eval(d, h, "forb(a)", LogicVariant::DAL_IPL) == 1);
  CHECK(eval(d, h, "!forb(a)", LogicVariant::DAL_IPL) == 0);
  CHECK(eval(d, h, "perm(a)", LogicVariant::DAL_IPL) == 1);
  CHECK(eval(d, h, "!forb(a) -> perm(a)", LogicVariant::DAL_IPL) == 2);
  CHECK(eval(d, h, "forb(a) | perm(a)", LogicVariant::DAL_IPL) == 1);
}

TEST_CASE("driver-license example") {
  const auto d = driver_algebra();
  const Interpretation h{{{"driving", 1}}, {{"haslicense", 1}}};
  CHECK(eval(d, h, "!haslicense", LogicVariant::DAL_IPL) == 0);
  CHECK(eval(d, h, "!haslicense -> forb(driving)", LogicVariant::DAL_IPL) == 2);
  CHECK(eval(d, h, "!forb(driving)", LogicVariant::DAL_IPL) == 2);
  CHECK(eval(d, h, "haslicense", LogicVariant::DAL_IPL) != 2);
}

TEST_CASE("satisfies and valid_in") {
  const auto d = cottage();
  const auto a = Term{Action::basic("a")};
  CHECK(satisfies(d, {{{"a", 3}}, {}}, a, a));
  CHECK_THROWS(satisfies(d, {{{"a", 3}}, {}}, a, Term{Formula::top()}));

  const auto d1 = parse_formula("perm(a+b) <-> (perm(a) & perm(b))", LogicVariant::DAL);
  CHECK(valid_in(d, d1, Formula::top()).valid);
  const auto idem = parse_formula("perm(a+a) <-> perm(a)", LogicVariant::DAL);
  CHECK(valid_in(d, idem, Formula::top()).valid);
  const auto bad = valid_in(d, parse_formula("forb(a) <-> !perm(a)", LogicVariant::DAL), Formula::top());
  REQUIRE_FALSE(bad.valid);
  REQUIRE(bad.witness.has_value());
  CHECK(eval(d, *bad.witness, "forb(a) <-> !perm(a)", LogicVariant::DAL) != d.formulas().top());
  CHECK(valid_in(d, a, a).valid);
  CHECK_THROWS_AS(valid_in(d, parse_formula("perm(a*b*c*e*f*g)", LogicVariant::DAL), Formula::top(), 1000),
                  BudgetExceeded);
}

TEST_CASE("act_eq_iff_form_eq") {
  const auto d = cottage();
  const auto a = Action::basic("a"), b = Action::basic("b");
  CHECK(act_eq_iff_form_eq(d, a, a).valid);
  CHECK(act_eq_iff_form_eq(d, Action::join(a, b), Action::join(b, a)).valid);
  CHECK(act_eq_iff_form_eq(d, a, b).valid);
  CHECK(act_eq_iff_form_eq(closure_algebra(), a, Action::zero()).valid);
}

TEST_CASE("preimage ideals") {
  const auto d = cottage();
  const auto& A = d.actions();
  const auto ideals = preimage_ideals(d);
  CHECK(ideals.permitted == principal_ideal(A, A.complement(A.generators().at("b"))));
  CHECK(ideals.forbidden == principal_ideal(A, A.generators().at("b")));
  CHECK(ideals.intersection == ElemSet{A.bot()});

  const auto heaven = DeonticAlgebra::build(powerset_algebra({"p", "q"}), chain(2), {1, 1, 1, 1}, {1, 0, 0, 0});
  CHECK(preimage_ideals(heaven).forbidden == ElemSet{0});
  const auto trivial = DeonticAlgebra::build(powerset_algebra({}), chain(2), {1}, {1});
  CHECK(preimage_ideals(trivial).permitted == ElemSet{0});
  CHECK(preimage_ideals(trivial).forbidden == ElemSet{0});
}

TEST_CASE("structural properties of random algebras of every flavor") {
  std::mt19937 rng(99);
  const auto heyting = heyting_catalog(3);
  for (int i = 0; i < 120; ++i) {
    const Flavor fl = static_cast<Flavor>(i % 4);
    const auto A = action_side_heyting(fl) ? heyting[rng() % heyting.size()]
                                           : powerset_algebra({"x", "y", "z"});
    const auto L = formula_side_heyting(fl) ? heyting[rng() % heyting.size()] : chain(2);
    const auto d = support::random_algebra(rng, A, L, fl);
    const auto& F = d.formulas();
    CHECK(d.P(A.bot()) == F.top());
    CHECK(d.F(A.bot()) == F.top());
    for (Elem x = 0; x < A.size(); ++x)
      for (Elem y = 0; y < A.size(); ++y) {
        if (A.leq(x, y)) {
          CHECK(F.leq(d.P(y), d.P(x)));
          CHECK(F.leq(d.F(y), d.F(x)));
        }
        CHECK(F.leq(F.meet(d.E(x, y), d.P(x)), d.P(y)));
        CHECK(F.leq(F.meet(d.E(x, y), d.F(x)), d.F(y)));
      }
    const auto ideals = preimage_ideals(d);
    CHECK(is_ideal(A, ideals.permitted));
    CHECK(is_ideal(A, ideals.forbidden));
    CHECK(ideals.intersection == ElemSet{A.bot()});
  }
}

TEST_CASE("BB soundness: every small schema instance is top") {
  std::mt19937 rng(1);
  const auto table = axiom_table(LogicVariant::DAL);
  REQUIRE(table.size() == 33);
  std::vector<Formula> instances;
  for (const auto& s : table)
    for (const auto& f : support::schema_instances(s, {"a", "b"}, kFormulaFillers)) instances.push_back(f);
  CHECK(instances.size() > 200);
  for (int i = 0; i < 12; ++i) {
    const auto d = support::random_bb_algebra(rng, 3);
    for (const auto& f : instances) {
      CAPTURE(print_formula(f));
      CHECK(support::holds_everywhere(d, f));
    }
  }
}

TEST_CASE("Heyting soundness per flavor") {
  std::mt19937 rng(2);
  const auto heyting = heyting_catalog(3);
  struct Case {
    LogicVariant v;
    Flavor fl;
  };
  for (const auto& c : {Case{LogicVariant::DAL_IPL, Flavor::BH}, Case{LogicVariant::DAL_IAL, Flavor::HB},
                        Case{LogicVariant::DAL_INT, Flavor::HH}}) {
    std::vector<Formula> fillers = kFormulaFillers;
    fillers.push_back(Formula::prop("p"));
    std::vector<Formula> instances;
    for (const auto& s : axiom_table(c.v))
      for (const auto& f : support::schema_instances(s, {"a", "b"}, fillers))
        if (symbols(f).basic_actions.size() + symbols(f).propositions.size() <= 2) instances.push_back(f);
    CHECK(instances.size() > 200);
    for (int i = 0; i < 6; ++i) {
      const auto A = action_side_heyting(c.fl) ? heyting[rng() % heyting.size()] : powerset_algebra({"x", "y"});
      const auto L = formula_side_heyting(c.fl) ? heyting[rng() % heyting.size()] : chain(2);
      const auto d = support::random_algebra(rng, A, L, c.fl);
      for (const auto& f : instances) {
        CAPTURE(to_string(c.v));
        CAPTURE(print_formula(f));
        CHECK(support::holds_everywhere(d, f));
      }
    }
  }
}

TEST_CASE("LEM' fails in the closure algebra") {
  const auto d = closure_algebra();
  CHECK_FALSE(support::holds_everywhere(d, parse_formula("perm(a) | !perm(a)", LogicVariant::DAL_IPL)));
}

TEST_CASE("check_ndal examples") {
  const auto d = cottage();
  const auto& A = d.actions();
  const std::vector<Elem> gens{A.generators().at("a"), A.generators().at("b")};
  CHECK_FALSE(check_ndal(d, gens, 1));
  CHECK_FALSE(in_ndal_class(d, gens, 1));

  const auto B = free_boolean({"b"});
  const Elem b = B.generators().at("b"), nb = B.complement(b);
  std::vector<Elem> P(B.size()), F(B.size());
  for (Elem x = 0; x < B.size(); ++x) {
    P[x] = B.leq(x, nb) ? 1 : 0;
    F[x] = B.leq(x, b) ? 1 : 0;
  }
  const auto e = DeonticAlgebra::build(B, chain(2), P, F);
  CHECK(check_ndal(e, {b}, 1));
  CHECK(check_ndal(e, {b}, 2));   // ~b is permitted
  CHECK_FALSE(check_ndal(e, {b}, 3));
  CHECK(check_ndal(e, {b}, 4));
  CHECK(in_ndal_class(e, {b}, 2));

  const auto f = DeonticAlgebra::build(powerset_algebra({"p"}), chain(2), {1, 1}, {1, 0});
  CHECK(check_ndal(f, {1}, 3));
  CHECK(in_ndal_class(f, {1}, 5));
  CHECK_THROWS(check_ndal(d, {gens[0]}, 1));
}

TEST_CASE("subalgebras") {
  const auto d = cottage();
  const auto& A = d.actions();
  Embedding id;
  for (Elem x = 0; x < A.size(); ++x) id.actions.push_back(x);
  id.formulas = {0, 1};
  CHECK(subalgebra_check(d, d, id));

  const Elem b = A.generators().at("b");
  const auto sub = restrict_actions(d, {A.bot(), b, A.complement(b), A.top()});
  REQUIRE(sub.has_value());
  CHECK(sub->first.actions().size() == 4);
  CHECK(subalgebra_check(sub->first, d, sub->second));

  CHECK_FALSE(restrict_actions(d, {A.bot(), b, A.complement(b)}).has_value());
  Embedding broken = sub->second;
  std::swap(broken.actions[1], broken.actions[2]);
  CHECK_FALSE(subalgebra_check(sub->first, d, broken));
}

TEST_CASE("describe lists the interpretation") {
  const auto d = cottage();
  const auto text = describe(d, cottage_h(d));
  CHECK(text.find("drinking") != std::string::npos);
  CHECK(text.find("parking") != std::string::npos);
}
