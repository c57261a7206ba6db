#include <doctest.h>

#include <random>

#include "dal/models.hpp"
#include "support.hpp"

using namespace dal;

namespace {

// E = {e1..e4}; drinking = {e2 e3}, driving = {e1 e2}, parking = {e3 e4}.
std::pair<DeonticModel, Valuation> example_model(PointSet permitted) {
  DeonticModel m{{"e1", "e2", "e3", "e4"}, permitted, 0b0010};
  Valuation v;
  v.actions = {{"drinking", 0b0110}, {"driving", 0b0011}, {"parking", 0b1100}};
  return {m, v};
}

bool holds(const std::pair<DeonticModel, Valuation>& mv, const std::string& text,
           LogicVariant var = LogicVariant::DAL) {
  return sat(mv.first, mv.second, parse_formula(text, var));
}

}  // namespace

TEST_CASE("extend") {
  auto mv = example_model(0b1100);
  const auto& [m, v] = mv;
  CHECK(extend(m, v, Action::one()) == m.all());
  CHECK(extend(m, v, Action::zero()) == 0);
  CHECK(extend(m, v, parse_action("drinking * driving", LogicVariant::DAL)) == 0b0010);
  CHECK(extend(m, v, parse_action("drinking + ~drinking", LogicVariant::DAL)) == m.all());
  CHECK_THROWS_AS(extend(m, v, parse_action("zz", LogicVariant::DAL)), SymbolError);
  CHECK_THROWS(extend(m, v, parse_action("drinking ~> driving", LogicVariant::DAL_IAL)));
}

TEST_CASE("satisfaction on the reconstructed example models") {
  const auto m = example_model(0b1100);
  CHECK(holds(m, "~parking == driving"));
  CHECK(holds(m, "forb(drinking * driving)"));
  CHECK(holds(m, "perm(drinking * parking)"));
  CHECK_FALSE(holds(m, "forb(drinking * driving) & !perm(drinking * parking)"));

  const auto m2 = example_model(0b1000);
  CHECK(holds(m2, "forb(drinking * driving)"));
  CHECK_FALSE(holds(m2, "perm(drinking * parking)"));
  CHECK(holds(m2, "forb(drinking * driving) & !perm(drinking * parking)"));

  const std::pair<DeonticModel, Valuation> empty{};
  CHECK(holds(empty, "true"));
  CHECK(holds(empty, "perm(1) & forb(1)"));
}

TEST_CASE("propositions are classical") {
  auto mv = example_model(0b1100);
  mv.second.props["haslicense"] = false;
  CHECK(holds(mv, "!haslicense", LogicVariant::DAL_PROP));
  CHECK_FALSE(holds(mv, "haslicense | forb(driving)", LogicVariant::DAL_PROP));
  CHECK_THROWS_AS(holds(mv, "raining", LogicVariant::DAL_PROP), SymbolError);
}

TEST_CASE("model validation") {
  DeonticModel m{{"e1", "e2"}, 0b01, 0b01};
  CHECK_THROWS(m.validate());
  m.forbidden = 0b10;
  CHECK_NOTHROW(m.validate());
  m.permitted = 0b100;
  CHECK_THROWS(m.validate());
  CHECK(DeonticModel{{"e1", "e2"}, 0b01, 0b10}.show(0b11) == "{e1 e2}");
}

TEST_CASE("v* is a homomorphism into the powerset") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto [m, v] = support::random_model(rng, 6, {"a", "b", "c"});
    const auto x = support::random_action(rng, {"a", "b", "c"}, 4);
    const auto y = support::random_action(rng, {"a", "b", "c"}, 4);
    const PointSet ex = extend(m, v, x), ey = extend(m, v, y);
    CHECK(extend(m, v, Action::join(x, y)) == (ex | ey));
    CHECK(extend(m, v, Action::meet(x, y)) == (ex & ey));
    CHECK(extend(m, v, Action::complement(x)) == (m.all() & ~ex));
  }
}

TEST_CASE("permitted and forbidden together only on the empty extension") {
  std::mt19937 rng(18);
  for (int i = 0; i < 500; ++i) {
    const auto [m, v] = support::random_model(rng, 4, {"a", "b"});
    const auto x = support::random_action(rng, {"a", "b"}, 3);
    if (sat(m, v, Formula::perm(x)) && sat(m, v, Formula::forb(x))) CHECK(extend(m, v, x) == 0);
  }
}

TEST_CASE("permission is inherited downwards") {
  std::mt19937 rng(19);
  for (int i = 0; i < 500; ++i) {
    const auto [m, v] = support::random_model(rng, 4, {"a", "b"});
    const auto x = support::random_action(rng, {"a", "b"}, 3);
    const auto y = support::random_action(rng, {"a", "b"}, 3);
    if ((extend(m, v, x) & ~extend(m, v, y)) == 0 && sat(m, v, Formula::perm(y)))
      CHECK(sat(m, v, Formula::perm(x)));
  }
}

TEST_CASE("taut_oracle examples") {
  CHECK(taut_oracle(parse_formula("perm(a+b) <-> perm(a) & perm(b)", LogicVariant::DAL)).tautology);
  CHECK(taut_oracle(parse_formula("a == a", LogicVariant::DAL)).tautology);
  const auto r = taut_oracle(parse_formula("forb(a) <-> !perm(a)", LogicVariant::DAL));
  CHECK_FALSE(r.tautology);
  REQUIRE(r.countermodel.has_value());
  const auto& [m, v] = *r.countermodel;
  CHECK_FALSE(sat(m, v, parse_formula("forb(a) <-> !perm(a)", LogicVariant::DAL)));
  CHECK_THROWS_AS(taut_oracle(parse_formula("perm(a*b*c)", LogicVariant::DAL), 4, 1000), BudgetExceeded);
}
