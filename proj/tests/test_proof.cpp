#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "dal/proof.hpp"
#include "support.hpp"

using namespace dal;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> proof_files(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".proof") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t expected_line(const std::string& text) {
  const std::string tag = "# expect: fail ";
  const auto pos = text.find(tag);
  REQUIRE(pos != std::string::npos);
  return std::stoul(text.substr(pos + tag.size()));
}

std::optional<AxiomSchema> schema(const Language& lang, const std::string& id) {
  for (auto& s : axiom_table(lang))
    if (s.id == id) return s;
  return std::nullopt;
}

}  // namespace

TEST_CASE("axiom tables") {
  const auto dal = axiom_table(LogicVariant::DAL);
  CHECK(dal.size() == 33);
  CHECK(dal.front().id == "A1");
  CHECK(schema(LogicVariant::DAL, "LEM'").has_value());
  CHECK_FALSE(schema(LogicVariant::DAL_IPL, "LEM'").has_value());
  CHECK_FALSE(schema(LogicVariant::DAL_IPL, "A1'").has_value());
  CHECK(schema(LogicVariant::DAL_IPL, "H12").has_value());
  CHECK(schema(LogicVariant::DAL_IPL, "LEM").has_value());
  CHECK_FALSE(schema(LogicVariant::DAL_IAL, "LEM").has_value());
  CHECK(schema(LogicVariant::DAL_IAL, "AH1").has_value());
  CHECK(schema(LogicVariant::DAL_INT, "H9").has_value());
  CHECK(schema(LogicVariant::DAL_INT, "AHC").has_value());
  CHECK_FALSE(schema(LogicVariant::DAL_INT, "LEM").has_value());
  CHECK(schema(LogicVariant::NDAL1, "N1").has_value());
  CHECK_FALSE(schema(LogicVariant::NDAL1, "N2").has_value());
  CHECK_THROWS_AS(axiom_table(LogicVariant::NDAL3), VariantError);
  const auto n3 = axiom_table(Language(LogicVariant::NDAL3, {"a", "b"}));
  CHECK(n3.size() == dal.size() + 3);
  const auto n3_id = *schema(Language(LogicVariant::NDAL3, {"a", "b"}), "N3");
  CHECK(print_formula(n3_id.pattern) == "a + b == 1");
  CHECK(axiom_table(LogicVariant::DAL_IPL).size() == 31);
}

TEST_CASE("match_schema examples") {
  const auto d1 = *schema(LogicVariant::DAL, "D1");
  const auto b = match_schema(parse_formula("perm(a+b) <-> (perm(a) & perm(b))", LogicVariant::DAL), d1);
  REQUIRE(b.has_value());
  CHECK(b->actions.at("?X") == Action::basic("a"));
  CHECK(b->actions.at("?Y") == Action::basic("b"));

  const auto e2 = *schema(LogicVariant::DAL, "E2");
  const auto eb = match_schema(parse_formula("(a==b & perm(a)) -> perm(b)", LogicVariant::DAL), e2);
  REQUIRE(eb.has_value());
  CHECK(eb->formulas.at("?P") == Formula::perm(Action::basic("a")));

  const auto f = parse_formula("perm(a) & perm(b)", LogicVariant::DAL);
  for (const auto& s : axiom_table(LogicVariant::DAL)) CHECK_FALSE(match_schema(f, s).has_value());

  // A10 is a formula whose top node is an equation
  CHECK(match_schema(parse_formula("a + a == a", LogicVariant::DAL), *schema(LogicVariant::DAL, "A10")));
  CHECK_FALSE(match_schema(parse_formula("a + b == a", LogicVariant::DAL), *schema(LogicVariant::DAL, "A10")));
}

TEST_CASE("schema instances match their own schema") {
  const std::vector<Formula> fillers{Formula::perm(Action::basic("a")),
                                     Formula::eq(Action::basic("b"), Action::zero())};
  for (auto v : {LogicVariant::DAL, LogicVariant::DAL_IPL, LogicVariant::DAL_IAL, LogicVariant::DAL_INT}) {
    for (const auto& s : axiom_table(v)) {
      for (const auto& f : support::schema_instances(s, {"a", "b"}, fillers)) {
        CAPTURE(s.id);
        CAPTURE(print_formula(f));
        CHECK(match_schema(f, s).has_value());
      }
    }
  }
}

TEST_CASE("D1 instances are exactly the valid formulas of the D1 shape") {
  std::mt19937 rng(41);
  const auto d1 = *schema(LogicVariant::DAL, "D1");
  std::vector<DeonticAlgebra> algebras;
  for (int i = 0; i < 6; ++i) algebras.push_back(support::random_bb_algebra(rng, 3));
  const char* names[] = {"a", "b", "c"};
  for (const char* x : names)
    for (const char* y : names)
      for (const char* z : names) {
        const auto f = parse_formula(std::string("perm(") + x + " + " + y + ") <-> (perm(" + x + ") & perm(" + z + "))",
                                     LogicVariant::DAL);
        bool valid = true;
        for (const auto& d : algebras) valid = valid && support::holds_everywhere(d, f);
        CAPTURE(print_formula(f));
        CHECK(valid == match_schema(f, d1).has_value());
      }
}

TEST_CASE("check_proof on inline proofs") {
  const auto ok = parse_proof("logic: dal\n1: (perm(a) & forb(a)) <-> (a == 0) [D3]\n");
  CHECK(check_proof(ok).ok);
  const auto bad = parse_proof("logic: dal_ipl\n1: p -> (q -> p) [H9]\n2: p [H9]\n");
  const auto r = check_proof(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.line == 2);
  const auto unknown = parse_proof("logic: dal\n1: a == a [Z9]\n");
  CHECK_FALSE(check_proof(unknown).ok);
  const auto self = parse_proof("logic: dal_ipl\n1: p -> p [mp 1 1]\n");
  CHECK(check_proof(self).line == 1);
}

TEST_CASE("proof format errors") {
  CHECK_THROWS_AS(parse_proof("1: a == a [E1]\n"), FormatError);
  CHECK_THROWS_AS(parse_proof("logic: dal\n1: a == a\n"), FormatError);
  CHECK_THROWS_AS(parse_proof("logic: dal\n1: a == [E1]\n"), FormatError);
  try {
    parse_proof("logic: dal\n1: p [E1]\n");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 2);
  }
  const auto gap = check_proof(parse_proof("logic: dal\n2: a == a [E1]\n"));
  CHECK_FALSE(gap.ok);
  CHECK(gap.line == 2);
  CHECK_THROWS_AS(parse_proof("logic: nope\n"), Error);
}

TEST_CASE("corpus proofs check and survive a write/read round trip") {
  const auto files = proof_files(fs::path(support::data_dir()) / "proofs");
  CHECK(files.size() >= 10);
  for (const auto& f : files) {
    CAPTURE(f.string());
    const auto p = parse_proof(slurp(f));
    const auto r = check_proof(p);
    CAPTURE(r.reason);
    CHECK(r.ok);
    const auto again = parse_proof(write_proof(p));
    CHECK(write_proof(again) == write_proof(p));
    CHECK(check_proof(again).ok);
  }
}

TEST_CASE("mutated proofs fail at the marked line") {
  const auto files = proof_files(fs::path(support::data_dir()) / "proofs" / "mutants");
  CHECK(files.size() >= 5);
  for (const auto& f : files) {
    CAPTURE(f.string());
    const auto text = slurp(f);
    const auto r = check_proof(parse_proof(text));
    CHECK_FALSE(r.ok);
    CHECK(r.line == expected_line(text));
  }
}

TEST_CASE("accepted proofs are sound in small algebras") {
  std::mt19937 rng(43);
  const auto heyting = heyting_catalog(3);
  for (const auto& f : proof_files(fs::path(support::data_dir()) / "proofs")) {
    const auto p = parse_proof(slurp(f));
    const LogicVariant v = p.language.variant;
    if (is_ndal(v)) continue;  // needs NDAL-class algebras, see test_decide
    const Flavor fl = v == LogicVariant::DAL_IPL   ? Flavor::BH
                      : v == LogicVariant::DAL_IAL ? Flavor::HB
                      : v == LogicVariant::DAL_INT ? Flavor::HH
                                                   : Flavor::BB;
    for (int i = 0; i < 5; ++i) {
      const auto A = action_side_heyting(fl) ? heyting[rng() % heyting.size()] : powerset_algebra({"x", "y"});
      const auto L = formula_side_heyting(fl) ? heyting[rng() % heyting.size()] : chain(2);
      const auto d = support::random_algebra(rng, A, L, fl);
      for (const auto& line : p.lines) {
        CAPTURE(f.string());
        CAPTURE(line.number);
        CHECK(support::holds_everywhere(d, line.formula));
      }
    }
  }
}
