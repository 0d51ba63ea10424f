#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "orla/parser.hpp"

using namespace orla;

TEST_CASE("atoms and identifiers") {
  CHECK(is_identifier("ebba"));
  CHECK(is_identifier("ebba'"));
  CHECK(is_identifier("_x9"));
  CHECK(!is_identifier(""));
  CHECK(!is_identifier("9a"));
  CHECK(!is_identifier("a b"));

  CHECK(parse_atom("coffee") == GoalAtom::simple("coffee"));
  CHECK(parse_atom("(ebba,fika)") == GoalAtom("ebba", "fika"));
  CHECK(parse_atom("( ebba , fika )") == GoalAtom("ebba", "fika"));
  CHECK(GoalAtom::simple("coffee").is_simple());
  CHECK_THROWS_AS(GoalAtom("", "x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_atom("(a,b,c)"), ParseError);
}

TEST_CASE("ordered model construction") {
  const GoalAtom a = GoalAtom::simple("a");
  const GoalAtom b = GoalAtom::simple("b");
  OrderedModel model({a, b});
  CHECK(model.size() == 2);
  CHECK(model.position(a) == 1);
  CHECK(model.position(b) == 2);
  CHECK(OrderedModel().is_prefix_of(model));
  CHECK(model.prefix(1).is_prefix_of(model));
  CHECK(!model.is_prefix_of(model.prefix(1)));
  CHECK_THROWS_AS(OrderedModel({a, a}), std::invalid_argument);
  CHECK_THROWS_AS(model.extended(a), std::invalid_argument);
  CHECK(model.str() == "<a, b>");
  CHECK(OrderedModel().str() == "<>");
}

TEST_CASE("parsing the surface syntax") {
  const Formula a = make_atom(GoalAtom::simple("a"));
  const Formula b = make_atom(GoalAtom::simple("b"));
  const Formula c = make_atom(GoalAtom::simple("c"));

  CHECK(parse("(a | b) < c") == make_before(make_or(a, b), c));
  CHECK(parse("!a") == make_not(a));
  CHECK(parse("[]((elsa,fridge) & (ebba,plate) < (ebba,sandwich))") ==
        make_always(make_before(
            make_and(make_atom(GoalAtom("elsa", "fridge")),
                     make_atom(GoalAtom("ebba", "plate"))),
            make_atom(GoalAtom("ebba", "sandwich")))));

  // Precedence: unary, then &, then |, then <, then ->.
  CHECK(parse("a & b | c") == make_or(make_and(a, b), c));
  CHECK(parse("a | b < c") == make_before(make_or(a, b), c));
  CHECK(parse("a -> b -> c") == make_implies(a, make_implies(b, c)));
  CHECK(parse("a < b -> c") == make_implies(make_before(a, b), c));
  CHECK(parse("!a < b") == make_before(make_not(a), b));
  CHECK(parse("[]a & b") == make_and(make_always(a), b));
  CHECK(parse("<> a") == make_sometime(a));
}

TEST_CASE("parse errors carry location and expectations") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("a &"), ParseError);
  CHECK_THROWS_AS(parse("(a"), ParseError);
  CHECK_THROWS_AS(parse("a b"), ParseError);
  CHECK_THROWS_AS(parse("9"), ParseError);

  try {
    parse("a <\nb < c");
    FAIL("chained < must not parse");
  } catch (const ParseError& error) {
    CHECK(error.line() == 2);
    CHECK(error.column() == 3);
    CHECK(!error.expected().empty());
  }
}

TEST_CASE("rendering matches the expected surface text") {
  const Formula a = make_atom(GoalAtom::simple("a"));
  const Formula b = make_atom(GoalAtom::simple("b"));
  const Formula c = make_atom(GoalAtom::simple("c"));

  CHECK(render(make_before(make_or(a, b), c)) == "(a | b) < c");
  CHECK(render(make_atom(GoalAtom("ebba", "fika"))) == "(ebba,fika)");
  CHECK(render(make_always(make_not(a))) == "[](!a)");
  CHECK(render(make_always(make_implies(
            make_atom(GoalAtom::simple("sandwich")),
            make_and(make_atom(GoalAtom::simple("fridge")),
                     make_atom(GoalAtom::simple("plate")))))) ==
        "[](sandwich -> fridge & plate)");
  CHECK(render(make_always(make_implies(b, make_sometime(a)))) ==
        "[](b -> <>a)");
  CHECK(render(make_implies(make_implies(a, b), c)) == "(a -> b) -> c");
  CHECK(render(make_and(make_before(a, b), c)) == "(a < b) & c");
}

TEST_CASE("parse is the inverse of render") {
  std::mt19937 rng(20240811);
  const auto alphabet = testing::small_alphabet(5);
  for (int i = 0; i < 500; ++i) {
    const Formula formula = testing::random_formula(rng, alphabet, 5);
    CAPTURE(render(formula));
    CHECK(parse(render(formula)) == formula);
  }
}

TEST_CASE("subformulas and atom collection") {
  const Formula f = parse("(a | b) < c");
  const auto subs = subformulas(f);
  REQUIRE(subs.size() == 5);
  CHECK(render(subs[0]) == "a");
  CHECK(render(subs[1]) == "b");
  CHECK(render(subs[2]) == "c");
  CHECK(render(subs[3]) == "a | b");
  CHECK(render(subs[4]) == "(a | b) < c");

  CHECK(atoms(f) == std::vector<GoalAtom>{GoalAtom::simple("a"),
                                          GoalAtom::simple("b"),
                                          GoalAtom::simple("c")});
  CHECK(atoms(parse("[](!a)")) == std::vector<GoalAtom>{GoalAtom::simple("a")});

  // Derived nodes stay unexpanded.
  const Formula g = parse("<>a");
  CHECK(subformulas(g).size() == 2);
}
