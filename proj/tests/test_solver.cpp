#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "oracle.hpp"
#include "orla/io.hpp"
#include "orla/parser.hpp"
#include "orla/persistence.hpp"
#include "orla/solver.hpp"

using namespace orla;

TEST_CASE("satisfiability basics") {
  CHECK(!satisfiable({parse("a & !a")}).has_value());

  const auto witness = satisfiable({parse("[](a < b)"), parse("b")});
  REQUIRE(witness.has_value());
  CHECK(witness->str() == "<a, b>");

  // The empty theory is satisfied by the empty model, found first.
  const auto trivial = satisfiable({});
  REQUIRE(trivial.has_value());
  CHECK(trivial->empty());

  // Over the empty alphabet the empty model is the only one.
  CHECK(all_models({}, OrderedModel(), {}) ==
        std::vector<OrderedModel>{OrderedModel()});
}

TEST_CASE("satisfiability respects the required prefix") {
  const OrderedModel prefix = parse_model("<b>");
  const auto witness = satisfiable({parse("[](a < b)")}, prefix);
  CHECK(!witness.has_value());  // b is already in before a can ever be

  const auto open = satisfiable({parse("<>b")}, parse_model("<a>"));
  REQUIRE(open.has_value());
  CHECK(open->str() == "<a, b>");
}

TEST_CASE("the single-subject fika theory has the expected witness") {
  const auto theory = load_theory(std::string(ORLA_DATA_DIR) + "/fika_simple.l");
  auto with_fika = theory;
  with_fika.push_back(parse("fika"));
  const auto witness = satisfiable(with_fika);
  REQUIRE(witness.has_value());
  for (const Formula& f : with_fika) CHECK(eval(*witness, f));
  // The observed order from the worked example is one witness too.
  const auto observed =
      load_model(std::string(ORLA_DATA_DIR) + "/fika_simple.model");
  for (const Formula& f : with_fika) CHECK(eval(observed, f));
}

TEST_CASE("entailment basics") {
  CHECK(entails({parse("a")}, parse("a")));
  CHECK(!entails({}, parse("a")));
  CHECK(entails({parse("a & b")}, parse("b")));
  CHECK(!entails({parse("a | b")}, parse("a")));
}

TEST_CASE("the fika goals entail the guarded implication") {
  const auto system = load_system(std::string(ORLA_DATA_DIR) + "/fika.json");
  const auto* fika = system.activities_for(GoalAtom("ebba", "fika")).front();
  CHECK(entails(fika->goals,
                parse("[]((ebba,sandwich) -> (elsa,fridge) & (ebba,plate))")));
  // The cinnamon-bun route completes fika without any sandwich.
  CHECK(!entails(fika->goals, parse("(ebba,sandwich)")));
  // Coffee, however, is demanded by every route.
  CHECK(entails(fika->goals, parse("(ebba,coffee)")));
}

TEST_CASE("subgoal relation") {
  const auto theory = load_theory(std::string(ORLA_DATA_DIR) + "/fika_simple.l");
  CHECK(is_subgoal(theory, parse("coffee & plate"), parse("fika")));
  CHECK(!is_subgoal(theory, parse("cabinet"), parse("fika")));

  // An atom is always a subgoal of itself, in any theory.
  CHECK(is_subgoal({}, parse("a"), parse("a")));
  CHECK(!is_subgoal({}, parse("a"), parse("b")));
}

TEST_CASE("subgoal simplification") {
  CHECK(render(simplify_subgoal(parse("fridge & plate"), parse("sandwich"))) ==
        "[](sandwich -> fridge & plate)");
  CHECK(render(simplify_subgoal(parse("a"), parse("a"))) == "[](a -> a)");
  CHECK(render(simplify_subgoal(parse("<>a"), parse("b"))) == "[](b -> <>a)");
  CHECK_THROWS_AS(simplify_subgoal(parse("!a"), parse("b")),
                  std::invalid_argument);
  CHECK_THROWS_AS(simplify_subgoal(parse("a & !b"), parse("c")),
                  std::invalid_argument);

  // The rewrite preserves truth everywhere once psi is a goal formula.
  std::mt19937 rng(314159);
  const auto alphabet = testing::small_alphabet(4);
  const auto models = testing::enumerate_extensions(OrderedModel(), alphabet);
  int accepted = 0;
  for (int i = 0; accepted < 60 && i < 2000; ++i) {
    const Formula psi = testing::random_formula(rng, alphabet, 3);
    if (classify_persistence(psi) != PersistenceClass::PositivePersistent) {
      continue;
    }
    ++accepted;
    const Formula phi = testing::random_formula(rng, alphabet, 3);
    const Formula guarded = make_always(make_before(psi, phi));
    const Formula rewritten = simplify_subgoal(psi, phi);
    for (const OrderedModel& model : models) {
      CAPTURE(render(guarded));
      CAPTURE(model.str());
      CHECK(eval(model, guarded) == eval(model, rewritten));
    }
  }
  CHECK(accepted == 60);
}

TEST_CASE("search agrees with exhaustive enumeration") {
  std::mt19937 rng(1618);
  const auto alphabet = testing::small_alphabet(4);
  for (int i = 0; i < 120; ++i) {
    std::vector<Formula> theory;
    const int members = 1 + static_cast<int>(rng() % 2);
    for (int j = 0; j < members; ++j) {
      theory.push_back(testing::random_formula(rng, alphabet, 4));
    }
    const OrderedModel prefix = testing::random_model(rng, alphabet).prefix(2);
    const auto fast = satisfiable(theory, prefix, alphabet);
    const auto slow = testing::brute_satisfiable(theory, prefix, alphabet);
    CAPTURE(render(theory.front()));
    CAPTURE(prefix.str());
    CHECK(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(prefix.is_prefix_of(*fast));
      CHECK(testing::naive_eval(*fast, theory));
    }
  }
}

TEST_CASE("entailment agrees with exhaustive enumeration") {
  std::mt19937 rng(2718);
  const auto alphabet = testing::small_alphabet(4);
  for (int i = 0; i < 120; ++i) {
    const std::vector<Formula> theory{testing::random_formula(rng, alphabet, 4)};
    const Formula conjecture = testing::random_formula(rng, alphabet, 4);
    CAPTURE(render(theory.front()));
    CAPTURE(render(conjecture));
    CHECK(entails(theory, conjecture) ==
          testing::brute_entails(theory, conjecture));
  }
}

TEST_CASE("entailment is reflexive and transitive on samples") {
  std::mt19937 rng(5772);
  const auto alphabet = testing::small_alphabet(4);
  int transitive_hits = 0;
  for (int i = 0; i < 200; ++i) {
    const Formula f = testing::random_formula(rng, alphabet, 3);
    const Formula g = testing::random_formula(rng, alphabet, 3);
    const Formula h = testing::random_formula(rng, alphabet, 3);
    CHECK(entails({f}, f));
    if (entails({f}, g) && entails({g}, h)) {
      ++transitive_hits;
      CAPTURE(render(f));
      CAPTURE(render(g));
      CAPTURE(render(h));
      CHECK(entails({f}, h));
    }
  }
  CHECK(transitive_hits > 5);
}
