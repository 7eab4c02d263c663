#include <doctest.h>

#include "alphanorm/generate.hpp"
#include "alphanorm/model.hpp"
#include "alphanorm/text.hpp"

using namespace alphanorm;

TEST_SUITE("models") {
  TEST_CASE("contexts") {
    FinSetModel m(Signature{2, {1, 1}});
    auto e = eval_ctx(empty_ctx(), m);
    REQUIRE(e.size() == 1);
    CHECK(e[0] == m.unit());
    auto u = eval_ctx(ext(empty_ctx(), ty_u()), m);
    CHECK(u == std::vector<Val>{m.pair(m.unit(), m.x(0)), m.pair(m.unit(), m.x(1))});

    FinSetModel y3(Signature{1, {3}});
    CHECK(eval_ctx(ext(empty_ctx(), el(in_u(0))), y3).size() == 3);
  }

  TEST_CASE("types") {
    FinSetModel m(Signature{2, {1, 2}});
    auto u = eval_ty(ty_u(), m);
    CHECK(u(m.unit()) == std::vector<Val>{m.x(0), m.x(1)});
    Ctx c = ext(empty_ctx(), ty_u());
    CHECK(agree_ty(c, inst(ty_u(), proj()), ty_u(), m));
    auto f = eval_ty(pi(ty_u(), el(var_q())), m);
    const auto& tables = f(m.unit());
    REQUIRE(tables.size() == 2);
    for (Val t : tables) {
      CHECK(m.lookup(t, m.x(0)) == m.y(0, 0));
      Val at1 = m.lookup(t, m.x(1));
      CHECK((at1 == m.y(1, 0) || at1 == m.y(1, 1)));
    }
    CHECK(tables[0] != tables[1]);
  }

  TEST_CASE("substitutions and terms") {
    FinSetModel m(Signature{2, {1, 1}});
    Ctx c = ext(empty_ctx(), ty_u());
    auto id = eval_sub(id_sub(), m);
    auto q = eval_tm(var_q(), m);
    for (Val env : eval_ctx(c, m)) {
      CHECK(id(env) == env);
      CHECK(q(env) == m.value(env).b);
    }
    CHECK(eval_tm(in_u(1), m)(m.unit()) == m.x(1));
  }

  TEST_CASE("the identity combinator evaluates to identity tables") {
    FinSetModel m(Signature{2, {2, 1}});
    Val f = eval_tm(id_combinator(), m)(m.unit());
    for (int i = 0; i < 2; ++i) {
      Val inner = m.lookup(f, m.x(i));
      int ny = i == 0 ? 2 : 1;
      REQUIRE(m.value(inner).table.size() == static_cast<std::size_t>(ny));
      for (int j = 0; j < ny; ++j) CHECK(m.lookup(inner, m.y(i, j)) == m.y(i, j));
    }
  }

  TEST_CASE("cap") {
    FinSetModel m(Signature{2, {2, 2}}, 50);
    // (U -> U) -> U has 2^(2^2) = 16 tables of tables, under the cap, but the
    // triple arrow exceeds it
    Ty uu = arrow(ty_u(), ty_u());
    CHECK(eval_ty(arrow(uu, ty_u()), m)(m.unit()).size() == 16);
    auto big = eval_ty(arrow(arrow(uu, ty_u()), ty_u()), m);
    CHECK_THROWS_AS(big(m.unit()), TooLarge);
  }

  TEST_CASE("equations with small samples") {
    for (int x = 0; x <= 2; ++x) {
      Signature sig{x, std::vector<int>(x, 2)};
      Generator gen(sig, 100 + x);
      FinSetModel m(sig);
      for (int r = 0; r < kPrimitiveRuleCount; ++r) {
        std::vector<EquationInstance> v;
        for (int k = 0; k < 40; ++k)
          if (auto e = gen.equation(static_cast<Rule>(r))) v.push_back(*e);
        CHECK_MESSAGE(v.size() == 40, rule_name(static_cast<Rule>(r)));
        auto rep = check_model_equations(m, v);
        CHECK_MESSAGE(rep.ok(), rule_name(static_cast<Rule>(r)));
      }
    }
  }

  TEST_CASE("a wrong equation is caught") {
    FinSetModel m(Signature{2, {1, 1}});
    std::vector<EquationInstance> v{{Rule::USub, empty_ctx(), in_u(0), in_u(1)}};
    auto rep = check_model_equations(m, v);
    CHECK(rep.violations == 1);
  }

  TEST_CASE("consistency probe") {
    FinSetModel empty(Signature{0, {}});
    auto e = consistency_probe(empty);
    CHECK(e.u_cardinality == 0);
    CHECK(!e.closed_u_term_exists);
    CHECK(e.ok());
    FinSetModel three(Signature{3, {1, 1, 1}});
    auto t = consistency_probe(three);
    CHECK(t.u_cardinality == 3);
    CHECK(t.ok());
  }
}
