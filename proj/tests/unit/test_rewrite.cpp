#include <doctest.h>

#include "alphanorm/generate.hpp"
#include "alphanorm/model.hpp"
#include "alphanorm/rewrite.hpp"
#include "alphanorm/text.hpp"

using namespace alphanorm;

TEST_SUITE("subst_machine") {
  TEST_CASE("single steps") {
    auto s = step(comp(id_sub(), proj()));
    REQUIRE(s);
    CHECK(same(s->reduct, proj()));
    CHECK(s->redex.rule == Rule::Idl);
    CHECK(s->redex.position.empty());

    Tm a = in_u(0);
    auto t = step(tinst(var_q(), sing(a)));
    REQUIRE(t);
    CHECK(same(t->reduct, a));
    CHECK(t->redex.rule == Rule::QInstSing);

    CHECK(!step(var_q()));
  }

  TEST_CASE("outermost redex wins") {
    // both the root and the inner TInst are redexes
    Tm t = tinst(tinst(var_q(), id_sub()), id_sub());
    auto s = step(t);
    REQUIRE(s);
    CHECK(s->redex.position.empty());
    CHECK(s->redex.rule == Rule::TmId);
  }

  TEST_CASE("canonicalisation") {
    Tm q = var_q();
    CHECK(same(*canon_tm(tinst(tinst(q, id_sub()), id_sub()), 10), q));
    Tm b = tinst(var_q(), proj());
    CHECK(same(*canon_tm(app(lam(ty_u(), b))), *canon_tm(b)));
    CHECK(same(*canon_tm(q, 1), q));
    Canon c = canon(tinst(tinst(q, id_sub()), id_sub()), 1);
    CHECK(c.exhausted);
    CHECK(!canon_tm(tinst(tinst(q, id_sub()), id_sub()), 1));
  }

  TEST_CASE("conversion") {
    Ctx g = ext(empty_ctx(), ty_u());
    CHECK(conv_tm(g, ty_u(), var_q(), var_q()) == Tri::True);
    Tm a = in_u(0);
    Tm b = var_q();
    CHECK(conv_tm(empty_ctx(), ty_u(), apply_to(lam(ty_u(), b), a), tinst(b, sing(a))) == Tri::True);
    CHECK(conv_tm(empty_ctx(), ty_u(), in_u(0), in_u(1)) == Tri::False);
    // the extension eta shape q[p+][<q>] against q
    Tm eta = tinst(tinst(var_q(), plus(proj(), ty_u())), sing(var_q()));
    CHECK(conv_tm(g, inst(ty_u(), proj()), eta, var_q()) == Tri::True);
  }

  TEST_CASE("conv true implies model agreement") {
    // inU 0 and inU 1 denote different elements once X has two
    FinSetModel m(Signature{2, {1, 1}});
    CHECK(!agree_tm(empty_ctx(), in_u(0), in_u(1), m));

    Generator gen(Signature{2, {2, 1}}, 17);
    int tried = 0;
    for (int k = 0; k < 400; ++k) {
      Ctx c = gen.ctx(gen.uniform(0, 2));
      auto [t, ty] = gen.tm(c, gen.uniform(2, 10));
      if (!t) continue;
      auto ct = canon_tm(t);
      REQUIRE(ct);
      REQUIRE(conv_tm(c, ty, t, *ct) == Tri::True);
      for (Signature sig : {Signature{1, {2}}, Signature{2, {2, 1}}}) {
        if (!Checker(sig).check_tm(c, ty, t).ok()) continue;
        FinSetModel mm(sig);
        try {
          bool ok = agree_tm(c, t, *ct, mm);
          CHECK_MESSAGE(ok, to_text(t));
          ++tried;
        } catch (const TooLarge&) {
        }
      }
    }
    CHECK(tried > 100);
  }
}
