#include <doctest.h>

#include "alphanorm/generate.hpp"
#include "alphanorm/normal.hpp"
#include "alphanorm/text.hpp"
#include "alphanorm/wellformed.hpp"

using namespace alphanorm;

namespace {
const Signature kSig{1, {1}};
const Ctx kU = ext(empty_ctx(), ty_u());
}  // namespace

TEST_SUITE("wellformed") {
  TEST_CASE("contexts") {
    Checker chk(kSig);
    CHECK(chk.check_ctx(empty_ctx()).ok());
    CHECK(chk.check_ctx(kU).ok());
    Checker none(Signature{0, {}});
    auto r = none.check_ctx(ext(empty_ctx(), el(in_u(0))));
    REQUIRE(!r.ok());
    CHECK(r.rejection().reason == "index out of range");
    CHECK(same(r.rejection().subtree, in_u(0)));
  }

  TEST_CASE("substitution codomains") {
    Checker chk(kSig);
    Ctx uu = ext(kU, ty_u());
    CHECK(same(*chk.infer_sub(id_sub(), uu), uu));
    CHECK(same(*chk.infer_sub(proj(), kU), empty_ctx()));
    // p+ over U[p] = U: the lift rebuilds the context it came from
    auto r = chk.infer_sub(plus(proj(), ty_u()), uu);
    REQUIRE(r.ok());
    CHECK(same(*r, kU));
    CHECK(!chk.infer_sub(proj(), empty_ctx()).ok());
    CHECK(chk.check_sub(uu, kU, plus(proj(), ty_u())).ok());
    CHECK(!chk.check_sub(uu, uu, plus(proj(), ty_u())).ok());
  }

  TEST_CASE("term inference") {
    Checker chk(kSig);
    CHECK(same(*chk.infer_tm(var_q(), kU), inst(ty_u(), proj())));
    auto id = chk.infer_tm(id_combinator(), empty_ctx());
    REQUIRE(id.ok());
    Ty expected = pi(ty_u(), pi(el(var_q()), inst(el(var_q()), proj())));
    CHECK(decide_ty_eq(*id, expected) == Tri::True);
    auto r = chk.infer_tm(in_u(0), kU);
    REQUIRE(!r.ok());
    CHECK(r.rejection().reason == "inU only in the empty context");
    CHECK(!chk.infer_tm(app(var_q()), kU).ok());
  }

  TEST_CASE("term checking") {
    Checker chk(kSig);
    CHECK(chk.check_tm(empty_ctx(), ty_u(), in_u(0)).ok());
    CHECK(chk.check_tm(kU, ty_u(), var_q()).ok());
    CHECK(!chk.check_tm(empty_ctx(), pi(ty_u(), inst(ty_u(), proj())), in_u(0)).ok());
    CHECK(chk.check_tm(empty_ctx(), pi(ty_u(), arrow(el(var_q()), el(var_q()))), id_combinator()).ok());
    CHECK(!chk.check_tm(empty_ctx(), ty_u(), in_u(1)).ok());
  }

  TEST_CASE("ill-typed types are rejected at the offending subtree") {
    Checker chk(kSig);
    auto r = chk.check_ty(empty_ctx(), el(var_q()));
    REQUIRE(!r.ok());
    CHECK(same(r.rejection().subtree, var_q()));
    CHECK(!chk.check_ty(empty_ctx(), inst(ty_u(), proj())).ok());
    CHECK(chk.check_ty(kU, inst(el(var_q()), comp(plus(proj(), ty_u()), sing(var_q())))).ok());
  }

  TEST_CASE("generator output is well formed") {
    Generator gen(Signature{2, {2, 1}}, 99);
    const Checker& chk = gen.checker();
    for (int k = 0; k < 500; ++k) {
      Ctx c = gen.ctx(gen.uniform(0, 3));
      REQUIRE(chk.check_ctx(c).ok());
      Ty a = gen.ty(c, gen.uniform(1, 20));
      REQUIRE_MESSAGE(chk.check_ty(c, a).ok(), to_text(a));
      auto [g, D] = gen.sub(c, 6);
      REQUIRE(chk.check_sub(c, D, g).ok());
    }
  }
}
