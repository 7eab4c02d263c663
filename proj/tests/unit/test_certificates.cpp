#include <doctest.h>

#include "alphanorm/certificates.hpp"
#include "alphanorm/coherence.hpp"
#include "alphanorm/generate.hpp"
#include "alphanorm/normal.hpp"
#include "alphanorm/text.hpp"

using namespace alphanorm;

TEST_SUITE("certificates") {
  TEST_CASE("compl of closed examples") {
    Cert u = compl_cert(ty_u());
    CHECK(same(u.source, ty_u()));
    CHECK(same(u.target, ty_u()));
    CHECK(u.steps.empty());

    Cert c = compl_cert(inst(ty_u(), id_sub()));
    CHECK(same(c.source, ty_u()));
    CHECK(same(c.target, inst(ty_u(), id_sub())));
    REQUIRE(c.steps.size() == 1);
    CHECK(c.steps[0].rule == Rule::USub);
    CHECK(c.steps[0].dir == Dir::Bwd);
    CHECK(c.steps[0].position.empty());
    CHECK(check_cert(c).ok);
  }

  TEST_CASE("compl of U[p][id] takes one step per instantiation") {
    Cert c = compl_cert(parse_ty("U[p][id]"));
    CHECK(c.steps.size() == 2);
    CHECK(check_cert(c).ok);
  }

  TEST_CASE("random compl certificates replay") {
    Generator gen(Signature{2, {2, 1}}, 31);
    for (int k = 0; k < 1000; ++k) {
      Ctx ctx = gen.ctx(gen.uniform(0, 3));
      Ty a = gen.ty(ctx, 12);
      Cert c = compl_cert(a);
      CertCheck r = check_cert(c);
      REQUIRE_MESSAGE(r.ok, to_text(a) << ": " << r.reason);
      CHECK(same(c.source, quote(norm(a))));
      CHECK(same(c.target, a));
    }
  }

  TEST_CASE("replay failures") {
    Cert refl{ty_u(), ty_u(), {}};
    CHECK(check_cert(refl).ok);

    Cert bogus{ty_u(), pi(ty_u(), ty_u()), {}};
    CertCheck r = check_cert(bogus);
    CHECK(!r.ok);
    CHECK(r.failed_step == 0);

    // the appended TyId step claims A = U but the root is U[p][id]
    Cert c = compl_cert(parse_ty("U[p][id]"));
    c.steps.push_back(EqStep{Rule::TyId, {}, Dir::Fwd, {{"A", ty_u()}}});
    c.steps.push_back(c.steps.back());
    CertCheck f = check_cert(c);
    CHECK(!f.ok);
    CHECK(f.failed_step == 2);
  }

  TEST_CASE("text round trip") {
    Generator gen(Signature{2, {2, 1}}, 8);
    for (int k = 0; k < 300; ++k) {
      Cert c = compl_cert(gen.ty(gen.ctx(gen.uniform(0, 3)), 15));
      std::string s = cert_to_text(c);
      Cert back = cert_from_text(s);
      REQUIRE(cert_to_text(back) == s);
      CHECK(check_cert(back).ok);
    }
    CHECK_THROWS_AS(cert_from_text("source: U\ntarget: U\nstep Nope at root fwd\n"), ParseError);
    try {
      cert_from_text("source: U\ntarget: U\nstep USub at root sideways g=id\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }

  TEST_CASE("coherence diagrams on fixed bindings") {
    auto sigs = small_signatures();
    Ctx uu = ext(ext(empty_ctx(), ty_u()), ty_u());
    auto r = coherence_2cell(Diagram::UId, {}, empty_ctx(), sigs);
    CHECK(r.pass());
    auto c = coherence_2cell(Diagram::UComp, {{"g", proj()}, {"d", proj()}}, uu, sigs);
    CHECK(c.pass());
    Legs l = diagram_legs(Diagram::UComp, {{"g", proj()}, {"d", proj()}});
    CHECK(same(l.left.source, inst(ty_u(), comp(proj(), proj()))));
    CHECK(same(l.left.target, ty_u()));
  }

  TEST_CASE("pentagon suite") {
    auto sigs = small_signatures();
    Bindings ids{{"A", ty_u()}, {"g", id_sub()}, {"d", id_sub()}, {"h", id_sub()}};
    CHECK(pentagon_suite(ids, empty_ctx(), sigs).pass());
    Ty a = el(var_q());
    Sub g = comp(proj(), plus(proj(), ty_u()));
    CHECK(decide_ty_eq(inst(a, comp(g, comp(id_sub(), proj()))),
                       inst(inst(inst(a, g), id_sub()), proj())) == Tri::True);
  }

  TEST_CASE("idl implies idr") {
    for (auto [a, g] : {std::pair{ty_u(), id_sub()}, std::pair{el(var_q()), proj()}}) {
      Legs l = idl_implies_idr(a, g);
      CHECK(check_cert(l.left).ok);
      CHECK(check_cert(l.right).ok);
      CHECK(same(l.left.source, inst(a, comp(g, id_sub()))));
      CHECK(same(l.right.source, inst(a, comp(g, id_sub()))));
      CHECK(same(l.left.target, inst(a, g)));
      CHECK(same(l.right.target, inst(a, g)));
    }
  }

  TEST_CASE("random diagram instances") {
    Generator gen(Signature{2, {2, 1}}, 12);
    auto sigs = small_signatures();
    for (int d = 0; d < kDiagramCount; ++d) {
      Diagram dg = static_cast<Diagram>(d);
      for (int k = 0; k < 50; ++k) {
        auto inst_ = random_diagram_instance(dg, gen);
        CHECK_MESSAGE(coherence_2cell(dg, inst_.bindings, inst_.ctx, sigs).pass(), diagram_name(dg));
      }
    }
  }
}
