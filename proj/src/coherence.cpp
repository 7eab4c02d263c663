#include "alphanorm/coherence.hpp"

#include "alphanorm/model.hpp"
#include "alphanorm/normal.hpp"
#include "alphanorm/wellformed.hpp"

namespace alphanorm {

std::vector<Signature> small_signatures() {
  std::vector<Signature> out{{0, {}}};
  for (int a = 0; a <= 2; ++a) out.push_back({1, {a}});
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) out.push_back({2, {a, b}});
  return out;
}

bool cert_model_agree(const Cert& c, const Ctx& ctx, const std::vector<Signature>& sigs,
                      int* checked) {
  int n = 0;
  bool ok = true;
  for (const Signature& sig : sigs) {
    Checker chk(sig);
    if (!chk.check_ctx(ctx) || !chk.check_ty(ctx, c.source) || !chk.check_ty(ctx, c.target))
      continue;
    FinSetModel m(sig);
    try {
      if (!agree_ty(ctx, c.source, c.target, m)) ok = false;
      ++n;
    } catch (const TooLarge&) {
    }
  }
  if (checked) *checked = n;
  return ok;
}

CoherenceReport coherence_2cell(Diagram d, const Bindings& b, const Ctx& ctx,
                                const std::vector<Signature>& sigs, int fuel) {
  CoherenceReport r;
  r.diagram = d;
  Legs legs = diagram_legs(d, b);
  r.left = check_cert(legs.left, fuel);
  r.right = check_cert(legs.right, fuel);
  r.endpoints_agree =
      same(legs.left.source, legs.right.source) && same(legs.left.target, legs.right.target);
  r.model_agree = cert_model_agree(legs.left, ctx, sigs, &r.model_checked);
  return r;
}

PentagonReport pentagon_suite(const Bindings& b, const Ctx& ctx,
                              const std::vector<Signature>& sigs, int fuel) {
  PentagonReport r;
  r.ass = coherence_2cell(Diagram::Ass, b, ctx, sigs, fuel);
  auto get = [&](const char* n) -> Expr {
    auto it = b.find(n);
    return it == b.end() ? nullptr : it->second;
  };
  Expr A = get("A"), g = get("g"), dd = get("d"), h = get("h");
  if (!A || !g || !dd || !h) return r;
  // The triangles live where g's domain is, which is the codomain of d ; h.
  Ctx tri_ctx = ctx;
  for (const Signature& sig : sigs) {
    auto mid = Checker(sig).infer_sub(comp(dd, h), ctx);
    if (mid) {
      tri_ctx = *mid;
      break;
    }
  }
  Bindings tri{{"A", A}, {"g", g}};
  r.idl = coherence_2cell(Diagram::Idl, tri, tri_ctx, sigs, fuel);
  r.idr = coherence_2cell(Diagram::Idr, tri, tri_ctx, sigs, fuel);
  std::vector<Ty> corners{
      inst(A, comp(g, comp(dd, h))), inst(A, comp(comp(g, dd), h)), inst(inst(A, comp(g, dd)), h),
      inst(inst(A, g), comp(dd, h)), inst(inst(inst(A, g), dd), h)};
  r.corners_agree = true;
  for (const Ty& c : corners)
    if (decide_ty_eq(corners.front(), c, fuel) != Tri::True) r.corners_agree = false;
  std::vector<Ty> tri_corners{inst(A, comp(id_sub(), g)), inst(inst(A, id_sub()), g),
                              inst(A, comp(g, id_sub())), inst(inst(A, g), id_sub()), inst(A, g)};
  for (const Ty& c : tri_corners)
    if (decide_ty_eq(tri_corners.back(), c, fuel) != Tri::True) r.corners_agree = false;
  return r;
}

DiagramInstance random_diagram_instance(Diagram d, Generator& gen, int s) {
  for (;;) {
    Ctx X = gen.ctx(gen.uniform(0, 2), 3);
    auto [h, T] = gen.sub(X, s);
    auto [dd, D] = gen.sub(T, s);
    auto [g, G] = gen.sub(D, s);
    Ty A = gen.ty(G, s);
    Ty B = gen.ty(ext(G, A), s);
    Tm t = gen.tm_u(G, s);
    DiagramInstance out;
    switch (d) {
      case Diagram::UId:
        out.ctx = G;
        break;
      case Diagram::UComp:
        out = {{{"g", g}, {"d", dd}}, T};
        break;
      case Diagram::ElId:
        if (!t) continue;
        out = {{{"t", t}}, G};
        break;
      case Diagram::ElComp:
        if (!t) continue;
        out = {{{"t", t}, {"g", g}, {"d", dd}}, T};
        break;
      case Diagram::PiComp:
        out = {{{"A", A}, {"B", B}, {"g", g}, {"d", dd}}, T};
        break;
      case Diagram::PiId:
        out = {{{"A", A}, {"B", B}}, G};
        break;
      case Diagram::Ass:
        out = {{{"A", A}, {"g", g}, {"d", dd}, {"h", h}}, X};
        break;
      case Diagram::Idl:
      case Diagram::Idr:
        out = {{{"A", A}, {"g", g}}, D};
        break;
    }
    return out;
  }
}

}  // namespace alphanorm
