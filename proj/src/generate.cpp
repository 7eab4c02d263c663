#include "alphanorm/generate.hpp"

#include "alphanorm/normal.hpp"

namespace alphanorm {

namespace {
constexpr int kTries = 8;
}

Generator::Generator(Signature sig, std::uint64_t seed, int fuel)
    : sig_(sig), chk_(sig, fuel), rng_(seed) {}

int Generator::uniform(int lo, int hi) {
  if (hi <= lo) return lo;
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Ctx Generator::ctx(int depth, int type_size) {
  Ctx c = empty_ctx();
  for (int k = 0; k < depth; ++k) c = ext(c, ty(c, uniform(1, type_size)));
  return c;
}

Ty Generator::ty(const Ctx& c, int b) {
  if (b <= 1) return ty_u();
  for (int attempt = 0; attempt < kTries; ++attempt) {
    int pick = uniform(0, 6);
    switch (pick == 0 ? 0 : (pick + 1) / 2) {
      case 0:
        return ty_u();
      case 1: {
        Tm t = tm_u(c, b - 1);
        if (t) return el(t);
        break;
      }
      case 2: {
        if (b < 3) break;
        Ty a = ty(c, uniform(1, b - 2));
        Ty r = pi(a, ty(ext(c, a), b - 1 - a->size));
        if (r->size <= b) return r;
        break;
      }
      default: {
        if (b < 3) break;
        auto [g, theta] = sub(c, uniform(1, b - 2));
        Ty r = inst(ty(theta, b - 1 - g->size), g);
        if (r->size <= b) return r;
        break;
      }
    }
  }
  return ty_u();
}

Tm Generator::tm_u(const Ctx& c, int b) {
  for (int attempt = 0; attempt < kTries; ++attempt) {
    Tm r;
    switch (uniform(0, 4)) {
      case 0:
        if (c->kind == Kind::Empty && sig_.x_card > 0) r = in_u(uniform(0, sig_.x_card - 1));
        break;
      case 1:
        if (c->kind == Kind::Ext && decide_ty_eq(c->kid[1], ty_u(), chk_.fuel()) == Tri::True)
          r = var_q();
        break;
      case 2: {
        if (b < 3) break;
        auto [g, theta] = sub(c, uniform(1, b - 2));
        Tm t = tm_u(theta, b - 1 - g->size);
        if (t) r = tinst(t, g);
        break;
      }
      case 3: {
        if (c->kind != Kind::Ext || b < 3 + c->kid[1]->size) break;
        Tm t = tm_u(c, b - 2 - c->kid[1]->size);
        if (t) r = app(lam(c->kid[1], t));
        break;
      }
      default: {
        auto [t, a] = tm(c, b);
        if (t && decide_ty_eq(a, ty_u(), chk_.fuel()) == Tri::True) r = t;
        break;
      }
    }
    if (r && r->size <= b) return r;
  }
  return nullptr;
}

std::pair<Tm, Ty> Generator::tm(const Ctx& c, int b) {
  for (int attempt = 0; attempt < kTries; ++attempt) {
    auto r = tm_once(c, b);
    if (r.first && r.first->size <= b) return r;
  }
  return {nullptr, nullptr};
}

std::pair<Tm, Ty> Generator::tm_once(const Ctx& c, int b) {
  switch (uniform(0, 4)) {
    case 0:
      if (c->kind == Kind::Ext) return {var_q(), inst(c->kid[1], proj())};
      break;
    case 1: {
      if (c->kind != Kind::Empty || sig_.x_card == 0) break;
      int i = uniform(0, sig_.x_card - 1);
      if (b >= 1 && sig_.y_card[i] > 0 && uniform(0, 1) == 1)
        return {in_el(i, uniform(0, sig_.y_card[i] - 1)), el(in_u(i))};
      return {in_u(i), ty_u()};
    }
    case 2: {
      if (b < 3) break;
      auto [g, theta] = sub(c, uniform(1, b - 2));
      auto [t, a] = tm(theta, b - 1 - g->size);
      if (t) return {tinst(t, g), inst(a, g)};
      break;
    }
    case 3: {
      if (b < 3) break;
      Ty a = ty(c, uniform(1, b - 2));
      auto [t, bt] = tm(ext(c, a), b - 1 - a->size);
      if (t) return {lam(a, t), pi(a, bt)};
      break;
    }
    default: {
      if (c->kind != Kind::Ext || b < 2) break;
      auto [f, ft] = tm(c->kid[0], b - 1);
      if (!f) break;
      NTy n = norm(ft, chk_.fuel());
      if (n->head != NNode::Head::Pi) break;
      if (decide_ty_eq(c->kid[1], quote(n->dom), chk_.fuel()) != Tri::True) break;
      return {app(f), quote(n->cod)};
    }
  }
  return {nullptr, nullptr};
}

std::pair<Sub, Ctx> Generator::lift_of(const Ctx& dom, int b) {
  const Ctx& delta = dom->kid[0];
  const Ty& last = dom->kid[1];
  switch (uniform(0, 2)) {
    case 0:
      if (last->kind == Kind::Inst) {
        auto theta = chk_.infer_sub(last->kid[1], delta);
        if (theta) return {plus(last->kid[1], last->kid[0]), ext(*theta, last->kid[0])};
      }
      break;
    case 1:
      if (b >= 3 && decide_ty_eq(last, ty_u(), chk_.fuel()) == Tri::True) {
        auto [g, theta] = sub(delta, b - 2);
        return {plus(g, ty_u()), ext(theta, ty_u())};
      }
      break;
    default:
      break;
  }
  return {plus(id_sub(), last), dom};
}

std::pair<Sub, Ctx> Generator::sub(const Ctx& dom, int b) {
  for (int attempt = 0; attempt < kTries; ++attempt) {
    std::pair<Sub, Ctx> r{nullptr, nullptr};
    switch (uniform(0, 6)) {
      case 0:
        r = {id_sub(), dom};
        break;
      case 1:
        r = {eps(), empty_ctx()};
        break;
      case 2:
        if (dom->kind == Kind::Ext) r = {proj(), dom->kid[0]};
        break;
      case 3: {
        if (b < 3) break;
        auto [g, mid] = sub(dom, uniform(1, b - 2));
        auto [f, cod] = sub(mid, b - 1 - g->size);
        r = {comp(f, g), cod};
        break;
      }
      case 4: {
        if (b < 2) break;
        auto [t, a] = tm(dom, b - 1);
        if (t) r = {sing(t), ext(dom, a)};
        break;
      }
      case 5:
        if (dom->kind == Kind::Ext && b >= 2) r = lift_of(dom, b);
        break;
      default: {
        if (b < 6) break;
        auto [g, theta] = sub(dom, uniform(1, (b - 4) / 2));
        auto [t, a] = tm(theta, b - 4 - 2 * g->size);
        if (t && a) r = {sub_ext(g, a, tinst(t, g)), ext(theta, a)};
        break;
      }
    }
    if (r.first && r.first->size <= b) return r;
  }
  return {id_sub(), dom};
}

}  // namespace alphanorm

namespace alphanorm {

namespace {

bool well_formed_side(const Checker& chk, const Ctx& c, const Expr& e) {
  switch (sort_of(e)) {
    case Sort::Ty:
      return chk.check_ty(c, e).ok();
    case Sort::Tm:
      return chk.infer_tm(e, c).ok();
    case Sort::Sub:
      return chk.infer_sub(e, c).ok();
    default:
      return false;
  }
}

}  // namespace

std::optional<EquationInstance> Generator::equation(Rule r, int s) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Ctx X = ctx(uniform(0, 2), 3);
    auto [g, G] = sub(X, s);
    EquationInstance e{r, X, nullptr, nullptr};
    switch (r) {
      case Rule::Ass: {
        auto [dd, D2] = sub(G, s);
        auto [gg, G2] = sub(D2, s);
        e.lhs = comp(gg, comp(dd, g));
        e.rhs = comp(comp(gg, dd), g);
        break;
      }
      case Rule::Idl:
        e.lhs = comp(id_sub(), g);
        e.rhs = g;
        break;
      case Rule::Idr:
        e.lhs = comp(g, id_sub());
        e.rhs = g;
        break;
      case Rule::EpsEta: {
        Sub sigma = G->kind == Kind::Empty ? g : comp(eps(), g);
        e.lhs = sigma;
        e.rhs = eps();
        break;
      }
      case Rule::TyComp: {
        auto [gg, G2] = sub(G, s);
        Ty a = ty(G2, s);
        e.lhs = inst(a, comp(gg, g));
        e.rhs = inst(inst(a, gg), g);
        break;
      }
      case Rule::TyId: {
        Ty a = ty(X, s + 2);
        e.lhs = inst(a, id_sub());
        e.rhs = a;
        break;
      }
      case Rule::TmComp: {
        auto [gg, G2] = sub(G, s);
        auto [t, a] = tm(G2, s);
        if (!t) continue;
        e.lhs = tinst(t, comp(gg, g));
        e.rhs = tinst(tinst(t, gg), g);
        break;
      }
      case Rule::TmId: {
        auto [t, a] = tm(X, s + 2);
        if (!t) continue;
        e.lhs = tinst(t, id_sub());
        e.rhs = t;
        break;
      }
      case Rule::PlusComp: {
        auto [gg, G2] = sub(G, s);
        Ty a = ty(G2, s);
        e.ctx = ext(X, inst(a, comp(gg, g)));
        e.lhs = plus(comp(gg, g), a);
        e.rhs = comp(plus(gg, a), plus(g, inst(a, gg)));
        break;
      }
      case Rule::PlusId: {
        Ty a = ty(X, s);
        e.ctx = ext(X, a);
        e.lhs = plus(id_sub(), a);
        e.rhs = id_sub();
        break;
      }
      case Rule::PCompPlus: {
        Ty a = ty(G, s);
        e.ctx = ext(X, inst(a, g));
        e.lhs = comp(proj(), plus(g, a));
        e.rhs = comp(g, proj());
        break;
      }
      case Rule::QInstPlus: {
        Ty a = ty(G, s);
        e.ctx = ext(X, inst(a, g));
        e.lhs = tinst(var_q(), plus(g, a));
        e.rhs = var_q();
        break;
      }
      case Rule::SingComp: {
        auto [t, a] = tm(G, s);
        if (!t) continue;
        e.lhs = comp(sing(t), g);
        e.rhs = comp(plus(g, a), sing(tinst(t, g)));
        break;
      }
      case Rule::PCompSing: {
        auto [t, a] = tm(X, s);
        if (!t) continue;
        e.lhs = comp(proj(), sing(t));
        e.rhs = id_sub();
        break;
      }
      case Rule::QInstSing: {
        auto [t, a] = tm(X, s);
        if (!t) continue;
        e.lhs = tinst(var_q(), sing(t));
        e.rhs = t;
        break;
      }
      case Rule::ExtEta: {
        Ty a = ty(X, s);
        e.ctx = ext(X, a);
        e.lhs = id_sub();
        e.rhs = comp(plus(proj(), a), sing(var_q()));
        break;
      }
      case Rule::USub:
        e.lhs = inst(ty_u(), g);
        e.rhs = ty_u();
        break;
      case Rule::ElSub: {
        Tm t = tm_u(G, s);
        if (!t) continue;
        e.lhs = inst(el(t), g);
        e.rhs = el(tinst(t, g));
        break;
      }
      case Rule::PiSub: {
        Ty a = ty(G, s);
        Ty b = ty(ext(G, a), s);
        e.lhs = inst(pi(a, b), g);
        e.rhs = pi(inst(a, g), inst(b, plus(g, a)));
        break;
      }
      case Rule::LamSub: {
        Ty a = ty(G, s);
        auto [b, bt] = tm(ext(G, a), s);
        if (!b) continue;
        e.lhs = tinst(lam(a, b), g);
        e.rhs = lam(inst(a, g), tinst(b, plus(g, a)));
        break;
      }
      case Rule::PiBeta: {
        Ty a = ty(X, s);
        auto [b, bt] = tm(ext(X, a), s);
        if (!b) continue;
        e.ctx = ext(X, a);
        e.lhs = app(lam(a, b));
        e.rhs = b;
        break;
      }
      case Rule::PiEta: {
        auto [f, ft] = tm(X, s + 2);
        if (!f) continue;
        NTy n = norm(ft, chk_.fuel());
        if (n->head != NNode::Head::Pi) continue;
        e.lhs = lam(quote(n->dom), app(f));
        e.rhs = f;
        break;
      }
      default:
        return std::nullopt;
    }
    if (well_formed_side(chk_, e.ctx, e.lhs) && well_formed_side(chk_, e.ctx, e.rhs)) return e;
  }
  return std::nullopt;
}

}  // namespace alphanorm
