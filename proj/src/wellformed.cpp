#include "alphanorm/wellformed.hpp"

#include "alphanorm/normal.hpp"

namespace alphanorm {

namespace {

Rejection reject(const Expr& e, std::string why) { return Rejection{e, std::move(why)}; }

Judgement judge(Judgement::Kind k, Ctx ctx, Ctx cod, Ty ty, Expr subject) {
  return Judgement{k, std::move(ctx), std::move(cod), std::move(ty), std::move(subject)};
}

Result<Judgement> compare_types(const Tm& tm, const Ty& got, const Ty& want, int fuel) {
  switch (decide_ty_eq(got, want, fuel)) {
    case Tri::True:
      return judge(Judgement::Kind::TmOk, nullptr, nullptr, want, tm);
    case Tri::False:
      return reject(tm, "type mismatch");
    default:
      return reject(tm, "undecided");
  }
}

}  // namespace

Result<Judgement> Checker::check_ctx(const Ctx& ctx) const {
  switch (ctx->kind) {
    case Kind::Empty:
      return judge(Judgement::Kind::CtxOk, ctx, nullptr, nullptr, ctx);
    case Kind::Ext: {
      auto c = check_ctx(ctx->kid[0]);
      if (!c) return c;
      auto t = check_ty(ctx->kid[0], ctx->kid[1]);
      if (!t) return t.rejection();
      return judge(Judgement::Kind::CtxOk, ctx, nullptr, nullptr, ctx);
    }
    default:
      return reject(ctx, "not a context");
  }
}

Result<Judgement> Checker::check_ty(const Ctx& ctx, const Ty& ty) const {
  auto ok = [&] { return judge(Judgement::Kind::TyOk, ctx, nullptr, ty, ty); };
  switch (ty->kind) {
    case Kind::U:
      return ok();
    case Kind::El: {
      auto r = check_tm(ctx, ty_u(), ty->kid[0]);
      if (!r) return r;
      return ok();
    }
    case Kind::Pi: {
      auto a = check_ty(ctx, ty->kid[0]);
      if (!a) return a;
      auto b = check_ty(ext(ctx, ty->kid[0]), ty->kid[1]);
      if (!b) return b;
      return ok();
    }
    case Kind::Inst: {
      auto cod = infer_sub(ty->kid[1], ctx);
      if (!cod) return cod.rejection();
      auto a = check_ty(*cod, ty->kid[0]);
      if (!a) return a;
      return ok();
    }
    default:
      return reject(ty, "not a type");
  }
}

Result<Judgement> Checker::check_tm(const Ctx& ctx, const Ty& ty, const Tm& tm) const {
  auto t = check_ty(ctx, ty);
  if (!t) return t;
  auto got = infer_tm(tm, ctx);
  if (!got) return got.rejection();
  return compare_types(tm, *got, ty, fuel_);
}

Result<Judgement> Checker::check_sub(const Ctx& dom, const Ctx& cod, const Sub& sub) const {
  auto got = infer_sub(sub, dom);
  if (!got) return got.rejection();
  switch (ctx_eq(*got, cod)) {
    case Tri::True:
      return judge(Judgement::Kind::SubOk, dom, cod, nullptr, sub);
    case Tri::False:
      return reject(sub, "codomain mismatch");
    default:
      return reject(sub, "undecided");
  }
}

Tri Checker::ctx_eq(const Ctx& a, const Ctx& b) const {
  if (a->kind == Kind::Empty && b->kind == Kind::Empty) return Tri::True;
  if (a->kind != Kind::Ext || b->kind != Kind::Ext) return Tri::False;
  Tri prefix = ctx_eq(a->kid[0], b->kid[0]);
  if (prefix == Tri::False) return prefix;
  return tri_and(prefix, decide_ty_eq(a->kid[1], b->kid[1], fuel_));
}

Result<Ctx> Checker::infer_sub(const Sub& sub, const Ctx& dom) const {
  switch (sub->kind) {
    case Kind::Id:
      return dom;
    case Kind::Eps:
      return empty_ctx();
    case Kind::P:
      if (dom->kind != Kind::Ext) return reject(sub, "p needs an extended context");
      return dom->kid[0];
    case Kind::Comp: {
      auto mid = infer_sub(sub->kid[1], dom);
      if (!mid) return mid;
      return infer_sub(sub->kid[0], *mid);
    }
    case Kind::Plus: {
      if (dom->kind != Kind::Ext) return reject(sub, "lift needs an extended context");
      const Sub& g = sub->kid[0];
      const Ty& a = sub->kid[1];
      auto theta = infer_sub(g, dom->kid[0]);
      if (!theta) return theta;
      auto ta = check_ty(*theta, a);
      if (!ta) return ta.rejection();
      switch (decide_ty_eq(dom->kid[1], inst(a, g), fuel_)) {
        case Tri::True:
          return ext(*theta, a);
        case Tri::False:
          return reject(sub, "lift annotation does not match the context");
        default:
          return reject(sub, "undecided");
      }
    }
    case Kind::Sing: {
      auto a = infer_tm(sub->kid[0], dom);
      if (!a) return a.rejection();
      return ext(dom, *a);
    }
    default:
      return reject(sub, "not a substitution");
  }
}

Result<Ty> Checker::infer_tm(const Tm& tm, const Ctx& ctx) const {
  switch (tm->kind) {
    case Kind::Q:
      if (ctx->kind != Kind::Ext) return reject(tm, "q needs an extended context");
      return inst(ctx->kid[1], proj());
    case Kind::TInst: {
      auto cod = infer_sub(tm->kid[1], ctx);
      if (!cod) return cod.rejection();
      auto a = infer_tm(tm->kid[0], *cod);
      if (!a) return a;
      return inst(*a, tm->kid[1]);
    }
    case Kind::Lam: {
      auto a = check_ty(ctx, tm->kid[0]);
      if (!a) return a.rejection();
      auto b = infer_tm(tm->kid[1], ext(ctx, tm->kid[0]));
      if (!b) return b;
      return pi(tm->kid[0], *b);
    }
    case Kind::App: {
      if (ctx->kind != Kind::Ext) return reject(tm, "app needs an extended context");
      auto f = infer_tm(tm->kid[0], ctx->kid[0]);
      if (!f) return f;
      NTy n = norm(*f, fuel_);
      if (n->head != NNode::Head::Pi) return reject(tm, "applied term is not a function");
      switch (decide_ty_eq(ctx->kid[1], quote(n->dom), fuel_)) {
        case Tri::True:
          return quote(n->cod);
        case Tri::False:
          return reject(tm, "argument type does not match the context");
        default:
          return reject(tm, "undecided");
      }
    }
    case Kind::InU:
      if (ctx->kind != Kind::Empty) return reject(tm, "inU only in the empty context");
      if (tm->i < 0 || tm->i >= sig_.x_card) return reject(tm, "index out of range");
      return ty_u();
    case Kind::InEl:
      if (ctx->kind != Kind::Empty) return reject(tm, "inEl only in the empty context");
      if (tm->i < 0 || tm->i >= sig_.x_card) return reject(tm, "index out of range");
      if (tm->j < 0 || tm->j >= sig_.y_card[tm->i]) return reject(tm, "index out of range");
      return el(in_u(tm->i));
    default:
      return reject(tm, "not a term");
  }
}

}  // namespace alphanorm
