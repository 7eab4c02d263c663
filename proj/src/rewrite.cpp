#include "alphanorm/rewrite.hpp"

#include <functional>

namespace alphanorm {

namespace {

bool try_here(const Expr& e, StepResult& out) {
  for (const auto& v : law_table()) {
    if (!v.machine) continue;
    Bindings b;
    if (!match(v.lhs, e, b)) continue;
    if (v.cond && !v.cond(b)) continue;
    Expr r = instantiate(v.rhs, b);
    if (!r) continue;
    out.reduct = r;
    out.redex.rule = v.rule;
    out.redex.bindings = std::move(b);
    return true;
  }
  return false;
}

// Preorder search; on success `out.reduct` is the rewritten subtree and
// the caller rebuilds the spine.
bool find_redex(const Expr& e, Path& path, StepResult& out) {
  if (try_here(e, out)) {
    out.redex.position = path;
    return true;
  }
  for (int c = 0; c < arity(e->kind); ++c) {
    path.push_back(c);
    if (find_redex(e->kid[c], path, out)) return true;
    path.pop_back();
  }
  return false;
}

// ------------------------------------------------------------ de Bruijn

struct Db;
using DbP = std::shared_ptr<const Db>;

struct Db {
  enum K { Var, Lam, App, Con, ConEl } k;
  int n = 0;
  int m = 0;
  DbP a, b;
};

DbP mk(Db::K k, int n = 0, int m = 0, DbP a = nullptr, DbP b = nullptr) {
  auto d = std::make_shared<Db>();
  d->k = k;
  d->n = n;
  d->m = m;
  d->a = std::move(a);
  d->b = std::move(b);
  return d;
}

using DbSub = std::function<DbP(int)>;

DbP shift(const DbP& t, int by, int cutoff) {
  switch (t->k) {
    case Db::Var:
      return t->n >= cutoff ? mk(Db::Var, t->n + by) : t;
    case Db::Lam:
      return mk(Db::Lam, 0, 0, shift(t->a, by, cutoff + 1));
    case Db::App:
      return mk(Db::App, 0, 0, shift(t->a, by, cutoff), shift(t->b, by, cutoff));
    default:
      return t;
  }
}

DbSub lift(DbSub s) {
  return [s](int k) -> DbP { return k == 0 ? mk(Db::Var, 0) : shift(s(k - 1), 1, 0); };
}

DbP subst(const DbP& t, const DbSub& s) {
  switch (t->k) {
    case Db::Var:
      return s(t->n);
    case Db::Lam:
      return mk(Db::Lam, 0, 0, subst(t->a, lift(s)));
    case Db::App:
      return mk(Db::App, 0, 0, subst(t->a, s), subst(t->b, s));
    default:
      return t;
  }
}

DbP to_db(const Expr& t);

DbSub to_db_sub(const Expr& g) {
  switch (g->kind) {
    case Kind::P:
      return [](int k) { return mk(Db::Var, k + 1); };
    case Kind::Comp: {
      DbSub f = to_db_sub(g->kid[0]);
      DbSub h = to_db_sub(g->kid[1]);
      return [f, h](int k) { return subst(f(k), h); };
    }
    case Kind::Plus:
      return lift(to_db_sub(g->kid[0]));
    case Kind::Sing: {
      DbP a = to_db(g->kid[0]);
      return [a](int k) { return k == 0 ? a : mk(Db::Var, k - 1); };
    }
    default:  // id; eps only ever meets closed terms
      return [](int k) { return mk(Db::Var, k); };
  }
}

DbP to_db(const Expr& t) {
  switch (t->kind) {
    case Kind::Q:
      return mk(Db::Var, 0);
    case Kind::TInst:
      return subst(to_db(t->kid[0]), to_db_sub(t->kid[1]));
    case Kind::Lam:
      return mk(Db::Lam, 0, 0, to_db(t->kid[1]));
    case Kind::App:
      return mk(Db::App, 0, 0, shift(to_db(t->kid[0]), 1, 0), mk(Db::Var, 0));
    case Kind::InU:
      return mk(Db::Con, t->i);
    case Kind::InEl:
      return mk(Db::ConEl, t->i, t->j);
    default:
      return mk(Db::Con, -1);
  }
}

// One leftmost-outermost beta step.
bool beta_step(const DbP& t, DbP& out) {
  switch (t->k) {
    case Db::App:
      if (t->a->k == Db::Lam) {
        DbP arg = t->b;
        out = subst(t->a->a, [arg](int k) { return k == 0 ? arg : mk(Db::Var, k - 1); });
        return true;
      }
      {
        DbP x;
        if (beta_step(t->a, x)) {
          out = mk(Db::App, 0, 0, x, t->b);
          return true;
        }
        if (beta_step(t->b, x)) {
          out = mk(Db::App, 0, 0, t->a, x);
          return true;
        }
      }
      return false;
    case Db::Lam: {
      DbP x;
      if (beta_step(t->a, x)) {
        out = mk(Db::Lam, 0, 0, x);
        return true;
      }
      return false;
    }
    default:
      return false;
  }
}

bool occurs(const DbP& t, int k) {
  switch (t->k) {
    case Db::Var:
      return t->n == k;
    case Db::Lam:
      return occurs(t->a, k + 1);
    case Db::App:
      return occurs(t->a, k) || occurs(t->b, k);
    default:
      return false;
  }
}

DbP eta(const DbP& t) {
  switch (t->k) {
    case Db::Lam: {
      DbP body = eta(t->a);
      if (body->k == Db::App && body->b->k == Db::Var && body->b->n == 0 && !occurs(body->a, 0))
        return shift(body->a, -1, 0);
      return mk(Db::Lam, 0, 0, body);
    }
    case Db::App:
      return mk(Db::App, 0, 0, eta(t->a), eta(t->b));
    default:
      return t;
  }
}

bool db_same(const DbP& x, const DbP& y) {
  if (x->k != y->k || x->n != y->n || x->m != y->m) return false;
  if (x->a && !db_same(x->a, y->a)) return false;
  if (x->b && !db_same(x->b, y->b)) return false;
  return true;
}

// nullptr on fuel exhaustion.
DbP db_key(const Tm& t, int fuel) {
  DbP cur = to_db(t);
  for (;;) {
    DbP nx;
    if (!beta_step(cur, nx)) break;
    if (--fuel < 0) return nullptr;
    cur = nx;
  }
  return eta(cur);
}

}  // namespace

std::optional<StepResult> step(const Expr& e) {
  StepResult out;
  Path path;
  if (!find_redex(e, path, out)) return std::nullopt;
  out.reduct = replace_at(e, out.redex.position, out.reduct);
  return out;
}

Canon canon(const Expr& e, int fuel, bool keep_trace) {
  Canon c;
  c.expr = e;
  for (;;) {
    auto s = step(c.expr);
    if (!s) return c;
    if (c.steps >= fuel) {
      c.exhausted = true;
      return c;
    }
    ++c.steps;
    c.expr = s->reduct;
    if (keep_trace) c.trace.push_back(std::move(s->redex));
  }
}

std::optional<Tm> canon_tm(const Tm& t, int fuel) {
  Canon c = canon(t, fuel);
  if (c.exhausted) return std::nullopt;
  return c.expr;
}

Tri conv_canonical(const Tm& ct, const Tm& cu, int fuel) {
  if (same(ct, cu)) return Tri::True;
  DbP kt = db_key(ct, fuel);
  DbP ku = db_key(cu, fuel);
  if (!kt || !ku) return Tri::Unknown;
  return db_same(kt, ku) ? Tri::True : Tri::False;
}

Tri conv_tm(const Ctx&, const Ty&, const Tm& t, const Tm& u, int fuel) {
  auto ct = canon_tm(t, fuel);
  auto cu = canon_tm(u, fuel);
  if (!ct || !cu) return Tri::Unknown;
  return conv_canonical(*ct, *cu, fuel);
}

}  // namespace alphanorm
