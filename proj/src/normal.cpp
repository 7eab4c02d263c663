#include "alphanorm/normal.hpp"

#include "alphanorm/rewrite.hpp"

namespace alphanorm {

NTy n_u() {
  static const NTy n = [] {
    auto x = std::make_shared<NNode>();
    x->head = NNode::Head::U;
    return NTy(x);
  }();
  return n;
}

NTy n_el_canonical(const Tm& t) {
  auto x = std::make_shared<NNode>();
  x->head = NNode::Head::El;
  x->tm = t;
  x->size = 1 + t->size;
  return x;
}

NTy n_el(const Tm& t, int fuel) {
  Canon c = canon(t, fuel);
  auto x = std::make_shared<NNode>();
  x->head = NNode::Head::El;
  x->tm = c.expr;
  x->stuck = c.exhausted;
  x->size = 1 + c.expr->size;
  return x;
}

NTy n_pi(NTy dom, NTy cod) {
  auto x = std::make_shared<NNode>();
  x->head = NNode::Head::Pi;
  x->size = 1 + dom->size + cod->size;
  x->dom = std::move(dom);
  x->cod = std::move(cod);
  return x;
}

bool same_nty(const NTy& a, const NTy& b) {
  if (a.get() == b.get()) return true;
  if (a->head != b->head) return false;
  switch (a->head) {
    case NNode::Head::U:
      return true;
    case NNode::Head::El:
      return same(a->tm, b->tm);
    case NNode::Head::Pi:
      return same_nty(a->dom, b->dom) && same_nty(a->cod, b->cod);
  }
  return false;
}

bool any_stuck(const NTy& n) {
  if (n->stuck) return true;
  if (n->head == NNode::Head::Pi) return any_stuck(n->dom) || any_stuck(n->cod);
  return false;
}

Ty quote(const NTy& n) {
  switch (n->head) {
    case NNode::Head::U:
      return ty_u();
    case NNode::Head::El:
      return el(n->tm);
    case NNode::Head::Pi:
      return pi(quote(n->dom), quote(n->cod));
  }
  return nullptr;
}

NTy inst_nty(const NTy& n, const Sub& g, int fuel) {
  switch (n->head) {
    case NNode::Head::U:
      return n;
    case NNode::Head::El:
      return n_el(tinst(n->tm, g), fuel);
    case NNode::Head::Pi:
      // the codomain is instantiated along the lift over the quoted domain
      return n_pi(inst_nty(n->dom, g, fuel), inst_nty(n->cod, plus(g, quote(n->dom)), fuel));
  }
  return nullptr;
}

NTy norm(const Ty& a, int fuel) {
  switch (a->kind) {
    case Kind::U:
      return n_u();
    case Kind::El:
      return n_el(a->kid[0], fuel);
    case Kind::Pi:
      return n_pi(norm(a->kid[0], fuel), norm(a->kid[1], fuel));
    case Kind::Inst:
      return inst_nty(norm(a->kid[0], fuel), a->kid[1], fuel);
    default:
      return nullptr;
  }
}

Tri cover_eq(const NTy& n, const NTy& m, int fuel) {
  if (n->head != m->head) return Tri::False;
  switch (n->head) {
    case NNode::Head::U:
      return Tri::True;
    case NNode::Head::El: {
      if (same(n->tm, m->tm)) return Tri::True;
      if (n->stuck || m->stuck) return Tri::Unknown;
      return conv_canonical(n->tm, m->tm, fuel);
    }
    case NNode::Head::Pi: {
      Tri d = cover_eq(n->dom, m->dom, fuel);
      if (d == Tri::False) return Tri::False;
      return tri_and(d, cover_eq(n->cod, m->cod, fuel));
    }
  }
  return Tri::False;
}

Tri decide_ty_eq(const Ty& a, const Ty& b, int fuel) {
  NTy na = norm(a, fuel);
  NTy nb = norm(b, fuel);
  if (!na || !nb) return Tri::False;
  return cover_eq(na, nb, fuel);
}

}  // namespace alphanorm
