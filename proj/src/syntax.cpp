#include "alphanorm/syntax.hpp"

#include <functional>
#include <sstream>

namespace alphanorm {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Expr make(Kind k, Expr a = nullptr, Expr b = nullptr, int i = 0, int j = 0) {
  return std::make_shared<const Node>(k, std::move(a), std::move(b), i, j);
}

}  // namespace

Node::Node(Kind k, Expr a, Expr b, int ii, int jj)
    : kind(k), kid{std::move(a), std::move(b)}, i(ii), j(jj) {
  std::size_t h = std::hash<int>{}(static_cast<int>(k) + 1);
  h = mix(h, static_cast<std::size_t>(i));
  h = mix(h, static_cast<std::size_t>(j));
  for (const auto& c : kid) {
    if (c) {
      h = mix(h, c->hash);
      size += c->size;
    }
  }
  hash = h;
}

Sort sort_of(Kind k) {
  switch (k) {
    case Kind::Empty:
    case Kind::Ext:
      return Sort::Ctx;
    case Kind::Id:
    case Kind::Comp:
    case Kind::Eps:
    case Kind::P:
    case Kind::Plus:
    case Kind::Sing:
      return Sort::Sub;
    case Kind::U:
    case Kind::El:
    case Kind::Pi:
    case Kind::Inst:
      return Sort::Ty;
    default:
      return Sort::Tm;
  }
}

int arity(Kind k) {
  switch (k) {
    case Kind::Ext:
    case Kind::Comp:
    case Kind::Plus:
    case Kind::Pi:
    case Kind::Inst:
    case Kind::TInst:
    case Kind::Lam:
      return 2;
    case Kind::Sing:
    case Kind::El:
    case Kind::App:
      return 1;
    default:
      return 0;
  }
}

const char* kind_name(Kind k) {
  static const char* names[] = {"Empty", "Ext", "Id",   "Comp",  "Eps", "P",   "Plus", "Sing", "U",
                                "El",    "Pi",  "Inst", "Q",     "TInst", "Lam", "App", "InU",  "InEl"};
  return names[static_cast<int>(k)];
}

bool Signature::valid() const {
  if (x_card < 0 || static_cast<int>(y_card.size()) != x_card) return false;
  for (int y : y_card)
    if (y < 0) return false;
  return true;
}

Ctx empty_ctx() {
  static const Expr e = make(Kind::Empty);
  return e;
}
Ctx ext(Ctx c, Ty a) { return make(Kind::Ext, std::move(c), std::move(a)); }

Sub id_sub() {
  static const Expr e = make(Kind::Id);
  return e;
}
Sub comp(Sub f, Sub g) { return make(Kind::Comp, std::move(f), std::move(g)); }
Sub eps() {
  static const Expr e = make(Kind::Eps);
  return e;
}
Sub proj() {
  static const Expr e = make(Kind::P);
  return e;
}
Sub plus(Sub g, Ty a) { return make(Kind::Plus, std::move(g), std::move(a)); }
Sub sing(Tm t) { return make(Kind::Sing, std::move(t)); }

Ty ty_u() {
  static const Expr e = make(Kind::U);
  return e;
}
Ty el(Tm t) { return make(Kind::El, std::move(t)); }
Ty pi(Ty a, Ty b) { return make(Kind::Pi, std::move(a), std::move(b)); }
Ty inst(Ty a, Sub g) { return make(Kind::Inst, std::move(a), std::move(g)); }

Tm var_q() {
  static const Expr e = make(Kind::Q);
  return e;
}
Tm tinst(Tm t, Sub g) { return make(Kind::TInst, std::move(t), std::move(g)); }
Tm lam(Ty a, Tm b) { return make(Kind::Lam, std::move(a), std::move(b)); }
Tm app(Tm t) { return make(Kind::App, std::move(t)); }
Tm in_u(int i) { return make(Kind::InU, nullptr, nullptr, i); }
Tm in_el(int i, int j) { return make(Kind::InEl, nullptr, nullptr, i, j); }

Sub sub_ext(Sub g, Ty a, Tm t) { return comp(plus(std::move(g), std::move(a)), sing(std::move(t))); }
Ty arrow(Ty a, Ty b) { return pi(std::move(a), inst(std::move(b), proj())); }
Tm apply_to(Tm f, Tm a) { return tinst(app(std::move(f)), sing(std::move(a))); }

// The variable fed to El is of type U[p]; the coercion to U is erased.
Tm id_combinator() { return lam(ty_u(), lam(el(var_q()), var_q())); }

bool same(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind || a->size != b->size || a->i != b->i || a->j != b->j)
    return false;
  for (int c = 0; c < 2; ++c)
    if (!same(a->kid[c], b->kid[c])) return false;
  return true;
}

int compare(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return 0;
  if (!a) return -1;
  if (!b) return 1;
  if (a->size != b->size) return a->size < b->size ? -1 : 1;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (a->i != b->i) return a->i < b->i ? -1 : 1;
  if (a->j != b->j) return a->j < b->j ? -1 : 1;
  for (int c = 0; c < 2; ++c) {
    int r = compare(a->kid[c], b->kid[c]);
    if (r != 0) return r;
  }
  return 0;
}

Expr with_child(const Expr& e, int idx, Expr child) {
  Expr a = e->kid[0], b = e->kid[1];
  if (idx == 0)
    a = std::move(child);
  else
    b = std::move(child);
  return make(e->kind, std::move(a), std::move(b), e->i, e->j);
}

Expr subtree_at(const Expr& e, const Path& pos) {
  Expr cur = e;
  for (int idx : pos) {
    if (!cur || idx < 0 || idx >= arity(cur->kind)) return nullptr;
    cur = cur->kid[idx];
  }
  return cur;
}

namespace {
Expr replace_rec(const Expr& e, const Path& pos, std::size_t k, Expr repl) {
  if (k == pos.size()) return repl;
  return with_child(e, pos[k], replace_rec(e->kid[pos[k]], pos, k + 1, std::move(repl)));
}
}  // namespace

Expr replace_at(const Expr& e, const Path& pos, Expr repl) {
  if (!subtree_at(e, pos)) return nullptr;
  return replace_rec(e, pos, 0, std::move(repl));
}

std::string path_to_string(const Path& pos) {
  if (pos.empty()) return "root";
  std::ostringstream os;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    if (k) os << '.';
    os << pos[k];
  }
  return os.str();
}

bool path_from_string(const std::string& s, Path& out) {
  out.clear();
  if (s == "root") return true;
  if (s.empty()) return false;
  int cur = -1;
  for (char ch : s) {
    if (ch == '.') {
      if (cur < 0) return false;
      out.push_back(cur);
      cur = -1;
    } else if (ch >= '0' && ch <= '9') {
      cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
      if (cur > 1) return false;
    } else {
      return false;
    }
  }
  if (cur < 0) return false;
  out.push_back(cur);
  return true;
}

int ctx_length(const Ctx& c) {
  int n = 0;
  for (Expr cur = c; cur && cur->kind == Kind::Ext; cur = cur->kid[0]) ++n;
  return n;
}

bool inst_free(const Expr& e) {
  if (!e) return true;
  if (e->kind == Kind::Inst) return false;
  return inst_free(e->kid[0]) && inst_free(e->kid[1]);
}

}  // namespace alphanorm
