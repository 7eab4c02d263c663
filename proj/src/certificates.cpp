#include "alphanorm/certificates.hpp"

#include <algorithm>
#include <cctype>

#include "alphanorm/normal.hpp"
#include "alphanorm/rewrite.hpp"
#include "alphanorm/text.hpp"

namespace alphanorm {

namespace {

Expr term_key(const Expr& e, int fuel) {
  if (sort_of(e) == Sort::Tm) return canon(e, fuel).expr;
  int n = arity(e->kind);
  if (n == 0) return e;
  Expr out = e;
  for (int c = 0; c < n; ++c) {
    Expr k = term_key(e->kid[c], fuel);
    if (k.get() != e->kid[c].get()) out = with_child(out, c, k);
  }
  return out;
}

bool sorts_ok(const Bindings& b) {
  for (const auto& [name, e] : b)
    if (!e || sort_of(e) != meta_sort(name)) return false;
  return true;
}

const Expr* get(const Bindings& b, const char* name) {
  auto it = b.find(name);
  return it == b.end() ? nullptr : &it->second;
}

// Sides of the laws that are computed rather than written as patterns.
bool computed_sides(Rule r, const Bindings& b, int fuel, Expr& lhs, Expr& rhs) {
  const Expr* a = get(b, "A");
  const Expr* g = get(b, "g");
  const Expr* d = get(b, "d");
  switch (r) {
    case Rule::QuoteSub:
      if (!a || !g || b.size() != 2) return false;
      lhs = inst(*a, *g);
      rhs = quote(inst_nty(norm(*a, fuel), *g, fuel));
      return true;
    case Rule::NInstComp:
      if (!a || !g || !d || b.size() != 3) return false;
      lhs = quote(inst_nty(norm(*a, fuel), comp(*g, *d), fuel));
      rhs = quote(inst_nty(inst_nty(norm(*a, fuel), *g, fuel), *d, fuel));
      return true;
    case Rule::NInstId:
      if (!a || b.size() != 1) return false;
      lhs = quote(inst_nty(norm(*a, fuel), id_sub(), fuel));
      rhs = quote(norm(*a, fuel));
      return true;
    default:
      return false;
  }
}

bool is_computed(Rule r) {
  return r == Rule::QuoteSub || r == Rule::NInstComp || r == Rule::NInstId;
}

EqStep mk(Rule r, Path pos, Dir dir, Bindings b) {
  return EqStep{r, std::move(pos), dir, std::move(b)};
}

Path cat(const Path& a, std::initializer_list<int> tail) {
  Path p = a;
  p.insert(p.end(), tail);
  return p;
}

void compl_steps(const Ty& a, const Path& prefix, int fuel, std::vector<EqStep>& out) {
  switch (a->kind) {
    case Kind::Pi:
      compl_steps(a->kid[0], cat(prefix, {0}), fuel, out);
      compl_steps(a->kid[1], cat(prefix, {1}), fuel, out);
      return;
    case Kind::Inst: {
      NTy n = norm(a->kid[0], fuel);
      append_quote_inst(quote(n), a->kid[1], prefix, fuel, out);
      compl_steps(a->kid[0], cat(prefix, {0}), fuel, out);
      return;
    }
    default:  // U and El: the quoted normal form agrees up to term canonicalisation
      return;
  }
}

}  // namespace

bool same_mod_terms(const Expr& a, const Expr& b, int fuel) {
  if (same(a, b)) return true;
  return same(term_key(a, fuel), term_key(b, fuel));
}

Expr apply_step(const Expr& cur, const EqStep& s, int fuel) {
  Expr here = subtree_at(cur, s.position);
  if (!here || !sorts_ok(s.bindings)) return nullptr;
  if (is_computed(s.rule)) {
    Expr lhs, rhs;
    if (!computed_sides(s.rule, s.bindings, fuel, lhs, rhs)) return nullptr;
    const Expr& from = s.dir == Dir::Fwd ? lhs : rhs;
    const Expr& to = s.dir == Dir::Fwd ? rhs : lhs;
    if (!same_mod_terms(from, here, fuel)) return nullptr;
    return replace_at(cur, s.position, to);
  }
  for (const LawVariant* v : variants_of(s.rule)) {
    std::vector<std::string> metas;
    pattern_metas(v->lhs, metas);
    pattern_metas(v->rhs, metas);
    bool names_ok = std::all_of(s.bindings.begin(), s.bindings.end(), [&](const auto& kv) {
      return std::find(metas.begin(), metas.end(), kv.first) != metas.end();
    });
    if (!names_ok) continue;
    if (v->cond && !v->cond(s.bindings)) continue;
    const PatPtr& from = s.dir == Dir::Fwd ? v->lhs : v->rhs;
    const PatPtr& to = s.dir == Dir::Fwd ? v->rhs : v->lhs;
    Expr f = instantiate(from, s.bindings);
    Expr t = instantiate(to, s.bindings);
    if (!f || !t) continue;
    if (!same_mod_terms(f, here, fuel)) continue;
    return replace_at(cur, s.position, t);
  }
  return nullptr;
}

CertCheck check_cert(const Cert& c, int fuel) {
  CertCheck r;
  if (!c.source || !c.target) {
    r.failed_step = 0;
    r.reason = "missing endpoint";
    return r;
  }
  Expr cur = c.source;
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    Expr nx = apply_step(cur, c.steps[k], fuel);
    if (!nx) {
      r.failed_step = static_cast<int>(k);
      r.reason = std::string(rule_name(c.steps[k].rule)) + " does not apply at " +
                 path_to_string(c.steps[k].position);
      return r;
    }
    cur = nx;
  }
  if (!same_mod_terms(cur, c.target, fuel)) {
    r.failed_step = static_cast<int>(c.steps.size());
    r.reason = "replay ends at " + to_text(cur);
    return r;
  }
  r.ok = true;
  return r;
}

void append_quote_inst(const Ty& normal, const Sub& g, const Path& prefix, int fuel,
                       std::vector<EqStep>& out) {
  switch (normal->kind) {
    case Kind::U:
      out.push_back(mk(Rule::USub, prefix, Dir::Bwd, {{"g", g}}));
      return;
    case Kind::El:
      out.push_back(mk(Rule::ElSub, prefix, Dir::Bwd, {{"t", normal->kid[0]}, {"g", g}}));
      return;
    case Kind::Pi: {
      const Ty& a = normal->kid[0];
      const Ty& b = normal->kid[1];
      append_quote_inst(b, plus(g, a), cat(prefix, {1}), fuel, out);
      append_quote_inst(a, g, cat(prefix, {0}), fuel, out);
      out.push_back(mk(Rule::PiSub, prefix, Dir::Bwd, {{"A", a}, {"B", b}, {"g", g}}));
      return;
    }
    default:
      return;
  }
}

Cert compl_cert(const Ty& a, int fuel) {
  Cert c;
  c.source = quote(norm(a, fuel));
  c.target = a;
  compl_steps(a, {}, fuel, c.steps);
  return c;
}

EqStep at(const Path& prefix, EqStep s) {
  Path p = prefix;
  p.insert(p.end(), s.position.begin(), s.position.end());
  s.position = std::move(p);
  return s;
}

Cert chain(const Cert& a, const Cert& b) {
  Cert c{a.source, b.target, a.steps};
  c.steps.insert(c.steps.end(), b.steps.begin(), b.steps.end());
  return c;
}

Cert eta_cert(const Ty& b, const Ty& last) {
  Cert c;
  c.source = b;
  Sub lifted = plus(proj(), last);
  c.target = inst(inst(b, lifted), sing(var_q()));
  c.steps.push_back(mk(Rule::TyId, {}, Dir::Bwd, {{"A", b}}));
  c.steps.push_back(mk(Rule::ExtEta, {1}, Dir::Fwd, {{"A", last}}));
  c.steps.push_back(mk(Rule::TyComp, {}, Dir::Fwd, {{"A", b}, {"g", lifted}, {"d", sing(var_q())}}));
  return c;
}

// ----------------------------------------------------------------- diagrams

namespace {

const char* kDiagramNames[kDiagramCount] = {"UId",    "UComp", "ElId", "ElComp", "PiComp",
                                            "PiId",   "Ass",   "Idl",  "Idr"};

Expr need(const Bindings& b, const char* name) {
  const Expr* e = get(b, name);
  return e ? *e : nullptr;
}

// nullptr-tolerant builders so that missing bindings give failing legs.
Ty inst_or_null(const Ty& a, const Sub& g) { return a && g ? inst(a, g) : nullptr; }
Sub comp_or_null(const Sub& f, const Sub& g) { return f && g ? comp(f, g) : nullptr; }
Sub plus_or_null(const Sub& g, const Ty& a) { return g && a ? plus(g, a) : nullptr; }

Bindings only(std::initializer_list<std::pair<const std::string, Expr>> kv) {
  Bindings b;
  for (const auto& [k, v] : kv)
    if (v) b.emplace(k, v);
  return b;
}

}  // namespace

const char* diagram_name(Diagram d) { return kDiagramNames[static_cast<int>(d)]; }

bool diagram_from_name(const std::string& s, Diagram& out) {
  for (int k = 0; k < kDiagramCount; ++k) {
    if (s == kDiagramNames[k]) {
      out = static_cast<Diagram>(k);
      return true;
    }
  }
  return false;
}

std::vector<std::string> diagram_metas(Diagram d) {
  switch (d) {
    case Diagram::UId:
      return {};
    case Diagram::UComp:
      return {"g", "d"};
    case Diagram::ElId:
      return {"t"};
    case Diagram::ElComp:
      return {"t", "g", "d"};
    case Diagram::PiComp:
      return {"A", "B", "g", "d"};
    case Diagram::PiId:
      return {"A", "B"};
    case Diagram::Ass:
      return {"A", "g", "d", "h"};
    case Diagram::Idl:
    case Diagram::Idr:
      return {"A", "g"};
  }
  return {};
}

Legs diagram_legs(Diagram dg, const Bindings& b) {
  Expr A = need(b, "A"), B = need(b, "B"), t = need(b, "t");
  Expr g = need(b, "g"), d = need(b, "d"), h = need(b, "h");
  Legs L;
  auto step = [](Cert& c, Rule r, Path pos, Bindings bb) {
    c.steps.push_back(mk(r, std::move(pos), Dir::Fwd, std::move(bb)));
  };
  switch (dg) {
    case Diagram::UId: {
      Ty src = inst(ty_u(), id_sub());
      L.left = {src, ty_u(), {}};
      step(L.left, Rule::TyId, {}, {{"A", ty_u()}});
      L.right = {src, ty_u(), {}};
      step(L.right, Rule::USub, {}, {{"g", id_sub()}});
      break;
    }
    case Diagram::UComp: {
      Ty src = inst(ty_u(), comp_or_null(g, d));
      if (!g || !d) src = ty_u();
      L.left = {src, ty_u(), {}};
      step(L.left, Rule::USub, {}, only({{"g", comp_or_null(g, d)}}));
      L.right = {src, ty_u(), {}};
      step(L.right, Rule::TyComp, {}, only({{"A", ty_u()}, {"g", g}, {"d", d}}));
      step(L.right, Rule::USub, {0}, only({{"g", g}}));
      step(L.right, Rule::USub, {}, only({{"g", d}}));
      break;
    }
    case Diagram::ElId: {
      if (!t) t = var_q();
      Ty src = inst(el(t), id_sub());
      L.left = {src, el(t), {}};
      step(L.left, Rule::TyId, {}, {{"A", el(t)}});
      L.right = {src, el(t), {}};
      step(L.right, Rule::ElSub, {}, {{"t", t}, {"g", id_sub()}});
      step(L.right, Rule::TmId, {0}, {{"t", t}});
      break;
    }
    case Diagram::ElComp: {
      if (!t) t = var_q();
      Sub gd = comp_or_null(g, d);
      Ty src = gd ? inst(el(t), gd) : el(t);
      Ty tgt = g && d ? el(tinst(tinst(t, g), d)) : el(t);
      L.left = {src, tgt, {}};
      step(L.left, Rule::ElSub, {}, only({{"t", t}, {"g", gd}}));
      step(L.left, Rule::TmComp, {0}, only({{"t", t}, {"g", g}, {"d", d}}));
      L.right = {src, tgt, {}};
      step(L.right, Rule::TyComp, {}, only({{"A", el(t)}, {"g", g}, {"d", d}}));
      step(L.right, Rule::ElSub, {0}, only({{"t", t}, {"g", g}}));
      step(L.right, Rule::ElSub, {}, only({{"t", g ? tinst(t, g) : nullptr}, {"g", d}}));
      break;
    }
    case Diagram::PiComp: {
      if (!A) A = ty_u();
      if (!B) B = ty_u();
      Sub gd = comp_or_null(g, d);
      Ty src = gd ? inst(pi(A, B), gd) : pi(A, B);
      Ty tgt = g && d ? pi(inst(inst(A, g), d), inst(inst(B, plus(g, A)), plus(d, inst(A, g))))
                      : pi(A, B);
      L.left = {src, tgt, {}};
      step(L.left, Rule::PiSub, {}, only({{"A", A}, {"B", B}, {"g", gd}}));
      step(L.left, Rule::TyComp, {0}, only({{"A", A}, {"g", g}, {"d", d}}));
      step(L.left, Rule::CompPlusTy, {1}, only({{"A", A}, {"B", B}, {"g", g}, {"d", d}}));
      L.right = {src, tgt, {}};
      step(L.right, Rule::TyComp, {}, only({{"A", pi(A, B)}, {"g", g}, {"d", d}}));
      step(L.right, Rule::PiSub, {0}, only({{"A", A}, {"B", B}, {"g", g}}));
      step(L.right, Rule::PiSub, {},
           only({{"A", inst_or_null(A, g)}, {"B", inst_or_null(B, plus_or_null(g, A))}, {"g", d}}));
      break;
    }
    case Diagram::PiId: {
      if (!A) A = ty_u();
      if (!B) B = ty_u();
      Ty src = inst(pi(A, B), id_sub());
      L.left = {src, pi(A, B), {}};
      step(L.left, Rule::TyId, {}, {{"A", pi(A, B)}});
      L.right = {src, pi(A, B), {}};
      step(L.right, Rule::PiSub, {}, {{"A", A}, {"B", B}, {"g", id_sub()}});
      step(L.right, Rule::TyId, {0}, {{"A", A}});
      step(L.right, Rule::IdPlusTy, {1}, {{"A", A}, {"B", B}});
      break;
    }
    case Diagram::Ass: {
      if (!A) A = ty_u();
      Sub dh = comp_or_null(d, h);
      Ty src = g && dh ? inst(A, comp(g, dh)) : A;
      Ty tgt = g && d && h ? inst(inst(inst(A, g), d), h) : A;
      L.left = {src, tgt, {}};
      step(L.left, Rule::Ass, {1}, only({{"g", g}, {"d", d}, {"h", h}}));
      step(L.left, Rule::TyComp, {}, only({{"A", A}, {"g", comp_or_null(g, d)}, {"d", h}}));
      step(L.left, Rule::TyComp, {0}, only({{"A", A}, {"g", g}, {"d", d}}));
      L.right = {src, tgt, {}};
      step(L.right, Rule::TyComp, {}, only({{"A", A}, {"g", g}, {"d", dh}}));
      step(L.right, Rule::TyComp, {}, only({{"A", inst_or_null(A, g)}, {"g", d}, {"d", h}}));
      break;
    }
    case Diagram::Idl: {
      if (!A) A = ty_u();
      Ty src = g ? inst(A, comp(id_sub(), g)) : A;
      Ty tgt = g ? inst(A, g) : A;
      L.left = {src, tgt, {}};
      step(L.left, Rule::Idl, {1}, only({{"g", g}}));
      L.right = {src, tgt, {}};
      step(L.right, Rule::TyComp, {}, only({{"A", A}, {"g", id_sub()}, {"d", g}}));
      step(L.right, Rule::TyId, {0}, {{"A", A}});
      break;
    }
    case Diagram::Idr: {
      if (!A) A = ty_u();
      Ty src = g ? inst(A, comp(g, id_sub())) : A;
      Ty tgt = g ? inst(A, g) : A;
      L.left = {src, tgt, {}};
      step(L.left, Rule::Idr, {1}, only({{"g", g}}));
      L.right = {src, tgt, {}};
      step(L.right, Rule::TyComp, {}, only({{"A", A}, {"g", g}, {"d", id_sub()}}));
      step(L.right, Rule::TyId, {}, only({{"A", inst_or_null(A, g)}}));
      break;
    }
  }
  return L;
}

Legs idl_implies_idr(const Ty& a, const Sub& g) {
  Sub gi = comp(g, id_sub());
  Ty src = inst(a, gi);
  Ty tgt = inst(a, g);
  Legs L;
  L.left = {src, tgt, {}};
  auto& s = L.left.steps;
  // A[g ; id] -> A[g ; id][id] -> A[(g ; id) ; id] -> A[g ; (id ; id)]
  s.push_back(mk(Rule::TyId, {}, Dir::Bwd, {{"A", src}}));
  s.push_back(mk(Rule::TyComp, {}, Dir::Bwd, {{"A", a}, {"g", gi}, {"d", id_sub()}}));
  s.push_back(mk(Rule::Ass, {1}, Dir::Bwd, {{"g", g}, {"d", id_sub()}, {"h", id_sub()}}));
  // idl id, then the [o] and [id] legs of the triangle
  s.push_back(mk(Rule::Idl, {1, 1}, Dir::Fwd, {{"g", id_sub()}}));
  s.push_back(mk(Rule::TyComp, {}, Dir::Fwd, {{"A", a}, {"g", g}, {"d", id_sub()}}));
  s.push_back(mk(Rule::TyId, {}, Dir::Fwd, {{"A", tgt}}));
  L.right = {src, tgt, {}};
  L.right.steps.push_back(mk(Rule::TyComp, {}, Dir::Fwd, {{"A", a}, {"g", g}, {"d", id_sub()}}));
  L.right.steps.push_back(mk(Rule::TyId, {}, Dir::Fwd, {{"A", tgt}}));
  return L;
}

// ----------------------------------------------------------------- text

std::string cert_to_text(const Cert& c) {
  std::string out = "source: " + to_text(c.source) + "\n";
  out += "target: " + to_text(c.target) + "\n";
  for (const EqStep& s : c.steps) {
    out += "step ";
    out += rule_name(s.rule);
    out += " at " + path_to_string(s.position);
    out += s.dir == Dir::Fwd ? " fwd" : " bwd";
    for (const auto& [name, e] : s.bindings) out += " " + name + "=" + to_text(e);
    out += "\n";
  }
  return out;
}

namespace {

struct LineCursor {
  std::string_view text;
  std::size_t pos;
  int line;

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t start = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    int col = static_cast<int>(pos - (start == std::string_view::npos ? 0 : start + 1)) + 1;
    throw ParseError(line, col, msg);
  }
  void blanks() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool at_eol() const { return pos >= text.size() || text[pos] == '\n'; }
  std::string word() {
    blanks();
    std::size_t b = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '=')
      ++pos;
    return std::string(text.substr(b, pos - b));
  }
  void expect_word(const std::string& w) {
    std::size_t b = pos;
    if (word() != w) {
      pos = b;
      blanks();
      fail("expected '" + w + "'");
    }
  }
  Expr expr() {
    blanks();
    std::size_t end = text.find('\n', pos);
    std::string_view line_text = text.substr(0, end == std::string_view::npos ? text.size() : end);
    return parse_expr_prefix(line_text, pos);
  }
  void end_line() {
    blanks();
    if (!at_eol()) fail("unexpected text at end of line");
    if (pos < text.size()) ++pos;
    ++line;
  }
};

}  // namespace

Cert cert_from_text(std::string_view text) {
  LineCursor cur{text, 0, 1};
  Cert c;
  cur.expect_word("source:");
  c.source = cur.expr();
  if (sort_of(c.source) != Sort::Ty) cur.fail("source must be a type");
  cur.end_line();
  cur.expect_word("target:");
  c.target = cur.expr();
  if (sort_of(c.target) != Sort::Ty) cur.fail("target must be a type");
  cur.end_line();
  for (;;) {
    cur.blanks();
    if (cur.pos >= text.size()) break;
    if (cur.at_eol()) {
      cur.end_line();
      continue;
    }
    cur.expect_word("step");
    EqStep s;
    std::string rn = cur.word();
    if (!rule_from_name(rn, s.rule)) cur.fail("unknown rule '" + rn + "'");
    cur.expect_word("at");
    std::string ps = cur.word();
    if (!path_from_string(ps, s.position)) cur.fail("bad position '" + ps + "'");
    std::string dir = cur.word();
    if (dir == "fwd") {
      s.dir = Dir::Fwd;
    } else if (dir == "bwd") {
      s.dir = Dir::Bwd;
    } else {
      cur.fail("expected fwd or bwd");
    }
    for (;;) {
      cur.blanks();
      if (cur.at_eol()) break;
      std::string name = cur.word();
      if (name.empty() || cur.pos >= text.size() || text[cur.pos] != '=')
        cur.fail("expected name=expression");
      ++cur.pos;
      Expr e = cur.expr();
      if (sort_of(e) != meta_sort(name)) cur.fail("binding '" + name + "' has the wrong sort");
      if (!s.bindings.emplace(name, e).second) cur.fail("duplicate binding '" + name + "'");
    }
    c.steps.push_back(std::move(s));
    cur.end_line();
  }
  return c;
}

}  // namespace alphanorm
