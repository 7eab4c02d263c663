#include "alphanorm/laws.hpp"

#include <algorithm>

namespace alphanorm {

namespace {

const char* kRuleNames[kRuleCount] = {
    "Ass",      "Idl",     "Idr",     "EpsEta",    "TyComp",    "TyId",     "TmComp",
    "TmId",     "PlusComp", "PlusId", "PCompPlus", "QInstPlus", "SingComp", "PCompSing",
    "QInstSing", "ExtEta", "USub",    "ElSub",     "PiSub",     "LamSub",   "PiBeta",
    "PiEta",    "AppSub",  "QuoteSub", "NInstComp", "NInstId",  "CompPlusTy", "IdPlusTy"};

PatPtr M(const std::string& name) {
  auto p = std::make_shared<Pat>();
  p->meta = true;
  p->name = name;
  p->sort = meta_sort(name);
  return p;
}

PatPtr N(Kind k, PatPtr a = nullptr, PatPtr b = nullptr) {
  auto p = std::make_shared<Pat>();
  p->kind = k;
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}

PatPtr Comp(PatPtr f, PatPtr g) { return N(Kind::Comp, std::move(f), std::move(g)); }
PatPtr Plus(PatPtr g, PatPtr a) { return N(Kind::Plus, std::move(g), std::move(a)); }
PatPtr Sing(PatPtr t) { return N(Kind::Sing, std::move(t)); }
PatPtr Inst(PatPtr a, PatPtr g) { return N(Kind::Inst, std::move(a), std::move(g)); }
PatPtr TInst(PatPtr t, PatPtr g) { return N(Kind::TInst, std::move(t), std::move(g)); }
PatPtr Id() { return N(Kind::Id); }
PatPtr Eps() { return N(Kind::Eps); }
PatPtr P() { return N(Kind::P); }
PatPtr Q() { return N(Kind::Q); }
PatPtr UU() { return N(Kind::U); }

bool closed_not_eps(const Bindings& b) {
  auto c = b.find("c");
  auto g = b.find("g");
  if (c == b.end() || g == b.end()) return false;
  bool closed = c->second->kind == Kind::InU || c->second->kind == Kind::InEl;
  return closed && g->second->kind != Kind::Eps;
}

std::vector<LawVariant> build_table() {
  auto A = [] { return M("A"); };
  auto B = [] { return M("B"); };
  auto g = [] { return M("g"); };
  auto d = [] { return M("d"); };
  auto h = [] { return M("h"); };
  auto a = [] { return M("a"); };
  auto b = [] { return M("b"); };
  auto f = [] { return M("f"); };
  auto t = [] { return M("t"); };

  std::vector<LawVariant> v;
  auto add = [&v](Rule r, PatPtr l, PatPtr rr, bool machine = true,
                  bool (*cond)(const Bindings&) = nullptr) {
    v.push_back(LawVariant{r, std::move(l), std::move(rr), cond, machine});
  };

  // identity and terminal laws
  add(Rule::Idl, Comp(Id(), g()), g());
  add(Rule::Idr, Comp(g(), Id()), g());
  add(Rule::TyId, Inst(A(), Id()), A());
  add(Rule::TmId, TInst(t(), Id()), t());
  add(Rule::PlusId, Plus(Id(), A()), Id());
  add(Rule::EpsEta, Comp(Eps(), g()), Eps());
  add(Rule::EpsEta, TInst(M("c"), g()), TInst(M("c"), Eps()), true, closed_not_eps);
  add(Rule::EpsEta, TInst(TInst(t(), Eps()), g()), TInst(t(), Eps()));

  // pushing laws
  add(Rule::Ass, Comp(g(), Comp(d(), h())), Comp(Comp(g(), d()), h()));
  add(Rule::TyComp, Inst(A(), Comp(g(), d())), Inst(Inst(A(), g()), d()));
  add(Rule::TmComp, TInst(t(), Comp(g(), d())), TInst(TInst(t(), g()), d()));
  add(Rule::PlusComp, Plus(Comp(g(), d()), A()), Comp(Plus(g(), A()), Plus(d(), Inst(A(), g()))));
  add(Rule::PCompPlus, Comp(P(), Plus(g(), A())), Comp(g(), P()));
  add(Rule::PCompPlus, TInst(TInst(t(), P()), Plus(g(), A())), TInst(TInst(t(), g()), P()));
  add(Rule::PCompSing, Comp(P(), Sing(a())), Id());
  add(Rule::PCompSing, TInst(TInst(t(), P()), Sing(a())), t());
  add(Rule::QInstPlus, TInst(Q(), Plus(g(), A())), Q());
  add(Rule::QInstSing, TInst(Q(), Sing(a())), a());
  add(Rule::USub, Inst(UU(), g()), UU());
  add(Rule::ElSub, Inst(N(Kind::El, t()), g()), N(Kind::El, TInst(t(), g())));
  add(Rule::PiSub, Inst(N(Kind::Pi, A(), B()), g()),
      N(Kind::Pi, Inst(A(), g()), Inst(B(), Plus(g(), A()))));
  add(Rule::LamSub, TInst(N(Kind::Lam, A(), b()), g()),
      N(Kind::Lam, Inst(A(), g()), TInst(b(), Plus(g(), A()))));
  add(Rule::AppSub, TInst(N(Kind::App, f()), Plus(g(), A())), N(Kind::App, TInst(f(), g())));
  add(Rule::AppSub, TInst(TInst(N(Kind::App, f()), Sing(a())), g()),
      TInst(N(Kind::App, TInst(f(), g())), Sing(TInst(a(), g()))));

  // beta and eta
  add(Rule::PiBeta, N(Kind::App, N(Kind::Lam, A(), b())), b());
  add(Rule::PiEta, N(Kind::Lam, A(), N(Kind::App, f())), f());

  // shapes the machine never uses: they need a binding the left side
  // does not determine, expand, or duplicate work already covered above
  add(Rule::PCompPlus, Inst(Inst(B(), P()), Plus(g(), A())), Inst(Inst(B(), g()), P()), false);
  add(Rule::PCompSing, Inst(Inst(B(), P()), Sing(a())), B(), false);
  add(Rule::SingComp, Comp(Sing(a()), g()), Comp(Plus(g(), A()), Sing(TInst(a(), g()))), false);
  add(Rule::ExtEta, Id(), Comp(Plus(P(), A()), Sing(Q())), false);
  add(Rule::CompPlusTy, Inst(B(), Plus(Comp(g(), d()), A())),
      Inst(Inst(B(), Plus(g(), A())), Plus(d(), Inst(A(), g()))), false);
  add(Rule::IdPlusTy, Inst(B(), Plus(Id(), A())), B(), false);
  return v;
}

}  // namespace

const char* rule_name(Rule r) { return kRuleNames[static_cast<int>(r)]; }

bool rule_from_name(const std::string& s, Rule& out) {
  for (int k = 0; k < kRuleCount; ++k) {
    if (s == kRuleNames[k]) {
      out = static_cast<Rule>(k);
      return true;
    }
  }
  return false;
}

bool is_primitive(Rule r) { return static_cast<int>(r) < kPrimitiveRuleCount; }

Sort meta_sort(const std::string& name) {
  if (name == "A" || name == "B" || name == "C") return Sort::Ty;
  if (name == "g" || name == "d" || name == "h") return Sort::Sub;
  return Sort::Tm;
}

bool match(const PatPtr& p, const Expr& e, Bindings& b) {
  if (!e) return false;
  if (p->meta) {
    if (sort_of(e) != p->sort) return false;
    auto it = b.find(p->name);
    if (it != b.end()) return same(it->second, e);
    b.emplace(p->name, e);
    return true;
  }
  if (e->kind != p->kind) return false;
  if (p->a && !match(p->a, e->kid[0], b)) return false;
  if (p->b && !match(p->b, e->kid[1], b)) return false;
  return true;
}

Expr instantiate(const PatPtr& p, const Bindings& b) {
  if (p->meta) {
    auto it = b.find(p->name);
    return it == b.end() ? nullptr : it->second;
  }
  Expr x, y;
  if (p->a && !(x = instantiate(p->a, b))) return nullptr;
  if (p->b && !(y = instantiate(p->b, b))) return nullptr;
  switch (p->kind) {
    case Kind::Id:
      return id_sub();
    case Kind::Eps:
      return eps();
    case Kind::P:
      return proj();
    case Kind::Q:
      return var_q();
    case Kind::U:
      return ty_u();
    case Kind::Empty:
      return empty_ctx();
    case Kind::Ext:
      return ext(x, y);
    case Kind::Comp:
      return comp(x, y);
    case Kind::Plus:
      return plus(x, y);
    case Kind::Sing:
      return sing(x);
    case Kind::El:
      return el(x);
    case Kind::Pi:
      return pi(x, y);
    case Kind::Inst:
      return inst(x, y);
    case Kind::TInst:
      return tinst(x, y);
    case Kind::Lam:
      return lam(x, y);
    case Kind::App:
      return app(x);
    default:
      return nullptr;  // index-carrying leaves never occur in patterns
  }
}

void pattern_metas(const PatPtr& p, std::vector<std::string>& out) {
  if (!p) return;
  if (p->meta) {
    if (std::find(out.begin(), out.end(), p->name) == out.end()) out.push_back(p->name);
    return;
  }
  pattern_metas(p->a, out);
  pattern_metas(p->b, out);
}

const std::vector<LawVariant>& law_table() {
  static const std::vector<LawVariant> table = build_table();
  return table;
}

std::vector<const LawVariant*> variants_of(Rule r) {
  std::vector<const LawVariant*> out;
  for (const auto& v : law_table())
    if (v.rule == r) out.push_back(&v);
  return out;
}

}  // namespace alphanorm
