#include "alphanorm/model.hpp"

#include <algorithm>

#include "alphanorm/wellformed.hpp"

namespace alphanorm {

namespace {

using Memo = std::unordered_map<Val, std::vector<Val>>;

// A family that computes each fibre once.
FinSetModel::Ty memoised(std::function<std::vector<Val>(Val)> f) {
  auto memo = std::make_shared<Memo>();
  return [memo, f = std::move(f)](Val env) -> const std::vector<Val>& {
    auto it = memo->find(env);
    if (it != memo->end()) return it->second;
    std::vector<Val> fib = f(env);
    return memo->emplace(env, std::move(fib)).first->second;
  };
}

}  // namespace

std::size_t FinSetModel::KeyHash::operator()(const std::vector<int>& k) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : k) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(v))) * 1099511628211ull;
  return h;
}

FinSetModel::FinSetModel(Signature sig, std::size_t cap) : sig_(std::move(sig)), cap_(cap) {}

Val FinSetModel::intern(Value v) {
  std::vector<int> key{static_cast<int>(v.k), v.a, v.b};
  for (const auto& [x, y] : v.table) {
    key.push_back(x);
    key.push_back(y);
  }
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  Val id = static_cast<Val>(values_.size());
  values_.push_back(std::move(v));
  index_.emplace(std::move(key), id);
  return id;
}

Val FinSetModel::unit() { return intern(Value{Value::K::Unit, 0, 0, {}}); }
Val FinSetModel::pair(Val a, Val b) { return intern(Value{Value::K::Pair, a, b, {}}); }
Val FinSetModel::x(int i) { return intern(Value{Value::K::X, i, 0, {}}); }
Val FinSetModel::y(int i, int j) { return intern(Value{Value::K::Y, i, j, {}}); }

Val FinSetModel::fun(std::vector<std::pair<Val, Val>> table) {
  std::sort(table.begin(), table.end());
  return intern(Value{Value::K::Fun, 0, 0, std::move(table)});
}

Val FinSetModel::lookup(Val f, Val arg) const {
  const auto& t = values_[f].table;
  auto it = std::lower_bound(t.begin(), t.end(), std::make_pair(arg, Val(-1)));
  if (it == t.end() || it->first != arg) throw std::logic_error("function applied outside its domain");
  return it->second;
}

std::string FinSetModel::show(Val v) const {
  const Value& x = values_[v];
  switch (x.k) {
    case Value::K::Unit:
      return "()";
    case Value::K::Pair:
      return "(" + show(x.a) + ", " + show(x.b) + ")";
    case Value::K::X:
      return "x" + std::to_string(x.a);
    case Value::K::Y:
      return "y" + std::to_string(x.a) + "_" + std::to_string(x.b);
    case Value::K::Fun: {
      std::string out = "{";
      for (std::size_t k = 0; k < x.table.size(); ++k) {
        if (k) out += ", ";
        out += show(x.table[k].first) + " -> " + show(x.table[k].second);
      }
      return out + "}";
    }
  }
  return "?";
}

FinSetModel::Ctx FinSetModel::empty() { return {unit()}; }

FinSetModel::Ctx FinSetModel::ext(const Ctx& c, const Ty& a) {
  Ctx out;
  for (Val env : c) {
    for (Val v : a(env)) {
      out.push_back(pair(env, v));
      if (out.size() > cap_) throw TooLarge();
    }
  }
  return out;
}

FinSetModel::Sub FinSetModel::id() {
  return [](Val env) { return env; };
}

FinSetModel::Sub FinSetModel::comp(const Sub& f, const Sub& g) {
  return [f, g](Val env) { return f(g(env)); };
}

FinSetModel::Sub FinSetModel::eps() {
  return [this](Val) { return unit(); };
}

FinSetModel::Sub FinSetModel::p() {
  return [this](Val env) { return static_cast<Val>(values_[env].a); };
}

FinSetModel::Sub FinSetModel::plus(const Sub& g, const Ty&) {
  return [this, g](Val env) {
    Val outer = values_[env].a;
    Val last = values_[env].b;
    return pair(g(outer), last);
  };
}

FinSetModel::Sub FinSetModel::sing(const Tm& t) {
  return [this, t](Val env) { return pair(env, t(env)); };
}

FinSetModel::Ty FinSetModel::U() {
  return memoised([this](Val) {
    std::vector<Val> out;
    for (int i = 0; i < sig_.x_card; ++i) out.push_back(x(i));
    return out;
  });
}

FinSetModel::Ty FinSetModel::El(const Tm& t) {
  return memoised([this, t](Val env) {
    Val code = t(env);
    if (values_[code].k != Value::K::X) throw std::logic_error("El of a non-code");
    int i = values_[code].a;
    std::vector<Val> out;
    for (int j = 0; j < sig_.y_card[i]; ++j) out.push_back(y(i, j));
    return out;
  });
}

FinSetModel::Ty FinSetModel::Pi(const Ty& a, const Ty& b) {
  return memoised([this, a, b](Val env) {
    std::vector<Val> dom = a(env);
    std::vector<const std::vector<Val>*> fib;
    std::size_t total = 1;
    for (Val v : dom) {
      fib.push_back(&b(pair(env, v)));
      total *= fib.back()->size();
      if (total > cap_) throw TooLarge();
    }
    std::vector<Val> out;
    if (total == 0) return out;
    std::vector<std::size_t> odo(dom.size(), 0);
    for (;;) {
      std::vector<std::pair<Val, Val>> table;
      for (std::size_t k = 0; k < dom.size(); ++k) table.emplace_back(dom[k], (*fib[k])[odo[k]]);
      out.push_back(fun(std::move(table)));
      std::size_t k = 0;
      while (k < odo.size() && ++odo[k] == fib[k]->size()) odo[k++] = 0;
      if (k == odo.size()) break;
    }
    return out;
  });
}

FinSetModel::Ty FinSetModel::ty_inst(const Ty& a, const Sub& g) {
  return memoised([a, g](Val env) { return a(g(env)); });
}

FinSetModel::Tm FinSetModel::q() {
  return [this](Val env) { return static_cast<Val>(values_[env].b); };
}

FinSetModel::Tm FinSetModel::tm_inst(const Tm& t, const Sub& g) {
  return [t, g](Val env) { return t(g(env)); };
}

FinSetModel::Tm FinSetModel::lam(const Ty& a, const Tm& b) {
  return [this, a, b](Val env) {
    std::vector<std::pair<Val, Val>> table;
    for (Val v : a(env)) table.emplace_back(v, b(pair(env, v)));
    return fun(std::move(table));
  };
}

FinSetModel::Tm FinSetModel::app(const Tm& t) {
  return [this, t](Val env) {
    Val outer = values_[env].a;
    Val arg = values_[env].b;
    return lookup(t(outer), arg);
  };
}

FinSetModel::Tm FinSetModel::inU(int i) {
  return [this, i](Val) { return x(i); };
}

FinSetModel::Tm FinSetModel::inEl(int i, int j) {
  return [this, i, j](Val) { return y(i, j); };
}

FinSetModel::Ctx eval_ctx(const Ctx& c, FinSetModel& m) { return interp_ctx(m, c); }
FinSetModel::Ty eval_ty(const Ty& a, FinSetModel& m) { return interp_ty(m, a); }
FinSetModel::Sub eval_sub(const Sub& g, FinSetModel& m) { return interp_sub(m, g); }
FinSetModel::Tm eval_tm(const Tm& t, FinSetModel& m) { return interp_tm(m, t); }

bool agree_ty(const Ctx& ctx, const Ty& a, const Ty& b, FinSetModel& m) {
  auto envs = eval_ctx(ctx, m);
  auto fa = eval_ty(a, m);
  auto fb = eval_ty(b, m);
  for (Val env : envs) {
    std::vector<Val> x = fa(env);
    std::vector<Val> y = fb(env);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}

bool agree_tm(const Ctx& ctx, const Tm& t, const Tm& u, FinSetModel& m) {
  auto envs = eval_ctx(ctx, m);
  auto ft = eval_tm(t, m);
  auto fu = eval_tm(u, m);
  for (Val env : envs)
    if (ft(env) != fu(env)) return false;
  return true;
}

bool agree_sub(const Ctx& ctx, const Sub& f, const Sub& g, FinSetModel& m) {
  auto envs = eval_ctx(ctx, m);
  auto ff = eval_sub(f, m);
  auto fg = eval_sub(g, m);
  for (Val env : envs)
    if (ff(env) != fg(env)) return false;
  return true;
}

bool agree(const Ctx& ctx, const Expr& a, const Expr& b, FinSetModel& m) {
  switch (sort_of(a)) {
    case Sort::Ty:
      return agree_ty(ctx, a, b, m);
    case Sort::Tm:
      return agree_tm(ctx, a, b, m);
    case Sort::Sub:
      return agree_sub(ctx, a, b, m);
    default:
      return false;
  }
}

EquationReport check_model_equations(FinSetModel& m, const std::vector<EquationInstance>& samples) {
  EquationReport r;
  for (const auto& s : samples) {
    ++r.instances;
    try {
      if (!agree(s.ctx, s.lhs, s.rhs, m)) {
        ++r.violations;
        r.details.push_back(std::string(rule_name(s.rule)) + ": lhs and rhs differ");
      }
    } catch (const TooLarge&) {
      ++r.too_large;
    }
  }
  return r;
}

ConsistencyReport consistency_probe(FinSetModel& m) {
  ConsistencyReport r;
  auto u = eval_ty(ty_u(), m);
  r.u_cardinality = static_cast<int>(u(m.unit()).size());
  r.matches_x = r.u_cardinality == m.signature().x_card;
  Checker chk(m.signature());
  for (int i = 0; i <= m.signature().x_card; ++i)
    if (chk.check_tm(empty_ctx(), ty_u(), in_u(i))) r.closed_u_term_exists = true;
  return r;
}

}  // namespace alphanorm
