#include "alphanorm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "alphanorm/model.hpp"
#include "alphanorm/rewrite.hpp"
#include "alphanorm/text.hpp"
#include "alphanorm/wellformed.hpp"

namespace alphanorm {

namespace {

using ExprSet = std::unordered_set<Expr, ExprHash, ExprEq>;

bool rule_enabled(const SearchConfig& cfg, Rule r) {
  if (cfg.rule_set.empty()) return is_primitive(r);
  return std::find(cfg.rule_set.begin(), cfg.rule_set.end(), r) != cfg.rule_set.end();
}

std::vector<Expr> type_pool(const SearchConfig& cfg) {
  std::vector<Expr> pool{ty_u()};
  for (Ctx c = cfg.ctx; c && c->kind == Kind::Ext; c = c->kid[0]) {
    bool seen = std::any_of(pool.begin(), pool.end(), [&](const Expr& e) { return same(e, c->kid[1]); });
    if (!seen) pool.push_back(c->kid[1]);
  }
  return pool;
}

// Binds the metavariables of `to` that `b` leaves open from the pools and
// emits every resulting instance.
void bind_fresh(const std::vector<std::string>& open, std::size_t k, Bindings& b,
                const std::vector<Expr>& tys, const std::function<void(const Bindings&)>& emit) {
  if (k == open.size()) {
    emit(b);
    return;
  }
  const std::string& name = open[k];
  switch (meta_sort(name)) {
    case Sort::Ty:
      for (const Expr& t : tys) {
        b[name] = t;
        bind_fresh(open, k + 1, b, tys, emit);
      }
      b.erase(name);
      return;
    case Sort::Tm:
      b[name] = var_q();
      bind_fresh(open, k + 1, b, tys, emit);
      b.erase(name);
      return;
    default:
      return;  // no substitution pool: the expansion is skipped
  }
}

void collect(const Expr& root, const Expr& here, Path& path, const SearchConfig& cfg,
             const std::vector<Expr>& tys, std::vector<Expr>& out) {
  for (const LawVariant& v : law_table()) {
    if (!rule_enabled(cfg, v.rule)) continue;
    for (int dir = 0; dir < 2; ++dir) {
      const PatPtr& from = dir == 0 ? v.lhs : v.rhs;
      const PatPtr& to = dir == 0 ? v.rhs : v.lhs;
      Bindings b;
      if (!match(from, here, b)) continue;
      std::vector<std::string> metas, open;
      pattern_metas(to, metas);
      for (const auto& m : metas)
        if (!b.count(m)) open.push_back(m);
      bind_fresh(open, 0, b, tys, [&](const Bindings& bb) {
        if (v.cond && !v.cond(bb)) return;
        Expr r = instantiate(to, bb);
        if (!r) return;
        int size = root->size - here->size + r->size;
        if (size > cfg.max_expr_size) return;
        out.push_back(replace_at(root, path, r));
      });
    }
  }
  for (int c = 0; c < arity(here->kind); ++c) {
    path.push_back(c);
    collect(root, here->kid[c], path, cfg, tys, out);
    path.pop_back();
  }
}

// One breadth-first layer; returns true if a new expression is in `other`.
bool expand(std::vector<Expr>& frontier, ExprSet& seen, const ExprSet* other,
            const SearchConfig& cfg) {
  std::vector<Expr> next;
  bool hit = false;
  for (const Expr& e : frontier) {
    for (Expr& n : neighbours(e, cfg)) {
      if (!seen.insert(n).second) continue;
      if (other && other->count(n)) hit = true;
      next.push_back(std::move(n));
    }
  }
  std::sort(next.begin(), next.end(), ExprLess{});
  frontier = std::move(next);
  return hit;
}

}  // namespace

const char* oracle_answer_name(OracleAnswer a) {
  switch (a) {
    case OracleAnswer::Equal:
      return "equal";
    case OracleAnswer::Distinct:
      return "distinct";
    default:
      return "not found";
  }
}

std::vector<Expr> neighbours(const Expr& e, const SearchConfig& cfg) {
  std::vector<Expr> out;
  Path path;
  collect(e, e, path, cfg, type_pool(cfg), out);
  std::sort(out.begin(), out.end(), ExprLess{});
  out.erase(std::unique(out.begin(), out.end(), ExprEq{}), out.end());
  return out;
}

std::vector<Expr> search_ball(const Expr& start, const SearchConfig& cfg) {
  ExprSet seen{start};
  std::vector<Expr> order{start};
  std::vector<Expr> frontier{start};
  for (int d = 0; d < cfg.max_depth && !frontier.empty(); ++d) {
    expand(frontier, seen, nullptr, cfg);
    order.insert(order.end(), frontier.begin(), frontier.end());
  }
  return order;
}

Kind type_head(const Ty& a) {
  Ty t = a;
  while (t->kind == Kind::Inst) t = t->kid[0];
  return t->kind;
}

bool model_distinguishes(const Ctx& ctx, const Ty& a, const Ty& b,
                         const std::vector<Signature>& sigs) {
  for (const Signature& sig : sigs) {
    Checker chk(sig);
    if (!chk.check_ctx(ctx) || !chk.check_ty(ctx, a) || !chk.check_ty(ctx, b)) continue;
    FinSetModel m(sig);
    try {
      if (!agree_ty(ctx, a, b, m)) return true;
    } catch (const TooLarge&) {
    }
  }
  return false;
}

OracleAnswer oracle_eq(const Ty& a, const Ty& b, const SearchConfig& cfg) {
  if (type_head(a) != type_head(b)) return OracleAnswer::Distinct;
  if (same(a, b)) return OracleAnswer::Equal;
  ExprSet seen_a{a}, seen_b{b};
  std::vector<Expr> fa{a}, fb{b};
  for (int d = 0; d < cfg.max_depth; ++d) {
    if (expand(fa, seen_a, &seen_b, cfg)) return OracleAnswer::Equal;
    if (expand(fb, seen_b, &seen_a, cfg)) return OracleAnswer::Equal;
  }
  Ctx ctx = cfg.ctx ? cfg.ctx : empty_ctx();
  if (model_distinguishes(ctx, a, b, cfg.model_sigs)) return OracleAnswer::Distinct;
  return OracleAnswer::NotFound;
}

// ------------------------------------------------------------ enumeration

namespace {

class RawEnum {
 public:
  explicit RawEnum(const Signature& sig) : sig_(sig) {}

  const std::vector<Expr>& get(Sort s, int n) {
    auto key = std::make_pair(static_cast<int>(s), n);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Expr> out = build(s, n);
    std::vector<std::pair<std::string, Expr>> keyed;
    for (auto& e : out) keyed.emplace_back(to_text(e), e);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    out.clear();
    for (auto& [t, e] : keyed) out.push_back(e);
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  template <class F>
  void pairs(Sort s1, Sort s2, int n, std::vector<Expr>& out, F mk) {
    for (int k = 1; k <= n - 2; ++k)
      for (const Expr& x : get(s1, k))
        for (const Expr& y : get(s2, n - 1 - k)) out.push_back(mk(x, y));
  }

  std::vector<Expr> build(Sort s, int n) {
    std::vector<Expr> out;
    if (n < 1) return out;
    switch (s) {
      case Sort::Sub:
        if (n == 1) return {id_sub(), eps(), proj()};
        pairs(Sort::Sub, Sort::Sub, n, out, comp);
        pairs(Sort::Sub, Sort::Ty, n, out, plus);
        for (const Expr& t : get(Sort::Tm, n - 1)) out.push_back(sing(t));
        return out;
      case Sort::Ty:
        if (n == 1) return {ty_u()};
        for (const Expr& t : get(Sort::Tm, n - 1)) out.push_back(el(t));
        pairs(Sort::Ty, Sort::Ty, n, out, pi);
        pairs(Sort::Ty, Sort::Sub, n, out, inst);
        return out;
      case Sort::Tm:
        if (n == 1) {
          out.push_back(var_q());
          for (int i = 0; i < sig_.x_card; ++i) {
            out.push_back(in_u(i));
            for (int j = 0; j < sig_.y_card[i]; ++j) out.push_back(in_el(i, j));
          }
          return out;
        }
        pairs(Sort::Tm, Sort::Sub, n, out, tinst);
        pairs(Sort::Ty, Sort::Tm, n, out, lam);
        for (const Expr& t : get(Sort::Tm, n - 1)) out.push_back(app(t));
        return out;
      default:
        return out;
    }
  }

  Signature sig_;
  std::map<std::pair<int, int>, std::vector<Expr>> memo_;
};

}  // namespace

std::vector<Expr> raw_exprs(Sort s, int size, const Signature& sig) {
  RawEnum en(sig);
  return en.get(s, size);
}

std::vector<Ty> enumerate_tys(const Ctx& ctx, int size, const Signature& sig) {
  Checker chk(sig);
  std::vector<Ty> out;
  if (!chk.check_ctx(ctx)) return out;
  RawEnum en(sig);
  for (int n = 1; n <= size; ++n)
    for (const Expr& t : en.get(Sort::Ty, n))
      if (chk.check_ty(ctx, t)) out.push_back(t);
  return out;
}

std::vector<NTy> enumerate_ntys(int size, const Signature& sig) {
  RawEnum en(sig);
  std::vector<std::vector<NTy>> by(size + 1);
  for (int n = 1; n <= size; ++n) {
    if (n == 1) by[n].push_back(n_u());
    for (const Expr& t : en.get(Sort::Tm, n - 1))
      if (!step(t)) by[n].push_back(n_el_canonical(t));
    for (int k = 1; k <= n - 2; ++k)
      for (const NTy& a : by[k])
        for (const NTy& b : by[n - 1 - k]) by[n].push_back(n_pi(a, b));
  }
  std::vector<NTy> out;
  for (auto& v : by) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace alphanorm
