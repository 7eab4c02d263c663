// Models of the calculus and the finite-set instance.
//
// GcwfModel describes what an interpretation target has to provide; the
// interp_* templates fold raw syntax into any such model. FinSetModel
// interprets contexts as enumerations of environments, types as
// environment-indexed enumerations, and substitutions and terms as
// functions on environments. Values are interned, so equal values have
// equal ids.
#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "alphanorm/laws.hpp"
#include "alphanorm/syntax.hpp"

namespace alphanorm {

template <class M>
concept GcwfModel = requires(M& m, const typename M::Ctx& c, const typename M::Sub& s,
                             const typename M::Ty& a, const typename M::Tm& t, int i) {
  { m.empty() } -> std::same_as<typename M::Ctx>;
  { m.ext(c, a) } -> std::same_as<typename M::Ctx>;
  { m.id() } -> std::same_as<typename M::Sub>;
  { m.comp(s, s) } -> std::same_as<typename M::Sub>;
  { m.eps() } -> std::same_as<typename M::Sub>;
  { m.p() } -> std::same_as<typename M::Sub>;
  { m.plus(s, a) } -> std::same_as<typename M::Sub>;
  { m.sing(t) } -> std::same_as<typename M::Sub>;
  { m.U() } -> std::same_as<typename M::Ty>;
  { m.El(t) } -> std::same_as<typename M::Ty>;
  { m.Pi(a, a) } -> std::same_as<typename M::Ty>;
  { m.ty_inst(a, s) } -> std::same_as<typename M::Ty>;
  { m.q() } -> std::same_as<typename M::Tm>;
  { m.tm_inst(t, s) } -> std::same_as<typename M::Tm>;
  { m.lam(a, t) } -> std::same_as<typename M::Tm>;
  { m.app(t) } -> std::same_as<typename M::Tm>;
  { m.inU(i) } -> std::same_as<typename M::Tm>;
  { m.inEl(i, i) } -> std::same_as<typename M::Tm>;
};

template <GcwfModel M>
typename M::Ty interp_ty(M& m, const Ty& e);
template <GcwfModel M>
typename M::Tm interp_tm(M& m, const Tm& e);

template <GcwfModel M>
typename M::Sub interp_sub(M& m, const Sub& e) {
  switch (e->kind) {
    case Kind::Id:
      return m.id();
    case Kind::Comp:
      return m.comp(interp_sub(m, e->kid[0]), interp_sub(m, e->kid[1]));
    case Kind::Eps:
      return m.eps();
    case Kind::P:
      return m.p();
    case Kind::Plus:
      return m.plus(interp_sub(m, e->kid[0]), interp_ty(m, e->kid[1]));
    default:
      return m.sing(interp_tm(m, e->kid[0]));
  }
}

template <GcwfModel M>
typename M::Ty interp_ty(M& m, const Ty& e) {
  switch (e->kind) {
    case Kind::U:
      return m.U();
    case Kind::El:
      return m.El(interp_tm(m, e->kid[0]));
    case Kind::Pi:
      return m.Pi(interp_ty(m, e->kid[0]), interp_ty(m, e->kid[1]));
    default:
      return m.ty_inst(interp_ty(m, e->kid[0]), interp_sub(m, e->kid[1]));
  }
}

template <GcwfModel M>
typename M::Tm interp_tm(M& m, const Tm& e) {
  switch (e->kind) {
    case Kind::Q:
      return m.q();
    case Kind::TInst:
      return m.tm_inst(interp_tm(m, e->kid[0]), interp_sub(m, e->kid[1]));
    case Kind::Lam:
      return m.lam(interp_ty(m, e->kid[0]), interp_tm(m, e->kid[1]));
    case Kind::App:
      return m.app(interp_tm(m, e->kid[0]));
    case Kind::InU:
      return m.inU(e->i);
    default:
      return m.inEl(e->i, e->j);
  }
}

template <GcwfModel M>
typename M::Ctx interp_ctx(M& m, const Ctx& e) {
  if (e->kind == Kind::Empty) return m.empty();
  return m.ext(interp_ctx(m, e->kid[0]), interp_ty(m, e->kid[1]));
}

// ------------------------------------------------------------ finite sets

// Raised when an enumeration would exceed the model's cap.
class TooLarge : public std::runtime_error {
 public:
  TooLarge() : std::runtime_error("too large") {}
};

using Val = std::int32_t;

struct Value {
  enum class K : unsigned char { Unit, Pair, X, Y, Fun } k;
  int a = 0;  // Pair: first; X, Y: index
  int b = 0;  // Pair: second; Y: second index
  std::vector<std::pair<Val, Val>> table;  // Fun, sorted by argument
};

// Not safe for concurrent use: evaluation interns new values.
class FinSetModel {
 public:
  using Ctx = std::vector<Val>;
  using Sub = std::function<Val(Val)>;
  using Ty = std::function<const std::vector<Val>&(Val)>;
  using Tm = std::function<Val(Val)>;

  explicit FinSetModel(Signature sig, std::size_t cap = 10000);

  const Signature& signature() const { return sig_; }
  std::size_t cap() const { return cap_; }

  Ctx empty();
  Ctx ext(const Ctx& c, const Ty& a);
  Sub id();
  Sub comp(const Sub& f, const Sub& g);
  Sub eps();
  Sub p();
  Sub plus(const Sub& g, const Ty& a);
  Sub sing(const Tm& t);
  Ty U();
  Ty El(const Tm& t);
  Ty Pi(const Ty& a, const Ty& b);
  Ty ty_inst(const Ty& a, const Sub& g);
  Tm q();
  Tm tm_inst(const Tm& t, const Sub& g);
  Tm lam(const Ty& a, const Tm& b);
  Tm app(const Tm& t);
  Tm inU(int i);
  Tm inEl(int i, int j);

  Val unit();
  Val pair(Val a, Val b);
  Val x(int i);
  Val y(int i, int j);
  Val fun(std::vector<std::pair<Val, Val>> table);
  const Value& value(Val v) const { return values_[v]; }
  Val lookup(Val f, Val arg) const;
  std::string show(Val v) const;

 private:
  Val intern(Value v);

  Signature sig_;
  std::size_t cap_;
  std::vector<Value> values_;
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& k) const;
  };
  std::unordered_map<std::vector<int>, Val, KeyHash> index_;
};

static_assert(GcwfModel<FinSetModel>);

// Thin wrappers; all may throw TooLarge.
FinSetModel::Ctx eval_ctx(const Ctx& c, FinSetModel& m);
FinSetModel::Ty eval_ty(const Ty& a, FinSetModel& m);
FinSetModel::Sub eval_sub(const Sub& g, FinSetModel& m);
FinSetModel::Tm eval_tm(const Tm& t, FinSetModel& m);

// Pointwise agreement over every environment of `ctx`. Types are compared
// as sets. Throws TooLarge.
bool agree_ty(const Ctx& ctx, const Ty& a, const Ty& b, FinSetModel& m);
bool agree_tm(const Ctx& ctx, const Tm& t, const Tm& u, FinSetModel& m);
bool agree_sub(const Ctx& ctx, const Sub& f, const Sub& g, FinSetModel& m);
bool agree(const Ctx& ctx, const Expr& a, const Expr& b, FinSetModel& m);

// One instance of a named equation: both sides live over `ctx`.
struct EquationInstance {
  Rule rule;
  Ctx ctx;
  Expr lhs;
  Expr rhs;
};

struct EquationReport {
  int instances = 0;
  int too_large = 0;  // instances skipped because of the cap
  int violations = 0;
  std::vector<std::string> details;  // one line per violation
  bool ok() const { return violations == 0; }
};

EquationReport check_model_equations(FinSetModel& m, const std::vector<EquationInstance>& samples);

struct ConsistencyReport {
  int u_cardinality = 0;   // |[[U]]| at the empty environment
  bool matches_x = false;  // equals x_card
  bool closed_u_term_exists = false;  // some closed inU term checks in U
  bool ok() const { return matches_x && closed_u_term_exists == (u_cardinality > 0); }
};

ConsistencyReport consistency_probe(FinSetModel& m);

}  // namespace alphanorm
