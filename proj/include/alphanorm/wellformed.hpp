// Bidirectional checker for raw trees.
//
// Type comparisons go through decide_ty_eq; an Unknown answer (fuel ran
// out) is a rejection with reason "undecided".
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "alphanorm/common.hpp"
#include "alphanorm/syntax.hpp"

namespace alphanorm {

struct Rejection {
  Expr subtree;
  std::string reason;
};

template <class T>
class Result {
 public:
  Result(T v) : value_(std::move(v)) {}
  Result(Rejection r) : rej_(std::move(r)) {}

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }
  const T& value() const { return *value_; }
  const T& operator*() const { return *value_; }
  const Rejection& rejection() const { return rej_; }

 private:
  std::optional<T> value_;
  Rejection rej_;
};

// Evidence of acceptance; only the Checker builds these.
struct Judgement {
  enum class Kind { CtxOk, SubOk, TyOk, TmOk } kind;
  Ctx ctx;  // the context, or the domain for SubOk
  Ctx cod;  // SubOk only
  Ty ty;    // TyOk, TmOk
  Expr subject;
};

class Checker {
 public:
  explicit Checker(Signature sig, int fuel = kDefaultFuel) : sig_(std::move(sig)), fuel_(fuel) {}

  const Signature& signature() const { return sig_; }
  int fuel() const { return fuel_; }

  Result<Judgement> check_ctx(const Ctx& ctx) const;
  Result<Judgement> check_ty(const Ctx& ctx, const Ty& ty) const;
  Result<Judgement> check_tm(const Ctx& ctx, const Ty& ty, const Tm& tm) const;
  // Accepts when the inferred codomain has the same normal types layer by layer.
  Result<Judgement> check_sub(const Ctx& dom, const Ctx& cod, const Sub& sub) const;

  // Both assume `dom` / `ctx` has been checked.
  Result<Ctx> infer_sub(const Sub& sub, const Ctx& dom) const;
  Result<Ty> infer_tm(const Tm& tm, const Ctx& ctx) const;

  // Layerwise decide_ty_eq on two contexts.
  Tri ctx_eq(const Ctx& a, const Ctx& b) const;

 private:
  Signature sig_;
  int fuel_;
};

}  // namespace alphanorm
