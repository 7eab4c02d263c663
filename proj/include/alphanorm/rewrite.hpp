// The oriented substitution machine.
//
// step() rewrites the leftmost-outermost redex using the first applicable
// entry of law_table(). canon() iterates it under a fuel budget.
#pragma once

#include <optional>
#include <vector>

#include "alphanorm/common.hpp"
#include "alphanorm/laws.hpp"
#include "alphanorm/syntax.hpp"

namespace alphanorm {

struct Redex {
  Path position;
  Rule rule;
  Bindings bindings;  // metavariable instantiation of the fired law
};

struct StepResult {
  Expr reduct;
  Redex redex;
};

// Works on any sort; types are rewritten too (this is how annotations
// inside terms get pushed).
std::optional<StepResult> step(const Expr& e);

struct Canon {
  Expr expr;             // last expression reached
  bool exhausted = false;
  int steps = 0;
  std::vector<Redex> trace;  // filled only when requested
};

Canon canon(const Expr& e, int fuel = kDefaultFuel, bool keep_trace = false);

// nullopt when fuel runs out.
std::optional<Tm> canon_tm(const Tm& t, int fuel = kDefaultFuel);

// Convertibility of two terms of type `ty` in `ctx`. Both sides are
// canonicalised; if the results differ structurally they are compared
// after translation to de Bruijn form with eta contraction, which also
// identifies the shapes that differ only by the extension eta law.
Tri conv_tm(const Ctx& ctx, const Ty& ty, const Tm& t, const Tm& u, int fuel = kDefaultFuel);

// Same comparison without the (unused) typing context.
Tri conv_canonical(const Tm& ct, const Tm& cu, int fuel = kDefaultFuel);

}  // namespace alphanorm
