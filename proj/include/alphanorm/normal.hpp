// Normal types: no instantiation node survives. quote embeds them back,
// inst_nty instantiates them directly, norm computes them and cover_eq
// compares them head by head.
#pragma once

#include <memory>

#include "alphanorm/common.hpp"
#include "alphanorm/syntax.hpp"

namespace alphanorm {

struct NNode;
using NTy = std::shared_ptr<const NNode>;

struct NNode {
  enum class Head : unsigned char { U, El, Pi } head;
  Tm tm;            // El only, in canonical form
  NTy dom, cod;     // Pi only
  bool stuck = false;  // El term whose canonicalisation ran out of fuel
  int size = 1;     // node count of the quoted type
};

NTy n_u();
// Canonicalises `t`; marks the node stuck when fuel runs out.
NTy n_el(const Tm& t, int fuel = kDefaultFuel);
// Trusts that `t` is already canonical.
NTy n_el_canonical(const Tm& t);
NTy n_pi(NTy dom, NTy cod);

bool same_nty(const NTy& a, const NTy& b);
bool any_stuck(const NTy& n);

Ty quote(const NTy& n);
NTy inst_nty(const NTy& n, const Sub& g, int fuel = kDefaultFuel);
NTy norm(const Ty& a, int fuel = kDefaultFuel);
Tri cover_eq(const NTy& n, const NTy& m, int fuel = kDefaultFuel);
Tri decide_ty_eq(const Ty& a, const Ty& b, int fuel = kDefaultFuel);

}  // namespace alphanorm
