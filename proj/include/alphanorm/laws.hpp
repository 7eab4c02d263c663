// Named equations as pattern pairs.
//
// Every equation of the calculus appears here once per syntactic shape it
// is used in. The oriented machine, certificate replay and the search
// oracle all read the same table.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alphanorm/syntax.hpp"

namespace alphanorm {

enum class Rule : unsigned char {
  Ass,
  Idl,
  Idr,
  EpsEta,
  TyComp,
  TyId,
  TmComp,
  TmId,
  PlusComp,
  PlusId,
  PCompPlus,
  QInstPlus,
  SingComp,
  PCompSing,
  QInstSing,
  ExtEta,
  USub,
  ElSub,
  PiSub,
  LamSub,
  PiBeta,
  PiEta,
  // derived laws
  AppSub,      // app (f) under a lift, and under a single substitution
  QuoteSub,    // quote commutes with instantiation of normal types
  NInstComp,   // normal-type instantiation respects composition
  NInstId,     // normal-type instantiation respects identity
  CompPlusTy,  // B[(g ; d)+] = B[g+][d+]
  IdPlusTy,    // B[id+] = B
};

inline constexpr int kPrimitiveRuleCount = 22;
inline constexpr int kRuleCount = 28;

const char* rule_name(Rule r);
bool rule_from_name(const std::string& s, Rule& out);
bool is_primitive(Rule r);

enum class Dir : unsigned char { Fwd, Bwd };

using Bindings = std::map<std::string, Expr>;

struct Pat;
using PatPtr = std::shared_ptr<const Pat>;

// A pattern is either a metavariable (with a sort) or a node shape.
struct Pat {
  bool meta = false;
  std::string name;
  Sort sort = Sort::Tm;
  Kind kind = Kind::Q;
  PatPtr a, b;
};

bool match(const PatPtr& p, const Expr& e, Bindings& b);
// nullptr if a metavariable is unbound.
Expr instantiate(const PatPtr& p, const Bindings& b);
void pattern_metas(const PatPtr& p, std::vector<std::string>& out);

struct LawVariant {
  Rule rule;
  PatPtr lhs;
  PatPtr rhs;
  // Extra applicability test on the bindings (both directions).
  bool (*cond)(const Bindings&) = nullptr;
  // Whether the oriented machine may use it left to right.
  bool machine = true;
};

// Table in machine priority order: identity and terminal laws, then
// pushing laws, then beta/eta.
const std::vector<LawVariant>& law_table();
std::vector<const LawVariant*> variants_of(Rule r);

// Sort of a metavariable, by naming convention:
// A B C types, g d h substitutions, everything else terms.
Sort meta_sort(const std::string& name);

}  // namespace alphanorm
