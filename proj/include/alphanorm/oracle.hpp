// Brute-force ground truth for tests.
//
// oracle_eq searches the undirected equational theory breadth first from
// both sides. It answers Equal when the two balls meet, Distinct only from
// a head-shape invariant or a finite-model counterexample, and NotFound
// otherwise. Never used by the kernel.
#pragma once

#include <optional>
#include <vector>

#include "alphanorm/laws.hpp"
#include "alphanorm/normal.hpp"
#include "alphanorm/syntax.hpp"

namespace alphanorm {

struct SearchConfig {
  int max_expr_size = 10;
  int max_depth = 3;
  // Laws used in both directions; empty means every primitive law.
  std::vector<Rule> rule_set;
  // Context of the compared types; its types seed the pool that binds
  // metavariables an expansion introduces.
  Ctx ctx;
  // Signatures tried for model counterexamples.
  std::vector<Signature> model_sigs;
};

enum class OracleAnswer { Equal, Distinct, NotFound };
const char* oracle_answer_name(OracleAnswer a);

// Every expression reachable from `start` in at most max_depth single-law
// rewrites, in discovery order. Expressions over max_expr_size are dropped.
std::vector<Expr> search_ball(const Expr& start, const SearchConfig& cfg);

// All single-law rewrites of `e`, sorted and without duplicates.
std::vector<Expr> neighbours(const Expr& e, const SearchConfig& cfg);

OracleAnswer oracle_eq(const Ty& a, const Ty& b, const SearchConfig& cfg);

// U, El or Pi after stripping instantiations; no law changes it.
Kind type_head(const Ty& a);
// True when some environment of some signature tells the types apart.
bool model_distinguishes(const Ctx& ctx, const Ty& a, const Ty& b,
                         const std::vector<Signature>& sigs);

// Every raw expression of the sort with exactly `size` nodes, indices
// ranging over `sig`, ordered by printed text.
std::vector<Expr> raw_exprs(Sort s, int size, const Signature& sig);

// Well-formed types in `ctx` with at most `size` nodes, ordered by size
// then printed text.
std::vector<Ty> enumerate_tys(const Ctx& ctx, int size, const Signature& sig);

// Normal types with at most `size` quoted nodes whose El terms are
// step-normal raw terms.
std::vector<NTy> enumerate_ntys(int size, const Signature& sig);

}  // namespace alphanorm
