// Raw syntax for the four sorts: contexts, substitutions, types, terms.
//
// Expressions are immutable trees shared through Expr handles. All four
// sorts use one node type so that positions, rewriting and printing work
// uniformly; the Sort of a node is a function of its Kind.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace alphanorm {

enum class Sort : std::uint8_t { Ctx, Sub, Ty, Tm };

enum class Kind : std::uint8_t {
  // contexts
  Empty,
  Ext,  // (ctx, ty)
  // substitutions
  Id,
  Comp,  // (f, g) = f after g
  Eps,
  P,
  Plus,  // (g, ty): lift of g over ty
  Sing,  // (tm)
  // types
  U,
  El,    // (tm)
  Pi,    // (dom, cod)
  Inst,  // (ty, sub)
  // terms
  Q,
  TInst,  // (tm, sub)
  Lam,    // (dom, body)
  App,    // (tm)
  InU,    // index i
  InEl,   // indices i, j
};

struct Node;
using Expr = std::shared_ptr<const Node>;

// Aliases used purely as documentation of the expected sort.
using Ctx = Expr;
using Sub = Expr;
using Ty = Expr;
using Tm = Expr;

struct Node {
  Kind kind;
  std::array<Expr, 2> kid;
  int i = 0;
  int j = 0;
  std::size_t hash = 0;
  int size = 1;  // node count

  Node(Kind k, Expr a, Expr b, int ii, int jj);
};

Sort sort_of(Kind k);
inline Sort sort_of(const Expr& e) { return sort_of(e->kind); }
int arity(Kind k);
const char* kind_name(Kind k);

// Generator data: |X| and |Y x| for each x.
struct Signature {
  int x_card = 0;
  std::vector<int> y_card;

  bool valid() const;
  bool operator==(const Signature&) const = default;
};

// Builders. Construction never fails; validity is the checker's business.
Ctx empty_ctx();
Ctx ext(Ctx c, Ty a);

Sub id_sub();
Sub comp(Sub f, Sub g);
Sub eps();
Sub proj();
Sub plus(Sub g, Ty a);
Sub sing(Tm t);

Ty ty_u();
Ty el(Tm t);
Ty pi(Ty a, Ty b);
Ty inst(Ty a, Sub g);

Tm var_q();
Tm tinst(Tm t, Sub g);
Tm lam(Ty a, Tm b);
Tm app(Tm t);
Tm in_u(int i);
Tm in_el(int i, int j);

// Derived forms.
Sub sub_ext(Sub g, Ty a, Tm t);  // (g, t) as lift-then-single
Ty arrow(Ty a, Ty b);            // non-dependent function type
Tm apply_to(Tm f, Tm a);         // ordinary application f . a
Tm id_combinator();              // lam (lam q) over U and El q

// Structural equality and a total order (size first, then shape).
bool same(const Expr& a, const Expr& b);
int compare(const Expr& a, const Expr& b);

struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e->hash; }
};
struct ExprEq {
  bool operator()(const Expr& a, const Expr& b) const { return same(a, b); }
};
struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

// Positions are child-index paths from the root.
using Path = std::vector<int>;

Expr with_child(const Expr& e, int idx, Expr child);
Expr subtree_at(const Expr& e, const Path& pos);  // nullptr if the path is invalid
Expr replace_at(const Expr& e, const Path& pos, Expr repl);
std::string path_to_string(const Path& pos);
bool path_from_string(const std::string& s, Path& out);

// Context helpers.
int ctx_length(const Ctx& c);

// True when the node carries no Inst anywhere below it (terms included).
bool inst_free(const Expr& e);

}  // namespace alphanorm
