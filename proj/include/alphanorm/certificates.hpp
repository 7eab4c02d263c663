// Replayable equality derivations between types.
//
// A certificate is a source, a target and a list of law applications.
// Replay compares expressions after canonicalising every embedded term,
// so steps never need to spell out term-level bookkeeping.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "alphanorm/common.hpp"
#include "alphanorm/laws.hpp"
#include "alphanorm/syntax.hpp"

namespace alphanorm {

struct EqStep {
  Rule rule;
  Path position;
  Dir dir = Dir::Fwd;
  Bindings bindings;
};

struct Cert {
  Ty source;
  Ty target;
  std::vector<EqStep> steps;
};

struct CertCheck {
  bool ok = false;
  // Index of the first failing step; steps.size() when every step applied
  // but the result is not the target. -1 on success.
  int failed_step = -1;
  std::string reason;
};

// Applies one step; nullptr when the law does not match at the position.
Expr apply_step(const Expr& cur, const EqStep& s, int fuel = kDefaultFuel);
CertCheck check_cert(const Cert& c, int fuel = kDefaultFuel);

// Equality up to canonical forms of embedded terms.
bool same_mod_terms(const Expr& a, const Expr& b, int fuel = kDefaultFuel);

// Derivation from quote(norm a) to a.
Cert compl_cert(const Ty& a, int fuel = kDefaultFuel);

// Steps rewriting quote(inst_nty(norm a, g)) into Inst(quote(norm a), g),
// positioned under `prefix`.
void append_quote_inst(const Ty& normal, const Sub& g, const Path& prefix, int fuel,
                       std::vector<EqStep>& out);

// Concatenation and prefixing helpers.
EqStep at(const Path& prefix, EqStep s);
Cert chain(const Cert& a, const Cert& b);

// B = B[p+ ; <q>] as the three step path through B[id]; `last` is the
// type the context was extended by.
Cert eta_cert(const Ty& b, const Ty& last);

// The coherence diagrams: six for the substitution laws of U, El and Pi,
// three for the functor laws of instantiation.
enum class Diagram { UId, UComp, ElId, ElComp, PiComp, PiId, Ass, Idl, Idr };
inline constexpr int kDiagramCount = 9;
const char* diagram_name(Diagram d);
bool diagram_from_name(const std::string& s, Diagram& out);
// Metavariables the diagram reads from its bindings.
std::vector<std::string> diagram_metas(Diagram d);

struct Legs {
  Cert left;
  Cert right;
};
// Missing bindings make the corresponding legs fail replay.
Legs diagram_legs(Diagram d, const Bindings& b);

// The idl => idr construction: `left` is the long chain through
// A[g ; id][id], A[(g ; id) ; id] and A[g ; (id ; id)]; `right` is the
// triangle's [o] then [id] leg. Both go from A[g ; id] to A[g].
Legs idl_implies_idr(const Ty& a, const Sub& g);

std::string cert_to_text(const Cert& c);
// Throws ParseError.
Cert cert_from_text(std::string_view text);

}  // namespace alphanorm
