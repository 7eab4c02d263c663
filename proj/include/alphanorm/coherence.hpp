// Coherence diagrams checked at the level of derivations: both legs must
// replay, share their endpoints, and the endpoints must denote the same
// family in the finite-set model.
#pragma once

#include <vector>

#include "alphanorm/certificates.hpp"
#include "alphanorm/generate.hpp"

namespace alphanorm {

struct CoherenceReport {
  Diagram diagram;
  CertCheck left;
  CertCheck right;
  bool endpoints_agree = false;
  bool model_agree = true;
  int model_checked = 0;  // signatures under which both endpoints were evaluated
  bool pass() const { return left.ok && right.ok && endpoints_agree && model_agree; }
};

// Endpoints agree in every signature of `sigs` under which the legs'
// source is well-formed in `ctx`; signatures hitting the cap are skipped.
CoherenceReport coherence_2cell(Diagram d, const Bindings& b, const Ctx& ctx,
                                const std::vector<Signature>& sigs, int fuel = kDefaultFuel);

struct PentagonReport {
  CoherenceReport ass, idl, idr;
  bool corners_agree = false;  // decide_ty_eq identifies every corner of the three diagrams
  bool pass() const { return ass.pass() && idl.pass() && idr.pass() && corners_agree; }
};

// Reads A, g, d, h; the identity triangles use A and g.
PentagonReport pentagon_suite(const Bindings& b, const Ctx& ctx,
                              const std::vector<Signature>& sigs, int fuel = kDefaultFuel);

// Model agreement of a certificate's endpoints, in the same sense.
bool cert_model_agree(const Cert& c, const Ctx& ctx, const std::vector<Signature>& sigs,
                      int* checked = nullptr);

struct DiagramInstance {
  Bindings bindings;
  Ctx ctx;  // where the diagram's corners live
};

// Well-formed bindings for the diagram's metavariables.
DiagramInstance random_diagram_instance(Diagram d, Generator& gen, int part_size = 4);

// Small signatures with x <= 2 and fibres of size <= 2.
std::vector<Signature> small_signatures();

}  // namespace alphanorm
