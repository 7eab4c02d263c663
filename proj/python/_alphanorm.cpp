// Python bindings. Everything crosses the boundary as concrete syntax text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "alphanorm/certificates.hpp"
#include "alphanorm/cli.hpp"
#include "alphanorm/model.hpp"
#include "alphanorm/normal.hpp"
#include "alphanorm/oracle.hpp"
#include "alphanorm/text.hpp"
#include "alphanorm/wellformed.hpp"

namespace py = pybind11;
using namespace alphanorm;

namespace {

Signature sig_of(const std::string& text) {
  auto s = parse_signature(text);
  if (!s) throw py::value_error("bad signature '" + text + "'");
  return *s;
}

py::object tri(Tri t) {
  if (t == Tri::Unknown) return py::none();
  return py::bool_(t == Tri::True);
}

const char* sort_name(Sort s) {
  switch (s) {
    case Sort::Ctx:
      return "ctx";
    case Sort::Sub:
      return "sub";
    case Sort::Ty:
      return "ty";
    default:
      return "tm";
  }
}

py::dict rejection(const Rejection& r) {
  py::dict d;
  d["ok"] = false;
  d["reason"] = r.reason;
  d["at"] = r.subtree ? py::cast(to_text(r.subtree)) : py::none();
  return d;
}

py::dict accepted(py::object result) {
  py::dict d;
  d["ok"] = true;
  d["result"] = std::move(result);
  return d;
}

// Ctx: accept; Ty: accept; Sub: codomain; Tm: type (or accept when `type` is given).
py::dict check(const std::string& text, const std::string& ctx_text, const std::string& sig,
               std::optional<std::string> type, int fuel) {
  Checker chk(sig_of(sig), fuel);
  Expr e = parse_expr(text);
  if (sort_of(e) == Sort::Ctx) {
    auto r = chk.check_ctx(e);
    return r ? accepted(py::none()) : rejection(r.rejection());
  }
  Ctx c = parse_ctx(ctx_text);
  if (auto r = chk.check_ctx(c); !r) return rejection(r.rejection());
  switch (sort_of(e)) {
    case Sort::Ty: {
      auto r = chk.check_ty(c, e);
      return r ? accepted(py::none()) : rejection(r.rejection());
    }
    case Sort::Sub: {
      auto r = chk.infer_sub(e, c);
      return r ? accepted(py::cast(to_text(*r))) : rejection(r.rejection());
    }
    default: {
      if (type) {
        auto r = chk.check_tm(c, parse_ty(*type), e);
        return r ? accepted(py::none()) : rejection(r.rejection());
      }
      auto r = chk.infer_tm(e, c);
      return r ? accepted(py::cast(to_text(*r))) : rejection(r.rejection());
    }
  }
}

// Environments paired with the value of `text` there; types give their
// fibre as a list. The expression is assumed well formed.
std::vector<std::pair<std::string, py::object>> evaluate(const std::string& text,
                                                         const std::string& ctx_text,
                                                         const std::string& sig, std::size_t cap) {
  Expr e = parse_expr(text);
  FinSetModel m(sig_of(sig), cap);
  Ctx c = sort_of(e) == Sort::Ctx ? e : parse_ctx(ctx_text);
  std::vector<std::pair<std::string, py::object>> out;
  auto envs = eval_ctx(c, m);
  switch (sort_of(e)) {
    case Sort::Ctx:
      for (Val v : envs) out.emplace_back(m.show(v), py::none());
      break;
    case Sort::Ty: {
      auto f = eval_ty(e, m);
      for (Val v : envs) {
        std::vector<std::string> fib;
        for (Val x : f(v)) fib.push_back(m.show(x));
        out.emplace_back(m.show(v), py::cast(fib));
      }
      break;
    }
    default: {
      auto f = sort_of(e) == Sort::Tm ? eval_tm(e, m) : eval_sub(e, m);
      for (Val v : envs) out.emplace_back(m.show(v), py::cast(m.show(f(v))));
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_alphanorm, m) {
  m.doc() = "Type normalisation with replayable certificates for a small dependent type theory";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TooLarge>(m, "TooLarge", PyExc_RuntimeError);
  m.attr("DEFAULT_FUEL") = kDefaultFuel;

  m.def("parse", [](const std::string& t) { return to_text(parse_expr(t)); },
        "Parse an expression and print it back in canonical spacing.");
  m.def("sort", [](const std::string& t) { return sort_name(sort_of(parse_expr(t))); });
  m.def("check", &check, py::arg("expr"), py::arg("ctx") = "<>", py::arg("sig") = "x=1;y=1",
        py::arg("type") = py::none(), py::arg("fuel") = kDefaultFuel);
  m.def("norm", [](const std::string& t, int fuel) { return to_text(quote(norm(parse_ty(t), fuel))); },
        py::arg("ty"), py::arg("fuel") = kDefaultFuel);
  m.def("decide_eq",
        [](const std::string& a, const std::string& b, int fuel) {
          return tri(decide_ty_eq(parse_ty(a), parse_ty(b), fuel));
        },
        py::arg("a"), py::arg("b"), py::arg("fuel") = kDefaultFuel,
        "True or False, or None when fuel runs out.");
  m.def("compl_cert", [](const std::string& t, int fuel) { return cert_to_text(compl_cert(parse_ty(t), fuel)); },
        py::arg("ty"), py::arg("fuel") = kDefaultFuel);
  m.def("check_cert",
        [](const std::string& text, int fuel) {
          CertCheck r = check_cert(cert_from_text(text), fuel);
          return py::make_tuple(r.ok, r.ok ? py::none() : py::cast(r.failed_step), r.reason);
        },
        py::arg("text"), py::arg("fuel") = kDefaultFuel,
        "(ok, index of the first failing step or None, reason).");
  m.def("evaluate", &evaluate, py::arg("expr"), py::arg("ctx") = "<>", py::arg("sig") = "x=1;y=1",
        py::arg("cap") = 10000);
  m.def("oracle_eq",
        [](const std::string& a, const std::string& b, const std::string& ctx, int max_size,
           int max_depth) {
          SearchConfig cfg;
          cfg.max_expr_size = max_size;
          cfg.max_depth = max_depth;
          cfg.ctx = parse_ctx(ctx);
          cfg.model_sigs = {Signature{1, {1}}, Signature{2, {1, 2}}};
          return std::string(oracle_answer_name(oracle_eq(parse_ty(a), parse_ty(b), cfg)));
        },
        py::arg("a"), py::arg("b"), py::arg("ctx") = "<>", py::arg("max_size") = 10,
        py::arg("max_depth") = 3);
  m.def("enumerate_tys",
        [](const std::string& ctx, int size, const std::string& sig) {
          std::vector<std::string> out;
          for (const auto& t : enumerate_tys(parse_ctx(ctx), size, sig_of(sig))) out.push_back(to_text(t));
          return out;
        },
        py::arg("ctx"), py::arg("size"), py::arg("sig") = "x=1;y=1");
  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        "Run the command-line driver in process; returns (exit code, stdout, stderr).");
}
