#include "alphanorm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "alphanorm/certificates.hpp"
#include "alphanorm/coherence.hpp"
#include "alphanorm/generate.hpp"
#include "alphanorm/model.hpp"
#include "alphanorm/normal.hpp"
#include "alphanorm/text.hpp"
#include "alphanorm/wellformed.hpp"

namespace alphanorm {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string sig = "x=1;y=1";
  int fuel = kDefaultFuel;
  std::size_t cap = 10000;
  std::uint64_t seed = 0;
  int size = 12;
  int count = 100;
  std::vector<std::string> files;
  std::vector<std::string> exprs;
  std::string ctx;
  std::string type;
  std::string cert_out;
  std::string diagram = "all";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  return s.substr(b);
}

// Inputs in command-line order: files first, then inline expressions.
std::vector<std::string> inputs(const Options& o) {
  std::vector<std::string> out;
  for (const auto& f : o.files) out.push_back(trim(read_file(f)));
  for (const auto& e : o.exprs) out.push_back(e);
  return out;
}

std::string one_input(const Options& o) {
  auto in = inputs(o);
  if (in.size() != 1) throw UsageError("expected exactly one input");
  return in.front();
}

Signature signature_of(const Options& o) {
  auto s = parse_signature(o.sig);
  if (!s) throw UsageError("bad signature '" + o.sig + "'");
  return *s;
}

Ctx ctx_of(const Options& o) { return o.ctx.empty() ? empty_ctx() : parse_ctx(o.ctx); }

void print_reject(std::ostream& out, const Rejection& r) {
  out << "reject: " << r.reason;
  if (r.subtree) out << " at " << to_text(r.subtree);
  out << "\n";
}

int cmd_check(const Options& o, std::ostream& out) {
  Expr e = parse_expr(one_input(o));
  Checker chk(signature_of(o), o.fuel);
  if (sort_of(e) == Sort::Ctx) {
    auto r = chk.check_ctx(e);
    if (!r) return print_reject(out, r.rejection()), kFail;
    out << "ok\n";
    return kOk;
  }
  Ctx c = ctx_of(o);
  if (auto r = chk.check_ctx(c); !r) return print_reject(out, r.rejection()), kFail;
  switch (sort_of(e)) {
    case Sort::Ty: {
      auto r = chk.check_ty(c, e);
      if (!r) return print_reject(out, r.rejection()), kFail;
      out << "ok\n";
      return kOk;
    }
    case Sort::Sub: {
      auto r = chk.infer_sub(e, c);
      if (!r) return print_reject(out, r.rejection()), kFail;
      out << "codomain: " << to_text(*r) << "\n";
      return kOk;
    }
    default: {
      if (!o.type.empty()) {
        auto r = chk.check_tm(c, parse_ty(o.type), e);
        if (!r) return print_reject(out, r.rejection()), kFail;
        out << "accept\n";
        return kOk;
      }
      auto r = chk.infer_tm(e, c);
      if (!r) return print_reject(out, r.rejection()), kFail;
      out << "type: " << to_text(*r) << "\n";
      return kOk;
    }
  }
}

int cmd_norm(const Options& o, std::ostream& out) {
  Ty a = parse_ty(one_input(o));
  if (!o.ctx.empty()) {
    Checker chk(signature_of(o), o.fuel);
    Ctx c = ctx_of(o);
    if (auto r = chk.check_ctx(c); !r) return print_reject(out, r.rejection()), kFail;
    if (auto r = chk.check_ty(c, a); !r) return print_reject(out, r.rejection()), kFail;
  }
  NTy n = norm(a, o.fuel);
  Cert c = compl_cert(a, o.fuel);
  out << to_text(quote(n)) << "\n";
  out << "certificate: " << c.steps.size() << " steps\n";
  if (o.cert_out.empty()) {
    out << cert_to_text(c);
  } else {
    std::ofstream f(o.cert_out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.cert_out);
    f << cert_to_text(c);
  }
  if (any_stuck(n)) {
    out << "warning: fuel exhausted inside the normal form\n";
    return kFail;
  }
  return check_cert(c, o.fuel).ok ? kOk : kFail;
}

int cmd_eq(const Options& o, std::ostream& out) {
  auto in = inputs(o);
  if (in.size() != 2) throw UsageError("expected two inputs");
  Ty a = parse_ty(in[0]);
  Ty b = parse_ty(in[1]);
  Tri t = decide_ty_eq(a, b, o.fuel);
  out << tri_name(t) << "\n";
  return t == Tri::True ? kOk : kFail;
}

int cmd_eval(const Options& o, std::ostream& out) {
  Expr e = parse_expr(one_input(o));
  Signature sig = signature_of(o);
  Checker chk(sig, o.fuel);
  Ctx c = sort_of(e) == Sort::Ctx ? e : ctx_of(o);
  if (auto r = chk.check_ctx(c); !r) return print_reject(out, r.rejection()), kFail;
  switch (sort_of(e)) {
    case Sort::Ty:
      if (auto r = chk.check_ty(c, e); !r) return print_reject(out, r.rejection()), kFail;
      break;
    case Sort::Tm:
      if (auto r = chk.infer_tm(e, c); !r) return print_reject(out, r.rejection()), kFail;
      break;
    case Sort::Sub:
      if (auto r = chk.infer_sub(e, c); !r) return print_reject(out, r.rejection()), kFail;
      break;
    default:
      break;
  }
  FinSetModel m(sig, o.cap);
  try {
    auto envs = eval_ctx(c, m);
    switch (sort_of(e)) {
      case Sort::Ctx:
        for (Val v : envs) out << m.show(v) << "\n";
        break;
      case Sort::Ty: {
        auto f = eval_ty(e, m);
        for (Val v : envs) {
          out << m.show(v) << " |-> {";
          const auto& fib = f(v);
          for (std::size_t k = 0; k < fib.size(); ++k) out << (k ? ", " : "") << m.show(fib[k]);
          out << "}\n";
        }
        break;
      }
      case Sort::Tm: {
        auto f = eval_tm(e, m);
        for (Val v : envs) out << m.show(v) << " |-> " << m.show(f(v)) << "\n";
        break;
      }
      case Sort::Sub: {
        auto f = eval_sub(e, m);
        for (Val v : envs) out << m.show(v) << " |-> " << m.show(f(v)) << "\n";
        break;
      }
    }
  } catch (const TooLarge&) {
    out << "too large\n";
    return kFail;
  }
  return kOk;
}

int cmd_cert(const Options& o, std::ostream& out) {
  Cert c = cert_from_text(one_input(o));
  CertCheck r = check_cert(c, o.fuel);
  if (r.ok) {
    out << "valid (" << c.steps.size() << " steps)\n";
    return kOk;
  }
  out << "invalid at step " << r.failed_step << ": " << r.reason << "\n";
  return kFail;
}

int cmd_coherence(const Options& o, std::ostream& out) {
  std::vector<Diagram> todo;
  bool all = o.diagram == "all";
  if (all) {
    for (int k = 0; k < kDiagramCount; ++k) todo.push_back(static_cast<Diagram>(k));
  } else {
    Diagram d;
    if (!diagram_from_name(o.diagram, d)) throw UsageError("unknown diagram '" + o.diagram + "'");
    todo.push_back(d);
  }
  Generator gen(signature_of(o), o.seed, o.fuel);
  auto sigs = small_signatures();
  bool ok = true;
  for (Diagram d : todo) {
    int pass = 0;
    for (int k = 0; k < o.count; ++k) {
      auto inst = random_diagram_instance(d, gen);
      pass += coherence_2cell(d, inst.bindings, inst.ctx, sigs, o.fuel).pass();
    }
    out << diagram_name(d) << ": " << pass << "/" << o.count << "\n";
    ok = ok && pass == o.count;
  }
  if (all) {
    int pent = 0, idl = 0;
    for (int k = 0; k < o.count; ++k) {
      auto inst = random_diagram_instance(Diagram::Ass, gen);
      pent += pentagon_suite(inst.bindings, inst.ctx, sigs, o.fuel).pass();
      auto tri = random_diagram_instance(Diagram::Idr, gen);
      Legs legs = idl_implies_idr(tri.bindings.at("A"), tri.bindings.at("g"));
      idl += check_cert(legs.left, o.fuel).ok && check_cert(legs.right, o.fuel).ok &&
             same(legs.left.source, legs.right.source) && same(legs.left.target, legs.right.target);
    }
    out << "pentagon suite: " << pent << "/" << o.count << "\n";
    out << "idl implies idr: " << idl << "/" << o.count << "\n";
    ok = ok && pent == o.count && idl == o.count;
  }
  return ok ? kOk : kFail;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  Signature sig = signature_of(o);
  Generator gen(sig, o.seed, o.fuel);
  auto sigs = small_signatures();
  int compl_ok = 0, stable = 0, functorial = 0, sound = 0;
  for (int k = 0; k < o.count; ++k) {
    Ctx c = gen.ctx(gen.uniform(0, 3));
    Ty a = gen.ty(c, gen.uniform(1, std::max(1, o.size)));
    Cert ce = compl_cert(a, o.fuel);
    compl_ok += check_cert(ce, o.fuel).ok;
    NTy n = norm(a, o.fuel);
    stable += !any_stuck(n) && same_nty(norm(quote(n), o.fuel), n);
    sound += cert_model_agree(ce, c, sigs);
    auto [d, D] = gen.sub(c, 4);
    auto [g, G] = gen.sub(D, 4);
    NTy m = norm(gen.ty(G, std::max(1, o.size / 2)), o.fuel);
    functorial += cover_eq(inst_nty(m, comp(g, d), o.fuel),
                           inst_nty(inst_nty(m, g, o.fuel), d, o.fuel), o.fuel) == Tri::True &&
                  cover_eq(inst_nty(m, id_sub(), o.fuel), m, o.fuel) == Tri::True;
  }
  out << "compl certificates: " << compl_ok << "/" << o.count << "\n";
  out << "stability: " << stable << "/" << o.count << "\n";
  out << "functoriality: " << functorial << "/" << o.count << "\n";
  out << "model soundness: " << sound << "/" << o.count << "\n";
  bool ok = compl_ok == o.count && stable == o.count && functorial == o.count && sound == o.count;
  return ok ? kOk : kFail;
}

}  // namespace

std::optional<Signature> parse_signature(const std::string& text) {
  Signature s;
  bool have_x = false, have_y = false;
  std::stringstream parts(text);
  std::string part;
  auto to_int = [](const std::string& t, int& v) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return false;
    if (t.size() > 6) return false;
    v = std::stoi(t);
    return true;
  };
  while (std::getline(parts, part, ';')) {
    part = trim(part);
    if (part.rfind("x=", 0) == 0 && !have_x) {
      if (!to_int(part.substr(2), s.x_card)) return std::nullopt;
      have_x = true;
    } else if (part.rfind("y=", 0) == 0 && !have_y) {
      have_y = true;
      std::stringstream ys(part.substr(2));
      std::string y;
      while (std::getline(ys, y, ',')) {
        int v;
        if (!to_int(trim(y), v)) return std::nullopt;
        s.y_card.push_back(v);
      }
    } else {
      return std::nullopt;
    }
  }
  if (!have_x || !s.valid()) return std::nullopt;
  return s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Type normalisation with replayable certificates for a small dependent type theory", "alphanorm"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* sc) {
    sc->add_option("--sig", o.sig, "signature, e.g. x=2;y=2,1")->capture_default_str();
    sc->add_option("--fuel", o.fuel, "rewrite step budget")->capture_default_str()->check(CLI::PositiveNumber);
  };
  auto input = [&o](CLI::App* sc) {
    sc->add_option("files", o.files, "input files");
    sc->add_option("-e,--expr", o.exprs, "inline expression (repeatable)");
  };

  auto* check = app.add_subcommand("check", "check or infer an expression");
  common(check);
  input(check);
  check->add_option("--ctx", o.ctx, "context (default <>)");
  check->add_option("--type", o.type, "check a term against this type");

  auto* normc = app.add_subcommand("norm", "normal form and completeness certificate of a type");
  common(normc);
  input(normc);
  normc->add_option("--ctx", o.ctx, "check the type in this context first");
  normc->add_option("--cert-out", o.cert_out, "write the certificate here instead of stdout");

  auto* eq = app.add_subcommand("eq", "decide equality of two types");
  common(eq);
  input(eq);

  auto* eval = app.add_subcommand("eval", "evaluate in the finite-set model");
  common(eval);
  input(eval);
  eval->add_option("--ctx", o.ctx, "context (default <>)");
  eval->add_option("--cap", o.cap, "enumeration cap")->capture_default_str();

  auto* cert = app.add_subcommand("cert", "replay a certificate file");
  common(cert);
  input(cert);

  auto* coh = app.add_subcommand("coherence", "check coherence diagrams on random bindings");
  common(coh);
  coh->add_option("diagram", o.diagram, "diagram name or all")->capture_default_str();
  coh->add_option("--seed", o.seed)->capture_default_str();
  coh->add_option("--count", o.count)->capture_default_str();

  auto* fuzz = app.add_subcommand("fuzz", "property checks on random types");
  common(fuzz);
  fuzz->add_option("--seed", o.seed)->capture_default_str();
  fuzz->add_option("--count", o.count)->capture_default_str();
  fuzz->add_option("--size", o.size)->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (normc->parsed()) return cmd_norm(o, out);
    if (eq->parsed()) return cmd_eq(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (cert->parsed()) return cmd_cert(o, out);
    if (coh->parsed()) return cmd_coherence(o, out);
    if (fuzz->parsed()) return cmd_fuzz(o, out);
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace alphanorm
