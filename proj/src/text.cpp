#include "alphanorm/text.hpp"

#include <cctype>
#include <string>

namespace alphanorm {

ParseError::ParseError(int l, int c, const std::string& msg)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}

// ---------------------------------------------------------------- printing

namespace {

void print(const Expr& e, std::string& out);

void print_sub_plus_level(const Expr& g, std::string& out) {
  if (g->kind == Kind::Comp) {
    out += '(';
    print(g, out);
    out += ')';
  } else {
    print(g, out);
  }
}

void print(const Expr& e, std::string& out) {
  switch (e->kind) {
    case Kind::Empty:
      out += "<>";
      return;
    case Kind::Ext:
      print(e->kid[0], out);
      out += " |> ";
      print(e->kid[1], out);
      return;
    case Kind::Id:
      out += "id";
      return;
    case Kind::Eps:
      out += "eps";
      return;
    case Kind::P:
      out += "p";
      return;
    case Kind::Comp:
      print_sub_plus_level(e->kid[0], out);
      out += " ; ";
      print(e->kid[1], out);
      return;
    case Kind::Plus:
      print_sub_plus_level(e->kid[0], out);
      out += "+ : ";
      print(e->kid[1], out);
      return;
    case Kind::Sing:
      out += '<';
      print(e->kid[0], out);
      out += '>';
      return;
    case Kind::U:
      out += "U";
      return;
    case Kind::El:
      out += "El(";
      print(e->kid[0], out);
      out += ')';
      return;
    case Kind::Pi:
      out += "Pi(";
      print(e->kid[0], out);
      out += ", ";
      print(e->kid[1], out);
      out += ')';
      return;
    case Kind::Inst:
    case Kind::TInst:
      print(e->kid[0], out);
      out += '[';
      print(e->kid[1], out);
      out += ']';
      return;
    case Kind::Q:
      out += "q";
      return;
    case Kind::Lam:
      out += "lam(";
      print(e->kid[0], out);
      out += ", ";
      print(e->kid[1], out);
      out += ')';
      return;
    case Kind::App:
      out += "app(";
      print(e->kid[0], out);
      out += ')';
      return;
    case Kind::InU:
      out += "inU(" + std::to_string(e->i) + ")";
      return;
    case Kind::InEl:
      out += "inEl(" + std::to_string(e->i) + ", " + std::to_string(e->j) + ")";
      return;
  }
}

// ----------------------------------------------------------------- parsing

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
  std::size_t begin;
};

class Parser {
 public:
  Parser(std::string_view s, std::size_t offset) : src_(s), pos_(offset) {
    // Establish line/col for the starting offset.
    for (std::size_t k = 0; k < offset && k < s.size(); ++k) advance_lc(s[k]);
    next();
  }

  Expr any() {
    if (is("<") && peek_char_is('>')) return ctx();
    if (is("<") || is("(")) return sub();
    if (cur_.kind == Tok::Ident) {
      const std::string& w = cur_.text;
      if (w == "id" || w == "eps" || w == "p") return sub();
      if (w == "U" || w == "El" || w == "Pi") return ty();
      if (w == "q" || w == "lam" || w == "app" || w == "inU" || w == "inEl") return tm();
    }
    fail("expected an expression");
  }

  Expr ctx() {
    expect("<");
    expect(">");
    Expr c = empty_ctx();
    while (is("|>")) {
      next();
      c = ext(c, ty());
    }
    return c;
  }

  Expr sub() {
    Expr f = sub_plus();
    if (is(";")) {
      next();
      return comp(f, sub());
    }
    return f;
  }

  Expr ty() {
    Expr a;
    if (word("U")) {
      next();
      a = ty_u();
    } else if (word("El")) {
      next();
      expect("(");
      Expr t = tm();
      expect(")");
      a = el(t);
    } else if (word("Pi")) {
      next();
      expect("(");
      Expr d = ty();
      expect(",");
      Expr c = ty();
      expect(")");
      a = pi(d, c);
    } else {
      fail("expected a type");
    }
    while (is("[")) {
      next();
      Expr g = sub();
      expect("]");
      a = inst(a, g);
    }
    return a;
  }

  Expr tm() {
    Expr t;
    if (word("q")) {
      next();
      t = var_q();
    } else if (word("lam")) {
      next();
      expect("(");
      Expr a = ty();
      expect(",");
      Expr b = tm();
      expect(")");
      t = lam(a, b);
    } else if (word("app")) {
      next();
      expect("(");
      Expr f = tm();
      expect(")");
      t = app(f);
    } else if (word("inU")) {
      next();
      expect("(");
      int i = integer();
      expect(")");
      t = in_u(i);
    } else if (word("inEl")) {
      next();
      expect("(");
      int i = integer();
      expect(",");
      int j = integer();
      expect(")");
      t = in_el(i, j);
    } else {
      fail("expected a term");
    }
    while (is("[")) {
      next();
      Expr g = sub();
      expect("]");
      t = tinst(t, g);
    }
    return t;
  }

  void finish() {
    if (cur_.kind != Tok::End) fail("unexpected trailing input '" + cur_.text + "'");
  }

  std::size_t offset() const { return cur_.begin; }

 private:
  Expr sub_plus() {
    Expr g = sub_atom();
    while (is("+")) {
      next();
      expect(":");
      g = plus(g, ty());
    }
    return g;
  }

  Expr sub_atom() {
    if (word("id")) {
      next();
      return id_sub();
    }
    if (word("eps")) {
      next();
      return eps();
    }
    if (word("p")) {
      next();
      return proj();
    }
    if (is("<")) {
      next();
      Expr t = tm();
      expect(">");
      return sing(t);
    }
    if (is("(")) {
      next();
      Expr g = sub();
      expect(")");
      return g;
    }
    fail("expected a substitution");
  }

  int integer() {
    if (cur_.kind != Tok::Int) fail("expected an integer");
    int v = 0;
    for (char ch : cur_.text) {
      v = v * 10 + (ch - '0');
      if (v > 1000000) fail("integer too large");
    }
    next();
    return v;
  }

  bool is(const char* p) const { return cur_.kind == Tok::Punct && cur_.text == p; }
  bool word(const char* w) const { return cur_.kind == Tok::Ident && cur_.text == w; }

  bool peek_char_is(char ch) {
    std::size_t k = pos_;
    while (k < src_.size() && std::isspace(static_cast<unsigned char>(src_[k]))) ++k;
    return k < src_.size() && src_[k] == ch;
  }

  void expect(const char* p) {
    if (!is(p)) fail(std::string("expected '") + p + "'");
    next();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(cur_.line, cur_.col, msg); }

  void advance_lc(char ch) {
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
  }

  void bump() {
    advance_lc(src_[pos_]);
    ++pos_;
  }

  void next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
    cur_ = Token{Tok::End, "", line_, col_, pos_};
    if (pos_ >= src_.size()) return;
    char ch = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      cur_.kind = Tok::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        cur_.text += src_[pos_];
        bump();
      }
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur_.kind = Tok::Int;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        cur_.text += src_[pos_];
        bump();
      }
      return;
    }
    cur_.kind = Tok::Punct;
    if (ch == '|' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      cur_.text = "|>";
      bump();
      bump();
      return;
    }
    static const std::string single = "()[]<>,;+:";
    if (single.find(ch) == std::string::npos) {
      throw ParseError(line_, col_, std::string("unexpected character '") + ch + "'");
    }
    cur_.text = std::string(1, ch);
    bump();
  }

  std::string_view src_;
  std::size_t pos_;
  int line_ = 1;
  int col_ = 1;
  Token cur_{Tok::End, "", 1, 1, 0};
};

template <typename F>
Expr parse_whole(std::string_view text, F f) {
  Parser ps(text, 0);
  Expr e = f(ps);
  ps.finish();
  return e;
}

}  // namespace

std::string to_text(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

Ctx parse_ctx(std::string_view t) { return parse_whole(t, [](Parser& p) { return p.ctx(); }); }
Sub parse_sub(std::string_view t) { return parse_whole(t, [](Parser& p) { return p.sub(); }); }
Ty parse_ty(std::string_view t) { return parse_whole(t, [](Parser& p) { return p.ty(); }); }
Tm parse_tm(std::string_view t) { return parse_whole(t, [](Parser& p) { return p.tm(); }); }
Expr parse_expr(std::string_view t) { return parse_whole(t, [](Parser& p) { return p.any(); }); }

Expr parse_expr_prefix(std::string_view text, std::size_t& offset) {
  Parser ps(text, offset);
  Expr e = ps.any();
  offset = ps.offset();
  return e;
}

}  // namespace alphanorm
