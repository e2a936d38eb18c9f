#include "ukb/parser.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <string>
#include <utility>

#include "ukb/error.hpp"

namespace ukb {

namespace {

enum class Tok { Ident, Number, Punct, Eol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  char punct = 0;
  int line = 1, col = 1;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident:
    case Tok::Number: return "'" + t.text + "'";
    case Tok::Punct: return std::string("'") + t.punct + "'";
    case Tok::Eol: return "end of line";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\n') {
        emit_eol(out);
        ++pos_;
        ++line_;
        col_ = 1;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
        ++col_;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        lex_ident(out);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        lex_number(out);
        continue;
      }
      if (std::string_view("=(),+-*/^").find(c) != std::string_view::npos) {
        Token t{Tok::Punct, std::string(1, c), c, line_, col_};
        out.push_back(std::move(t));
        ++pos_;
        ++col_;
        continue;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }
    emit_eol(out);
    out.push_back(Token{Tok::End, "", 0, line_, col_});
    return out;
  }

 private:
  void emit_eol(std::vector<Token>& out) {
    // Collapse runs of newlines; a leading Eol is never emitted.
    if (!out.empty() && out.back().kind != Tok::Eol) {
      out.push_back(Token{Tok::Eol, "", 0, line_, col_});
    }
  }

  void lex_ident(std::vector<Token>& out) {
    int line = line_, col = col_;
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
    out.push_back(Token{Tok::Ident, std::string(text_.substr(start, pos_ - start)), 0, line, col});
  }

  void lex_number(std::vector<Token>& out) {
    int line = line_, col = col_;
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++col_;
      }
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      ++col_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("expected digits after decimal point", line_, col_);
      }
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      ++col_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        ++pos_;
        ++col_;
      }
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("expected digits in exponent", line_, col_);
      }
      digits();
    }
    out.push_back(Token{Tok::Number, std::string(text_.substr(start, pos_ - start)), 0, line, col});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  KbDocument run() {
    KbDocument doc;
    for (;;) {
      while (at(Tok::Eol)) advance();
      if (at(Tok::End)) break;
      doc.decls.push_back(parse_decl());
      if (!at(Tok::End)) expect_eol();
    }
    return doc;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }
  bool at_punct(char c) const { return peek().kind == Tok::Punct && peek().punct == c; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + ", found " + describe(peek()), peek().line, peek().col);
  }

  Token expect_word(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "'");
    return advance();
  }

  Token expect_ident(const std::string& what) {
    if (!at(Tok::Ident)) fail("expected " + what);
    return advance();
  }

  void expect_punct(char c) {
    if (!at_punct(c)) fail(std::string("expected '") + c + "'");
    advance();
  }

  void expect_eol() {
    if (!at(Tok::Eol)) fail("expected end of line");
    advance();
  }

  double parse_number() {
    bool neg = false;
    if (at_punct('-')) {
      advance();
      neg = true;
    }
    if (!at(Tok::Number)) fail("expected a number");
    const Token& t = advance();
    double v = 0.0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || p != t.text.data() + t.text.size()) {
      throw ParseError("number out of range: '" + t.text + "'", t.line, t.col);
    }
    return neg ? -v : v;
  }

  std::uint64_t parse_uint(const std::string& what) {
    if (!at(Tok::Number)) fail("expected " + what);
    const Token& t = advance();
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || p != t.text.data() + t.text.size()) {
      throw ParseError(what + " must be a plain non-negative integer, got '" + t.text + "'", t.line, t.col);
    }
    return v;
  }

  Decl parse_decl() {
    const Token& head = peek();
    if (at_word("universe")) return parse_universe();
    if (at_word("set")) return parse_set();
    if (at_word("var")) return parse_var();
    if (at_word("assert")) return parse_assert();
    if (at_word("query")) return parse_query();
    throw ParseError("expected 'universe', 'set', 'var', 'assert' or 'query', found " + describe(head), head.line, head.col);
  }

  UniverseDecl parse_universe() {
    UniverseDecl d;
    const Token& kw = advance();
    d.line = kw.line;
    d.col = kw.col;
    d.name = expect_ident("a universe name").text;
    expect_punct('=');
    if (at_word("grid")) {
      advance();
      d.is_grid = true;
      expect_punct('(');
      d.lo = parse_number();
      expect_punct(',');
      d.hi = parse_number();
      expect_punct(',');
      d.step = parse_number();
      expect_punct(')');
    } else if (at_word("labels")) {
      advance();
      expect_punct('(');
      d.labels.push_back(expect_ident("a label").text);
      while (at_punct(',')) {
        advance();
        d.labels.push_back(expect_ident("a label").text);
      }
      expect_punct(')');
    } else {
      fail("expected 'grid' or 'labels'");
    }
    return d;
  }

  SetDecl parse_set() {
    SetDecl d;
    const Token& kw = advance();
    d.line = kw.line;
    d.col = kw.col;
    d.name = expect_ident("a set name").text;
    expect_word("on");
    d.universe = expect_ident("a universe name").text;
    expect_punct('=');
    std::size_t arity = 0;
    if (at_word("triangular")) {
      d.shape = ShapeKind::Triangular;
      arity = 3;
    } else if (at_word("trapezoid")) {
      d.shape = ShapeKind::Trapezoid;
      arity = 4;
    } else if (at_word("interval")) {
      d.shape = ShapeKind::Interval;
      arity = 2;
    } else if (at_word("singleton")) {
      d.shape = ShapeKind::Singleton;
      arity = 1;
    } else if (at_word("grades")) {
      d.shape = ShapeKind::Grades;
    } else {
      fail("expected 'triangular', 'trapezoid', 'interval', 'singleton' or 'grades'");
    }
    advance();
    expect_punct('(');
    d.params.push_back(parse_number());
    while (at_punct(',')) {
      advance();
      d.params.push_back(parse_number());
    }
    expect_punct(')');
    if (arity != 0 && d.params.size() != arity) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s takes %zu parameters, got %zu", shape_word(d.shape), arity,
                    d.params.size());
      throw ParseError(buf, d.line, d.col);
    }
    return d;
  }

  VarDecl parse_var() {
    VarDecl d;
    const Token& kw = advance();
    d.line = kw.line;
    d.col = kw.col;
    d.name = expect_ident("a variable name").text;
    expect_word("in");
    d.universe = expect_ident("a universe name").text;
    return d;
  }

  AssertDecl parse_assert() {
    AssertDecl d;
    const Token& kw = advance();
    d.line = kw.line;
    d.col = kw.col;
    d.statement = parse_statement();
    return d;
  }

  // stmt  := 'usually' '(' num ')' stmt | 'if' stmt 'then' stmt | or
  // or    := and ('or' and)*
  // and   := atom ('and' atom)*
  // atom  := 'usually' '(' num ')' atom | VAR 'is' SET
  StatementPtr parse_statement() {
    const Token& head = peek();
    if (at_word("usually")) {
      double alpha = parse_usual_head();
      StatementPtr inner = parse_statement();
      return Statement::usual(std::move(inner), alpha, head.line, head.col);
    }
    if (at_word("if")) {
      advance();
      StatementPtr ante = parse_statement();
      expect_word("then");
      StatementPtr cons = parse_statement();
      return Statement::if_then(std::move(ante), std::move(cons), head.line, head.col);
    }
    return parse_or();
  }

  StatementPtr parse_or() {
    StatementPtr lhs = parse_and();
    while (at_word("or")) {
      const Token& op = advance();
      StatementPtr rhs = parse_and();
      lhs = Statement::disjunction(std::move(lhs), std::move(rhs), op.line, op.col);
    }
    return lhs;
  }

  StatementPtr parse_and() {
    StatementPtr lhs = parse_atom();
    while (at_word("and")) {
      const Token& op = advance();
      StatementPtr rhs = parse_atom();
      lhs = Statement::conjunction(std::move(lhs), std::move(rhs), op.line, op.col);
    }
    return lhs;
  }

  StatementPtr parse_atom() {
    const Token& head = peek();
    if (at_word("usually")) {
      double alpha = parse_usual_head();
      StatementPtr inner = parse_atom();
      return Statement::usual(std::move(inner), alpha, head.line, head.col);
    }
    if (!at(Tok::Ident) || at_word("if") || at_word("then") || at_word("and") || at_word("or")) {
      fail("expected 'VAR is SET'");
    }
    std::string var = advance().text;
    expect_word("is");
    std::string set = expect_ident("a set name").text;
    return Statement::canonical(std::move(var), std::move(set), head.line, head.col);
  }

  double parse_usual_head() {
    expect_word("usually");
    expect_punct('(');
    double alpha = parse_number();
    expect_punct(')');
    return alpha;
  }

  QueryDecl parse_query() {
    QueryDecl d;
    const Token& kw = advance();
    d.line = kw.line;
    d.col = kw.col;
    if (at_word("infer")) {
      advance();
      d.kind = QueryDecl::Kind::Infer;
      d.var = expect_ident("a variable name").text;
    } else if (at_word("interval")) {
      advance();
      d.kind = QueryDecl::Kind::Interval;
      d.var = expect_ident("a variable name").text;
      expect_word("in");
      d.set = expect_ident("a set name").text;
    } else if (at_word("mc")) {
      advance();
      d.kind = QueryDecl::Kind::Mc;
      d.var = expect_ident("a variable name").text;
      expect_word("in");
      d.set = expect_ident("a set name").text;
      expect_word("samples");
      expect_punct('=');
      const Token& st = peek();
      d.samples = static_cast<std::size_t>(parse_uint("sample count"));
      if (d.samples == 0) throw ParseError("sample count must be positive", st.line, st.col);
      expect_word("seed");
      expect_punct('=');
      d.seed = parse_uint("seed");
    } else if (at_word("arith")) {
      advance();
      d.kind = QueryDecl::Kind::Arith;
      d.var = expect_ident("a variable name").text;
      if (at_punct('+')) {
        d.op = ArithOp::Add;
      } else if (at_punct('-')) {
        d.op = ArithOp::Sub;
      } else if (at_punct('*')) {
        d.op = ArithOp::Mul;
      } else if (at_punct('/')) {
        d.op = ArithOp::Div;
      } else if (at_punct('^')) {
        d.op = ArithOp::Pow;
      } else {
        fail("expected an arithmetic operator (+ - * / ^)");
      }
      advance();
      d.var2 = expect_ident("a variable name").text;
      expect_word("on");
      d.out_universe = expect_ident("a universe name").text;
    } else {
      fail("expected 'infer', 'interval', 'mc' or 'arith'");
    }
    return d;
  }

  static const char* shape_word(ShapeKind k) {
    switch (k) {
      case ShapeKind::Triangular: return "triangular";
      case ShapeKind::Trapezoid: return "trapezoid";
      case ShapeKind::Interval: return "interval";
      case ShapeKind::Singleton: return "singleton";
      case ShapeKind::Grades: return "grades";
    }
    return "?";
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_statement(std::string& out, const Statement& s) {
  if (const auto* c = s.as<CanonicalStmt>()) {
    out += c->var;
    out += " is ";
    out += c->set;
  } else if (const auto* u = s.as<UsuallyStmt>()) {
    out += "usually(";
    out += number_to_string(u->alpha);
    out += ") ";
    print_statement(out, *u->inner);
  } else if (const auto* i = s.as<IfStmt>()) {
    out += "if ";
    print_statement(out, *i->antecedent);
    out += " then ";
    print_statement(out, *i->consequent);
  } else if (const auto* a = s.as<AndStmt>()) {
    print_statement(out, *a->lhs);
    out += " and ";
    print_statement(out, *a->rhs);
  } else if (const auto* o = s.as<OrStmt>()) {
    print_statement(out, *o->lhs);
    out += " or ";
    print_statement(out, *o->rhs);
  }
}

void print_params(std::string& out, const std::vector<double>& params) {
  out += '(';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ", ";
    out += number_to_string(params[i]);
  }
  out += ')';
}

const char* shape_name(ShapeKind k) {
  switch (k) {
    case ShapeKind::Triangular: return "triangular";
    case ShapeKind::Trapezoid: return "trapezoid";
    case ShapeKind::Interval: return "interval";
    case ShapeKind::Singleton: return "singleton";
    case ShapeKind::Grades: return "grades";
  }
  return "?";
}

struct Printer {
  std::string& out;

  void operator()(const UniverseDecl& d) const {
    out += "universe ";
    out += d.name;
    out += " = ";
    if (d.is_grid) {
      out += "grid";
      print_params(out, {d.lo, d.hi, d.step});
    } else {
      out += "labels(";
      for (std::size_t i = 0; i < d.labels.size(); ++i) {
        if (i) out += ", ";
        out += d.labels[i];
      }
      out += ')';
    }
  }

  void operator()(const SetDecl& d) const {
    out += "set ";
    out += d.name;
    out += " on ";
    out += d.universe;
    out += " = ";
    out += shape_name(d.shape);
    print_params(out, d.params);
  }

  void operator()(const VarDecl& d) const {
    out += "var ";
    out += d.name;
    out += " in ";
    out += d.universe;
  }

  void operator()(const AssertDecl& d) const {
    out += "assert ";
    print_statement(out, *d.statement);
  }

  void operator()(const QueryDecl& d) const {
    out += "query ";
    switch (d.kind) {
      case QueryDecl::Kind::Infer:
        out += "infer ";
        out += d.var;
        break;
      case QueryDecl::Kind::Interval:
        out += "interval ";
        out += d.var;
        out += " in ";
        out += d.set;
        break;
      case QueryDecl::Kind::Mc: {
        out += "mc ";
        out += d.var;
        out += " in ";
        out += d.set;
        char buf[64];
        std::snprintf(buf, sizeof buf, " samples=%zu seed=%llu", d.samples,
                      static_cast<unsigned long long>(d.seed));
        out += buf;
        break;
      }
      case QueryDecl::Kind::Arith:
        out += "arith ";
        out += d.var;
        out += ' ';
        out += arith_op_name(d.op);
        out += ' ';
        out += d.var2;
        out += " on ";
        out += d.out_universe;
        break;
    }
  }
};

struct SameDecl {
  bool operator()(const UniverseDecl& a, const UniverseDecl& b) const {
    return a.name == b.name && a.is_grid == b.is_grid &&
           (!a.is_grid || (a.lo == b.lo && a.hi == b.hi && a.step == b.step)) && a.labels == b.labels;
  }
  bool operator()(const SetDecl& a, const SetDecl& b) const {
    return a.name == b.name && a.universe == b.universe && a.shape == b.shape && a.params == b.params;
  }
  bool operator()(const VarDecl& a, const VarDecl& b) const {
    return a.name == b.name && a.universe == b.universe;
  }
  bool operator()(const AssertDecl& a, const AssertDecl& b) const {
    return a.statement->equals(*b.statement);
  }
  bool operator()(const QueryDecl& a, const QueryDecl& b) const {
    return a.kind == b.kind && a.var == b.var && a.set == b.set && a.samples == b.samples &&
           a.seed == b.seed && a.op == b.op && a.var2 == b.var2 && a.out_universe == b.out_universe;
  }
  template <class A, class B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

}  // namespace

KbDocument parse(std::string_view text) {
  Lexer lex(text);
  Parser p(lex.run());
  return p.run();
}

std::string pretty_print(const KbDocument& doc) {
  std::string out;
  for (const Decl& d : doc.decls) {
    std::visit(Printer{out}, d);
    out += '\n';
  }
  return out;
}

bool same_document(const KbDocument& a, const KbDocument& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    if (!std::visit(SameDecl{}, a.decls[i], b.decls[i])) return false;
  }
  return true;
}

std::string number_to_string(double v) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, p);
}

}  // namespace ukb
