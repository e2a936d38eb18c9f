// parser.hpp — the .ukb knowledge-base language.
//
// Line-oriented declarations, '#' comments:
//
//   universe X = grid(0, 10, 1)
//   universe W = labels(flies, walks)
//   set fast on X = triangular(5, 8, 10)      # or trapezoid/interval/
//   set tall on X = grades(0, 0.3, 1, ...)    #    singleton/grades
//   var speed in X
//   assert usually(0.9) if age is young then speed is fast
//   assert speed is fast and usually(0.8) age is young
//   query infer speed
//   query interval speed in fast
//   query mc speed in fast samples=100000 seed=7
//   query arith price1 + price2 on T

#ifndef UKB_PARSER_HPP
#define UKB_PARSER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ukb/arith.hpp"
#include "ukb/statement.hpp"

namespace ukb {

struct UniverseDecl {
  std::string name;
  bool is_grid = false;
  double lo = 0.0, hi = 0.0, step = 0.0;  // grid
  std::vector<std::string> labels;        // labels
  int line = 0, col = 0;
};

enum class ShapeKind { Triangular, Trapezoid, Interval, Singleton, Grades };

struct SetDecl {
  std::string name;
  std::string universe;
  ShapeKind shape = ShapeKind::Grades;
  std::vector<double> params;
  int line = 0, col = 0;
};

struct VarDecl {
  std::string name;
  std::string universe;
  int line = 0, col = 0;
};

struct AssertDecl {
  StatementPtr statement;
  int line = 0, col = 0;
};

struct QueryDecl {
  enum class Kind { Infer, Interval, Mc, Arith };
  Kind kind = Kind::Infer;
  std::string var;
  std::string set;               // interval/mc
  std::size_t samples = 0;       // mc
  std::uint64_t seed = 0;        // mc
  ArithOp op = ArithOp::Add;     // arith
  std::string var2;              // arith
  std::string out_universe;      // arith
  int line = 0, col = 0;
};

using Decl = std::variant<UniverseDecl, SetDecl, VarDecl, AssertDecl, QueryDecl>;

struct KbDocument {
  std::vector<Decl> decls;
};

/// Parse a .ukb document. Throws ParseError with position and an
/// expected-token message on bad syntax. Name resolution happens later.
KbDocument parse(std::string_view text);

/// Canonical text form; parse(pretty_print(parse(t))) produces an
/// identical document.
std::string pretty_print(const KbDocument& doc);

/// Structural equality, ignoring source positions.
bool same_document(const KbDocument& a, const KbDocument& b);

/// Shortest decimal text that reparses to exactly v.
std::string number_to_string(double v);

}  // namespace ukb

#endif
