// statement.hpp — linguistic-statement ASTs and the symbol table that
// resolves their variable and set names.

#ifndef UKB_STATEMENT_HPP
#define UKB_STATEMENT_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "ukb/fuzzy.hpp"

namespace ukb {

class Statement;
using StatementPtr = std::shared_ptr<const Statement>;

/// "V is A", with A referenced by name and resolved at translation time.
struct CanonicalStmt {
  std::string var;
  std::string set;
};

/// "usually(alpha) S".
struct UsuallyStmt {
  StatementPtr inner;
  double alpha;
};

/// "if S1 then S2".
struct IfStmt {
  StatementPtr antecedent;
  StatementPtr consequent;
};

struct AndStmt {
  StatementPtr lhs;
  StatementPtr rhs;
};

struct OrStmt {
  StatementPtr lhs;
  StatementPtr rhs;
};

class Statement {
 public:
  using Node = std::variant<CanonicalStmt, UsuallyStmt, IfStmt, AndStmt, OrStmt>;

  static StatementPtr canonical(std::string var, std::string set, int line = 0, int col = 0);
  static StatementPtr usual(StatementPtr inner, double alpha, int line = 0, int col = 0);
  static StatementPtr if_then(StatementPtr antecedent, StatementPtr consequent, int line = 0,
                              int col = 0);
  static StatementPtr conjunction(StatementPtr lhs, StatementPtr rhs, int line = 0, int col = 0);
  static StatementPtr disjunction(StatementPtr lhs, StatementPtr rhs, int line = 0, int col = 0);

  const Node& node() const { return node_; }
  int line() const { return line_; }
  int column() const { return column_; }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node_);
  }

  bool equals(const Statement& other) const;

 private:
  Statement(Node node, int line, int col) : node_(std::move(node)), line_(line), column_(col) {}

  Node node_;
  int line_ = 0;
  int column_ = 0;
};

/// Declared universes, named fuzzy sets, and variables of a knowledge base.
class SymbolTable {
 public:
  void add_universe(const std::string& name, UniversePtr u);
  void add_set(const std::string& name, FuzzySet set);
  void add_var(const std::string& name, UniversePtr u);

  bool has_universe(const std::string& name) const { return universes_.count(name) > 0; }
  bool has_set(const std::string& name) const { return sets_.count(name) > 0; }
  bool has_var(const std::string& name) const { return vars_.count(name) > 0; }

  const UniversePtr& universe(const std::string& name) const;
  const FuzzySet& set(const std::string& name) const;
  const UniversePtr& var_universe(const std::string& name) const;

 private:
  std::map<std::string, UniversePtr> universes_;
  std::map<std::string, FuzzySet> sets_;
  std::map<std::string, UniversePtr> vars_;
};

}  // namespace ukb

#endif
