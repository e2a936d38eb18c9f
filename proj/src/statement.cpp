#include "ukb/statement.hpp"

#include "ukb/error.hpp"

namespace ukb {

StatementPtr Statement::canonical(std::string var, std::string set, int line, int col) {
  return StatementPtr(
      new Statement(CanonicalStmt{std::move(var), std::move(set)}, line, col));
}

StatementPtr Statement::usual(StatementPtr inner, double alpha, int line, int col) {
  return StatementPtr(new Statement(UsuallyStmt{std::move(inner), alpha}, line, col));
}

StatementPtr Statement::if_then(StatementPtr antecedent, StatementPtr consequent, int line,
                                int col) {
  return StatementPtr(
      new Statement(IfStmt{std::move(antecedent), std::move(consequent)}, line, col));
}

StatementPtr Statement::conjunction(StatementPtr lhs, StatementPtr rhs, int line, int col) {
  return StatementPtr(new Statement(AndStmt{std::move(lhs), std::move(rhs)}, line, col));
}

StatementPtr Statement::disjunction(StatementPtr lhs, StatementPtr rhs, int line, int col) {
  return StatementPtr(new Statement(OrStmt{std::move(lhs), std::move(rhs)}, line, col));
}

bool Statement::equals(const Statement& other) const {
  if (node_.index() != other.node_.index()) return false;
  if (const auto* c = as<CanonicalStmt>()) {
    const auto* o = other.as<CanonicalStmt>();
    return c->var == o->var && c->set == o->set;
  }
  if (const auto* u = as<UsuallyStmt>()) {
    const auto* o = other.as<UsuallyStmt>();
    return u->alpha == o->alpha && u->inner->equals(*o->inner);
  }
  if (const auto* i = as<IfStmt>()) {
    const auto* o = other.as<IfStmt>();
    return i->antecedent->equals(*o->antecedent) && i->consequent->equals(*o->consequent);
  }
  if (const auto* a = as<AndStmt>()) {
    const auto* o = other.as<AndStmt>();
    return a->lhs->equals(*o->lhs) && a->rhs->equals(*o->rhs);
  }
  const auto* d = as<OrStmt>();
  const auto* o = other.as<OrStmt>();
  return d->lhs->equals(*o->lhs) && d->rhs->equals(*o->rhs);
}

void SymbolTable::add_universe(const std::string& name, UniversePtr u) {
  if (!universes_.emplace(name, std::move(u)).second)
    throw Error("duplicate universe '" + name + "'");
}

void SymbolTable::add_set(const std::string& name, FuzzySet set) {
  if (!sets_.emplace(name, std::move(set)).second) throw Error("duplicate set '" + name + "'");
}

void SymbolTable::add_var(const std::string& name, UniversePtr u) {
  if (!vars_.emplace(name, std::move(u)).second) throw Error("duplicate var '" + name + "'");
}

const UniversePtr& SymbolTable::universe(const std::string& name) const {
  auto it = universes_.find(name);
  if (it == universes_.end()) throw Error("unknown universe '" + name + "'");
  return it->second;
}

const FuzzySet& SymbolTable::set(const std::string& name) const {
  auto it = sets_.find(name);
  if (it == sets_.end()) throw Error("unknown set '" + name + "'");
  return it->second;
}

const UniversePtr& SymbolTable::var_universe(const std::string& name) const {
  auto it = vars_.find(name);
  if (it == vars_.end()) throw Error("unknown var '" + name + "'");
  return it->second;
}

}  // namespace ukb
