#include "ukb/runner.hpp"

#include <cstdio>
#include <utility>
#include <variant>

#include "ukb/error.hpp"
#include "ukb/inference.hpp"
#include "ukb/json_io.hpp"
#include "ukb/mc.hpp"

namespace ukb {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string grades_text(const std::vector<double>& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ", ";
    out += fmt(g[i]);
  }
  out += "]";
  return out;
}

std::string universe_summary(const Universe& u) {
  switch (u.kind()) {
    case UniverseKind::Grid:
      return u.id() + " = grid(" + number_to_string(u.grid_min()) + ", " +
             number_to_string(u.grid_max()) + ", " + number_to_string(u.grid_step()) + ")";
    case UniverseKind::Labeled: {
      std::string out = u.id() + " = labels(";
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) out += ", ";
        out += u.label(i);
      }
      return out + ")";
    }
    case UniverseKind::Product:
      return u.left()->id() + " x " + u.right()->id();
  }
  return "?";
}

void granule_table(std::string& out, const Granule& g) {
  out += "  granule for " + g.vars()[0];
  if (g.vars().size() == 2) out += ", " + g.vars()[1];
  out += " on " + universe_summary(*g.universe()) + "\n";
  for (const Focal& f : g.focals()) {
    char w[32];
    std::snprintf(w, sizeof w, "  %10s  ", fmt(f.weight).c_str());
    out += w;
    out += grades_text(f.set.grades());
    out += "\n";
  }
  if (g.conflict() > 0.0) {
    out += "  conflict mass " + fmt(g.conflict()) + "\n";
  }
}

std::string query_text(const QueryDecl& q) {
  KbDocument one;
  one.decls.push_back(q);
  std::string s = pretty_print(one);
  // Drop "query " prefix and the trailing newline.
  return s.substr(6, s.size() - 7);
}

class Runner {
 public:
  Runner(const KbDocument& doc, const RunOptions& opts) : doc_(doc), opts_(opts) {
    kb_.set_conflict_policy(opts.conflict);
  }

  RunResult run() {
    for (const Decl& d : doc_.decls) {
      std::visit([this](const auto& decl) { handle(decl); }, d);
    }
    RunResult res;
    res.bound_violation = bound_violation_;
    if (opts_.format == OutputFormat::Json) {
      Json root;
      root["queries"] = std::move(queries_);
      root["ok"] = !bound_violation_;
      res.output = root.dump(2) + "\n";
    } else {
      res.output = std::move(table_);
    }
    return res;
  }

 private:
  // Re-raise library errors with the declaration's source position.
  template <typename Fn>
  void at(int line, int col, Fn&& fn) {
    try {
      fn();
    } catch (const SemanticError&) {
      throw;
    } catch (const Error& e) {
      throw SemanticError(e.what(), line, col);
    }
  }

  void handle(const UniverseDecl& d) {
    at(d.line, d.col, [&] {
      if (kb_.symbols().has_universe(d.name)) {
        throw SemanticError("universe '" + d.name + "' already declared", d.line, d.col);
      }
      kb_.symbols().add_universe(
          d.name, d.is_grid ? Universe::grid(d.name, d.lo, d.hi, d.step)
                            : Universe::labels(d.name, d.labels));
    });
  }

  void handle(const SetDecl& d) {
    at(d.line, d.col, [&] {
      if (kb_.symbols().has_set(d.name)) {
        throw SemanticError("set '" + d.name + "' already declared", d.line, d.col);
      }
      const UniversePtr& u = kb_.symbols().universe(d.universe);
      kb_.symbols().add_set(d.name, build_set(d, u));
    });
  }

  static FuzzySet build_set(const SetDecl& d, const UniversePtr& u) {
    const std::vector<double>& p = d.params;
    switch (d.shape) {
      case ShapeKind::Triangular: return triangular(u, p[0], p[1], p[2]);
      case ShapeKind::Trapezoid: return trapezoid(u, p[0], p[1], p[2], p[3]);
      case ShapeKind::Interval: return crisp_interval(u, p[0], p[1]);
      case ShapeKind::Singleton: return singleton(u, p[0]);
      case ShapeKind::Grades:
        if (p.size() != u->size()) {
          char buf[96];
          std::snprintf(buf, sizeof buf, "grades(...) needs %zu values for this universe, got %zu",
                        u->size(), p.size());
          throw Error(buf);
        }
        return FuzzySet(u, p);
    }
    throw Error("unreachable shape kind");
  }

  void handle(const VarDecl& d) {
    at(d.line, d.col, [&] {
      if (kb_.symbols().has_var(d.name)) {
        throw SemanticError("variable '" + d.name + "' already declared", d.line, d.col);
      }
      kb_.symbols().add_var(d.name, kb_.symbols().universe(d.universe));
    });
  }

  void handle(const AssertDecl& d) {
    at(d.line, d.col, [&] { kb_.assert_statement(*d.statement, opts_.implication); });
  }

  void handle(const QueryDecl& q) {
    at(q.line, q.col, [&] {
      switch (q.kind) {
        case QueryDecl::Kind::Infer: run_infer(q); break;
        case QueryDecl::Kind::Interval: run_interval(q); break;
        case QueryDecl::Kind::Mc: run_mc(q); break;
        case QueryDecl::Kind::Arith: run_arith(q); break;
      }
    });
  }

  // Resolve a query's set against the variable's universe.
  const FuzzySet& event_set(const QueryDecl& q) {
    const FuzzySet& b = kb_.symbols().set(q.set);
    const UniversePtr& vu = kb_.symbols().var_universe(q.var);
    require_same_universe(*b.universe(), *vu, "query");
    return b;
  }

  void run_infer(const QueryDecl& q) {
    KnowledgeBase::InferResult res = kb_.infer(q.var);
    Json j;
    j["query"] = query_text(q);
    j["no_information"] = res.no_information;
    j["granule"] = granule_to_json(res.granule);
    queries_.push_back(std::move(j));

    table_ += "query " + query_text(q) + "\n";
    if (res.no_information) table_ += "  (no information; vacuous granule)\n";
    granule_table(table_, res.granule);
    table_ += "\n";
  }

  void run_interval(const QueryDecl& q) {
    KnowledgeBase::InferResult res = kb_.infer(q.var);
    auto [bel, pl] = res.granule.prob_interval(event_set(q));
    Json j;
    j["query"] = query_text(q);
    j["no_information"] = res.no_information;
    j["bel"] = bel;
    j["pl"] = pl;
    queries_.push_back(std::move(j));

    table_ += "query " + query_text(q) + "\n";
    if (res.no_information) table_ += "  (no information; vacuous granule)\n";
    table_ += "  bel = " + fmt(bel) + "\n";
    table_ += "  pl  = " + fmt(pl) + "\n\n";
  }

  void run_mc(const QueryDecl& q) {
    KnowledgeBase::InferResult res = kb_.infer(q.var);
    SimConfig cfg;
    cfg.samples = q.samples;
    cfg.seed = q.seed;
    cfg.selection = Selection::Uniform;
    BoundsReport rep = check_bounds(res.granule, event_set(q), cfg);
    if (!rep.pass) bound_violation_ = true;

    Json j;
    j["query"] = query_text(q);
    j["report"] = report_to_json(rep);
    queries_.push_back(std::move(j));

    table_ += "query " + query_text(q) + "\n";
    table_ += "  bel      = " + fmt(rep.bel) + "\n";
    table_ += "  pl       = " + fmt(rep.pl) + "\n";
    table_ += "  estimate = " + fmt(rep.estimate) + "\n";
    table_ += "  epsilon  = " + fmt(rep.epsilon) + "\n";
    table_ += std::string("  pass     = ") + (rep.pass ? "yes" : "no") + "\n\n";
  }

  void run_arith(const QueryDecl& q) {
    Granule g1 = kb_.infer(q.var).granule;
    Granule g2 = kb_.infer(q.var2).granule;
    const UniversePtr& out = kb_.symbols().universe(q.out_universe);
    ArithWarnings warn;
    Granule g = combine_arith(g1, g2, q.op, out, &warn);

    Json j;
    j["query"] = query_text(q);
    j["granule"] = granule_to_json(g);
    j["dropped_sup"] = warn.dropped_sup;
    j["dropped_pairs"] = warn.dropped_pairs;
    j["skipped_pairs"] = warn.skipped_pairs;
    queries_.push_back(std::move(j));

    table_ += "query " + query_text(q) + "\n";
    granule_table(table_, g);
    if (warn.dropped_pairs > 0) {
      table_ += "  dropped mass outside grid: sup " + fmt(warn.dropped_sup) + " over " +
                std::to_string(warn.dropped_pairs) + " point pair(s)\n";
    }
    if (warn.skipped_pairs > 0) {
      table_ += "  undefined point pair(s) skipped: " + std::to_string(warn.skipped_pairs) + "\n";
    }
    table_ += "\n";
  }

  const KbDocument& doc_;
  const RunOptions& opts_;
  KnowledgeBase kb_;
  Json queries_ = Json::array();
  std::string table_;
  bool bound_violation_ = false;
};

}  // namespace

RunResult run_document(const KbDocument& doc, const RunOptions& opts) {
  Runner r(doc, opts);
  return r.run();
}

}  // namespace ukb
