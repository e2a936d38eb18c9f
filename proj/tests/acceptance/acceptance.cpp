// End-to-end acceptance checks. Each criterion recomputes its expected
// values from scratch (subset sums, hand-built focal tables, brute-force
// enumeration, two-stage simulation) and compares the library against them.
//
// Usage: ukb_acceptance CORPUS_DIR CLI_BINARY
// Prints one PASS/FAIL line per criterion; exit code is the failure count.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "ukb/combine.hpp"
#include "ukb/granule.hpp"
#include "ukb/inference.hpp"
#include "ukb/mc.hpp"
#include "ukb/translate.hpp"

using namespace ukb;
namespace fs = std::filesystem;

namespace {

constexpr double kWtTol = 1e-12;

std::string g_cli;
std::string g_corpus;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string describe_focal(const Focal& f) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "weight %.17g, %zu points", f.weight, f.set.size());
  return buf;
}

// Order-insensitive structural match against a hand-built table.
std::string match_table(const Granule& g, const std::vector<Focal>& expected, double tol) {
  if (g.focals().size() != expected.size()) {
    return "expected " + std::to_string(expected.size()) + " focals, got " +
           std::to_string(g.focals().size());
  }
  std::vector<bool> used(expected.size(), false);
  for (const Focal& f : g.focals()) {
    bool found = false;
    for (std::size_t j = 0; j < expected.size(); ++j) {
      if (used[j] || std::fabs(f.weight - expected[j].weight) > tol) continue;
      if (!f.set.same_grades_as(expected[j].set, tol)) continue;
      used[j] = true;
      found = true;
      break;
    }
    if (!found) return "unmatched focal: " + describe_focal(f);
  }
  return "";
}

// ── 1. Crisp granules against subset-sum enumeration ────────────────────

std::string check_crisp_collapse() {
  auto t0 = std::chrono::steady_clock::now();
  oracle::Rng rng(101);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + rng.pick(4);
    auto u = Universe::grid("X", 0.0, n - 1.0, 1.0);
    int k = 1 + rng.pick(4);
    auto w = rng.weights(k);
    std::vector<Focal> focals;
    std::vector<std::pair<std::uint32_t, double>> masks;
    for (int i = 0; i < k; ++i) {
      auto grades = rng.grades(n, true);
      std::uint32_t mask = 0;
      for (int p = 0; p < n; ++p) {
        if (grades[p] > 0.5) mask |= 1u << p;
      }
      masks.push_back({mask, w[i]});
      focals.push_back({FuzzySet(u, std::move(grades)), w[i]});
    }
    Granule g = Granule::make_single("v", u, std::move(focals));
    for (std::uint32_t bm = 0; bm < (1u << n); ++bm) {
      std::vector<double> bg(n, 0.0);
      for (int p = 0; p < n; ++p) bg[p] = (bm >> p) & 1 ? 1.0 : 0.0;
      FuzzySet b(u, std::move(bg));
      auto [obel, opl] = oracle::bel_pl_crisp(masks, bm);
      if (std::fabs(g.belief(b) - obel) > 1e-9 || std::fabs(g.plausibility(b) - opl) > 1e-9) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "case %d event %u: bel %.12g vs %.12g, pl %.12g vs %.12g",
                      t, bm, g.belief(b), obel, g.plausibility(b), opl);
        return buf;
      }
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 5.0) {
    return "too slow: " + std::to_string(dt) + "s (limit 5s)";
  }
  return "";
}

// ── 2. Qualified-statement focal tables ─────────────────────────────────

std::string check_translation_tables() {
  auto X = Universe::grid("X", 0.0, 3.0, 1.0);
  auto Y = Universe::grid("Y", 0.0, 2.0, 1.0);
  FuzzySet A(X, {0.0, 0.5, 1.0, 0.25});
  FuzzySet B(Y, {0.3, 1.0, 0.6});
  auto XY = Universe::product(X, Y);

  SymbolTable sym;
  sym.add_universe("X", X);
  sym.add_universe("Y", Y);
  sym.add_set("a", A);
  sym.add_set("b", B);
  sym.add_var("u", X);
  sym.add_var("v", Y);

  FuzzySet wX = FuzzySet::ones(X);
  FuzzySet wXY = FuzzySet::ones(XY);
  FuzzyRelation imp = build_relation(RelationKind::ImpLuka, A, B);
  FuzzyRelation rel_and = build_relation(RelationKind::And, A, B);
  FuzzyRelation rel_or = build_relation(RelationKind::Or, A, B);
  FuzzyRelation cylA = cyl_ext(A, XY, Axis::Left);
  FuzzyRelation cylB = cyl_ext(B, XY, Axis::Right);

  auto can_u = Statement::canonical("u", "a");
  auto can_v = Statement::canonical("v", "b");

  for (double a : {0.5, 0.8, 0.9, 0.99}) {
    struct Case {
      const char* name;
      StatementPtr stmt;
      std::vector<Focal> table;
    };
    const Case cases[] = {
        {"usually-canonical", Statement::usual(can_u, a), {{A, a}, {wX, 1 - a}}},
        {"usually-if",
         Statement::usual(Statement::if_then(can_u, can_v), a),
         {{imp, a}, {wXY, 1 - a}}},
        {"usually-or",
         Statement::usual(Statement::disjunction(can_u, can_v), a),
         {{rel_or, a}, {wXY, 1 - a}}},
        {"usually-and",
         Statement::usual(Statement::conjunction(can_u, can_v), a),
         {{rel_and, a}, {wXY, 1 - a}}},
        {"if-then-usually",
         Statement::if_then(can_u, Statement::usual(can_v, a)),
         {{imp, a}, {wXY, 1 - a}}},
        {"if-usually-then",
         Statement::if_then(Statement::usual(can_u, a), can_v),
         {{imp, a}, {cylB, 1 - a}}},
        {"if-usually-both",
         Statement::if_then(Statement::usual(can_u, a), Statement::usual(can_v, a)),
         {{imp, a * a}, {cylB, (1 - a) * a}, {wXY, 1 - a}}},
        {"and-usually-both",
         Statement::conjunction(Statement::usual(can_u, a), Statement::usual(can_v, a)),
         {{rel_and, a * a}, {cylA, a * (1 - a)}, {cylB, (1 - a) * a}, {wXY, (1 - a) * (1 - a)}}},
        {"or-usually-both",
         Statement::disjunction(Statement::usual(can_u, a), Statement::usual(can_v, a)),
         {{rel_or, a * a}, {wXY, 1 - a * a}}},
    };
    for (const Case& c : cases) {
      std::string err = match_table(translate(*c.stmt, sym), c.table, kWtTol);
      if (!err.empty()) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s at alpha=%.2f: %s", c.name, a, err.c_str());
        return buf;
      }
    }
  }
  return "";
}

// ── 3. Detachment with a crisp antecedent ───────────────────────────────

std::string check_inference_reproduction() {
  auto X = Universe::grid("X", 0.0, 4.0, 1.0);
  auto Y = Universe::grid("Y", 0.0, 3.0, 1.0);
  FuzzySet A(X, {0.0, 1.0, 1.0, 0.0, 0.0});
  FuzzySet B(Y, {0.2, 1.0, 0.7, 0.0});

  SymbolTable sym;
  sym.add_universe("X", X);
  sym.add_universe("Y", Y);
  sym.add_set("a", A);
  sym.add_set("b", B);
  sym.add_var("u", X);
  sym.add_var("v", Y);

  auto rule_stmt = Statement::if_then(Statement::canonical("u", "a"),
                                      Statement::canonical("v", "b"));
  Granule inferred =
      modus_ponens(translate(*rule_stmt, sym, RelationKind::ImpKd), from_canonical("u", A));
  if (inferred.focals().size() != 1) return "crisp case: expected a single focal";
  if (inferred.focals()[0].set.grades() != B.grades()) {
    return "crisp case: inferred set differs from the consequent";
  }

  Granule inferred2 = modus_ponens(translate(*Statement::usual(rule_stmt, 0.9), sym,
                                             RelationKind::ImpKd),
                                   usually("u", A, 0.9));
  std::string err = match_table(
      inferred2, {{B, 0.81}, {FuzzySet::ones(Y), 0.19}}, kWtTol);
  if (!err.empty()) return "double-usual case: " + err;
  return "";
}

// ── 4. Single vs squared qualification bounds ───────────────────────────

std::string check_tightness() {
  oracle::Rng rng(202);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + rng.pick(6);
    auto u = Universe::grid("X", 0.0, n - 1.0, 1.0);
    FuzzySet f(u, rng.grades(n, false));
    FuzzySet b(u, rng.grades(n, rng.pick(2) == 0));
    double a = 0.05 + 0.94 * rng.unit();
    auto rep = tightness_compare(usually("v", f, a), usually("v", f, a * a), b);
    if (!rep.holds) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "case %d alpha=%.4f: pl %.12g -> %.12g, bel %.12g -> %.12g", t, a,
                    rep.pl_single, rep.pl_squared, rep.bel_single, rep.bel_squared);
      return buf;
    }
  }
  return "";
}

// ── 5. Arithmetic combination of qualified operands ─────────────────────

std::string check_arith_granules() {
  oracle::Rng rng(303);
  const ArithOp ops[] = {ArithOp::Add, ArithOp::Mul};
  const char opch[] = {'+', '*'};
  for (int t = 0; t < 40; ++t) {
    int nx = 2 + rng.pick(4);
    int ny = 2 + rng.pick(4);
    auto X = Universe::grid("X", 0.0, nx - 1.0, 1.0);
    auto Y = Universe::grid("Y", 0.0, ny - 1.0, 1.0);
    auto ga = rng.grades(nx, false);
    auto gb = rng.grades(ny, false);
    // A whole-universe operand short-circuits; keep the extension honest.
    if (*std::min_element(ga.begin(), ga.end()) == 1.0) ga[0] = 0.25;
    if (*std::min_element(gb.begin(), gb.end()) == 1.0) gb[0] = 0.25;
    FuzzySet A(X, ga), B(Y, gb);
    double alpha = 0.75 + 0.24 * rng.unit();
    int which = rng.pick(2);
    double hi = which == 0 ? (nx - 1.0) + (ny - 1.0) : (nx - 1.0) * (ny - 1.0);
    auto out = Universe::grid("Z", 0.0, std::max(hi, 1.0), 1.0);

    Granule g = combine_arith(usually("p1", A, alpha), usually("p2", B, alpha),
                              ops[which], out);
    auto expect =
        oracle::extend(X->values(), ga, Y->values(), gb, opch[which], out->values());

    if (g.focals().size() == 1) {
      // A op B itself covered the whole line and merged with the frame focal.
      for (double v : expect.grades) {
        if (v != 1.0) return "merged to one focal but the enumeration is not the whole line";
      }
      if (std::fabs(g.focals()[0].weight - 1.0) > kWtTol) return "single focal weight not 1";
      continue;
    }
    if (g.focals().size() != 2) {
      return "case " + std::to_string(t) + ": expected 2 focals, got " +
             std::to_string(g.focals().size());
    }
    const Focal& main = g.focals()[0];
    const Focal& frame = g.focals()[1];
    if (!frame.set.is_whole()) return "second focal is not the whole output line";
    if (std::fabs(main.weight - alpha * alpha) > kWtTol ||
        std::fabs(frame.weight - (1 - alpha * alpha)) > kWtTol) {
      return "weights differ from alpha^2 / 1-alpha^2";
    }
    if (main.set.grades() != expect.grades) {
      return "case " + std::to_string(t) + ": combined set differs from pair enumeration";
    }
  }
  return "";
}

// ── 6. Simulation stays inside the probability bounds ───────────────────

Granule pin_focals(const Granule& g, bool lowest) {
  std::vector<Focal> focals;
  for (const auto& f : g.focals()) {
    std::vector<double> grades(f.set.size(), 0.0);
    std::size_t idx = lowest ? 0 : f.set.size() - 1;
    while (f.set.grade(idx) <= 0.0) idx += lowest ? 1 : -1;
    grades[idx] = 1.0;
    focals.push_back({FuzzySet(f.set.universe(), std::move(grades)), f.weight});
  }
  return Granule::make_single(g.vars()[0], g.universe(), std::move(focals));
}

std::string check_mc_bounds() {
  auto t0 = std::chrono::steady_clock::now();
  oracle::Rng rng(404);
  SimConfig cfg;
  cfg.samples = 100000;
  const double eps = 4.0 * std::sqrt(0.25 / static_cast<double>(cfg.samples));
  for (int t = 0; t < 100; ++t) {
    int n = 2 + rng.pick(4);
    auto u = Universe::grid("X", 0.0, n - 1.0, 1.0);
    int k = 1 + rng.pick(3);
    auto w = rng.weights(k);
    std::vector<Focal> focals;
    for (int i = 0; i < k; ++i) focals.push_back({FuzzySet(u, rng.grades(n, true)), w[i]});
    Granule g = Granule::make_single("v", u, std::move(focals));
    FuzzySet b(u, rng.grades(n, true));
    double bel = g.belief(b), pl = g.plausibility(b);

    const Granule variants[] = {g, pin_focals(g, true), pin_focals(g, false)};
    for (int v = 0; v < 3; ++v) {
      cfg.seed = static_cast<std::uint64_t>(t) * 3 + v;
      double est = estimate_prob(sample_granule(variants[v], cfg), b);
      if (est < bel - eps || est > pl + eps) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "case %d rule %d: estimate %.6f outside [%.6f, %.6f]", t,
                      v, est, bel - eps, pl + eps);
        return buf;
      }
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 60.0) {
    return "too slow: " + std::to_string(dt) + "s (limit 60s)";
  }
  return "";
}

// ── 7. Explicit tables equal product-rule combination ───────────────────

std::string check_compositional_identity() {
  oracle::Rng rng(505);
  for (int t = 0; t < 20; ++t) {
    int nx = 2 + rng.pick(4);
    int ny = 2 + rng.pick(4);
    auto X = Universe::grid("X", 0.0, nx - 1.0, 1.0);
    auto Y = Universe::grid("Y", 0.0, ny - 1.0, 1.0);
    FuzzySet A(X, rng.grades(nx, false));
    FuzzySet B(Y, rng.grades(ny, false));
    double a = 0.05 + 0.9 * rng.unit();
    double b = 0.05 + 0.9 * rng.unit();

    SymbolTable sym;
    sym.add_universe("X", X);
    sym.add_universe("Y", Y);
    sym.add_set("a", A);
    sym.add_set("b", B);
    sym.add_var("u", X);
    sym.add_var("v", Y);

    auto stmt = Statement::if_then(Statement::usual(Statement::canonical("u", "a"), a),
                                   Statement::usual(Statement::canonical("v", "b"), b));
    Granule via_table = translate(*stmt, sym, RelationKind::ImpLuka);
    Granule via_product =
        combine_joint(usually("u", A, a), usually("v", B, b), RelationKind::ImpLuka);
    if (!via_table.same_as(via_product, kWtTol)) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "case %d (alpha=%.4f, beta=%.4f): granules differ", t, a, b);
      return buf;
    }
  }
  return "";
}

// ── 8. CLI corpus runs end-to-end with byte-stable output ───────────────

int run_capture(const std::string& cmd, std::string& out) {
  out.clear();
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return -1;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  int status = pclose(p);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string check_cli_corpus() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(g_corpus)) {
    if (e.path().extension() == ".ukb") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.size() < 6) {
    return "corpus has " + std::to_string(files.size()) + " files, need at least 6";
  }
  for (const auto& f : files) {
    std::string cmd = "'" + g_cli + "' run '" + f.string() + "' --format json 2>/dev/null";
    std::string out1, out2;
    int rc1 = run_capture(cmd, out1);
    int rc2 = run_capture(cmd, out2);
    if (rc1 != 0 || rc2 != 0) {
      return f.filename().string() + ": exit codes " + std::to_string(rc1) + "/" +
             std::to_string(rc2);
    }
    if (out1.empty()) return f.filename().string() + ": no output";
    if (out1 != out2) return f.filename().string() + ": output changed between runs";
    if (out1.find("\"ok\": true") == std::string::npos) {
      return f.filename().string() + ": bound check not ok";
    }
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s CORPUS_DIR CLI_BINARY\n", argv[0]);
    return 64;
  }
  g_corpus = argv[1];
  g_cli = argv[2];

  struct Criterion {
    const char* name;
    std::string (*fn)();
  };
  const Criterion criteria[] = {
      {"crisp granules match subset-sum enumeration (200 cases, all events)",
       check_crisp_collapse},
      {"qualified-statement tables match hand-built focals (9 forms x 4 alphas)",
       check_translation_tables},
      {"crisp detachment returns the consequent; double-usual gives 0.81/0.19",
       check_inference_reproduction},
      {"single qualification bounds are tighter than squared (100 cases)", check_tightness},
      {"arithmetic combination: two focals, set matches pair enumeration (40 cases)",
       check_arith_granules},
      {"simulation estimates stay inside [bel-eps, pl+eps] (100 cases x 3 rules)",
       check_mc_bounds},
      {"explicit conditional tables equal product-rule combination (20 cases)",
       check_compositional_identity},
      {"corpus runs through the CLI with byte-stable JSON output", check_cli_corpus},
  };

  int failures = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    std::string err = criteria[i].fn();
    double dt = seconds_since(t0);
    if (err.empty()) {
      std::printf("PASS  %zu  %s  (%.2fs)\n", i + 1, criteria[i].name, dt);
    } else {
      std::printf("FAIL  %zu  %s: %s\n", i + 1, criteria[i].name, err.c_str());
      ++failures;
    }
  }
  if (failures == 0) {
    std::printf("all %zu criteria passed\n", std::size(criteria));
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures;
}