// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "qcr/function_file.hpp"
#include "qcr/harmonicity.hpp"
#include "qcr/laplace_grid.hpp"
#include "qcr/path_integral.hpp"
#include "qcr/regularity.hpp"
#include "qcr/sampling.hpp"

namespace {

using namespace qcr;
using testing::fixture;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.clear();
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

QuatFunction load(const std::string& name) {
  return FunctionFile::load(fixture(name)).quat_function();
}

CheckOptions numeric_options(int points = 100) {
  CheckOptions o;
  o.mode = CheckMode::numeric;
  o.points = points;
  return o;
}

double worst(const ConstraintReport& r) {
  double w = 0.0;
  for (const auto& c : r.results) w = std::max(w, c.residual_max);
  return w;
}

double worst(const HarmonicReport& r) {
  double w = 0.0;
  for (const auto& c : r.components) w = std::max(w, c.residual_max);
  return w;
}

// Quaternionic functions used for the corpus-wide criteria.
std::vector<std::pair<std::string, QuatFunction>> corpus() {
  std::vector<std::pair<std::string, QuatFunction>> out;
  for (const char* name : {"identity.qfn", "constant.qfn", "linear1234.qfn",
                           "qsquared.qfn", "quartic.qfn", "fueter_left.qfn",
                           "transcendental.qfn"}) {
    out.emplace_back(name, load(name));
  }
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int n = 0; n < 20; ++n) {
    out.emplace_back("linear#" + std::to_string(n),
                     structure_linear_function(u(rng), u(rng), u(rng), u(rng)));
  }
  return out;
}

Verdict relation_set_fidelity() {
  struct Row {
    const char* id;
    SignedPartial lhs, rhs;
  };
  const Row table[12] = {
      {"R1.1", {+1, 1, 1}, {+1, 2, 2}}, {"R1.2", {+1, 2, 2}, {+1, 3, 3}},
      {"R1.3", {+1, 3, 3}, {+1, 4, 4}}, {"R2.1", {+1, 2, 1}, {-1, 1, 2}},
      {"R2.2", {-1, 1, 2}, {-1, 3, 4}}, {"R2.3", {-1, 3, 4}, {+1, 4, 3}},
      {"R3.1", {+1, 3, 1}, {-1, 1, 3}}, {"R3.2", {-1, 1, 3}, {-1, 2, 4}},
      {"R3.3", {-1, 2, 4}, {+1, 4, 2}}, {"R4.1", {+1, 4, 1}, {+1, 1, 4}},
      {"R4.2", {+1, 1, 4}, {-1, 2, 3}}, {"R4.3", {-1, 2, 3}, {-1, 3, 2}},
  };
  Verdict v;
  const auto got = relation_constraints();
  v.require(got.size() == 12, "expected 12 constraints, got " + std::to_string(got.size()));
  for (std::size_t k = 0; k < std::min<std::size_t>(12, got.size()); ++k) {
    const bool same = got[k].id == table[k].id && got[k].lhs.size() == 1 &&
                      got[k].rhs.size() == 1 && got[k].lhs[0] == table[k].lhs &&
                      got[k].rhs[0] == table[k].rhs;
    v.require(same, "mismatch at " + std::string(table[k].id));
  }
  if (v.pass) v.detail = "12/12 constraints match, R4.1 is +dF4/dx1 = +dF1/dx4";
  return v;
}

Verdict positive_fixtures() {
  std::vector<std::pair<std::string, QuatFunction>> fixtures = {
      {"identity", load("identity.qfn")}, {"constant", load("constant.qfn")}};
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int n = 0; n < 4; ++n) {
    const double c[4] = {u(rng), u(rng), u(rng), u(rng)};
    QuatFunction f;
    for (int m = 0; m < 4; ++m) f.components[m] = Expr::literal(c[m]);
    fixtures.emplace_back("constant#" + std::to_string(n), f);
  }
  for (int n = 0; n < 1000; ++n) {
    fixtures.emplace_back("linear#" + std::to_string(n),
                          structure_linear_function(u(rng), u(rng), u(rng), u(rng)));
  }
  Verdict v;
  double first = 0.0, second = 0.0;
  const CheckOptions sym;
  const CheckOptions num = numeric_options();
  for (const auto& [name, f] : fixtures) {
    v.require(check_cr(f, sym).pass, name + " first-order symbolic");
    const auto n1 = check_cr(f, num);
    v.require(n1.pass, name + " first-order numeric");
    v.require(check_second_order_chains(f, sym).pass, name + " second-order symbolic");
    const auto n2 = check_second_order_chains(f, num);
    v.require(n2.pass, name + " second-order numeric");
    v.require(check_harmonic(f, sym).pass, name + " harmonic symbolic");
    const auto nh = check_harmonic(f, num);
    v.require(nh.pass, name + " harmonic numeric");
    first = std::max(first, worst(n1));
    second = std::max(second, std::max(worst(n2), worst(nh)));
  }
  v.require(first <= 1e-6, "first-order residual " + fmt(first));
  v.require(second <= 1e-3, "second-order residual " + fmt(second));
  if (v.pass) {
    v.detail = std::to_string(fixtures.size()) + " functions; max numeric residual " +
               fmt(first) + " (first order), " + fmt(second) + " (second order)";
  }
  return v;
}

Verdict negative_fixture() {
  const QuatFunction f = load("qsquared.qfn");
  Verdict v;
  CheckOptions at_one = numeric_options();
  at_one.sample_points = {{1, 1, 1, 1}};
  const auto point = check_cr(f, at_one);
  const auto* c = point.find("R2.2");
  v.require(c != nullptr && c->lhs == "-dF1/dx2" && c->rhs == "-dF3/dx4",
            "R2.2 is not -dF1/dx2 = -dF3/dx4");
  const double r = c ? c->residual_max : NAN;
  v.require(std::abs(r - 2.0) <= 1e-4, "residual at (1,1,1,1) is " + fmt(r));
  v.require(!point.pass && c && !c->pass, "numeric check passed at (1,1,1,1)");
  v.require(!check_cr_numeric(f, 100, kNumericFirstOrderTolerance, kDefaultSeed).pass,
            "numeric check over random points passed");
  const auto sym = check_cr_symbolic(f);
  v.require(!sym.pass && !sym.find("R2.2")->pass, "symbolic check passed");
  if (v.pass) {
    v.detail = "R2.2 residual " + fmt(r) + " at (1,1,1,1); symbolic residual " +
               sym.find("R2.2")->residual_expr;
  }
  return v;
}

Verdict implication_on_corpus() {
  Verdict v;
  int regular = 0;
  double worst_numeric = 0.0;
  for (const auto& [name, f] : corpus()) {
    if (!check_cr_symbolic(f).pass) continue;
    ++regular;
    const auto sym = check_harmonic(f, CheckOptions{});
    for (const auto& c : sym.components) {
      v.require(c.laplacian_expr == "0" || c.pass, name + " symbolic Laplacian of " + c.name);
    }
    v.require(sym.pass, name + " symbolic harmonicity");
    CheckOptions num = numeric_options();
    num.tol = 1e-3;
    const auto nh = check_harmonic(f, num);
    v.require(nh.pass, name + " numeric harmonicity");
    worst_numeric = std::max(worst_numeric, worst(nh));
  }
  v.require(regular > 0, "no corpus function passed the first-order check");
  if (v.pass) {
    v.detail = std::to_string(regular) + " regular functions, all Laplacians zero; max numeric |Laplacian| " +
               fmt(worst_numeric);
  }
  return v;
}

Verdict planar_baseline() {
  Verdict v;
  const CheckOptions sym;
  const CheckOptions num = numeric_options();
  for (const char* name : {"zsquared.qfn", "expz.qfn"}) {
    const auto [u, w] = FunctionFile::load(fixture(name)).complex_pair();
    v.require(check_cr_complex(u, w, sym).pass, std::string(name) + " CR symbolic");
    v.require(check_cr_complex(u, w, num).pass, std::string(name) + " CR numeric");
    v.require(check_harmonic_complex(u, w, sym).pass, std::string(name) + " Laplace symbolic");
    v.require(check_harmonic_complex(u, w, num).pass, std::string(name) + " Laplace numeric");
  }
  const auto [u, w] = FunctionFile::load(fixture("conjugate.qfn")).complex_pair();
  const auto bad = check_cr_complex(u, w, num);
  v.require(!bad.pass && !bad.results[0].pass, "conjugate pair passed CR.1");
  v.require(std::abs(bad.results[0].residual_max - 2.0) <= 1e-6,
            "conjugate CR.1 residual " + fmt(bad.results[0].residual_max));
  v.require(!check_cr_complex(u, w, sym).results[0].pass, "conjugate passed symbolically");
  if (v.pass) v.detail = "z^2, exp(z) pass; conjugate CR.1 residual " + fmt(bad.results[0].residual_max);
  return v;
}

Verdict gradient_theorem() {
  Verdict v;
  double worst_open = 0.0, worst_closed = 0.0;
  for (const auto& [name, f] : corpus()) {
    Sampler sampler(6);
    for (int n = 0; n < 100; ++n) {
      const Quaternion a = Quaternion::from_array(sampler.point(-1, 1));
      const Quaternion b = Quaternion::from_array(sampler.point(-1, 1));
      const Path p = random_polyline(a, b, sampler);
      for (double r : fundamental_theorem_check(f, p).residual) {
        worst_open = std::max(worst_open, r);
      }
      if (n % 10 == 0) {
        const Path loop = p.concatenated(random_polyline(b, a, sampler));
        for (double r : fundamental_theorem_check(f, loop).integral) {
          worst_closed = std::max(worst_closed, std::abs(r));
        }
      }
    }
  }
  v.require(worst_open <= 1e-8, "open-path residual " + fmt(worst_open));
  v.require(worst_closed <= 1e-9, "closed-loop integral " + fmt(worst_closed));
  if (v.pass) {
    v.detail = "max residual " + fmt(worst_open) + " over 100 polylines per function; closed loops " +
               fmt(worst_closed);
  }
  return v;
}

Verdict quadrature() {
  Verdict v;
  const QuatFunction q = FunctionFile::load(fixture("integrand_q.qfn")).integrand();
  const auto r = integrate_f_dq(q, Path::polyline({{0, 0, 0, 0}, {1, 1, 0, 0}}));
  const auto b2 = testing::matrix_product({1, 1, 0, 0}, {1, 1, 0, 0});
  const Quaternion expected{b2[0] / 2, b2[1] / 2, b2[2] / 2, b2[3] / 2};
  const double err = max_abs_diff(r.value, expected);
  v.require(err <= 1e-10, "f(q)=q error " + fmt(err));
  const QuatFunction c = FunctionFile::load(fixture("integrand_const.qfn")).integrand();
  const auto probe = path_independence_probe(c, {0, 0, 0, 0}, {1, -2, 0.5, 3}, 10, kDefaultSeed);
  v.require(probe.max_deviation <= 1e-9, "constant spread " + fmt(probe.max_deviation));
  if (v.pass) {
    v.detail = "integral of q dq error " + fmt(err) + "; constant spread " +
               fmt(probe.max_deviation) + " over 10 paths";
  }
  return v;
}

Verdict solver_exactness() {
  Verdict v;
  std::string detail;
  for (const char* bc : {"x1 - x2", "x1^2 - x2^2"}) {
    Grid4D g(9, Interval{0.0, 1.0});
    apply_boundary(g, parse(bc));
    SolveOptions o;
    o.method = SolveMethod::sor;
    o.omega = 1.5;
    o.tol = 1e-12;
    const SolveStats s = solve(g, o);
    v.require(s.converged, std::string(bc) + " did not converge");
    const double err = compare_to_reference(g, parse(bc)).max_err;
    v.require(err <= 1e-9, std::string(bc) + " max error " + fmt(err));
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g.is_boundary(g.multi_index(i))) {
        lo = std::min(lo, g.values()[i]);
        hi = std::max(hi, g.values()[i]);
      }
    }
    bool bounded = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double x = g.values()[i];
      bounded = bounded && x >= lo - 1e-12 && x <= hi + 1e-12;
    }
    v.require(bounded, std::string(bc) + " violates the maximum principle");
    detail += std::string(detail.empty() ? "" : ", ") + bc + ": " + fmt(err) + " (" +
              std::to_string(s.iterations) + " sweeps)";
  }
  if (v.pass) v.detail = detail;
  return v;
}

Verdict solver_order() {
  Verdict v;
  const Expr quartic = parse("x1^4 - 6*x1^2*x2^2 + x2^4");
  double errs[2];
  const int sizes[2] = {9, 17};
  for (int k = 0; k < 2; ++k) {
    Grid4D g(sizes[k], Interval{0.0, 1.0});
    apply_boundary(g, quartic);
    SolveOptions o;
    o.method = SolveMethod::sor;
    o.omega = 2.0 / (1.0 + std::sin(std::acos(-1.0) / (sizes[k] - 1)));
    o.tol = 1e-13;
    const SolveStats s = solve(g, o);
    v.require(s.converged, "n=" + std::to_string(sizes[k]) + " did not converge");
    errs[k] = compare_to_reference(g, quartic).max_err;
  }
  const double ratio = errs[0] / errs[1];
  v.require(ratio >= 3.5 && ratio <= 4.5, "ratio " + fmt(ratio));
  v.detail = "max error " + fmt(errs[0]) + " (n=9), " + fmt(errs[1]) + " (n=17), ratio " +
             fmt(ratio);
  return v;
}

Verdict cli_determinism() {
  namespace fs = std::filesystem;
  Verdict v;
  const fs::path dir = fs::temp_directory_path() / "qcr_acceptance";
  fs::create_directories(dir);
  struct Example {
    std::vector<std::string> args;
    int exit_code;
  };
  const std::vector<Example> examples = {
      {{"check-cr", "--function", fixture("identity.qfn"), "--mode", "symbolic"}, 0},
      {{"check-cr", "--function", fixture("qsquared.qfn"), "--mode", "numeric", "--points", "50"}, 1},
      {{"solve", "--boundary", "x1 - x2", "--n", "9", "--box", "0,1", "--method", "sor", "--omega", "1.5"}, 0},
      {{"check-cr", "--function", fixture("linear1234.qfn"), "--second-order", "--mode", "numeric"}, 0},
      {{"check-cr", "--function", fixture("fueter_left.qfn"), "--variant", "fueter-left"}, 0},
      {{"check-harmonic", "--function", fixture("quartic.qfn"), "--mode", "numeric"}, 0},
      {{"check-harmonic", "--function", fixture("expz.qfn"), "--complex"}, 0},
      {{"integrate", "--function", fixture("integrand_q.qfn"), "--path", fixture("arc.path")}, 0},
      {{"probe-independence", "--function", fixture("integrand_q.qfn"), "--from", "0,0,0,0", "--to", "1,1,0,0"}, 1},
  };
  auto read = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  int compared = 0;
  for (std::size_t k = 0; k < examples.size(); ++k) {
    std::string reports[2];
    for (int rep = 0; rep < 2; ++rep) {
      auto args = examples[k].args;
      const fs::path out = dir / ("report_" + std::to_string(k) + "_" + std::to_string(rep) + ".json");
      args.insert(args.end(), {"--out", out.string()});
      std::ostringstream sink, err;
      const int code = cli::run(args, sink, err);
      v.require(code == examples[k].exit_code,
                args[0] + " #" + std::to_string(k) + " exit " + std::to_string(code));
      reports[rep] = read(out);
    }
    v.require(!reports[0].empty() && reports[0] == reports[1],
              "report " + std::to_string(k) + " differs between runs");
    ++compared;
  }
  fs::remove_all(dir);
  if (v.pass) v.detail = std::to_string(compared) + " examples, reports byte-identical";
  return v;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<Verdict()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "relation-set fidelity", 1, relation_set_fidelity},
      {"AC2", "positive fixtures", 30, positive_fixtures},
      {"AC3", "negative fixture", 1, negative_fixture},
      {"AC4", "regular implies harmonic on corpus", 10, implication_on_corpus},
      {"AC5", "planar baseline", 1, planar_baseline},
      {"AC6", "gradient theorem", 10, gradient_theorem},
      {"AC7", "quaternionic quadrature", 5, quadrature},
      {"AC8", "solver exactness", 60, solver_exactness},
      {"AC9", "solver convergence order", 600, solver_order},
      {"AC10", "CLI determinism", 60, cli_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      v.pass = false;
      v.detail += "; took longer than " + fmt(c.limit_seconds) + " s";
    }
    failed += v.pass ? 0 : 1;
    std::printf("%-4s %s  %-36s %8.3f s  %s\n", c.id, v.pass ? "PASS" : "FAIL", c.title,
                seconds, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
