#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qcr/errors.hpp"
#include "qcr/function_file.hpp"
#include "qcr/harmonicity.hpp"
#include "qcr/laplace_grid.hpp"
#include "qcr/path_integral.hpp"
#include "qcr/regularity.hpp"

namespace qcr::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kToolVersion = QCR_VERSION;
constexpr double kGradientTheoremTolerance = 1e-8;
constexpr double kProbeTolerance = 1e-9;

struct CommonOptions {
  std::string out;
  std::uint64_t seed = kDefaultSeed;
};

json point_json(const Point4& p) { return json::array({p[0], p[1], p[2], p[3]}); }

json quat_json(const Quaternion& q) {
  return json::array({q.c1, q.c2, q.c3, q.c4});
}

json array4_json(const std::array<double, 4>& a) {
  return json::array({a[0], a[1], a[2], a[3]});
}

json base_report(const std::string& command,
                 const std::vector<std::string>& files, std::uint64_t seed,
                 const std::string& mode) {
  json r;
  r["tool_version"] = kToolVersion;
  r["command"] = command;
  r["input_files"] = files;
  r["seed"] = seed;
  r["mode"] = mode;
  r["verdict"] = "fail";
  return r;
}

void emit(const json& report, const std::string& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) return;
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw InputError("failed writing '" + path + "'");
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string fmt_point(const Point4& p) {
  return "(" + fmt(p[0]) + ", " + fmt(p[1]) + ", " + fmt(p[2]) + ", " +
         fmt(p[3]) + ")";
}

std::vector<double> parse_reals(const std::string& text, std::size_t count,
                                const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size() || !std::isfinite(v)) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError(flag + ": '" + item + "' is not a number");
    }
  }
  if (out.size() != count) {
    throw InputError(flag + " expects " + std::to_string(count) +
                     " comma-separated numbers");
  }
  return out;
}

Quaternion parse_quaternion(const std::string& text, const std::string& flag) {
  const auto v = parse_reals(text, 4, flag);
  return {v[0], v[1], v[2], v[3]};
}

CheckMode parse_mode(const std::string& s) {
  return s == "numeric" ? CheckMode::numeric : CheckMode::symbolic;
}

Convention parse_convention(const std::string& s) {
  return s == "right" ? Convention::right : Convention::left;
}

json constraint_report_json(const ConstraintReport& report) {
  json list = json::array();
  for (const auto& r : report.results) {
    json c;
    c["id"] = r.id;
    c["lhs"] = r.lhs;
    c["rhs"] = r.rhs;
    c["pass"] = r.pass;
    if (r.symbolic_pass) {
      c["symbolic_pass"] = *r.symbolic_pass;
      c["residual_expr"] = r.residual_expr;
    }
    c["residual_max"] = r.residual_max;
    c["residual_mean"] = r.residual_mean;
    c["worst_point"] = point_json(r.worst_point);
    list.push_back(std::move(c));
  }
  return list;
}

void print_constraint_summary(const std::string& title,
                              const ConstraintReport& report,
                              std::ostream& out) {
  int failed = 0;
  for (const auto& r : report.results) failed += r.pass ? 0 : 1;
  out << title << ": " << (report.pass ? "PASS" : "FAIL") << " ("
      << mode_name(report.mode) << ", " << report.results.size()
      << " constraints, " << failed << " violated, tol " << fmt(report.tolerance)
      << ")\n";
  for (const auto& r : report.results) {
    out << "  " << (r.pass ? "pass" : "FAIL") << "  " << std::left
        << std::setw(10) << r.id << std::right << r.lhs << " = " << r.rhs
        << "  residual_max " << fmt(r.residual_max);
    if (!r.pass) out << " at " << fmt_point(r.worst_point);
    out << "\n";
  }
  for (const auto& n : report.notes) out << "  note: " << n << "\n";
}

void add_fd_options(CLI::App* cmd, FDSettings& fd) {
  cmd->add_option("--h1", fd.h1, "First-derivative base step")
      ->capture_default_str();
  cmd->add_option("--h2", fd.h2, "Second-derivative base step")
      ->capture_default_str();
}

// check-cr --------------------------------------------------------------

struct CheckCrArgs {
  CommonOptions common;
  std::string function;
  std::string mode = "symbolic";
  int points = 100;
  std::optional<double> tol;
  std::string variant = "paper";
  bool second_order = false;
  bool complex = false;
  FDSettings fd;
};

int run_check_cr(const CheckCrArgs& a, std::ostream& out) {
  const FunctionFile file = FunctionFile::load(a.function);
  CheckOptions options;
  options.mode = parse_mode(a.mode);
  options.points = a.points;
  options.tol = a.tol;
  options.seed = a.common.seed;
  options.fd = a.fd;
  const Variant variant =
      a.variant == "fueter-left" ? Variant::fueter_left : Variant::relations;
  const bool planar = a.complex || (file.is_complex_pair() && !file.has("F1"));

  json report = base_report("check-cr", {a.function}, a.common.seed, a.mode);
  ConstraintReport result;
  std::string title = "check-cr";
  if (planar) {
    if (a.second_order) {
      throw InputError("--second-order applies to quaternionic functions only");
    }
    const auto [u, v] = file.complex_pair();
    result = check_cr_complex(u, v, options);
    report["system"] = "complex";
    title += " (u, v)";
  } else {
    const QuatFunction f = file.quat_function();
    result = a.second_order ? check_second_order_chains(f, options, variant)
                            : check_cr(f, options, variant);
    report["system"] = "quaternion";
    report["variant"] = std::string(variant_name(variant));
    report["order"] = a.second_order ? 2 : 1;
    title += a.second_order ? " second-order" : "";
    if (variant == Variant::fueter_left) title += " [fueter-left]";
  }
  report["verdict"] = result.pass ? "pass" : "fail";
  report["tolerance"] = result.tolerance;
  report["points_tested"] = result.points_tested;
  report["points_skipped"] = result.points_skipped;
  report["constraints"] = constraint_report_json(result);
  json notes = json::array();
  if (!planar && variant == Variant::fueter_left) {
    notes.push_back(
        "variant fueter-left: left Cauchy-Fueter system (D F = 0), not the "
        "default relation set");
  }
  for (const auto& n : result.notes) notes.push_back(n);
  report["notes"] = notes;

  print_constraint_summary(title, result, out);
  emit(report, a.common.out, out);
  return result.pass ? kPass : kFail;
}

// check-harmonic ----------------------------------------------------------

struct CheckHarmonicArgs {
  CommonOptions common;
  std::string function;
  std::string mode = "symbolic";
  int points = 100;
  std::optional<double> tol;
  bool complex = false;
  FDSettings fd;
};

int run_check_harmonic(const CheckHarmonicArgs& a, std::ostream& out) {
  const FunctionFile file = FunctionFile::load(a.function);
  CheckOptions options;
  options.mode = parse_mode(a.mode);
  options.points = a.points;
  options.tol = a.tol;
  options.seed = a.common.seed;
  options.fd = a.fd;
  const bool planar = a.complex || (file.is_complex_pair() && !file.has("F1"));

  HarmonicReport result;
  if (planar) {
    const auto [u, v] = file.complex_pair();
    result = check_harmonic_complex(u, v, options);
  } else {
    result = check_harmonic(file.quat_function(), options);
  }

  json report = base_report("check-harmonic", {a.function}, a.common.seed, a.mode);
  report["system"] = planar ? "complex" : "quaternion";
  report["verdict"] = result.pass ? "pass" : "fail";
  report["tolerance"] = result.tolerance;
  report["points_tested"] = result.points_tested;
  report["points_skipped"] = result.points_skipped;
  json components = json::array();
  for (const auto& c : result.components) {
    json j;
    j["name"] = c.name;
    if (result.mode == CheckMode::symbolic) j["laplacian_expr"] = c.laplacian_expr;
    j["pass"] = c.pass;
    j["residual_max"] = c.residual_max;
    j["residual_mean"] = c.residual_mean;
    j["worst_point"] = point_json(c.worst_point);
    components.push_back(std::move(j));
  }
  report["components"] = components;
  report["notes"] = result.notes;

  out << "check-harmonic" << (planar ? " (u, v)" : "") << ": "
      << (result.pass ? "PASS" : "FAIL") << " (" << mode_name(result.mode)
      << ", tol " << fmt(result.tolerance) << ")\n";
  for (const auto& c : result.components) {
    out << "  " << (c.pass ? "pass" : "FAIL") << "  Laplacian of " << c.name;
    if (!c.laplacian_expr.empty()) out << " = " << c.laplacian_expr;
    out << "  residual_max " << fmt(c.residual_max);
    if (!c.pass) out << " at " << fmt_point(c.worst_point);
    out << "\n";
  }
  for (const auto& n : result.notes) out << "  note: " << n << "\n";
  emit(report, a.common.out, out);
  return result.pass ? kPass : kFail;
}

// integrate ----------------------------------------------------------------

struct IntegrateArgs {
  CommonOptions common;
  std::string function;
  std::string path;
  std::string potential;
  std::string convention = "left";
  int density = kDefaultSegmentsPerUnit;
};

int run_integrate(const IntegrateArgs& a, std::ostream& out) {
  const QuatFunction f = FunctionFile::load(a.function).integrand();
  const Path path = load_path_file(a.path, a.density);
  const Convention convention = parse_convention(a.convention);
  const IntegralResult r = integrate_f_dq(f, path, convention);

  std::vector<std::string> files = {a.function, a.path};
  if (!a.potential.empty()) files.push_back(a.potential);
  json report = base_report("integrate", files, a.common.seed, "quadrature");
  json stats;
  stats["value"] = quat_json(r.value);
  stats["abs_error_estimate"] = r.abs_error_estimate;
  stats["convention"] = std::string(convention_name(convention));
  stats["segments_per_unit"] = a.density;
  stats["start"] = quat_json(path.start());
  stats["end"] = quat_json(path.end());

  bool pass = std::isfinite(r.abs_error_estimate);
  out << "integrate (" << convention_name(convention) << "): value ("
      << fmt(r.value.c1) << ", " << fmt(r.value.c2) << ", " << fmt(r.value.c3)
      << ", " << fmt(r.value.c4) << ")  error estimate "
      << fmt(r.abs_error_estimate) << "\n";

  if (!a.potential.empty()) {
    const QuatFunction potential = FunctionFile::load(a.potential).quat_function();
    const FundamentalTheoremResult ft = fundamental_theorem_check(potential, path);
    double worst = 0.0;
    for (double v : ft.residual) worst = std::max(worst, v);
    const bool ok = worst <= kGradientTheoremTolerance;
    json g;
    g["line_integral"] = array4_json(ft.integral);
    g["end_minus_start"] = array4_json(ft.end_minus_start);
    g["start_minus_end"] = array4_json(ft.start_minus_end);
    g["residual"] = array4_json(ft.residual);
    g["max_residual"] = worst;
    g["tolerance"] = kGradientTheoremTolerance;
    g["pass"] = ok;
    stats["gradient_theorem"] = g;
    pass = pass && ok;
    out << "gradient theorem: " << (ok ? "PASS" : "FAIL")
        << "  max |integral - (F(b) - F(a))| = " << fmt(worst) << "\n";
  }
  report["verdict"] = pass ? "pass" : "fail";
  report["stats"] = stats;
  json notes = json::array();
  if (!a.potential.empty()) {
    notes.push_back(
        "gradient residuals are measured against F(b) - F(a); F(a) - F(b) is "
        "listed alongside");
  }
  report["notes"] = notes;
  emit(report, a.common.out, out);
  return pass ? kPass : kFail;
}

// probe-independence --------------------------------------------------------

struct ProbeArgs {
  CommonOptions common;
  std::string function;
  std::string from;
  std::string to;
  int paths = 10;
  std::string convention = "left";
  int density = kDefaultSegmentsPerUnit;
  double tol = kProbeTolerance;
};

int run_probe(const ProbeArgs& a, std::ostream& out) {
  const QuatFunction f = FunctionFile::load(a.function).integrand();
  const Quaternion from = parse_quaternion(a.from, "--from");
  const Quaternion to = parse_quaternion(a.to, "--to");
  const Convention convention = parse_convention(a.convention);
  const ProbeReport probe = path_independence_probe(
      f, from, to, a.paths, a.common.seed, convention, a.density);
  const bool pass = probe.max_deviation <= a.tol;

  json report =
      base_report("probe-independence", {a.function}, a.common.seed, "quadrature");
  report["verdict"] = pass ? "pass" : "fail";
  json stats;
  stats["from"] = quat_json(from);
  stats["to"] = quat_json(to);
  stats["convention"] = std::string(convention_name(convention));
  stats["segments_per_unit"] = a.density;
  stats["tolerance"] = a.tol;
  stats["max_deviation"] = probe.max_deviation;
  stats["component_deviation"] = array4_json(probe.component_deviation);
  json paths = json::array();
  for (std::size_t i = 0; i < probe.paths.size(); ++i) {
    json p;
    json pts = json::array();
    for (const auto& w : std::get<Polyline>(probe.paths[i].shape()).waypoints) {
      pts.push_back(quat_json(w));
    }
    p["waypoints"] = pts;
    p["value"] = quat_json(probe.integrals[i].value);
    p["abs_error_estimate"] = probe.integrals[i].abs_error_estimate;
    paths.push_back(std::move(p));
  }
  stats["paths"] = paths;
  report["stats"] = stats;
  report["notes"] = json::array();

  out << "probe-independence (" << convention_name(convention) << ", "
      << a.paths << " paths): " << (pass ? "PASS" : "FAIL")
      << "  max deviation " << fmt(probe.max_deviation) << " (tol "
      << fmt(a.tol) << ")\n";
  emit(report, a.common.out, out);
  return pass ? kPass : kFail;
}

// solve ------------------------------------------------------------------

struct SolveArgs {
  CommonOptions common;
  std::string boundary;
  int n = 0;
  std::string box;
  std::string method = "sor";
  double omega = 1.5;
  double tol = 1e-10;
  long max_iters = 200000;
  bool red_black = false;
  int threads = 1;
  std::string dump;
  std::string reference;
};

int run_solve(const SolveArgs& a, std::ostream& out) {
  const Expr boundary = parse(a.boundary);
  const auto box = parse_reals(a.box, 2, "--box");
  Grid4D grid = build_grid(a.n, {Interval{box[0], box[1]}, Interval{box[0], box[1]},
                                 Interval{box[0], box[1]}, Interval{box[0], box[1]}});
  apply_boundary(grid, boundary);

  SolveOptions options;
  options.method = a.method == "jacobi"         ? SolveMethod::jacobi
                   : a.method == "gauss-seidel" ? SolveMethod::gauss_seidel
                                                : SolveMethod::sor;
  options.omega = a.omega;
  options.tol = a.tol;
  options.max_iters = a.max_iters;
  options.red_black = a.red_black;
  options.threads = a.threads;
  const SolveStats stats = solve(grid, options);

  const std::string ref_text = a.reference.empty() ? a.boundary : a.reference;
  const ReferenceComparison cmp = compare_to_reference(grid, parse(ref_text));

  double bmin = INFINITY, bmax = -INFINITY, imin = INFINITY, imax = -INFINITY;
  const auto values = grid.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const bool boundary_point = grid.is_boundary(grid.multi_index(i));
    double& lo = boundary_point ? bmin : imin;
    double& hi = boundary_point ? bmax : imax;
    lo = std::min(lo, values[i]);
    hi = std::max(hi, values[i]);
  }

  std::vector<std::string> files;
  if (!a.dump.empty()) {
    write_grid_dump(grid, std::filesystem::path(a.dump));
  }
  json report = base_report("solve", files, a.common.seed,
                            std::string(method_name(stats.method)));
  report["verdict"] = stats.converged ? "pass" : "fail";
  json s;
  s["boundary"] = a.boundary;
  s["n"] = grid.n();
  s["box"] = json::array({box[0], box[1]});
  s["spacing"] = grid.spacing();
  s["interior_points"] = grid.interior_count();
  s["method"] = std::string(method_name(stats.method));
  s["omega"] = stats.omega;
  s["red_black"] = stats.red_black;
  s["tol"] = a.tol;
  s["iterations"] = stats.iterations;
  s["converged"] = stats.converged;
  s["final_residual"] = stats.final_residual;
  s["discrete_laplacian_residual"] = discrete_laplacian_residual(grid);
  s["boundary_range"] = json::array({bmin, bmax});
  s["interior_range"] = json::array({imin, imax});
  json ref;
  ref["expr"] = ref_text;
  ref["max_err"] = cmp.max_err;
  ref["mean_err"] = cmp.mean_err;
  s["reference"] = ref;
  if (!a.dump.empty()) s["dump"] = a.dump;
  report["stats"] = s;
  json notes = json::array();
  if (a.reference.empty()) {
    notes.push_back("no --reference given; interior compared against the boundary expression");
  }
  report["notes"] = notes;

  out << "solve (" << method_name(stats.method) << ", n=" << grid.n()
      << "): " << (stats.converged ? "converged" : "NOT converged") << " after "
      << stats.iterations << " sweeps, residual " << fmt(stats.final_residual)
      << "\n  vs " << ref_text << ": max_err " << fmt(cmp.max_err)
      << ", mean_err " << fmt(cmp.mean_err) << "\n";
  emit(report, a.common.out, out);
  return stats.converged ? kPass : kFail;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Quaternionic Cauchy-Riemann-like relations and 4D harmonicity checks",
               "qcr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  const std::vector<std::string> modes = {"symbolic", "numeric"};
  const std::vector<std::string> conventions = {"left", "right"};

  CheckCrArgs cr;
  auto* cmd_cr = app.add_subcommand("check-cr", "Check the first- or second-order relation system");
  cmd_cr->add_option("--function", cr.function, "Function file (.qfn)")->required();
  cmd_cr->add_option("--mode", cr.mode)->check(CLI::IsMember(modes))->capture_default_str();
  cmd_cr->add_option("--points", cr.points, "Numeric sample points")->check(CLI::PositiveNumber)->capture_default_str();
  cmd_cr->add_option("--tol", cr.tol, "Residual tolerance");
  cmd_cr->add_option("--seed", cr.common.seed)->capture_default_str();
  cmd_cr->add_option("--variant", cr.variant)->check(CLI::IsMember({"paper", "fueter-left"}))->capture_default_str();
  cmd_cr->add_flag("--second-order", cr.second_order, "Check the differentiated chains");
  cmd_cr->add_flag("--complex", cr.complex, "Treat the file as a planar pair u, v");
  cmd_cr->add_option("--out", cr.common.out, "JSON report path ('-' for stdout)");
  add_fd_options(cmd_cr, cr.fd);

  CheckHarmonicArgs hm;
  auto* cmd_hm = app.add_subcommand("check-harmonic", "Check that each component has zero Laplacian");
  cmd_hm->add_option("--function", hm.function, "Function file (.qfn)")->required();
  cmd_hm->add_option("--mode", hm.mode)->check(CLI::IsMember(modes))->capture_default_str();
  cmd_hm->add_option("--points", hm.points)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_hm->add_option("--tol", hm.tol);
  cmd_hm->add_option("--seed", hm.common.seed)->capture_default_str();
  cmd_hm->add_flag("--complex", hm.complex, "Two-variable Laplacian of u, v");
  cmd_hm->add_option("--out", hm.common.out);
  add_fd_options(cmd_hm, hm.fd);

  IntegrateArgs in;
  auto* cmd_in = app.add_subcommand("integrate", "Integrate f dq along a path");
  cmd_in->add_option("--function", in.function, "Integrand file (f or f1..f4)")->required();
  cmd_in->add_option("--path", in.path, "Path file")->required();
  cmd_in->add_option("--convention", in.convention)->check(CLI::IsMember(conventions))->capture_default_str();
  cmd_in->add_option("--density", in.density, "Subintervals per unit length")->check(CLI::PositiveNumber)->capture_default_str();
  cmd_in->add_option("--potential", in.potential, "F1..F4 file for the gradient-theorem check");
  cmd_in->add_option("--seed", in.common.seed)->capture_default_str();
  cmd_in->add_option("--out", in.common.out);

  ProbeArgs pr;
  auto* cmd_pr = app.add_subcommand("probe-independence", "Compare integrals over random polylines");
  cmd_pr->add_option("--function", pr.function, "Integrand file (f or f1..f4)")->required();
  cmd_pr->add_option("--from", pr.from, "Start point w,x,y,z")->required();
  cmd_pr->add_option("--to", pr.to, "End point w,x,y,z")->required();
  cmd_pr->add_option("--paths", pr.paths)->capture_default_str();
  cmd_pr->add_option("--seed", pr.common.seed)->capture_default_str();
  cmd_pr->add_option("--convention", pr.convention)->check(CLI::IsMember(conventions))->capture_default_str();
  cmd_pr->add_option("--density", pr.density)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_pr->add_option("--tol", pr.tol, "Largest spread counted as path independent")->capture_default_str();
  cmd_pr->add_option("--out", pr.common.out);

  SolveArgs sv;
  auto* cmd_sv = app.add_subcommand("solve", "Solve the 4D Dirichlet problem on a uniform grid");
  cmd_sv->add_option("--boundary", sv.boundary, "Boundary expression in x1..x4")->required();
  cmd_sv->add_option("--n", sv.n, "Points per axis")->required();
  cmd_sv->add_option("--box", sv.box, "lo,hi for every axis")->required();
  cmd_sv->add_option("--method", sv.method)->check(CLI::IsMember({"jacobi", "gauss-seidel", "sor"}))->capture_default_str();
  cmd_sv->add_option("--omega", sv.omega)->capture_default_str();
  cmd_sv->add_option("--tol", sv.tol)->capture_default_str();
  cmd_sv->add_option("--max-iters", sv.max_iters)->capture_default_str();
  cmd_sv->add_flag("--red-black", sv.red_black, "Red-black ordering for Gauss-Seidel/SOR");
  cmd_sv->add_option("--threads", sv.threads, "Worker threads (0 = all cores)")->capture_default_str();
  cmd_sv->add_option("--dump", sv.dump, "Binary grid dump path");
  cmd_sv->add_option("--reference", sv.reference, "Exact solution to compare against");
  cmd_sv->add_option("--seed", sv.common.seed)->capture_default_str();
  cmd_sv->add_option("--out", sv.common.out);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("qcr");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kPass;
  } catch (const CLI::Success&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "qcr: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsageError;
  }

  try {
    if (cmd_cr->parsed()) return run_check_cr(cr, out);
    if (cmd_hm->parsed()) return run_check_harmonic(hm, out);
    if (cmd_in->parsed()) return run_integrate(in, out);
    if (cmd_pr->parsed()) return run_probe(pr, out);
    if (cmd_sv->parsed()) return run_solve(sv, out);
  } catch (const DomainError& e) {
    err << "qcr: " << e.what() << "\n";
    return kDomainError;
  } catch (const Error& e) {
    err << "qcr: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "qcr: " << e.what() << "\n";
    return kUsageError;
  }
  err << app.help();
  return kUsageError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace qcr::cli
