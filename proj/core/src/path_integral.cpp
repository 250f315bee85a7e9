#include "qcr/path_integral.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

#include "qcr/errors.hpp"
#include "qcr/function_file.hpp"
#include "qcr/sampling.hpp"

namespace qcr {
namespace {

using Vec4 = std::array<double, 4>;

// 5-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 5> kNodes = {
    -0.906179845938663992797626878299, -0.538469310105683091036314420700,
    0.0, 0.538469310105683091036314420700, 0.906179845938663992797626878299};
constexpr std::array<double, 5> kWeights = {
    0.236926885056189087514264040720, 0.478628670499366468041291514836,
    0.568888888888888888888888888889, 0.478628670499366468041291514836,
    0.236926885056189087514264040720};

Quaternion to_quat(const Vec4& v) { return Quaternion::from_array(v); }

int subintervals(double length, int density) {
  const double n = std::ceil(length * density);
  return std::max(1, static_cast<int>(std::min(n, 1e8)));
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Integrates fn(q, dq/ds) ds along the path with `density` subintervals per
// unit length (polyline) or per unit parameter (parametric).
template <typename Fn>
Vec4 integrate_curve(const Path& path, int density, Fn&& fn) {
  Vec4 total{};
  auto accumulate = [&](const Vec4& v, double w) {
    for (int c = 0; c < 4; ++c) total[c] += w * v[c];
  };

  if (const auto* poly = std::get_if<Polyline>(&path.shape())) {
    const auto& pts = poly->waypoints;
    for (std::size_t seg = 0; seg + 1 < pts.size(); ++seg) {
      const Quaternion p0 = pts[seg];
      const Quaternion dq = pts[seg + 1] - p0;
      const double length = norm(dq);
      if (length == 0.0) continue;
      const int n = subintervals(length, density);
      const double ds = 1.0 / n;
      for (int k = 0; k < n; ++k) {
        const double mid = (k + 0.5) * ds;
        for (std::size_t g = 0; g < kNodes.size(); ++g) {
          const double s = mid + 0.5 * ds * kNodes[g];
          const Quaternion q = p0 + scale(s, dq);
          try {
            accumulate(fn(q.to_array(), dq.to_array()), 0.5 * ds * kWeights[g]);
          } catch (const DomainError& e) {
            throw DomainError("path segment " + std::to_string(seg + 1) +
                              " at s=" + format_real(s) + ": " + e.what());
          }
        }
      }
    }
    return total;
  }

  const auto& par = std::get<Parametric>(path.shape());
  std::array<Expr, 4> dq_expr;
  for (int c = 0; c < 4; ++c) dq_expr[c] = differentiate(par.q[c], Variable::t);
  const int n = subintervals(par.t1 - par.t0, density);
  const double dt = (par.t1 - par.t0) / n;
  for (int k = 0; k < n; ++k) {
    const double mid = par.t0 + (k + 0.5) * dt;
    for (std::size_t g = 0; g < kNodes.size(); ++g) {
      const double t = mid + 0.5 * dt * kNodes[g];
      try {
        const Bindings b = Bindings::time(t);
        Vec4 q, dq;
        for (int c = 0; c < 4; ++c) {
          q[c] = evaluate(par.q[c], b);
          dq[c] = evaluate(dq_expr[c], b);
        }
        accumulate(fn(q, dq), 0.5 * dt * kWeights[g]);
      } catch (const DomainError& e) {
        throw DomainError("path at t=" + format_real(t) + ": " + e.what());
      }
    }
  }
  return total;
}

Vec4 eval_function(const QuatFunction& f, const Vec4& q) {
  const Bindings b = Bindings::point(q);
  return {evaluate(f[0], b), evaluate(f[1], b), evaluate(f[2], b),
          evaluate(f[3], b)};
}

Quaternion integrate_once(const QuatFunction& f, const Path& path,
                          Convention convention, int density) {
  return to_quat(integrate_curve(
      path, density, [&](const Vec4& q, const Vec4& dq) {
        const Quaternion fq = to_quat(eval_function(f, q));
        const Quaternion d = to_quat(dq);
        return (convention == Convention::left ? fq * d : d * fq).to_array();
      }));
}

// e with every occurrence of `var` replaced by `replacement`.
Expr substitute(const Expr& e, Variable var, const Expr& replacement) {
  if (!e.uses(var)) return e;
  return std::visit(
      [&](const auto& n) -> Expr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LiteralNode>) {
          return e;
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          return n.var == var ? replacement : e;
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          return Expr::unary(n.op, substitute(n.arg, var, replacement));
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return Expr::binary(n.op, substitute(n.lhs, var, replacement),
                              substitute(n.rhs, var, replacement));
        } else {
          return Expr::pow(substitute(n.base, var, replacement), n.exponent);
        }
      },
      e.node().v);
}

double constant_value(const std::string& text, const std::string& where) {
  try {
    return evaluate(parse(text), Bindings{});
  } catch (const Error& e) {
    throw InputError(where + ": expected a constant, " + e.what());
  }
}

std::vector<Quaternion> parse_waypoints(std::string_view text,
                                        const std::string& where) {
  std::vector<Quaternion> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty()) continue;
    if (item.front() != '(' || item.back() != ')') {
      throw InputError(where + ": waypoint must look like (w,x,y,z)");
    }
    item = item.substr(1, item.size() - 2);
    Vec4 v{};
    int count = 0;
    std::size_t p = 0;
    while (p <= item.size()) {
      std::size_t comma = item.find(',', p);
      if (comma == std::string_view::npos) comma = item.size();
      if (count == 4) {
        throw InputError(where + ": waypoint has more than 4 components");
      }
      v[count++] = constant_value(std::string(item.substr(p, comma - p)), where);
      p = comma + 1;
    }
    if (count != 4) {
      throw InputError(where + ": waypoint needs 4 components");
    }
    out.push_back(to_quat(v));
  }
  return out;
}

}  // namespace

std::string_view convention_name(Convention c) {
  return c == Convention::left ? "left" : "right";
}

Path::Path(std::variant<Polyline, Parametric> shape, int segments_per_unit)
    : shape_(std::move(shape)), segments_per_unit_(segments_per_unit) {
  if (segments_per_unit_ < 1) {
    throw PreconditionError("segments_per_unit must be >= 1");
  }
}

Path Path::polyline(std::vector<Quaternion> waypoints, int segments_per_unit) {
  if (waypoints.size() < 2) {
    throw PreconditionError("a polyline needs at least two waypoints");
  }
  for (const auto& w : waypoints) {
    if (!std::isfinite(norm(w))) {
      throw PreconditionError("polyline waypoints must be finite");
    }
  }
  return Path(Polyline{std::move(waypoints)}, segments_per_unit);
}

Path Path::parametric(std::array<Expr, 4> q, double t0, double t1,
                      int segments_per_unit) {
  if (!(t0 < t1) || !std::isfinite(t0) || !std::isfinite(t1)) {
    throw PreconditionError("parametric path needs finite t0 < t1");
  }
  for (const auto& e : q) {
    if ((e.variable_mask() & 0x0F) != 0) {
      throw PreconditionError("parametric path components may only use t");
    }
  }
  return Path(Parametric{std::move(q), t0, t1}, segments_per_unit);
}

Path Path::with_density(int segments_per_unit) const {
  return Path(shape_, segments_per_unit);
}

Quaternion Path::start() const {
  if (const auto* poly = std::get_if<Polyline>(&shape_)) {
    return poly->waypoints.front();
  }
  const auto& par = std::get<Parametric>(shape_);
  const Bindings b = Bindings::time(par.t0);
  return {evaluate(par.q[0], b), evaluate(par.q[1], b), evaluate(par.q[2], b),
          evaluate(par.q[3], b)};
}

Quaternion Path::end() const {
  if (const auto* poly = std::get_if<Polyline>(&shape_)) {
    return poly->waypoints.back();
  }
  const auto& par = std::get<Parametric>(shape_);
  const Bindings b = Bindings::time(par.t1);
  return {evaluate(par.q[0], b), evaluate(par.q[1], b), evaluate(par.q[2], b),
          evaluate(par.q[3], b)};
}

Path Path::reversed() const {
  if (const auto* poly = std::get_if<Polyline>(&shape_)) {
    std::vector<Quaternion> pts(poly->waypoints.rbegin(),
                                poly->waypoints.rend());
    return polyline(std::move(pts), segments_per_unit_);
  }
  const auto& par = std::get<Parametric>(shape_);
  // t -> t0 + t1 - t traverses the same curve backwards over [t0, t1].
  const Expr flip =
      Expr::literal(par.t0 + par.t1) - Expr::variable(Variable::t);
  std::array<Expr, 4> q;
  for (int c = 0; c < 4; ++c) q[c] = substitute(par.q[c], Variable::t, flip);
  return parametric(std::move(q), par.t0, par.t1, segments_per_unit_);
}

Path Path::concatenated(const Path& next) const {
  const auto* a = std::get_if<Polyline>(&shape_);
  const auto* b = std::get_if<Polyline>(&next.shape_);
  if (a == nullptr || b == nullptr) {
    throw PreconditionError("only polylines can be concatenated");
  }
  std::vector<Quaternion> pts = a->waypoints;
  auto it = b->waypoints.begin();
  if (*it == pts.back()) ++it;
  pts.insert(pts.end(), it, b->waypoints.end());
  return polyline(std::move(pts), segments_per_unit_);
}

Path parse_path_file(std::string_view text, std::string_view source,
                     int segments_per_unit) {
  const auto assignments = parse_assignments(text, source);
  const Assignment* waypoints = nullptr;
  std::array<const Assignment*, 4> q{};
  const Assignment* t0 = nullptr;
  const Assignment* t1 = nullptr;
  for (const auto& a : assignments) {
    if (a.name == "waypoints") {
      waypoints = &a;
    } else if (a.name == "t0") {
      t0 = &a;
    } else if (a.name == "t1") {
      t1 = &a;
    } else if (a.name.size() == 2 && a.name[0] == 'q' && a.name[1] >= '1' &&
               a.name[1] <= '4') {
      q[a.name[1] - '1'] = &a;
    } else {
      throw InputError(std::string(source) + ":" + std::to_string(a.line) +
                       ": unrecognised name '" + a.name + "'");
    }
  }
  const bool any_parametric =
      t0 || t1 || std::any_of(q.begin(), q.end(), [](auto* p) { return p; });
  if (waypoints) {
    if (any_parametric) {
      throw InputError(std::string(source) +
                       ": mixes waypoints with a parametric path");
    }
    const std::string where =
        std::string(source) + ":" + std::to_string(waypoints->line);
    auto pts = parse_waypoints(waypoints->value, where);
    if (pts.size() < 2) {
      throw InputError(where + ": a polyline needs at least two waypoints");
    }
    return Path::polyline(std::move(pts), segments_per_unit);
  }
  if (!t0 || !t1 || std::any_of(q.begin(), q.end(), [](auto* p) { return !p; })) {
    throw InputError(std::string(source) +
                     ": expected `waypoints = ...` or q1..q4 with t0 and t1");
  }
  // Reuse the function-file reader so expression errors carry positions.
  std::string qtext;
  for (const auto* a : q) qtext += a->name + " = " + a->value + "\n";
  const FunctionFile file = FunctionFile::parse(qtext, std::string(source));
  std::array<Expr, 4> exprs;
  for (int c = 0; c < 4; ++c) exprs[c] = file.get(q[c]->name);
  const double a = constant_value(
      t0->value, std::string(source) + ":" + std::to_string(t0->line));
  const double b = constant_value(
      t1->value, std::string(source) + ":" + std::to_string(t1->line));
  if (!(a < b)) {
    throw InputError(std::string(source) + ": t0 must be less than t1");
  }
  return Path::parametric(std::move(exprs), a, b, segments_per_unit);
}

Path load_path_file(const std::filesystem::path& path, int segments_per_unit) {
  return parse_path_file(read_text_file(path), path.string(),
                         segments_per_unit);
}

IntegralResult integrate_f_dq(const QuatFunction& f, const Path& path,
                              Convention convention) {
  IntegralResult r;
  r.convention = convention;
  const int d = path.segments_per_unit();
  r.value = integrate_once(f, path, convention, d);
  const Quaternion fine = integrate_once(f, path, convention, 2 * d);
  r.abs_error_estimate = norm(r.value - fine);
  return r;
}

FundamentalTheoremResult fundamental_theorem_check(const QuatFunction& f,
                                                   const Path& path) {
  std::array<std::array<Expr, 4>, 4> grad;
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      grad[m][n] = differentiate(f[m], static_cast<Variable>(n));
    }
  }
  FundamentalTheoremResult r;
  r.integral = integrate_curve(
      path, path.segments_per_unit(), [&](const Vec4& q, const Vec4& dq) {
        const Bindings b = Bindings::point(q);
        Vec4 out{};
        for (int m = 0; m < 4; ++m) {
          for (int n = 0; n < 4; ++n) {
            if (dq[n] != 0.0) out[m] += evaluate(grad[m][n], b) * dq[n];
          }
        }
        return out;
      });
  const Vec4 fa = eval_function(f, path.start().to_array());
  const Vec4 fb = eval_function(f, path.end().to_array());
  for (int m = 0; m < 4; ++m) {
    r.end_minus_start[m] = fb[m] - fa[m];
    r.start_minus_end[m] = fa[m] - fb[m];
    r.residual[m] = std::abs(r.integral[m] - r.end_minus_start[m]);
  }
  return r;
}

Path random_polyline(const Quaternion& a, const Quaternion& b,
                     Sampler& sampler, int segments_per_unit) {
  Vec4 lo, hi;
  for (int c = 0; c < 4; ++c) {
    lo[c] = std::min(a[c], b[c]) - 1.0;
    hi[c] = std::max(a[c], b[c]) + 1.0;
  }
  const int interior = sampler.uniform_int(3, 6);
  std::vector<Quaternion> pts;
  pts.reserve(interior + 2);
  pts.push_back(a);
  for (int i = 0; i < interior; ++i) {
    Vec4 p;
    for (int c = 0; c < 4; ++c) p[c] = sampler.uniform(lo[c], hi[c]);
    pts.push_back(to_quat(p));
  }
  pts.push_back(b);
  return Path::polyline(std::move(pts), segments_per_unit);
}

ProbeReport path_independence_probe(const QuatFunction& f, const Quaternion& a,
                                    const Quaternion& b, int n_paths,
                                    std::uint64_t seed, Convention convention,
                                    int segments_per_unit) {
  if (n_paths < 2) {
    throw PreconditionError("path independence probe needs n_paths >= 2");
  }
  ProbeReport report;
  report.convention = convention;
  Sampler sampler(seed);
  for (int i = 0; i < n_paths; ++i) {
    report.paths.push_back(random_polyline(a, b, sampler, segments_per_unit));
  }
  for (const auto& path : report.paths) {
    report.integrals.push_back(integrate_f_dq(f, path, convention));
  }
  for (int c = 0; c < 4; ++c) {
    double lo = report.integrals.front().value[c];
    double hi = lo;
    for (const auto& r : report.integrals) {
      lo = std::min(lo, r.value[c]);
      hi = std::max(hi, r.value[c]);
    }
    report.component_deviation[c] = hi - lo;
    report.max_deviation = std::max(report.max_deviation, hi - lo);
  }
  return report;
}

}  // namespace qcr
