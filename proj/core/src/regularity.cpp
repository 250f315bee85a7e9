#include "qcr/regularity.hpp"

#include <array>
#include <cmath>
#include <map>
#include <tuple>

#include "qcr/errors.hpp"
#include "qcr/sampling.hpp"

namespace qcr {
namespace {

constexpr SignedPartial d1(int sign, int component, int axis) {
  return {sign, component, axis, 0};
}

constexpr SignedPartial d2(int sign, int component, int axis, int inner) {
  return {sign, component, axis, inner};
}

using Chain = std::array<SignedPartial, 4>;

// Each chain reads a = b = c = d.
constexpr std::array<Chain, 4> kFirstOrderChains = {{
    {d1(+1, 1, 1), d1(+1, 2, 2), d1(+1, 3, 3), d1(+1, 4, 4)},
    {d1(+1, 2, 1), d1(-1, 1, 2), d1(-1, 3, 4), d1(+1, 4, 3)},
    {d1(+1, 3, 1), d1(-1, 1, 3), d1(-1, 2, 4), d1(+1, 4, 2)},
    {d1(+1, 4, 1), d1(+1, 1, 4), d1(-1, 2, 3), d1(-1, 3, 2)},
}};

// [chain][differentiation axis - 1]; each term keeps its own order of
// differentiation.
constexpr std::array<std::array<Chain, 4>, 4> kSecondOrderChains = {{
    {{
        {d2(+1, 1, 1, 1), d2(+1, 2, 1, 2), d2(+1, 3, 1, 3), d2(+1, 4, 1, 4)},
        {d2(+1, 1, 1, 2), d2(+1, 2, 2, 2), d2(+1, 3, 2, 3), d2(+1, 4, 2, 4)},
        {d2(+1, 1, 3, 1), d2(+1, 2, 3, 2), d2(+1, 3, 3, 3), d2(+1, 4, 4, 3)},
        {d2(+1, 1, 1, 4), d2(+1, 2, 4, 2), d2(+1, 3, 4, 3), d2(+1, 4, 4, 4)},
    }},
    {{
        {d2(+1, 2, 1, 1), d2(-1, 1, 1, 2), d2(-1, 3, 1, 4), d2(+1, 4, 1, 3)},
        {d2(+1, 2, 1, 2), d2(-1, 1, 2, 2), d2(-1, 3, 2, 4), d2(+1, 4, 3, 2)},
        {d2(+1, 2, 3, 1), d2(-1, 1, 3, 2), d2(-1, 3, 3, 4), d2(+1, 4, 3, 3)},
        {d2(+1, 2, 4, 1), d2(-1, 1, 4, 2), d2(-1, 3, 4, 4), d2(+1, 4, 4, 3)},
    }},
    {{
        {d2(+1, 3, 1, 1), d2(-1, 1, 1, 3), d2(-1, 2, 1, 4), d2(+1, 4, 1, 2)},
        {d2(+1, 3, 1, 2), d2(-1, 1, 2, 3), d2(-1, 2, 2, 4), d2(+1, 4, 2, 2)},
        {d2(+1, 3, 3, 1), d2(-1, 1, 3, 3), d2(-1, 2, 4, 3), d2(+1, 4, 3, 2)},
        {d2(+1, 3, 1, 4), d2(-1, 1, 4, 3), d2(-1, 2, 4, 4), d2(+1, 4, 4, 2)},
    }},
    {{
        {d2(+1, 4, 1, 1), d2(+1, 1, 1, 4), d2(-1, 2, 1, 3), d2(-1, 3, 1, 2)},
        {d2(+1, 4, 1, 2), d2(+1, 1, 2, 4), d2(-1, 2, 2, 3), d2(-1, 3, 2, 2)},
        {d2(+1, 4, 3, 1), d2(+1, 1, 3, 4), d2(-1, 2, 3, 3), d2(-1, 3, 3, 2)},
        {d2(+1, 4, 1, 4), d2(+1, 1, 4, 4), d2(-1, 2, 4, 3), d2(-1, 3, 4, 2)},
    }},
}};

void append_chain(const Chain& chain, const std::string& prefix,
                  std::vector<Constraint>& out) {
  for (int e = 0; e < 3; ++e) {
    out.push_back({prefix + "." + std::to_string(e + 1), {chain[e]},
                   {chain[e + 1]}});
  }
}

const std::array<std::string, 4> kQuatNames = {"F1", "F2", "F3", "F4"};
const std::array<std::string, 2> kPlanarNames = {"u", "v"};

std::string chain_prefix(const std::string& id) {
  return id.substr(0, id.find('.'));
}

double default_tolerance(CheckMode mode,
                         std::span<const Constraint> constraints) {
  if (mode == CheckMode::symbolic) return kSymbolicTolerance;
  for (const auto& c : constraints) {
    for (const auto* side : {&c.lhs, &c.rhs}) {
      for (const auto& t : *side) {
        if (t.order() == 2) return kNumericSecondOrderTolerance;
      }
    }
  }
  return kNumericFirstOrderTolerance;
}

void validate_terms(std::span<const Constraint> constraints,
                    std::size_t components) {
  for (const auto& c : constraints) {
    for (const auto* side : {&c.lhs, &c.rhs}) {
      for (const auto& t : *side) {
        if (t.component < 1 || static_cast<std::size_t>(t.component) >
                                   components) {
          throw PreconditionError("constraint " + c.id +
                                  " names a missing component");
        }
        if (t.axis < 1 || t.axis > 4 || t.inner_axis < 0 ||
            t.inner_axis > 4 || (t.sign != 1 && t.sign != -1)) {
          throw PreconditionError("constraint " + c.id + " is malformed");
        }
      }
    }
  }
}

using TermKey = std::tuple<int, int, int>;

class SymbolicPartials {
 public:
  explicit SymbolicPartials(std::span<const Expr> components)
      : components_(components) {}

  const Expr& get(const SignedPartial& t) {
    const TermKey key{t.component, t.axis, t.inner_axis};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const Expr& f = components_[t.component - 1];
    Expr d = t.order() == 1
                 ? differentiate(f, axis_variable(t.axis))
                 : differentiate(differentiate(f, axis_variable(t.inner_axis)),
                                 axis_variable(t.axis));
    return cache_.emplace(key, std::move(d)).first->second;
  }

  Expr side(const std::vector<SignedPartial>& terms) {
    if (terms.empty()) return Expr::literal(0.0);
    Expr sum;
    bool first = true;
    for (const auto& t : terms) {
      const Expr& d = get(t);
      if (first) {
        sum = t.sign < 0 ? -d : d;
        first = false;
      } else {
        sum = t.sign < 0 ? sum - d : sum + d;
      }
    }
    return sum;
  }

 private:
  std::span<const Expr> components_;
  std::map<TermKey, Expr> cache_;
};

class NumericPartials {
 public:
  NumericPartials(std::span<const Expr> components, const Point4& p,
                  const FDSettings& fd)
      : components_(components), p_(p), fd_(fd) {}

  double get(const SignedPartial& t) {
    const TermKey key{t.component, t.axis, t.inner_axis};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const Expr& f = components_[t.component - 1];
    const double v = t.order() == 1
                         ? partial1_fd(f, p_, t.axis, fd_)
                         : partial2_fd(f, p_, t.axis, t.inner_axis, fd_);
    cache_.emplace(key, v);
    return v;
  }

  double side(const std::vector<SignedPartial>& terms) {
    double s = 0.0;
    for (const auto& t : terms) s += t.sign * get(t);
    return s;
  }

 private:
  std::span<const Expr> components_;
  Point4 p_;
  const FDSettings& fd_;
  std::map<TermKey, double> cache_;
};

ConstraintResult describe_result(const Constraint& c,
                                 std::span<const std::string> names) {
  ConstraintResult r;
  r.id = c.id;
  r.lhs = describe(c.lhs, names);
  r.rhs = describe(c.rhs, names);
  return r;
}

ConstraintReport check_symbolic(std::span<const Expr> components,
                                std::span<const std::string> names,
                                std::span<const Constraint> constraints,
                                const CheckOptions& options, double tol) {
  ConstraintReport report;
  report.mode = CheckMode::symbolic;
  report.tolerance = tol;
  report.points_tested = kSymbolicTrials;
  SymbolicPartials partials(components);
  bool all = true;
  for (const auto& c : constraints) {
    ConstraintResult r = describe_result(c, names);
    const Expr residual =
        simplify(partials.side(c.lhs) - partials.side(c.rhs));
    r.residual_expr = to_string(residual);
    const ZeroTestResult z =
        zero_test(residual, kSymbolicTrials, tol, options.seed);
    r.symbolic_pass = z.zero;
    r.pass = z.zero;
    r.residual_max = z.max_abs;
    r.residual_mean = z.mean_abs;
    r.worst_point = z.worst_point;
    report.points_skipped += z.points_skipped;
    all = all && r.pass;
    report.results.push_back(std::move(r));
  }
  report.pass = all;
  return report;
}

ConstraintReport check_numeric(std::span<const Expr> components,
                               std::span<const std::string> names,
                               std::span<const Constraint> constraints,
                               const CheckOptions& options, double tol) {
  options.fd.validate();
  ConstraintReport report;
  report.mode = CheckMode::numeric;
  report.tolerance = tol;

  const std::size_t count = constraints.size();
  std::vector<double> max_r(count, 0.0);
  std::vector<double> sum_r(count, 0.0);
  std::vector<Point4> worst(count, Point4{});
  std::vector<double> residuals(count);
  int evaluated = 0;

  const std::vector<Point4> points = numeric_points(options);
  report.points_tested = static_cast<int>(points.size());
  for (const Point4& p : points) {
    NumericPartials partials(components, p, options.fd);
    try {
      for (std::size_t k = 0; k < count; ++k) {
        residuals[k] = std::abs(partials.side(constraints[k].lhs) -
                                partials.side(constraints[k].rhs));
      }
    } catch (const DomainError&) {
      ++report.points_skipped;
      continue;
    }
    for (std::size_t k = 0; k < count; ++k) {
      const double r = residuals[k];
      sum_r[k] += r;
      if (r > max_r[k] || evaluated == 0 || std::isnan(r)) {
        max_r[k] = r;
        worst[k] = p;
      }
    }
    ++evaluated;
  }

  const bool too_many_skipped = 2 * report.points_skipped > report.points_tested;
  if (report.points_skipped > 0) {
    report.notes.push_back(std::to_string(report.points_skipped) + " of " +
                           std::to_string(report.points_tested) +
                           " sample points skipped after domain errors");
  }
  if (too_many_skipped) {
    report.notes.push_back("more than half of the sample points skipped");
  }

  bool all = !too_many_skipped;
  for (std::size_t k = 0; k < count; ++k) {
    ConstraintResult r = describe_result(constraints[k], names);
    r.residual_max = max_r[k];
    r.residual_mean = evaluated > 0 ? sum_r[k] / evaluated : 0.0;
    r.worst_point = worst[k];
    r.pass = evaluated > 0 && !too_many_skipped && max_r[k] <= tol;
    all = all && r.pass;
    report.results.push_back(std::move(r));
  }
  report.pass = all;
  return report;
}

}  // namespace

std::string_view variant_name(Variant v) {
  return v == Variant::relations ? "paper" : "fueter-left";
}

std::string_view mode_name(CheckMode mode) {
  return mode == CheckMode::symbolic ? "symbolic" : "numeric";
}

std::vector<Point4> numeric_points(const CheckOptions& options) {
  if (!options.sample_points.empty()) return options.sample_points;
  if (options.points < 1) throw PreconditionError("points must be >= 1");
  Sampler sampler(options.seed);
  std::vector<Point4> out(static_cast<std::size_t>(options.points));
  for (Point4& p : out) p = sampler.point(kSampleLo, kSampleHi);
  return out;
}

std::vector<Constraint> relation_constraints() {
  std::vector<Constraint> out;
  out.reserve(12);
  for (std::size_t k = 0; k < kFirstOrderChains.size(); ++k) {
    append_chain(kFirstOrderChains[k], "R" + std::to_string(k + 1), out);
  }
  return out;
}

std::vector<Constraint> second_order_chains() {
  std::vector<Constraint> out;
  out.reserve(48);
  for (std::size_t k = 0; k < kSecondOrderChains.size(); ++k) {
    for (std::size_t p = 0; p < 4; ++p) {
      const Chain& line = kSecondOrderChains[k][p];
      const std::string prefix = "R" + std::to_string(k + 1);
      for (int e = 0; e < 3; ++e) {
        out.push_back({prefix + "." + std::to_string(e + 1) + ":x" +
                           std::to_string(p + 1),
                       {line[e]},
                       {line[e + 1]}});
      }
    }
  }
  return out;
}

std::vector<Constraint> differentiate_constraints(
    std::span<const Constraint> first_order) {
  std::vector<Constraint> out;
  std::size_t begin = 0;
  while (begin < first_order.size()) {
    std::size_t end = begin + 1;
    const std::string group = chain_prefix(first_order[begin].id);
    while (end < first_order.size() &&
           chain_prefix(first_order[end].id) == group) {
      ++end;
    }
    for (int p = 1; p <= 4; ++p) {
      for (std::size_t k = begin; k < end; ++k) {
        const Constraint& c = first_order[k];
        Constraint dc;
        dc.id = c.id + ":x" + std::to_string(p);
        for (const auto& t : c.lhs) dc.lhs.push_back({t.sign, t.component, p, t.axis});
        for (const auto& t : c.rhs) dc.rhs.push_back({t.sign, t.component, p, t.axis});
        out.push_back(std::move(dc));
      }
    }
    begin = end;
  }
  return out;
}

std::vector<Constraint> fueter_left_constraints() {
  return {
      {"D.1", {d1(+1, 1, 1), d1(-1, 2, 2), d1(-1, 3, 3), d1(-1, 4, 4)}, {}},
      {"D.i", {d1(+1, 2, 1), d1(+1, 1, 2), d1(+1, 4, 3), d1(-1, 3, 4)}, {}},
      {"D.j", {d1(+1, 3, 1), d1(-1, 4, 2), d1(+1, 1, 3), d1(+1, 2, 4)}, {}},
      {"D.k", {d1(+1, 4, 1), d1(+1, 3, 2), d1(-1, 2, 3), d1(+1, 1, 4)}, {}},
  };
}

std::vector<Constraint> complex_constraints() {
  return {
      {"CR.1", {d1(+1, 1, 1)}, {d1(+1, 2, 2)}},
      {"CR.2", {d1(+1, 1, 2)}, {d1(-1, 2, 1)}},
  };
}

std::string describe(const SignedPartial& term,
                     std::span<const std::string> component_names) {
  std::string s = term.sign < 0 ? "-" : "";
  const std::string& name = component_names[term.component - 1];
  if (term.order() == 1) {
    s += "d" + name + "/dx" + std::to_string(term.axis);
  } else if (term.axis == term.inner_axis) {
    s += "d2" + name + "/dx" + std::to_string(term.axis) + "^2";
  } else {
    s += "d2" + name + "/dx" + std::to_string(term.axis) + "dx" +
         std::to_string(term.inner_axis);
  }
  return s;
}

std::string describe(std::span<const SignedPartial> side,
                     std::span<const std::string> component_names) {
  if (side.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (i == 0) {
      s = describe(side[i], component_names);
      continue;
    }
    SignedPartial positive = side[i];
    positive.sign = 1;
    s += side[i].sign < 0 ? " - " : " + ";
    s += describe(positive, component_names);
  }
  return s;
}

const ConstraintResult* ConstraintReport::find(std::string_view id) const {
  for (const auto& r : results) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

ConstraintReport check_constraints(std::span<const Expr> components,
                                   std::span<const std::string> names,
                                   std::span<const Constraint> constraints,
                                   const CheckOptions& options) {
  if (names.size() != components.size()) {
    throw PreconditionError("component names do not match components");
  }
  validate_terms(constraints, components.size());
  const double tol =
      options.tol.value_or(default_tolerance(options.mode, constraints));
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be > 0");
  if (options.mode == CheckMode::symbolic) {
    return check_symbolic(components, names, constraints, options, tol);
  }
  return check_numeric(components, names, constraints, options, tol);
}

ConstraintReport check_cr(const QuatFunction& f, const CheckOptions& options,
                          Variant variant) {
  const auto constraints = variant == Variant::relations
                               ? relation_constraints()
                               : fueter_left_constraints();
  return check_constraints(f.components, kQuatNames, constraints, options);
}

ConstraintReport check_cr_symbolic(const QuatFunction& f, std::uint64_t seed,
                                   Variant variant) {
  CheckOptions options;
  options.mode = CheckMode::symbolic;
  options.seed = seed;
  return check_cr(f, options, variant);
}

ConstraintReport check_cr_numeric(const QuatFunction& f, int points,
                                  double tol, std::uint64_t seed,
                                  const FDSettings& s, Variant variant) {
  CheckOptions options;
  options.mode = CheckMode::numeric;
  options.points = points;
  options.tol = tol;
  options.seed = seed;
  options.fd = s;
  return check_cr(f, options, variant);
}

ConstraintReport check_second_order_chains(const QuatFunction& f,
                                           const CheckOptions& options,
                                           Variant variant) {
  const auto constraints =
      variant == Variant::relations
          ? second_order_chains()
          : differentiate_constraints(fueter_left_constraints());
  return check_constraints(f.components, kQuatNames, constraints, options);
}

ConstraintReport check_cr_complex(const Expr& u, const Expr& v,
                                  const CheckOptions& options) {
  const std::array<Expr, 2> components = {u, v};
  const auto constraints = complex_constraints();
  return check_constraints(components, kPlanarNames, constraints, options);
}

QuatFunction structure_linear_function(double a1, double a2, double a3,
                                       double a4) {
  const std::array<std::array<double, 4>, 4> jacobian = {{
      {a1, -a2, -a3, a4},
      {a2, a1, -a4, -a3},
      {a3, -a4, a1, -a2},
      {a4, a3, a2, a1},
  }};
  QuatFunction f;
  for (int m = 0; m < 4; ++m) {
    Expr sum;
    for (int n = 0; n < 4; ++n) {
      Expr term = Expr::literal(jacobian[m][n]) *
                  Expr::variable(static_cast<Variable>(n));
      sum = n == 0 ? term : sum + term;
    }
    f.components[m] = sum;
  }
  return f;
}

}  // namespace qcr
