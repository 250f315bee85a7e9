#include "qcr/laplace_grid.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "qcr/errors.hpp"

namespace qcr {
namespace {

constexpr double kMaxPoints = 1e9;

std::string index_text(const std::array<int, 4>& idx) {
  return "(" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
         std::to_string(idx[2]) + "," + std::to_string(idx[3]) + ")";
}

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::to_string(v);
}

struct Strides {
  std::size_t s1, s2, s3;
};

Strides strides_of(int n) {
  const auto nn = static_cast<std::size_t>(n);
  return {nn * nn * nn, nn * nn, nn};
}

inline double neighbour_sum(const double* u, std::size_t idx,
                            const Strides& s) {
  return u[idx - 1] + u[idx + 1] + u[idx - s.s3] + u[idx + s.s3] +
         u[idx - s.s2] + u[idx + s.s2] + u[idx - s.s1] + u[idx + s.s1];
}

struct SweepResult {
  double max_update = 0.0;
  // Sum of |updates|; non-finite iff some update was non-finite.
  double sum_update = 0.0;

  void merge(const SweepResult& o) {
    max_update = std::max(max_update, o.max_update);
    sum_update += o.sum_update;
  }
};

// Runs body(i1_begin, i1_end) over disjoint slabs of interior i1 indices.
template <typename Body>
SweepResult over_slabs(int n, int threads, Body&& body) {
  const int first = 1;
  const int last = n - 1;
  const int rows = last - first;
  const int workers = std::max(1, std::min(threads, rows));
  if (workers == 1) return body(first, last);
  std::vector<SweepResult> partial(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      const int b = first + rows * w / workers;
      const int e = first + rows * (w + 1) / workers;
      pool.emplace_back([&, w, b, e] { partial[w] = body(b, e); });
    }
  }
  SweepResult total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

SweepResult jacobi_slab(const double* src, double* dst, int n, int i1b,
                        int i1e) {
  const Strides s = strides_of(n);
  SweepResult r;
  for (int i1 = i1b; i1 < i1e; ++i1) {
    for (int i2 = 1; i2 < n - 1; ++i2) {
      for (int i3 = 1; i3 < n - 1; ++i3) {
        const std::size_t base = i1 * s.s1 + i2 * s.s2 + i3 * s.s3;
        for (int i4 = 1; i4 < n - 1; ++i4) {
          const std::size_t idx = base + static_cast<std::size_t>(i4);
          const double avg = neighbour_sum(src, idx, s) * 0.125;
          const double diff = std::abs(src[idx] - avg);
          dst[idx] = avg;
          r.max_update = std::max(r.max_update, diff);
          r.sum_update += diff;
        }
      }
    }
  }
  return r;
}

// Lexicographic in-place sweep; Relax selects u += omega*(avg-u) over
// the plain assignment u = avg.
template <bool Relax>
SweepResult lexicographic_sweep(double* u, int n, double omega) {
  const Strides s = strides_of(n);
  SweepResult r;
  for (int i1 = 1; i1 < n - 1; ++i1) {
    for (int i2 = 1; i2 < n - 1; ++i2) {
      for (int i3 = 1; i3 < n - 1; ++i3) {
        const std::size_t base = i1 * s.s1 + i2 * s.s2 + i3 * s.s3;
        for (int i4 = 1; i4 < n - 1; ++i4) {
          const std::size_t idx = base + static_cast<std::size_t>(i4);
          const double avg = neighbour_sum(u, idx, s) * 0.125;
          const double delta = avg - u[idx];
          if constexpr (Relax) {
            u[idx] += omega * delta;
          } else {
            u[idx] = avg;
          }
          const double diff = std::abs(delta);
          r.max_update = std::max(r.max_update, diff);
          r.sum_update += diff;
        }
      }
    }
  }
  return r;
}

SweepResult colour_slab(double* u, int n, double omega, int colour, int i1b,
                        int i1e) {
  const Strides s = strides_of(n);
  SweepResult r;
  for (int i1 = i1b; i1 < i1e; ++i1) {
    for (int i2 = 1; i2 < n - 1; ++i2) {
      for (int i3 = 1; i3 < n - 1; ++i3) {
        const std::size_t base = i1 * s.s1 + i2 * s.s2 + i3 * s.s3;
        int i4 = 1 + ((i1 + i2 + i3 + 1 + colour) & 1);
        for (; i4 < n - 1; i4 += 2) {
          const std::size_t idx = base + static_cast<std::size_t>(i4);
          const double avg = neighbour_sum(u, idx, s) * 0.125;
          const double delta = avg - u[idx];
          u[idx] += omega * delta;
          const double diff = std::abs(delta);
          r.max_update = std::max(r.max_update, diff);
          r.sum_update += diff;
        }
      }
    }
  }
  return r;
}

[[noreturn]] void report_non_finite(const Grid4D& grid) {
  const auto values = grid.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw DomainError("solve: non-finite value at lattice index " +
                        index_text(grid.multi_index(i)));
    }
  }
  throw DomainError("solve: update magnitude overflowed");
}

}  // namespace

Grid4D::Grid4D(int n, const std::array<Interval, 4>& box)
    : n_(n), h_(0.0), box_(box) {
  if (n < 3) {
    throw InputError("grid needs at least 3 points per axis, got " +
                     std::to_string(n));
  }
  if (std::pow(static_cast<double>(n), 4) > kMaxPoints) {
    throw InputError("grid of " + std::to_string(n) + "^4 points is too large");
  }
  const double length = box[0].hi - box[0].lo;
  for (int k = 0; k < 4; ++k) {
    const double l = box[k].hi - box[k].lo;
    if (!std::isfinite(box[k].lo) || !std::isfinite(box[k].hi) || !(l > 0.0)) {
      throw InputError("grid axis " + std::to_string(k + 1) +
                       " needs finite lo < hi");
    }
    if (std::abs(l - length) > 1e-12 * std::max(1.0, std::abs(length))) {
      throw InputError(
          "grid axes must have equal lengths for uniform spacing");
    }
  }
  h_ = length / (n - 1);
  const auto nn = static_cast<std::size_t>(n);
  values_.assign(nn * nn * nn * nn, 0.0);
}

Grid4D::Grid4D(int n, Interval box) : Grid4D(n, {box, box, box, box}) {}

std::size_t Grid4D::interior_count() const {
  const auto m = static_cast<std::size_t>(n_ - 2);
  return m * m * m * m;
}

std::array<int, 4> Grid4D::multi_index(std::size_t flat) const {
  const auto n = static_cast<std::size_t>(n_);
  std::array<int, 4> idx;
  for (int k = 3; k >= 0; --k) {
    idx[k] = static_cast<int>(flat % n);
    flat /= n;
  }
  return idx;
}

Point4 Grid4D::coordinates(const std::array<int, 4>& idx) const {
  Point4 p;
  for (int k = 0; k < 4; ++k) p[k] = box_[k].lo + idx[k] * h_;
  return p;
}

bool Grid4D::is_boundary(const std::array<int, 4>& idx) const {
  return std::any_of(idx.begin(), idx.end(),
                     [&](int i) { return i == 0 || i == n_ - 1; });
}

void Grid4D::fill(const Expr& e) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] = evaluate(e, coordinates(multi_index(i)));
  }
}

Grid4D build_grid(int n, const std::array<Interval, 4>& box) {
  return Grid4D(n, box);
}

void apply_boundary(Grid4D& grid, const Expr& e) {
  auto values = grid.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto idx = grid.multi_index(i);
    if (!grid.is_boundary(idx)) continue;
    try {
      values[i] = evaluate(e, grid.coordinates(idx));
    } catch (const DomainError& err) {
      throw DomainError("boundary value at lattice point " + index_text(idx) +
                        ": " + err.what());
    }
  }
}

std::string_view method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::jacobi: return "jacobi";
    case SolveMethod::gauss_seidel: return "gauss-seidel";
    case SolveMethod::sor: return "sor";
  }
  return "?";
}

SolveStats solve(Grid4D& grid, const SolveOptions& options) {
  if (options.method == SolveMethod::sor &&
      !(options.omega > 0.0 && options.omega < 2.0)) {
    throw PreconditionError("SOR relaxation factor must lie in (0, 2), got " +
                            format_real(options.omega));
  }
  if (!(options.tol > 0.0)) throw PreconditionError("tol must be > 0");
  if (options.max_iters < 0) throw PreconditionError("max_iters must be >= 0");

  SolveStats stats;
  stats.method = options.method;
  stats.omega = options.method == SolveMethod::sor ? options.omega : 1.0;
  stats.red_black =
      options.red_black && options.method != SolveMethod::jacobi;
  const int threads =
      options.threads > 0
          ? options.threads
          : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  const int n = grid.n();
  double* u = grid.values().data();
  std::vector<double> scratch;
  if (options.method == SolveMethod::jacobi) {
    scratch.assign(grid.values().begin(), grid.values().end());
  }

  auto sweep = [&]() -> SweepResult {
    if (options.method == SolveMethod::jacobi) {
      const double* src = u;
      double* dst = scratch.data();
      const SweepResult r = over_slabs(n, threads, [&](int b, int e) {
        return jacobi_slab(src, dst, n, b, e);
      });
      std::copy(scratch.begin(), scratch.end(), u);
      return r;
    }
    if (stats.red_black) {
      SweepResult r;
      for (int colour = 0; colour < 2; ++colour) {
        r.merge(over_slabs(n, threads, [&](int b, int e) {
          return colour_slab(u, n, stats.omega, colour, b, e);
        }));
      }
      return r;
    }
    if (options.method == SolveMethod::gauss_seidel) {
      return lexicographic_sweep<false>(u, n, 1.0);
    }
    return lexicographic_sweep<true>(u, n, options.omega);
  };

  while (stats.iterations < options.max_iters) {
    const SweepResult r = sweep();
    ++stats.iterations;
    if (!std::isfinite(r.sum_update)) report_non_finite(grid);
    if (r.max_update <= options.tol) {
      stats.final_residual = update_residual(grid);
      if (stats.final_residual <= options.tol) {
        stats.converged = true;
        return stats;
      }
    }
  }
  stats.final_residual = update_residual(grid);
  stats.converged = stats.final_residual <= options.tol;
  return stats;
}

double update_residual(const Grid4D& grid) {
  const int n = grid.n();
  const Strides s = strides_of(n);
  const double* u = grid.values().data();
  double worst = 0.0;
  for (int i1 = 1; i1 < n - 1; ++i1) {
    for (int i2 = 1; i2 < n - 1; ++i2) {
      for (int i3 = 1; i3 < n - 1; ++i3) {
        const std::size_t base = i1 * s.s1 + i2 * s.s2 + i3 * s.s3;
        for (int i4 = 1; i4 < n - 1; ++i4) {
          const std::size_t idx = base + static_cast<std::size_t>(i4);
          const double diff = std::abs(u[idx] - neighbour_sum(u, idx, s) * 0.125);
          if (!(diff <= worst)) worst = diff;
        }
      }
    }
  }
  return worst;
}

double discrete_laplacian_residual(const Grid4D& grid) {
  const int n = grid.n();
  const Strides s = strides_of(n);
  const double* u = grid.values().data();
  const double inv_h2 = 1.0 / (grid.spacing() * grid.spacing());
  double worst = 0.0;
  for (int i1 = 1; i1 < n - 1; ++i1) {
    for (int i2 = 1; i2 < n - 1; ++i2) {
      for (int i3 = 1; i3 < n - 1; ++i3) {
        const std::size_t base = i1 * s.s1 + i2 * s.s2 + i3 * s.s3;
        for (int i4 = 1; i4 < n - 1; ++i4) {
          const std::size_t idx = base + static_cast<std::size_t>(i4);
          const double c = 2.0 * u[idx];
          const double lap = (u[idx + 1] - c + u[idx - 1]) +
                             (u[idx + s.s3] - c + u[idx - s.s3]) +
                             (u[idx + s.s2] - c + u[idx - s.s2]) +
                             (u[idx + s.s1] - c + u[idx - s.s1]);
          const double r = std::abs(lap) * inv_h2;
          if (!(r <= worst)) worst = r;
        }
      }
    }
  }
  return worst;
}

ReferenceComparison compare_to_reference(const Grid4D& grid, const Expr& ref) {
  ReferenceComparison out;
  const int n = grid.n();
  double sum = 0.0;
  for (int i1 = 1; i1 < n - 1; ++i1) {
    for (int i2 = 1; i2 < n - 1; ++i2) {
      for (int i3 = 1; i3 < n - 1; ++i3) {
        for (int i4 = 1; i4 < n - 1; ++i4) {
          const std::array<int, 4> idx = {i1, i2, i3, i4};
          const double err = std::abs(grid.at(i1, i2, i3, i4) -
                                      evaluate(ref, grid.coordinates(idx)));
          sum += err;
          if (!(err <= out.max_err)) out.max_err = err;
        }
      }
    }
  }
  out.mean_err = sum / static_cast<double>(grid.interior_count());
  return out;
}

void write_grid_dump(const Grid4D& grid, std::ostream& out) {
  const auto& box = grid.box();
  for (int k = 1; k < 4; ++k) {
    if (box[k].lo != box[0].lo || box[k].hi != box[0].hi) {
      throw PreconditionError("grid dump needs the same interval on every axis");
    }
  }
  out << "QGRID " << grid.n() << ' ' << format_real(box[0].lo) << ' '
      << format_real(box[0].hi) << '\n';
  for (double v : grid.values()) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    char bytes[8];
    for (char& b : bytes) {
      b = static_cast<char>(bits & 0xFFU);
      bits >>= 8;
    }
    out.write(bytes, sizeof bytes);
  }
  if (!out) throw Error("grid dump: write failed");
}

void write_grid_dump(const Grid4D& grid, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  write_grid_dump(grid, out);
}

Grid4D read_grid_dump(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw InputError("grid dump: missing header");
  std::istringstream hs(header);
  std::string magic;
  int n = 0;
  double lo = 0.0;
  double hi = 0.0;
  if (!(hs >> magic >> n >> lo >> hi) || magic != "QGRID") {
    throw InputError("grid dump: malformed header '" + header + "'");
  }
  Grid4D grid(n, Interval{lo, hi});
  for (double& v : grid.values()) {
    unsigned char bytes[8];
    if (!in.read(reinterpret_cast<char*>(bytes), sizeof bytes)) {
      throw InputError("grid dump: truncated data");
    }
    std::uint64_t bits = 0;
    for (int b = 7; b >= 0; --b) bits = (bits << 8) | bytes[b];
    v = std::bit_cast<double>(bits);
  }
  return grid;
}

}  // namespace qcr
