#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "qcr/expr.hpp"

namespace qcr {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

// Uniform n^4 lattice over an axis-aligned box. Values are stored flat with
// i4 varying fastest; lattice indices are 0-based, 0 and n-1 are boundary.
class Grid4D {
 public:
  // Throws InputError for n < 3, an empty or non-finite interval, or axis
  // lengths that would give unequal spacing.
  Grid4D(int n, const std::array<Interval, 4>& box);
  Grid4D(int n, Interval box);

  int n() const { return n_; }
  double spacing() const { return h_; }
  const std::array<Interval, 4>& box() const { return box_; }
  std::size_t size() const { return values_.size(); }
  std::size_t interior_count() const;

  std::size_t index(int i1, int i2, int i3, int i4) const {
    const auto n = static_cast<std::size_t>(n_);
    return ((static_cast<std::size_t>(i1) * n + static_cast<std::size_t>(i2)) *
                n +
            static_cast<std::size_t>(i3)) *
               n +
           static_cast<std::size_t>(i4);
  }
  std::array<int, 4> multi_index(std::size_t flat) const;
  Point4 coordinates(const std::array<int, 4>& idx) const;
  bool is_boundary(const std::array<int, 4>& idx) const;

  double& at(int i1, int i2, int i3, int i4) {
    return values_[index(i1, i2, i3, i4)];
  }
  double at(int i1, int i2, int i3, int i4) const {
    return values_[index(i1, i2, i3, i4)];
  }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  // Sets every lattice point (boundary and interior) to e.
  void fill(const Expr& e);

 private:
  int n_;
  double h_;
  std::array<Interval, 4> box_;
  std::vector<double> values_;
};

Grid4D build_grid(int n, const std::array<Interval, 4>& box);

// Sets every boundary point to e at its coordinates; interior untouched.
// Domain errors are rethrown naming the lattice point.
void apply_boundary(Grid4D& grid, const Expr& e);

enum class SolveMethod { jacobi, gauss_seidel, sor };

std::string_view method_name(SolveMethod m);

struct SolveOptions {
  SolveMethod method = SolveMethod::sor;
  double omega = 1.5;
  double tol = 1e-10;
  long max_iters = 200000;
  // Red-black ordering for Gauss-Seidel / SOR (parallelisable sweeps).
  bool red_black = false;
  // Worker threads for Jacobi and red-black sweeps; 0 picks the hardware
  // concurrency.
  int threads = 1;
};

struct SolveStats {
  long iterations = 0;
  // max over the interior of |u - (sum of the 8 axis neighbours) / 8|.
  double final_residual = 0.0;
  bool converged = false;
  SolveMethod method = SolveMethod::sor;
  double omega = 1.0;
  bool red_black = false;
};

// Iterates the 8-neighbour averaging update until the max interior update
// |u - avg| is at most tol or max_iters sweeps have run. Throws
// PreconditionError for omega outside (0, 2) with SOR and DomainError when a
// value turns non-finite.
SolveStats solve(Grid4D& grid, const SolveOptions& options);

// max over the interior of |u - avg| (the solver's stopping metric).
double update_residual(const Grid4D& grid);

// max over the interior of |sum over axes of second differences| / h^2.
double discrete_laplacian_residual(const Grid4D& grid);

struct ReferenceComparison {
  double max_err = 0.0;
  double mean_err = 0.0;
};

ReferenceComparison compare_to_reference(const Grid4D& grid, const Expr& ref);

// "QGRID n lo hi\n" followed by n^4 little-endian IEEE doubles in index
// order. Requires the same interval on every axis.
void write_grid_dump(const Grid4D& grid, std::ostream& out);
void write_grid_dump(const Grid4D& grid, const std::filesystem::path& path);
Grid4D read_grid_dump(std::istream& in);

}  // namespace qcr
