#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcr/expr.hpp"

namespace qcr {

// One `NAME = value` line of a function or path file.
struct Assignment {
  std::string name;
  std::string value;
  int line = 0;
  // 1-based byte column where `value` starts.
  int column = 0;
};

// Splits text into assignments. Blank lines and `#` comments are skipped;
// a repeated name is an InputError. `source` prefixes error messages.
std::vector<Assignment> parse_assignments(std::string_view text,
                                          std::string_view source);

std::string read_text_file(const std::filesystem::path& path);

// Contents of a ".qfn" file. Recognised names: F1..F4 (quaternionic
// function), u, v (planar pair), q1..q4 (parametric path in t), f or f1..f4
// (integrand). q1..q4 may use only t; everything else only x1..x4.
class FunctionFile {
 public:
  static FunctionFile parse(std::string_view text,
                            std::string source = "<input>");
  static FunctionFile load(const std::filesystem::path& path);

  bool has(std::string_view name) const;
  const Expr& get(std::string_view name) const;
  const std::string& source() const { return source_; }
  const std::vector<std::pair<std::string, Expr>>& entries() const {
    return entries_;
  }

  QuatFunction quat_function() const;
  std::pair<Expr, Expr> complex_pair() const;
  bool is_complex_pair() const { return has("u") && has("v"); }
  // `f` alone is a real-valued integrand; otherwise f1..f4 are all required.
  QuatFunction integrand() const;

 private:
  std::string source_;
  std::vector<std::pair<std::string, Expr>> entries_;
};

}  // namespace qcr
