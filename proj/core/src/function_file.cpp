#include "qcr/function_file.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "qcr/errors.hpp"

namespace qcr {
namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) {
    return c != ' ' && c != '\t' && c != '\r';
  };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_name(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

constexpr std::array<std::string_view, 4> kQuatNames = {"F1", "F2", "F3",
                                                        "F4"};
constexpr std::array<std::string_view, 4> kIntegrandNames = {"f1", "f2", "f3",
                                                             "f4"};
constexpr std::array<std::string_view, 4> kPathNames = {"q1", "q2", "q3",
                                                        "q4"};

bool is_path_name(std::string_view name) {
  return std::find(kPathNames.begin(), kPathNames.end(), name) !=
         kPathNames.end();
}

bool is_known_name(std::string_view name) {
  static constexpr std::string_view kOthers[] = {"u", "v", "f"};
  auto in = [&](auto&& list) {
    return std::find(std::begin(list), std::end(list), name) != std::end(list);
  };
  return in(kQuatNames) || in(kIntegrandNames) || in(kPathNames) ||
         in(kOthers);
}

}  // namespace

std::vector<Assignment> parse_assignments(std::string_view text,
                                          std::string_view source) {
  std::vector<Assignment> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) {
      if (nl == std::string_view::npos) break;
      continue;
    }
    const auto where = std::string(source) + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InputError(where + ": expected 'NAME = value'");
    }
    const std::string_view name = trim(line.substr(0, eq));
    if (!is_name(name)) {
      throw InputError(where + ": invalid name '" + std::string(name) + "'");
    }
    std::string_view value = line.substr(eq + 1);
    std::size_t col = eq + 2;
    while (!value.empty() && (value.front() == ' ' || value.front() == '\t')) {
      value.remove_prefix(1);
      ++col;
    }
    value = trim(value);
    if (value.empty()) {
      throw InputError(where + ": missing value for '" + std::string(name) +
                       "'");
    }
    for (const auto& a : out) {
      if (a.name == name) {
        throw InputError(where + ": duplicate name '" + std::string(name) +
                         "' (first defined on line " + std::to_string(a.line) +
                         ")");
      }
    }
    out.push_back({std::string(name), std::string(value), line_no,
                   static_cast<int>(col)});
    if (nl == std::string_view::npos) break;
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FunctionFile FunctionFile::parse(std::string_view text, std::string source) {
  FunctionFile file;
  file.source_ = std::move(source);
  for (const auto& a : parse_assignments(text, file.source_)) {
    const auto where = file.source_ + ":" + std::to_string(a.line);
    if (!is_known_name(a.name)) {
      throw InputError(where + ": unrecognised name '" + a.name +
                       "' (expected F1..F4, u, v, q1..q4, f or f1..f4)");
    }
    Expr e;
    try {
      e = qcr::parse(a.value);
    } catch (const ParseError& err) {
      throw InputError(where + ":" +
                       std::to_string(a.column + err.offset() - 1) + ": " +
                       err.what());
    } catch (const UnknownIdentifierError& err) {
      throw InputError(where + ":" +
                       std::to_string(a.column + err.offset() - 1) + ": " +
                       err.what());
    }
    const bool path = is_path_name(a.name);
    constexpr std::uint8_t kSpatialMask = 0x0F;
    constexpr std::uint8_t kTimeMask = 0x10;
    const std::uint8_t allowed = path ? kTimeMask : kSpatialMask;
    if ((e.variable_mask() & ~allowed) != 0) {
      throw InputError(where + ": '" + a.name + "' may only use " +
                       (path ? "t" : "x1..x4"));
    }
    file.entries_.emplace_back(a.name, std::move(e));
  }
  return file;
}

FunctionFile FunctionFile::load(const std::filesystem::path& path) {
  return parse(read_text_file(path), path.string());
}

bool FunctionFile::has(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.first == name; });
}

const Expr& FunctionFile::get(std::string_view name) const {
  for (const auto& [n, e] : entries_) {
    if (n == name) return e;
  }
  throw InputError(source_ + ": missing definition of '" + std::string(name) +
                   "'");
}

QuatFunction FunctionFile::quat_function() const {
  QuatFunction f;
  for (int m = 0; m < 4; ++m) f.components[m] = get(kQuatNames[m]);
  return f;
}

std::pair<Expr, Expr> FunctionFile::complex_pair() const {
  const Expr& u = get("u");
  const Expr& v = get("v");
  constexpr std::uint8_t kPlanarMask = 0x03;
  for (const auto* e : {&u, &v}) {
    if ((e->variable_mask() & ~kPlanarMask) != 0) {
      throw InputError(source_ + ": u and v may only use x1 and x2");
    }
  }
  return {u, v};
}

QuatFunction FunctionFile::integrand() const {
  QuatFunction f;
  const bool any_component =
      std::any_of(kIntegrandNames.begin(), kIntegrandNames.end(),
                  [&](std::string_view n) { return has(n); });
  if (has("f")) {
    if (any_component) {
      throw InputError(source_ + ": define either f or f1..f4, not both");
    }
    f.components[0] = get("f");
    return f;
  }
  if (!any_component) {
    throw InputError(source_ + ": missing integrand (f or f1..f4)");
  }
  for (int m = 0; m < 4; ++m) f.components[m] = get(kIntegrandNames[m]);
  return f;
}

}  // namespace qcr
