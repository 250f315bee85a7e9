#include "qcr/errors.hpp"

#include <utility>

namespace qcr {
namespace {

std::string parse_message(std::size_t offset,
                          const std::vector<std::string>& expected,
                          const std::string& found) {
  std::string msg = "syntax error at offset " + std::to_string(offset) +
                    ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += ", found " + found;
  return msg;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       std::string found)
    : InputError(parse_message(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

UnknownIdentifierError::UnknownIdentifierError(std::size_t offset,
                                               std::string identifier)
    : InputError("unknown identifier '" + identifier + "' at offset " +
                 std::to_string(offset)),
      offset_(offset),
      identifier_(std::move(identifier)) {}

MissingVariableError::MissingVariableError(std::string variable)
    : InputError("no value bound for variable '" + variable + "'"),
      variable_(std::move(variable)) {}

}  // namespace qcr
