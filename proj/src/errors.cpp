#include "fusioninv/errors.hpp"

#include <utility>

namespace fusioninv {

namespace {

std::string located(const std::string& message, const std::string& field, std::size_t line,
                    std::size_t column) {
  std::string out = message;
  if (!field.empty()) out += " (field '" + field + "')";
  if (line != 0) out += " at line " + std::to_string(line) + ", column " + std::to_string(column);
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::string field, std::size_t line, std::size_t column)
    : Error(located(message, field, line, column)), field_(std::move(field)), line_(line), column_(column) {}

}  // namespace fusioninv
