#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algtool/scalar.hpp"

namespace algtool {

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

class UndeclaredParameter : public ParseError {
 public:
  using ParseError::ParseError;
};

// Maps an identifier to its value; nullopt means "not known here".
using Resolver = std::function<std::optional<Scalar>(std::string_view)>;

// Position of the text inside its file, for error messages.
struct SourcePos {
  int line = 0;
  int column = 1;
};

// Grammar: integers, + - * / ^ (integer exponent, possibly negative), parentheses,
// identifiers [A-Za-z_][A-Za-z0-9_]* resolved by `resolve`.
Scalar parse_expression(std::string_view text, const Resolver& resolve, SourcePos pos = {});

// Resolver accepting exactly the given parameter names.
Resolver params_resolver(const std::vector<std::string>& params);

// Linear combination of the named markers (e.g. e1..en or D1_2..), with
// Scalar coefficients in the parameters known to `params`. Returns one
// coefficient per marker.
std::vector<Scalar> parse_linear(std::string_view text, const std::vector<std::string>& markers,
                                 const Resolver& params, SourcePos pos = {});

std::vector<std::string> basis_names(std::size_t n, std::string_view prefix = "e");

bool is_identifier(std::string_view s);

}  // namespace algtool
