// Value expressions (parser, renderer, conversion to closed forms) and the
// command-line front end.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mmv/sym.hpp"

namespace mmv {

struct Expr {
  enum class Kind { Num, Const, Value, Add, Sub, Mul, Neg };
  Kind kind = Kind::Num;
  Q num;                   // Num
  Atom atom{};             // Const (log2, pi, zeta(n)) and Value
  std::vector<Expr> args;  // operands of Add, Sub, Mul (two) and Neg (one)

  bool operator==(const Expr& o) const;
};

/// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := rational | const | value | '(' expr ')' | '-' factor.
/// Syntax errors throw ParseError; arity and signature errors throw DomainError.
Expr parse_expr(std::string_view src);
/// Fewest parentheses such that parse_expr gives the same tree back.
std::string render(const Expr& e);
Sym to_sym(const Expr& e);

/// Exit codes of run().
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kDomainError = 3,
  kVerifyFailed = 4,
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmv
