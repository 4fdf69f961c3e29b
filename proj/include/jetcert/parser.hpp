#ifndef JETCERT_PARSER_HPP
#define JETCERT_PARSER_HPP

#include "jetcert/polynomial.hpp"

#include <string>

namespace jetcert {

class ParseError : public Error {
public:
    ParseError(const std::string &msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Parse an expression over the given context.
//
// Grammar (whitespace insignificant):
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' natural)?
//   atom     := identifier | rational | '(' expr ')' | '-' atom
//   rational := natural ('/' natural)?
//   identifier := letter (letter|digit|'_')* ('#' natural)?
//
// There is no implicit multiplication: "xz" is a single identifier.
Polynomial parse_polynomial(const std::string &text, const ContextPtr &ctx);

// Parse a variable name of the form  name  or  name#level.
Variable parse_variable(const std::string &text);

} // namespace jetcert

#endif
