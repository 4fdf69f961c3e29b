#ifndef JETCERT_RATIONAL_HPP
#define JETCERT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace jetcert {

// Arbitrary-precision rational, always stored reduced with positive
// denominator (cpp_rational canonicalizes on construction).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational &r) { return r.str(); }

class Error : public std::runtime_error {
public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

class ContextMismatchError : public Error {
public:
    explicit ContextMismatchError(const std::string &msg) : Error(msg) {}
};

} // namespace jetcert

#endif
