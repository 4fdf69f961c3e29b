#ifndef JETCERT_CORPUS_HPP
#define JETCERT_CORPUS_HPP

#include "jetcert/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jetcert {
namespace corpus {

Presentation affine_space(std::size_t n); // A^n, variables x1..xn (x for n = 1)
Presentation parabola();                  // y - x^2
Presentation circle();                    // x^2 + y^2 - 1
Presentation cusp();                      // y^2 - x^3
Presentation node();                      // y^2 - x^2*(x + 1)
Presentation danielewski_x();             // x*z - y^2 + 1
Presentation danielewski_y();             // x^2*z - y^2 + 1

// The seven standard test varieties, smooth and singular.
std::vector<Presentation> standard();

// Lookup by builtin name ("@danielewski-x", "@affine-2", ...); names
// without the leading '@' are accepted too.
std::optional<Presentation> by_name(const std::string &name);

// All builtin names, for diagnostics.
std::vector<std::string> names();

} // namespace corpus
} // namespace jetcert

#endif
