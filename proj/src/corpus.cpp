#include "jetcert/corpus.hpp"

#include "jetcert/parser.hpp"

namespace jetcert {
namespace corpus {

namespace {

Presentation curve(const std::string &name, const std::vector<std::string> &vars,
                   const std::string &equation) {
    Presentation p;
    p.name = name;
    p.ctx = make_context(vars);
    p.generators.push_back(parse_polynomial(equation, p.ctx));
    return p;
}

} // namespace

Presentation affine_space(std::size_t n) {
    Presentation p;
    p.name = "affine-" + std::to_string(n);
    if (n == 1) {
        p.ctx = make_context(std::vector<std::string>{"x"});
    } else {
        std::vector<std::string> vars;
        for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
        p.ctx = make_context(vars);
    }
    return p;
}

Presentation parabola() { return curve("parabola", {"x", "y"}, "y - x^2"); }
Presentation circle() { return curve("circle", {"x", "y"}, "x^2 + y^2 - 1"); }
Presentation cusp() { return curve("cusp", {"x", "y"}, "y^2 - x^3"); }
Presentation node() { return curve("node", {"x", "y"}, "y^2 - x^2*(x + 1)"); }
Presentation danielewski_x() {
    return curve("danielewski-x", {"x", "y", "z"}, "x*z - y^2 + 1");
}
Presentation danielewski_y() {
    return curve("danielewski-y", {"x", "y", "z"}, "x^2*z - y^2 + 1");
}

std::vector<Presentation> standard() {
    return {affine_space(1), parabola(), circle(),        cusp(),
            node(),          danielewski_x(), danielewski_y()};
}

std::optional<Presentation> by_name(const std::string &raw) {
    std::string name = raw;
    if (!name.empty() && name[0] == '@') name = name.substr(1);
    if (name == "parabola") return parabola();
    if (name == "circle") return circle();
    if (name == "cusp") return cusp();
    if (name == "node") return node();
    if (name == "danielewski-x") return danielewski_x();
    if (name == "danielewski-y") return danielewski_y();
    if (name == "danielewski-x-a1") {
        Presentation p = curve("danielewski-x-a1", {"x", "y", "z", "u"}, "x*z - y^2 + 1");
        return p;
    }
    if (name == "danielewski-y-a1") {
        Presentation p = curve("danielewski-y-a1", {"x", "y", "z", "u"}, "x^2*z - y^2 + 1");
        return p;
    }
    if (name.rfind("affine-", 0) == 0) {
        std::string num = name.substr(7);
        if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos)
            return affine_space((std::size_t)std::stoul(num));
    }
    return std::nullopt;
}

std::vector<std::string> names() {
    return {"@affine-N (any N >= 1)", "@parabola",        "@circle",
            "@cusp",                  "@node",            "@danielewski-x",
            "@danielewski-y",         "@danielewski-x-a1", "@danielewski-y-a1"};
}

} // namespace corpus
} // namespace jetcert
