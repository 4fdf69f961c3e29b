#ifndef JETCERT_VARIABLE_HPP
#define JETCERT_VARIABLE_HPP

#include <compare>
#include <string>

namespace jetcert {

// A ring variable. Plain variables have level == kPlain; jet variables
// carry the level j of the series coefficient they stand for and print
// as "name#j". Identity is the pair (name, level).
struct Variable {
    static constexpr int kPlain = -1;

    std::string name;
    int level = kPlain;

    Variable() = default;
    explicit Variable(std::string n, int lvl = kPlain)
        : name(std::move(n)), level(lvl) {}

    bool is_jet() const { return level >= 0; }

    // Weight under the jet grading: level for jet variables, 0 otherwise.
    int weight() const { return level > 0 ? level : 0; }

    friend auto operator<=>(const Variable &, const Variable &) = default;

    std::string str() const {
        if (!is_jet()) return name;
        return name + "#" + std::to_string(level);
    }
};

} // namespace jetcert

#endif
