#include "jetcert/report.hpp"

#include <sstream>

namespace jetcert {

namespace {
const char *status_word(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
    }
    return "?";
}
const char *status_key(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
    }
    return "?";
}
} // namespace

std::string Report::render(bool porcelain) const {
    std::ostringstream os;
    if (porcelain) {
        for (const auto &r : records) {
            os << "check=" << r.name << " status=" << status_key(r.status);
            if (!r.witness.empty()) os << " witness=" << r.witness;
            os << "\n";
        }
        os << "overall=" << (all_pass() ? "pass" : "fail") << "\n";
    } else {
        for (const auto &r : records) {
            os << "CHECK " << r.name << ": " << status_word(r.status);
            if (r.status == CheckStatus::Skip && !r.witness.empty())
                os << " (" << r.witness << ")";
            os << "\n";
            if (r.status == CheckStatus::Fail && !r.witness.empty())
                os << "    " << r.witness << "\n";
        }
        os << "OVERALL: " << (all_pass() ? "PASS" : "FAIL") << "\n";
    }
    return os.str();
}

std::uint64_t Report::hash() const {
    std::string s = render(false);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace jetcert
