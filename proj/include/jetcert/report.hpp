#ifndef JETCERT_REPORT_HPP
#define JETCERT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace jetcert {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness; // nonzero remainder / offending item on failure
};

struct Report {
    std::vector<CheckRecord> records;

    void pass(std::string name) { records.push_back({std::move(name), CheckStatus::Pass, {}}); }
    void fail(std::string name, std::string witness = {}) {
        records.push_back({std::move(name), CheckStatus::Fail, std::move(witness)});
    }
    void skip(std::string name, std::string why = {}) {
        records.push_back({std::move(name), CheckStatus::Skip, std::move(why)});
    }
    void check(std::string name, bool ok, std::string witness = {}) {
        if (ok)
            pass(std::move(name));
        else
            fail(std::move(name), std::move(witness));
    }
    void append(const Report &other) {
        records.insert(records.end(), other.records.begin(), other.records.end());
    }
    void append_prefixed(const std::string &prefix, const Report &other) {
        for (auto r : other.records) {
            r.name = prefix + r.name;
            records.push_back(std::move(r));
        }
    }

    bool all_pass() const {
        for (const auto &r : records)
            if (r.status == CheckStatus::Fail) return false;
        return true;
    }
    const CheckRecord *first_failure() const {
        for (const auto &r : records)
            if (r.status == CheckStatus::Fail) return &r;
        return nullptr;
    }

    // Plain text: one "CHECK <name>: PASS|FAIL|SKIP" line per record with an
    // indented witness on failure. Porcelain: key=value records.
    std::string render(bool porcelain = false) const;

    // FNV-1a hash of the rendered plain transcript.
    std::uint64_t hash() const;
};

} // namespace jetcert

#endif
