#ifndef TANPOLY_REPORT_HPP
#define TANPOLY_REPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tanpoly {

/// One failed check: what was checked plus the named values involved,
/// e.g. {"n", "4"}, {"lhs", "30"}, {"rhs", "28"}.
struct Failure {
    std::string check;
    std::vector<std::pair<std::string, std::string>> fields;
};

struct VerifyReport {
    VerifyReport() = default;
    explicit VerifyReport(std::string name) : suite(std::move(name)) {}

    std::string suite;
    std::size_t checked = 0;
    std::vector<Failure> failures;
    // Informational remarks that are not failures (e.g. index-range observations).
    std::vector<std::string> notes;

    bool pass() const noexcept { return failures.empty(); }

    void expect(bool ok, Failure failure)
    {
        ++checked;
        if (!ok)
            failures.push_back(std::move(failure));
    }

    void merge(const VerifyReport& other)
    {
        checked += other.checked;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
};

}  // namespace tanpoly

#endif
