#ifndef ASEP_REPORT_HPP
#define ASEP_REPORT_HPP

#include <string>
#include <vector>

namespace asep {

// One exactly-checked identity instance.
struct IdentityResult {
    std::string identity;
    std::string indices;
    bool holds;
    std::string lhs, rhs;
};

struct IdentityReport {
    std::vector<IdentityResult> results;
    bool ok() const {
        for (const auto& r : results)
            if (!r.holds) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& r : results)
            if (!r.holds) ++n;
        return n;
    }
};

} // namespace asep

#endif // ASEP_REPORT_HPP
