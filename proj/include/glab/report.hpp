#ifndef GLAB_REPORT_HPP
#define GLAB_REPORT_HPP

#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

namespace glab {

enum class Comparison { two_sided, one_sided_le, one_sided_ge };

/// One verified quantity: computed value against its target at a tolerance,
/// with the anchor naming which statement the target comes from.
struct VerificationReport {
    std::string name;
    double computed = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    Comparison comparison = Comparison::two_sided;
    bool passed = false;
    std::string anchor;
};

inline VerificationReport make_check(std::string name, double computed, double target,
                                     double tolerance, Comparison comparison,
                                     std::string anchor) {
    VerificationReport r;
    r.name = std::move(name);
    r.computed = computed;
    r.target = target;
    r.tolerance = tolerance;
    r.comparison = comparison;
    r.anchor = std::move(anchor);
    switch (comparison) {
        case Comparison::two_sided:
            r.passed = std::abs(computed - target) <= tolerance;
            break;
        case Comparison::one_sided_le:
            r.passed = computed <= target + tolerance;
            break;
        case Comparison::one_sided_ge:
            r.passed = computed >= target - tolerance;
            break;
    }
    if (!std::isfinite(computed)) r.passed = false;
    return r;
}

inline bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

inline const char* comparison_label(Comparison c) {
    switch (c) {
        case Comparison::two_sided: return "two-sided";
        case Comparison::one_sided_le: return "one-sided-<=";
        case Comparison::one_sided_ge: return "one-sided->=";
    }
    return "?";
}

inline void print_table(std::ostream& os, const std::vector<VerificationReport>& reports) {
    os << std::left << std::setw(28) << "name" << std::right << std::setw(15) << "computed"
       << std::setw(13) << "target" << std::setw(10) << "tol" << std::setw(14) << "comparison"
       << std::setw(7) << "status"
       << "  anchor\n";
    for (const auto& r : reports) {
        os << std::left << std::setw(28) << r.name << std::right << std::setw(15)
           << std::setprecision(8) << std::defaultfloat << r.computed << std::setw(13) << r.target
           << std::setw(10) << std::setprecision(2) << r.tolerance << std::setw(14)
           << comparison_label(r.comparison) << std::setw(7) << (r.passed ? "pass" : "FAIL")
           << "  " << r.anchor << "\n";
    }
}

}  // namespace glab

#endif  // GLAB_REPORT_HPP
