#ifndef GLAB_STRIP_GAMES_HPP
#define GLAB_STRIP_GAMES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "glab/davie_reeds.hpp"
#include "glab/rng.hpp"
#include "glab/special_functions.hpp"

namespace glab {

/// Piecewise-constant function on the real line with values in {-1, 0, +1},
/// one value per cell between consecutive breakpoints. Adjacent equal values
/// are merged on construction so the represented function determines the
/// representation. Cells are open; values on the breakpoints themselves are
/// irrelevant to every Gaussian integral.
class StepFunction1D {
  public:
    StepFunction1D(std::vector<double> breakpoints, std::vector<int> values) {
        if (values.size() != breakpoints.size() + 1)
            throw std::invalid_argument("StepFunction1D: need one value per cell");
        for (double b : breakpoints)
            if (!std::isfinite(b)) throw std::invalid_argument("StepFunction1D: non-finite breakpoint");
        for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
            if (!(breakpoints[i] < breakpoints[i + 1]))
                throw std::invalid_argument("StepFunction1D: breakpoints must be strictly increasing");
        for (int v : values)
            if (v < -1 || v > 1) throw std::invalid_argument("StepFunction1D: values must be -1, 0 or +1");
        // Canonical form: drop breakpoints whose two sides agree.
        for (std::size_t i = 0; i < breakpoints.size();) {
            if (values[i] == values[i + 1]) {
                breakpoints.erase(breakpoints.begin() + static_cast<std::ptrdiff_t>(i));
                values.erase(values.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }
        breakpoints_ = std::move(breakpoints);
        values_ = std::move(values);
    }

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<int>& values() const { return values_; }

    int value_at(double x) const {
        std::size_t cell = 0;
        while (cell < breakpoints_.size() && x >= breakpoints_[cell]) ++cell;
        return values_[cell];
    }

  private:
    std::vector<double> breakpoints_;
    std::vector<int> values_;
};

/// A +-1 valued step function: a leading sign on (-inf, first breakpoint)
/// and a sign flip at every breakpoint. Coincident breakpoints annihilate
/// in pairs on construction, which keeps the flip semantics intact.
class SignFunction1D {
  public:
    SignFunction1D() : SignFunction1D(1) {}

    explicit SignFunction1D(int leading_sign, std::vector<double> breakpoints = {}) {
        if (leading_sign != 1 && leading_sign != -1)
            throw std::invalid_argument("SignFunction1D: leading sign must be +-1");
        for (double b : breakpoints)
            if (!std::isfinite(b)) throw std::invalid_argument("SignFunction1D: non-finite breakpoint");
        std::sort(breakpoints.begin(), breakpoints.end());
        for (std::size_t i = 0; i + 1 < breakpoints.size();) {
            if (breakpoints[i] == breakpoints[i + 1])
                breakpoints.erase(breakpoints.begin() + static_cast<std::ptrdiff_t>(i),
                                  breakpoints.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            else
                ++i;
        }
        leading_sign_ = leading_sign;
        breakpoints_ = std::move(breakpoints);
    }

    int leading_sign() const { return leading_sign_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    int value_at(double x) const {
        std::size_t flips = 0;
        while (flips < breakpoints_.size() && x >= breakpoints_[flips]) ++flips;
        return (flips % 2 == 0) ? leading_sign_ : -leading_sign_;
    }

    /// Sign on cell i, cells numbered from the left.
    int cell_value(std::size_t i) const { return (i % 2 == 0) ? leading_sign_ : -leading_sign_; }

    StepFunction1D to_step() const {
        std::vector<int> values(breakpoints_.size() + 1);
        for (std::size_t i = 0; i < values.size(); ++i) values[i] = cell_value(i);
        return StepFunction1D(breakpoints_, std::move(values));
    }

    /// Reflection x -> -x; the leading sign becomes the value at +infinity.
    SignFunction1D reflected() const {
        std::vector<double> bp(breakpoints_.rbegin(), breakpoints_.rend());
        for (double& b : bp) b = -b;
        return SignFunction1D(value_at_plus_infinity(), std::move(bp));
    }

    int value_at_plus_infinity() const {
        return (breakpoints_.size() % 2 == 0) ? leading_sign_ : -leading_sign_;
    }

  private:
    int leading_sign_;
    std::vector<double> breakpoints_;
};

/// E[He_k(X) f(X)] for a step function, assembled in closed form from the
/// Hermite partial integrals. For k >= 1 the cell sum telescopes to a sum
/// over breakpoints: sum_j (v_{j+1} - v_j) He_{k-1}(b_j) phi(b_j).
inline double moment(const StepFunction1D& f, int k) {
    if (k < 0 || k > kMaxHermiteDegree)
        throw std::domain_error("moment: degree must be in [0, 64]");
    const auto& bp = f.breakpoints();
    const auto& vals = f.values();
    if (k == 0) {
        double sum = 0.0;
        double prev_cdf = 0.0;
        for (std::size_t i = 0; i < bp.size(); ++i) {
            const double cdf = gauss_cdf(bp[i]);
            sum += vals[i] * (cdf - prev_cdf);
            prev_cdf = cdf;
        }
        sum += vals.back() * (1.0 - prev_cdf);
        return sum;
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < bp.size(); ++j)
        sum += (vals[j + 1] - vals[j]) * hermite_he(k - 1, bp[j]) * gauss_pdf(bp[j]);
    return sum;
}

inline double moment(const SignFunction1D& f, int k) { return moment(f.to_step(), k); }

/// <Pi_k f, Pi_k g> for univariate functions: the degree-k projections are
/// rank one, so the inner product is moment(f,k) moment(g,k) / k!.
inline double pi_k_inner(const SignFunction1D& f, const SignFunction1D& g, int k) {
    return moment(f, k) * moment(g, k) / factorial(k);
}

inline double pi_k_inner(const StepFunction1D& f, const StepFunction1D& g, int k) {
    return moment(f, k) * moment(g, k) / factorial(k);
}

namespace detail {

/// Walks the common refinement of two sign functions' cell partitions and
/// calls visit(lo, hi, value_f, value_g) on every cell.
template <typename Visitor>
inline void for_each_common_cell(const SignFunction1D& f, const SignFunction1D& g, Visitor visit) {
    const auto& bf = f.breakpoints();
    const auto& bg = g.breakpoints();
    std::size_t i = 0, j = 0;
    double lo = -std::numeric_limits<double>::infinity();
    int vf = f.leading_sign();
    int vg = g.leading_sign();
    while (i < bf.size() || j < bg.size()) {
        double hi;
        bool step_f = false, step_g = false;
        if (i < bf.size() && (j >= bg.size() || bf[i] <= bg[j])) {
            hi = bf[i];
            step_f = true;
            if (j < bg.size() && bg[j] == bf[i]) step_g = true;
        } else {
            hi = bg[j];
            step_g = true;
        }
        if (lo < hi) visit(lo, hi, vf, vg);
        if (step_f) {
            vf = -vf;
            ++i;
        }
        if (step_g) {
            vg = -vg;
            ++j;
        }
        lo = hi;
    }
    visit(lo, std::numeric_limits<double>::infinity(), vf, vg);
}

}  // namespace detail

/// E[f(X) g(X)], exact from the interval overlap of the two sign patterns.
inline double inner_product(const SignFunction1D& f, const SignFunction1D& g) {
    double sum = 0.0;
    detail::for_each_common_cell(f, g, [&](double lo, double hi, int vf, int vg) {
        sum += static_cast<double>(vf * vg) * (gauss_cdf(hi) - gauss_cdf(lo));
    });
    return sum;
}

/// Gaussian measure of {x : f(x) != g(x)}.
inline double disagreement_measure(const SignFunction1D& f, const SignFunction1D& g) {
    double sum = 0.0;
    detail::for_each_common_cell(f, g, [&](double lo, double hi, int vf, int vg) {
        if (vf != vg) sum += gauss_cdf(hi) - gauss_cdf(lo);
    });
    return sum;
}

/// Finite union of disjoint intervals with sorted endpoints; +-infinity is
/// allowed at the extremes. Overlapping or touching intervals are merged on
/// construction; degenerate intervals are dropped (measure zero is
/// irrelevant to every Gaussian integral in this module).
class IntervalUnion {
  public:
    struct Interval {
        double lo;
        double hi;
    };

    IntervalUnion() = default;

    explicit IntervalUnion(std::vector<Interval> intervals) {
        for (const auto& iv : intervals) {
            if (std::isnan(iv.lo) || std::isnan(iv.hi))
                throw std::invalid_argument("IntervalUnion: NaN endpoint");
            if (iv.lo > iv.hi) throw std::invalid_argument("IntervalUnion: requires lo <= hi");
        }
        std::erase_if(intervals, [](const Interval& iv) { return !(iv.lo < iv.hi); });
        std::sort(intervals.begin(), intervals.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        for (const auto& iv : intervals) {
            if (!intervals_.empty() && iv.lo <= intervals_.back().hi)
                intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
            else
                intervals_.push_back(iv);
        }
    }

    /// {x : |x| >= c}.
    static IntervalUnion outside(double c) {
        const double inf = std::numeric_limits<double>::infinity();
        return IntervalUnion({{-inf, -c}, {c, inf}});
    }

    /// {x : x >= c}.
    static IntervalUnion half_line(double c) {
        return IntervalUnion({{c, std::numeric_limits<double>::infinity()}});
    }

    const std::vector<Interval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }

    bool contains(double x) const {
        for (const auto& iv : intervals_)
            if (iv.lo <= x && x <= iv.hi) return true;
        return false;
    }

  private:
    std::vector<Interval> intervals_;
};

/// Gaussian measure gamma(S) via CDF differences.
inline double gaussian_measure(const IntervalUnion& s) {
    double sum = 0.0;
    for (const auto& iv : s.intervals()) sum += gauss_cdf(iv.hi) - gauss_cdf(iv.lo);
    return sum;
}

/// E[|X| 1_S(X)]; the antiderivative of |x| phi(x) is +-phi, split at 0.
inline double abs_x_mass(const IntervalUnion& s) {
    double sum = 0.0;
    for (const auto& iv : s.intervals()) {
        const double pa = gauss_pdf(iv.lo);  // exp(-inf) = 0 handles infinite ends
        const double pb = gauss_pdf(iv.hi);
        if (iv.lo >= 0.0)
            sum += pa - pb;
        else if (iv.hi <= 0.0)
            sum += pb - pa;
        else
            sum += 2.0 * kInvSqrt2Pi - pa - pb;
    }
    return sum;
}

inline IntervalUnion symmetric_difference(const IntervalUnion& s, const IntervalUnion& t) {
    std::vector<double> cuts;
    for (const auto& iv : s.intervals()) {
        if (std::isfinite(iv.lo)) cuts.push_back(iv.lo);
        if (std::isfinite(iv.hi)) cuts.push_back(iv.hi);
    }
    for (const auto& iv : t.intervals()) {
        if (std::isfinite(iv.lo)) cuts.push_back(iv.lo);
        if (std::isfinite(iv.hi)) cuts.push_back(iv.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> bounds;
    bounds.push_back(-inf);
    bounds.insert(bounds.end(), cuts.begin(), cuts.end());
    bounds.push_back(inf);

    std::vector<IntervalUnion::Interval> out;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        const double lo = bounds[i];
        const double hi = bounds[i + 1];
        double probe;
        if (std::isfinite(lo) && std::isfinite(hi))
            probe = 0.5 * (lo + hi);
        else if (std::isfinite(lo))
            probe = lo + 1.0;
        else if (std::isfinite(hi))
            probe = hi - 1.0;
        else
            probe = 0.0;
        if (s.contains(probe) != t.contains(probe)) out.push_back({lo, hi});
    }
    return IntervalUnion(std::move(out));
}

/// u = sign(x) 1_{|x| >= c}: the strip-complement sign profile.
inline StepFunction1D strip_complement_sign(double c) {
    return StepFunction1D({-c, c}, {-1, 0, 1});
}

/// h = f 1_{|x| <= c}: the restriction of a sign function to the strip.
inline StepFunction1D strip_restriction(const SignFunction1D& f, double c) {
    std::vector<double> bp{-c};
    std::vector<int> vals{0};
    for (std::size_t cell = 0; cell <= f.breakpoints().size(); ++cell) {
        const double lo = (cell == 0) ? -std::numeric_limits<double>::infinity()
                                      : f.breakpoints()[cell - 1];
        const double hi = (cell == f.breakpoints().size())
                              ? std::numeric_limits<double>::infinity()
                              : f.breakpoints()[cell];
        const double clo = std::max(lo, -c);
        const double chi = std::min(hi, c);
        if (clo < chi) {
            vals.push_back(f.cell_value(cell));
            if (chi < c) bp.push_back(chi);
        }
    }
    bp.push_back(c);
    vals.push_back(0);
    return StepFunction1D(std::move(bp), std::move(vals));
}

/// Builds the strip pair f = u + h, g = u - h from a strip profile h that is
/// +-1 inside [-c, c] and 0 outside. Both outputs agree with sign(x) outside
/// the strip and are negatives of each other inside it.
inline std::pair<SignFunction1D, SignFunction1D> build_strip_pair(const StepFunction1D& h,
                                                                  double c) {
    const auto& bp = h.breakpoints();
    const auto& vals = h.values();
    constexpr double kEdgeTol = 1e-9;
    const bool supported = bp.size() >= 2 && std::abs(bp.front() + c) <= kEdgeTol &&
                           std::abs(bp.back() - c) <= kEdgeTol && vals.front() == 0 &&
                           vals.back() == 0 &&
                           std::all_of(vals.begin() + 1, vals.end() - 1,
                                       [](int v) { return v == 1 || v == -1; });
    if (!supported)
        throw std::invalid_argument(
            "build_strip_pair: h must be +-1 on [-c, c] and vanish outside");

    const auto assemble = [&](int inner_sign_of_h) {
        std::vector<double> flips;
        int prev = -1;  // value on (-inf, -c)
        for (std::size_t i = 1; i + 1 < vals.size(); ++i) {
            const int v = inner_sign_of_h * vals[i];
            if (v != prev) flips.push_back(bp[i - 1]);
            prev = v;
        }
        if (prev != 1) flips.push_back(bp.back());
        return SignFunction1D(-1, std::move(flips));
    };
    return {assemble(+1), assemble(-1)};
}

inline std::pair<SignFunction1D, SignFunction1D> build_strip_pair(const StepFunction1D& h) {
    return build_strip_pair(h, dr_constants().c_star);
}

/// Diagnostics for the strip-pair structure check. item_i holds when the
/// L2 deviation from the nearest exact strip pair is at most the requested
/// tolerance; h_moment1 reports the balance residual |E[X h(X)]| of the
/// strip restriction h = f 1_{|x| <= c}. Strip structure is defined up to
/// an orthogonal change of coordinates, which in one dimension means the
/// reflection x -> -x; the check tries both orientations and reports the
/// closer one.
struct StripPairDiagnostics {
    bool item_i = false;
    bool reflected = false;            // matched orientation is x -> -x
    double outside_mismatch_f = 0.0;   // gamma{|x| >= c : f != sign(x)}
    double outside_mismatch_g = 0.0;   // gamma{|x| >= c : g != sign(x)}
    double inside_mismatch = 0.0;      // gamma{|x| < c : f != -g}
    double l2_deviation = 0.0;         // 2 sqrt(total mismatch measure)
    double h_moment1 = 0.0;            // |moment(h, 1)|
};

namespace detail {

inline StripPairDiagnostics strip_diagnostics_oriented(const SignFunction1D& f,
                                                       const SignFunction1D& g, double tol,
                                                       double c) {
    StripPairDiagnostics d;
    for_each_common_cell(f, g, [&](double lo, double hi, int vf, int vg) {
        // outside part: compare against sign(x)
        const double left_hi = std::min(hi, -c);
        if (lo < left_hi) {
            const double meas = gauss_cdf(left_hi) - gauss_cdf(lo);
            if (vf != -1) d.outside_mismatch_f += meas;
            if (vg != -1) d.outside_mismatch_g += meas;
        }
        const double right_lo = std::max(lo, c);
        if (right_lo < hi) {
            const double meas = gauss_cdf(hi) - gauss_cdf(right_lo);
            if (vf != 1) d.outside_mismatch_f += meas;
            if (vg != 1) d.outside_mismatch_g += meas;
        }
        // inside part: f = -g
        const double in_lo = std::max(lo, -c);
        const double in_hi = std::min(hi, c);
        if (in_lo < in_hi && vf != -vg) d.inside_mismatch += gauss_cdf(in_hi) - gauss_cdf(in_lo);
    });
    const double total = d.outside_mismatch_f + d.outside_mismatch_g + d.inside_mismatch;
    d.l2_deviation = 2.0 * std::sqrt(std::max(total, 0.0));
    d.item_i = d.l2_deviation <= tol;
    d.h_moment1 = std::abs(moment(strip_restriction(f, c), 1));
    return d;
}

}  // namespace detail

inline StripPairDiagnostics is_strip_pair(const SignFunction1D& f, const SignFunction1D& g,
                                          double tol, double c) {
    StripPairDiagnostics plain = detail::strip_diagnostics_oriented(f, g, tol, c);
    if (plain.l2_deviation == 0.0) return plain;
    StripPairDiagnostics mirrored =
        detail::strip_diagnostics_oriented(f.reflected(), g.reflected(), tol, c);
    mirrored.reflected = true;
    return mirrored.l2_deviation < plain.l2_deviation ? mirrored : plain;
}

inline StripPairDiagnostics is_strip_pair(const SignFunction1D& f, const SignFunction1D& g,
                                          double tol = 1e-9) {
    return is_strip_pair(f, g, tol, dr_constants().c_star);
}

/// <Pi_3 f, Pi_3 g> for a validated strip pair; equals
/// ||Pi_3 u||^2 - ||Pi_3 h||^2 by the u/h decomposition. The structural
/// check allows 1e-4 of L2 slop so pairs built from profiles with edge
/// breakpoints a rounding error away from +-c still validate.
inline double pi3_gap(const SignFunction1D& f, const SignFunction1D& g, double c) {
    if (!is_strip_pair(f, g, 1e-4, c).item_i)
        throw std::invalid_argument("pi3_gap: (f, g) is not a strip pair");
    return pi_k_inner(f, g, 3);
}

inline double pi3_gap(const SignFunction1D& f, const SignFunction1D& g) {
    return pi3_gap(f, g, dr_constants().c_star);
}

namespace detail {

inline StepFunction1D with_breakpoints(const StepFunction1D& pattern, std::vector<double> bp) {
    return StepFunction1D(std::move(bp), pattern.values());
}

}  // namespace detail

/// Moves breakpoint `index` of the pattern (and, when `mirrored`, the
/// breakpoint at its negative in lockstep) until E[X h(X)] = 0. The
/// feasible cell is bounded by the neighboring fixed breakpoints; a sign
/// change of the residual across that cell is required. If the pattern is
/// already balanced the input breakpoint is returned unchanged.
inline double solve_balanced_breakpoint(const StepFunction1D& pattern, std::size_t index,
                                        bool mirrored = false) {
    const auto& bp = pattern.breakpoints();
    if (index >= bp.size()) throw std::invalid_argument("solve_balanced_breakpoint: bad index");
    constexpr double kBalancedTol = 1e-12;
    if (std::abs(moment(pattern, 1)) <= kBalancedTol) return bp[index];

    if (!mirrored) {
        const double lo = (index == 0) ? -kGaussianTailCutoff : bp[index - 1];
        const double hi = (index + 1 == bp.size()) ? kGaussianTailCutoff : bp[index + 1];
        const double pad = 1e-9 * (hi - lo);
        const auto residual = [&](double t) {
            auto moved = bp;
            moved[index] = t;
            return moment(detail::with_breakpoints(pattern, std::move(moved)), 1);
        };
        double root;
        try {
            root = find_root(residual, lo + pad, hi - pad, 1e-13);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("solve_balanced_breakpoint: no root in the feasible cell");
        }
        return root;
    }

    // Mirrored solve: the unknown appears as the pair (-t, t).
    std::size_t pos = index;
    if (bp[pos] == 0.0)
        throw std::invalid_argument("solve_balanced_breakpoint: cannot mirror a breakpoint at 0");
    std::size_t mirror = bp.size();
    for (std::size_t j = 0; j < bp.size(); ++j)
        if (j != pos && std::abs(bp[j] + bp[pos]) <= 1e-9) mirror = j;
    if (mirror == bp.size())
        throw std::invalid_argument("solve_balanced_breakpoint: no mirrored breakpoint present");
    if (bp[pos] < 0.0) std::swap(pos, mirror);  // solve for the positive representative

    const double t0 = bp[pos];
    double lo = 0.0, hi = kGaussianTailCutoff;
    for (std::size_t j = 0; j < bp.size(); ++j) {
        if (j == pos || j == mirror) continue;
        const double a = std::abs(bp[j]);
        if (a < t0)
            lo = std::max(lo, a);
        else
            hi = std::min(hi, a);
    }
    const double pad = 1e-9 * (hi - lo);
    const auto residual = [&](double t) {
        auto moved = bp;
        moved[pos] = t;
        moved[mirror] = -t;
        return moment(detail::with_breakpoints(pattern, std::move(moved)), 1);
    };
    double root;
    try {
        root = find_root(residual, lo + pad, hi - pad, 1e-13);
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("solve_balanced_breakpoint: no root in the feasible cell");
    }
    return root;
}

/// Samples a balanced strip profile: random interior flips inside [-c, c],
/// with one breakpoint solved so that E[X h(X)] = 0. Profiles with no
/// solvable cell are rejected and resampled.
inline StepFunction1D random_balanced_pattern(RngStream& rng, int max_interior_flips, double c) {
    if (max_interior_flips < 2)
        throw std::invalid_argument("random_balanced_pattern: need at least 2 interior flips");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int s = rng.sign();
        // m = 0 gives the constant profile, balanced by symmetry.
        const int m = (rng.uniform() < 0.15) ? 0 : rng.uniform_int(2, max_interior_flips);
        if (m == 0) return StepFunction1D({-c, c}, {0, s, 0});
        std::vector<double> interior(static_cast<std::size_t>(m));
        for (auto& t : interior) t = rng.uniform(-c + 1e-6, c - 1e-6);
        std::sort(interior.begin(), interior.end());
        bool too_close = false;
        for (std::size_t i = 0; i + 1 < interior.size(); ++i)
            if (interior[i + 1] - interior[i] < 1e-5) too_close = true;
        if (too_close) continue;

        std::vector<double> bp{-c};
        bp.insert(bp.end(), interior.begin(), interior.end());
        bp.push_back(c);
        std::vector<int> vals{0};
        for (int i = 0; i < m + 1; ++i) vals.push_back((i % 2 == 0) ? s : -s);
        vals.push_back(0);
        StepFunction1D pattern(bp, vals);
        if (pattern.breakpoints().size() != bp.size()) continue;  // merged away a cell

        std::vector<std::size_t> order(static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i + 1;
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(i) - 1))]);
        for (std::size_t idx : order) {
            try {
                const double t = solve_balanced_breakpoint(pattern, idx, false);
                auto moved = pattern.breakpoints();
                moved[idx] = t;
                StepFunction1D balanced = detail::with_breakpoints(pattern, std::move(moved));
                if (std::abs(moment(balanced, 1)) <= 1e-10) return balanced;
            } catch (const std::runtime_error&) {
                continue;
            }
        }
    }
    throw std::runtime_error("random_balanced_pattern: rejection sampling failed");
}

inline StepFunction1D random_balanced_pattern(RngStream& rng, int max_interior_flips) {
    return random_balanced_pattern(rng, max_interior_flips, dr_constants().c_star);
}

}  // namespace glab

#endif  // GLAB_STRIP_GAMES_HPP
