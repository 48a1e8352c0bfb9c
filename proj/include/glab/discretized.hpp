#ifndef GLAB_DISCRETIZED_HPP
#define GLAB_DISCRETIZED_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "glab/game_eval.hpp"
#include "glab/rng.hpp"
#include "glab/special_functions.hpp"

namespace glab {

/// Gauss-Hermite rule in the probabilists' normalization: nodes are the
/// roots of He_m, weights are Christoffel numbers, and sum_i w_i f(x_i)
/// approximates E[f(X)] for X standard normal (exactly for polynomials of
/// degree < 2m).
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail {

/// Orthonormal Hermite value p_k(x) = He_k(x)/sqrt(k!), stable recurrence.
inline double hermite_orthonormal(int k, double x) {
    double prev = 1.0;
    if (k == 0) return prev;
    double cur = x;
    for (int j = 1; j < k; ++j) {
        const double next =
            (x * cur - std::sqrt(static_cast<double>(j)) * prev) / std::sqrt(static_cast<double>(j + 1));
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace detail

/// Nodes by interlacing: the roots of p_k strictly separate those of
/// p_{k+1}, so each degree's roots are bracketed by the previous degree's
/// roots plus outer bounds, and bisection is guaranteed. Weights via the
/// Christoffel formula w_i = 1 / sum_{k<m} p_k(x_i)^2. The rule is
/// symmetrized exactly so nodes = -reversed(nodes) and weights are
/// palindromic bit-for-bit.
inline GaussHermiteRule gauss_hermite(int m) {
    if (m < 1 || m > kMaxHermiteDegree)
        throw std::invalid_argument("gauss_hermite: m must be in [1, 64]");
    std::vector<double> roots{0.0};  // roots of p_1
    for (int k = 2; k <= m; ++k) {
        const double bound = 2.0 * std::sqrt(static_cast<double>(k)) + 2.0;
        std::vector<double> brackets{-bound};
        brackets.insert(brackets.end(), roots.begin(), roots.end());
        brackets.push_back(bound);
        std::vector<double> next;
        next.reserve(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i + 1 < brackets.size(); ++i)
            next.push_back(find_root([k](double x) { return detail::hermite_orthonormal(k, x); },
                                     brackets[i], brackets[i + 1], 1e-15));
        roots = std::move(next);
    }
    GaussHermiteRule rule;
    rule.nodes = std::move(roots);
    rule.weights.resize(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double norm = 0.0;
        for (int k = 0; k < m; ++k) {
            const double p = detail::hermite_orthonormal(k, rule.nodes[i]);
            norm += p * p;
        }
        rule.weights[i] = 1.0 / norm;
    }
    // exact symmetrization
    const std::size_t n = rule.nodes.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
        const double x = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 0.5 * (rule.weights[i] + rule.weights[n - 1 - i]);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

/// Finite model of a Hermite projection game on an m-point Gauss-Hermite
/// grid. matrix[i][j] carries the explicit projector degrees up to
/// degree_cap; the identity term sits on the diagonal as w_i delta_ij,
/// mirroring the exact-overlap treatment of the continuous evaluator.
struct DiscreteGame {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> matrix;  // row-major m x m
    int degree_cap = 0;

    int size() const { return static_cast<int>(nodes.size()); }
    double at(int i, int j) const { return matrix[static_cast<std::size_t>(i) * nodes.size() + static_cast<std::size_t>(j)]; }
};

inline DiscreteGame build(const GameCoefficients& game, int m, int degree_cap) {
    if (m < 4 || m > kMaxHermiteDegree) throw std::invalid_argument("build: m must be in [4, 64]");
    if (degree_cap < 0 || degree_cap >= m)
        throw std::invalid_argument("build: degree cap must be in [0, m)");
    GaussHermiteRule rule = gauss_hermite(m);
    DiscreteGame dg;
    dg.nodes = std::move(rule.nodes);
    dg.weights = std::move(rule.weights);
    dg.degree_cap = degree_cap;
    dg.matrix.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0);

    for (const auto& [k, c] : game.explicit_coeffs) {
        if (k > degree_cap || c == 0.0) continue;
        std::vector<double> pk(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) pk[static_cast<std::size_t>(i)] = detail::hermite_orthonormal(k, dg.nodes[static_cast<std::size_t>(i)]);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                dg.matrix[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] +=
                    c * dg.weights[static_cast<std::size_t>(i)] * dg.weights[static_cast<std::size_t>(j)] *
                    pk[static_cast<std::size_t>(i)] * pk[static_cast<std::size_t>(j)];
    }
    if (game.identity_weight != 0.0)
        for (int i = 0; i < m; ++i)
            dg.matrix[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(i)] +=
                game.identity_weight * dg.weights[static_cast<std::size_t>(i)];
    return dg;
}

struct BruteResult {
    double value;
    std::vector<int> argmax_f;  // +-1 per node; the optimal g is sign(A^T f)
};

/// Exact classical value of the finite game: max over f in {+-1}^m of
/// sum_j |(A^T f)_j|, since the optimal g is the column-wise sign. Uses the
/// f -> -f symmetry to halve the search and Gray-code updates to make each
/// step O(m).
inline BruteResult brute_val(const DiscreteGame& dg) {
    const int m = dg.size();
    if (m > 24) throw std::invalid_argument("brute_val: m must be at most 24");
    std::vector<double> col(static_cast<std::size_t>(m));
    std::vector<int> f(static_cast<std::size_t>(m), 1);
    for (int j = 0; j < m; ++j) {
        double sum = 0.0;
        for (int i = 0; i < m; ++i) sum += dg.at(i, j);
        col[static_cast<std::size_t>(j)] = sum;
    }
    const auto score = [&]() {
        double sum = 0.0;
        for (double v : col) sum += std::abs(v);
        return sum;
    };
    BruteResult best{score(), f};
    const std::uint64_t half = 1ULL << (m - 1);
    std::uint64_t gray_prev = 0;
    for (std::uint64_t it = 1; it < half; ++it) {
        const std::uint64_t gray = it ^ (it >> 1);
        const std::uint64_t changed = gray ^ gray_prev;
        gray_prev = gray;
        int bit = 0;
        while (((changed >> bit) & 1ULL) == 0) ++bit;
        f[static_cast<std::size_t>(bit)] = -f[static_cast<std::size_t>(bit)];
        const double delta = 2.0 * static_cast<double>(f[static_cast<std::size_t>(bit)]);
        for (int j = 0; j < m; ++j) col[static_cast<std::size_t>(j)] += delta * dg.at(bit, j);
        const double v = score();
        if (v > best.value) best = {v, f};
    }
    return best;
}

/// Heuristic lower bound on the vector relaxation by block-coordinate
/// ascent on unit vectors of the given rank: alternately set each x_i to
/// the normalized A-weighted combination of the y_j and vice versa. The
/// objective never decreases across sweeps. Optional +-1 vectors seed the
/// iteration as a rank-one feasible start.
inline double bca_sdp(const DiscreteGame& dg, int rank, int iters, std::uint64_t seed,
                      const std::vector<int>* init_f = nullptr,
                      const std::vector<int>* init_g = nullptr) {
    if (rank < 2) throw std::invalid_argument("bca_sdp: rank must be >= 2");
    if (iters < 1) throw std::invalid_argument("bca_sdp: iters must be >= 1");
    const int m = dg.size();
    if ((init_f && static_cast<int>(init_f->size()) != m) ||
        (init_g && static_cast<int>(init_g->size()) != m))
        throw std::invalid_argument("bca_sdp: init vectors must have one entry per node");
    const std::size_t r = static_cast<std::size_t>(rank);
    std::vector<double> x(static_cast<std::size_t>(m) * r, 0.0);
    std::vector<double> y(static_cast<std::size_t>(m) * r, 0.0);
    RngStream rng = RngStream::substream(seed, 0x6263615FULL);
    const auto randomize = [&](std::vector<double>& v) {
        for (int i = 0; i < m; ++i) {
            double norm2 = 0.0;
            for (std::size_t d = 0; d < r; ++d) {
                const double z = rng.normal();
                v[static_cast<std::size_t>(i) * r + d] = z;
                norm2 += z * z;
            }
            const double inv = 1.0 / std::sqrt(norm2);
            for (std::size_t d = 0; d < r; ++d) v[static_cast<std::size_t>(i) * r + d] *= inv;
        }
    };
    if (init_f) {
        for (int i = 0; i < m; ++i) x[static_cast<std::size_t>(i) * r] = static_cast<double>((*init_f)[static_cast<std::size_t>(i)]);
    } else {
        randomize(x);
    }
    if (init_g) {
        for (int j = 0; j < m; ++j) y[static_cast<std::size_t>(j) * r] = static_cast<double>((*init_g)[static_cast<std::size_t>(j)]);
    } else {
        randomize(y);
    }

    const auto objective = [&]() {
        double sum = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                double dot = 0.0;
                for (std::size_t d = 0; d < r; ++d)
                    dot += x[static_cast<std::size_t>(i) * r + d] * y[static_cast<std::size_t>(j) * r + d];
                sum += dg.at(i, j) * dot;
            }
        return sum;
    };

    double best = objective();
    std::vector<double> acc(r);
    for (int sweep = 0; sweep < iters; ++sweep) {
        for (int i = 0; i < m; ++i) {
            std::fill(acc.begin(), acc.end(), 0.0);
            for (int j = 0; j < m; ++j) {
                const double a = dg.at(i, j);
                for (std::size_t d = 0; d < r; ++d) acc[d] += a * y[static_cast<std::size_t>(j) * r + d];
            }
            double norm2 = 0.0;
            for (double v : acc) norm2 += v * v;
            if (norm2 > 0.0) {
                const double inv = 1.0 / std::sqrt(norm2);
                for (std::size_t d = 0; d < r; ++d) x[static_cast<std::size_t>(i) * r + d] = acc[d] * inv;
            }
        }
        for (int j = 0; j < m; ++j) {
            std::fill(acc.begin(), acc.end(), 0.0);
            for (int i = 0; i < m; ++i) {
                const double a = dg.at(i, j);
                for (std::size_t d = 0; d < r; ++d) acc[d] += a * x[static_cast<std::size_t>(i) * r + d];
            }
            double norm2 = 0.0;
            for (double v : acc) norm2 += v * v;
            if (norm2 > 0.0) {
                const double inv = 1.0 / std::sqrt(norm2);
                for (std::size_t d = 0; d < r; ++d) y[static_cast<std::size_t>(j) * r + d] = acc[d] * inv;
            }
        }
        best = std::max(best, objective());
    }
    return best;
}

/// Monte Carlo statistics of the degree-k SDP witness Psi. Applying the
/// game to Psi acts degreewise, so <A Psi, Psi> = c_k ||Psi||^2 holds
/// pointwise and only the normalization Psi/||Psi|| is sampled: each draw
/// contributes c_k ||Psi(X)||, and the variance of ||Psi(X)||^2 is the
/// quantity the Efron-Stein argument controls.
struct WitnessEstimate {
    int n = 0;
    int k = 0;
    long samples = 0;
    double value_mean = 0.0;
    double value_stderr = 0.0;
    double norm_variance = 0.0;  // sample variance of ||Psi(X)||^2
};

inline WitnessEstimate witness_mc(int n, int k, const GameCoefficients& game, long samples,
                                  std::uint64_t seed) {
    if (k != 1 && k != 3) throw std::invalid_argument("witness_mc: k must be 1 or 3");
    if (n < k) throw std::invalid_argument("witness_mc: need n >= k");
    if (samples < 100) throw std::invalid_argument("witness_mc: need at least 100 samples");
    const double ck = game.coefficient(k);
    const double nn = static_cast<double>(n);
    const double binom = (k == 1) ? nn : nn * (nn - 1.0) * (nn - 2.0) / 6.0;

    RngStream rng = RngStream::substream(seed, 0x77697453ULL);
    double sum_z = 0.0, sum_z2 = 0.0, sum_q = 0.0, sum_q2 = 0.0;
    for (long s = 0; s < samples; ++s) {
        double p1 = 0.0, p2 = 0.0, p3 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = rng.normal();
            const double x2 = x * x;
            p1 += x2;
            p2 += x2 * x2;
            p3 += x2 * x2 * x2;
        }
        // elementary symmetric polynomial e_k of the squared coordinates
        const double ek = (k == 1) ? p1 : (p1 * p1 * p1 - 3.0 * p1 * p2 + 2.0 * p3) / 6.0;
        const double q = ek / binom;  // ||Psi(X)||^2
        const double z = std::sqrt(std::max(q, 0.0));
        sum_z += z;
        sum_z2 += z * z;
        sum_q += q;
        sum_q2 += q * q;
    }
    const double ns = static_cast<double>(samples);
    const double mean_z = sum_z / ns;
    const double var_z = std::max(sum_z2 / ns - mean_z * mean_z, 0.0) * ns / (ns - 1.0);
    const double mean_q = sum_q / ns;
    const double var_q = std::max(sum_q2 / ns - mean_q * mean_q, 0.0) * ns / (ns - 1.0);
    WitnessEstimate est;
    est.n = n;
    est.k = k;
    est.samples = samples;
    est.value_mean = ck * mean_z;
    est.value_stderr = std::abs(ck) * std::sqrt(var_z / ns);
    est.norm_variance = var_q;
    return est;
}

struct McEstimate {
    double value = 0.0;
    double stderr_value = 0.0;
};

struct RotationCheck {
    int n = 0;
    int k = 0;
    long samples = 0;
    McEstimate original;
    McEstimate rotated;

    double combined_stderr() const {
        return std::sqrt(original.stderr_value * original.stderr_value +
                         rotated.stderr_value * rotated.stderr_value);
    }
    bool agrees(double n_sigma = 4.0) const {
        return std::abs(original.value - rotated.value) <= n_sigma * combined_stderr();
    }
};

namespace detail {

/// Multi-indices alpha with |alpha| = k over n variables.
inline std::vector<std::vector<int>> multi_indices(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    const auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int a = remaining; a >= 0; --a) {
            cur[static_cast<std::size_t>(pos)] = a;
            self(self, pos + 1, remaining - a);
        }
    };
    rec(rec, 0, k);
    return out;
}

}  // namespace detail

/// Monte Carlo check that <Pi_k f, Pi_k g> is invariant under composing
/// both functions with a random orthogonal map. The projection inner
/// product is assembled from the estimated Hermite coefficients
/// E[f He_alpha] over all |alpha| = k; both estimates share the same
/// Gaussian sample stream, and standard errors come from the delta method.
/// A row-major n x n orthogonal matrix may be supplied to override the
/// random rotation (the identity makes both runs coincide sample-by-sample).
inline RotationCheck rotation_invariance_mc(int n, int k, long samples, std::uint64_t seed,
                                            const std::vector<double>* rotation = nullptr) {
    if (n < 2 || n > 16) throw std::invalid_argument("rotation_invariance_mc: n must be in [2, 16]");
    if (k != 1 && k != 3) throw std::invalid_argument("rotation_invariance_mc: k must be 1 or 3");
    if (samples < 100) throw std::invalid_argument("rotation_invariance_mc: need at least 100 samples");
    if (rotation && rotation->size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("rotation_invariance_mc: rotation must be n x n");

    // fixed test pair: shifted first-coordinate sign functions
    const auto f_fn = [](const std::vector<double>& x) { return x[0] - 0.3 >= 0.0 ? 1.0 : -1.0; };
    const auto g_fn = [](const std::vector<double>& x) { return x[0] + 0.4 >= 0.0 ? 1.0 : -1.0; };

    // random orthogonal matrix from Gram-Schmidt on a Gaussian matrix
    std::vector<double> t_mat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    if (rotation) {
        t_mat = *rotation;
    } else {
        RngStream trng = RngStream::substream(seed, 0x726F7454ULL);
        for (auto& v : t_mat) v = trng.normal();
        for (int c = 0; c < n; ++c) {
            for (int prev = 0; prev < c; ++prev) {
                double dot = 0.0;
                for (int r0 = 0; r0 < n; ++r0)
                    dot += t_mat[static_cast<std::size_t>(r0) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)] *
                           t_mat[static_cast<std::size_t>(r0) * static_cast<std::size_t>(n) + static_cast<std::size_t>(prev)];
                for (int r0 = 0; r0 < n; ++r0)
                    t_mat[static_cast<std::size_t>(r0) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)] -=
                        dot * t_mat[static_cast<std::size_t>(r0) * static_cast<std::size_t>(n) + static_cast<std::size_t>(prev)];
            }
            double norm2 = 0.0;
            for (int r0 = 0; r0 < n; ++r0) {
                const double v = t_mat[static_cast<std::size_t>(r0) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)];
                norm2 += v * v;
            }
            const double inv = 1.0 / std::sqrt(norm2);
            for (int r0 = 0; r0 < n; ++r0)
                t_mat[static_cast<std::size_t>(r0) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)] *= inv;
        }
    }

    const auto alphas = detail::multi_indices(n, k);
    const std::size_t na = alphas.size();
    std::vector<double> inv_alpha_fact(na);
    for (std::size_t a = 0; a < na; ++a) {
        double fa = 1.0;
        for (int e : alphas[a]) fa *= factorial(e);
        inv_alpha_fact[a] = 1.0 / fa;
    }

    const auto he_alpha = [&](const std::vector<double>& x, std::vector<double>& out) {
        for (std::size_t a = 0; a < na; ++a) {
            double prod = 1.0;
            for (int i = 0; i < n; ++i) {
                const int e = alphas[a][static_cast<std::size_t>(i)];
                if (e > 0) prod *= hermite_he(e, x[static_cast<std::size_t>(i)]);
            }
            out[a] = prod;
        }
    };

    const auto run = [&](bool rotate) {
        std::vector<double> mf(na, 0.0), mg(na, 0.0);
        std::vector<double> x(static_cast<std::size_t>(n)), tx(static_cast<std::size_t>(n)), he(na);
        // pass 1: coefficient means
        {
            RngStream rng = RngStream::substream(seed, 0x73616D70ULL);
            for (long s = 0; s < samples; ++s) {
                for (auto& v : x) v = rng.normal();
                const std::vector<double>* arg = &x;
                if (rotate) {
                    for (int r0 = 0; r0 < n; ++r0) {
                        double acc = 0.0;
                        for (int c = 0; c < n; ++c)
                            acc += t_mat[static_cast<std::size_t>(r0) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
                        tx[static_cast<std::size_t>(r0)] = acc;
                    }
                    arg = &tx;
                }
                const double fv = f_fn(*arg);
                const double gv = g_fn(*arg);
                he_alpha(x, he);
                for (std::size_t a = 0; a < na; ++a) {
                    mf[a] += fv * he[a];
                    mg[a] += gv * he[a];
                }
            }
            const double inv = 1.0 / static_cast<double>(samples);
            for (std::size_t a = 0; a < na; ++a) {
                mf[a] *= inv;
                mg[a] *= inv;
            }
        }
        double value = 0.0;
        for (std::size_t a = 0; a < na; ++a) value += mf[a] * mg[a] * inv_alpha_fact[a];
        // pass 2: delta-method variance of the per-sample influence
        double mean_psi = 0.0, m2_psi = 0.0;
        {
            RngStream rng = RngStream::substream(seed, 0x73616D70ULL);
            for (long s = 0; s < samples; ++s) {
                for (auto& v : x) v = rng.normal();
                const std::vector<double>* arg = &x;
                if (rotate) {
                    for (int r0 = 0; r0 < n; ++r0) {
                        double acc = 0.0;
                        for (int c = 0; c < n; ++c)
                            acc += t_mat[static_cast<std::size_t>(r0) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
                        tx[static_cast<std::size_t>(r0)] = acc;
                    }
                    arg = &tx;
                }
                const double fv = f_fn(*arg);
                const double gv = g_fn(*arg);
                he_alpha(x, he);
                double psi = 0.0;
                for (std::size_t a = 0; a < na; ++a)
                    psi += (mg[a] * fv * he[a] + mf[a] * gv * he[a]) * inv_alpha_fact[a];
                const double d = psi - mean_psi;
                mean_psi += d / static_cast<double>(s + 1);
                m2_psi += d * (psi - mean_psi);
            }
        }
        const double var_psi = m2_psi / static_cast<double>(samples - 1);
        return McEstimate{value, std::sqrt(var_psi / static_cast<double>(samples))};
    };

    RotationCheck check;
    check.n = n;
    check.k = k;
    check.samples = samples;
    check.original = run(false);
    check.rotated = run(true);
    return check;
}

}  // namespace glab

#endif  // GLAB_DISCRETIZED_HPP
