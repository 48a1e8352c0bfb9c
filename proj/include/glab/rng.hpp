#ifndef GLAB_RNG_HPP
#define GLAB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace glab {

/// SplitMix64 step; used to derive well-separated stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seedable random stream with portable output: all variates are derived
/// from raw mt19937_64 draws, so results are identical across standard
/// library implementations. Substreams are independent per stream id,
/// which keeps multi-restart runs reproducible under any scheduling.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : gen_(mix(seed, 0)) {}

    static RngStream substream(std::uint64_t seed, std::uint64_t stream_id) {
        RngStream s(0);
        s.gen_.seed(mix(seed, stream_id + 1));
        return s;
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer on [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    int sign() { return (gen_() & 1u) ? 1 : -1; }

    /// Standard normal via Box-Muller (one spare cached).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

  private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream_id) {
        std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (stream_id + 1));
        std::uint64_t out = splitmix64(s);
        out ^= splitmix64(s);
        return out;
    }

    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace glab

#endif  // GLAB_RNG_HPP
