#pragma once

#include <cmath>
#include <cstdint>

namespace nscc {

// splitmix64 finalizer; decorrelates consecutive seeds.
inline uint64_t splitmix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent substream for one Monte Carlo draw. Mixing the master seed with
// the draw index makes draw d reproducible no matter which worker runs it or
// in what order, which is what keeps parallel runs byte-identical.
inline uint64_t substream_seed(uint64_t master_seed, uint64_t draw_index) {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(draw_index + 0x9e3779b97f4a7c15ULL));
}

// Small self-contained generator (xoshiro-style output of splitmix64 walk).
// The standard-library distributions are implementation-defined, so the
// sampling below is spelled out to keep results stable across toolchains.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    Rng(uint64_t master_seed, uint64_t draw_index) : state_(substream_seed(master_seed, draw_index)) {}

    uint64_t next_u64() {
        state_ = splitmix64(state_);
        return state_;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Box-Muller; the spare value is cached so consecutive normals cost one
    // log/sqrt pair per two draws.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    // Median/log-sd parameterization: exp(N(ln median, sigma_log)).
    double lognormal_from_median(double median, double sigma_log) {
        return median * std::exp(sigma_log * normal());
    }

    // Rejection sampling with a deterministic budget; the clamp fallback keeps
    // pathological bounds from hanging a draw.
    double truncated_normal(double mean, double sd, double lo, double hi) {
        if (sd <= 0.0) return std::min(std::max(mean, lo), hi);
        for (int attempt = 0; attempt < 256; ++attempt) {
            const double x = normal(mean, sd);
            if (x >= lo && x <= hi) return x;
        }
        return std::min(std::max(mean, lo), hi);
    }

  private:
    uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace nscc
