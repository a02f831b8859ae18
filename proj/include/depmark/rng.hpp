#ifndef DEPMARK_RNG_HPP
#define DEPMARK_RNG_HPP

#include <cstdint>
#include <random>

namespace depmark {

// Deterministic random stream. Wraps std::mt19937_64 (whose raw output is
// pinned by the standard) and derives doubles/indices with fixed arithmetic,
// so identical seeds give identical streams on every platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on the open interval (0, 1); never returns an exact endpoint,
    // which keeps quantile-based sampling away from the u = 0 corner case.
    double uniform01() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + uniform01() * (hi - lo);
    }

    // Unbiased uniform draw from {0, ..., n-1} via rejection.
    std::size_t uniform_index(std::size_t n) {
        if (n <= 1) return 0;
        const std::uint64_t bound = n;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return static_cast<std::size_t>(v % bound);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace depmark

#endif // DEPMARK_RNG_HPP
