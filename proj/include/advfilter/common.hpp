#ifndef ADVFILTER_COMMON_HPP
#define ADVFILTER_COMMON_HPP

#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace advfilter {

inline constexpr const char* kToolVersion = "0.1.0";

// Error taxonomy. The CLI maps every advfilter::error to exit code 1;
// command-line usage problems exit with 2.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct shape_error : error {
    using error::error;
};
struct config_error : error {
    using error::error;
};
// Malformed or unrecognized file contents (bad record size, bad magic, bad version).
struct format_error : error {
    using error::error;
};
// File recognized but payload inconsistent with its own header.
struct corruption_error : error {
    using error::error;
};
struct io_error : error {
    using error::error;
};
// Degenerate numerical input: all-zero filter bank, zero transfer diagonal.
struct degenerate_error : error {
    using error::error;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Derives an independent stream seed, e.g. per image index.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream));
}

// Seeded RNG with hand-rolled distributions. mt19937_64 output is pinned by
// the standard; std::*_distribution is not, so sampling is done explicitly to
// keep streams identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // [0, 1)
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Unbiased draw from [0, n) by rejection.
    std::size_t below(std::size_t n) {
        assert(n > 0);
        const std::uint64_t m = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / m * m;
        std::uint64_t r;
        do {
            r = eng_();
        } while (r >= limit);
        return static_cast<std::size_t>(r % m);
    }

    // Standard normal via Box-Muller; the second value of each pair is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Fisher-Yates, high index down.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace advfilter

#endif
