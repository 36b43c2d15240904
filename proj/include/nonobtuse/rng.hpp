#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace nonobtuse {

// splitmix64. All randomness in the toolkit goes through this generator so
// that outputs depend only on the seed, not on the standard library's
// distribution internals.
struct SplitMix64 {
    std::uint64_t state = 0;

    SplitMix64() = default;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, n), n > 0 (Lemire reduction).
    std::uint64_t below(std::uint64_t n) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Inclusive integer range.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Approximate standard normal (Irwin-Hall); good enough for samplers and
    // free of libm so identical seeds give identical bytes everywhere.
    double normal() {
        double s = 0.0;
        for (int i = 0; i < 12; ++i) s += unit();
        return s - 6.0;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }
};

// Derive an independent stream from a master seed and a stream index.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    SplitMix64 g(master ^ (stream * 0xff51afd7ed558ccdULL + 0x2545f4914f6cdd1dULL));
    g.next();
    return g.next();
}

}  // namespace nonobtuse
