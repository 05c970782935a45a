#pragma once

#include <cmath>
#include <cstdint>

namespace cclab {

/// Reproducibility handle: identical (seed, stream) pairs produce identical
/// sample sequences bit for bit. Batch runners derive one stream per sample
/// index (stream = base + index), which makes results independent of worker
/// count.
struct RngSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// PCG XSL-RR 128/64 generator: 128-bit LCG state, 64-bit output, odd
/// per-stream increment. Small, fast, and splittable by stream index.
class Pcg64 {
public:
    explicit Pcg64(std::uint64_t seed, std::uint64_t stream = 0) {
        inc_ = (static_cast<u128>(stream) << 1) | 1u;
        state_ = 0;
        next();
        state_ += seed;
        next();
    }
    explicit Pcg64(RngSeed s) : Pcg64(s.seed, s.stream) {}

    std::uint64_t next() {
        state_ = state_ * kMult + inc_;
        auto xored = static_cast<std::uint64_t>(state_ >> 64) ^ static_cast<std::uint64_t>(state_);
        auto rot = static_cast<unsigned>(state_ >> 122);
        return (xored >> rot) | (xored << ((64u - rot) & 63u));
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on the open interval (0, 1): midpoints of the 53-bit grid,
    /// so log() of it or of its complement never sees 0.
    double uniform_open01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard Gumbel variate, CDF e^{-e^{-x}}.
    double gumbel() { return -std::log(-std::log(uniform_open01())); }

private:
    using u128 = unsigned __int128;
    static constexpr u128 kMult = (static_cast<u128>(0x2360ed051fc65da4ULL) << 64)
                                  | 0x4385df649fccf645ULL;
    u128 state_ = 0;
    u128 inc_ = 1;
};

} // namespace cclab
