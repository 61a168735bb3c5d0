#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace momentkit {

// Philox-4x32-10 counter-based generator (Salmon et al., SC'11 constants).
// Stateless: every draw is a pure function of (key, counter), so streams can
// be evaluated in any order, from any thread, and still match bit for bit.
struct Philox4x32 {
    uint32_t v[4];
};

namespace detail {

inline void philox_round(uint32_t ctr[4], const uint32_t key[2]) {
    constexpr uint32_t M0 = 0xD2511F53u;
    constexpr uint32_t M1 = 0xCD9E8D57u;
    const uint64_t p0 = static_cast<uint64_t>(M0) * ctr[0];
    const uint64_t p1 = static_cast<uint64_t>(M1) * ctr[2];
    const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
    const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
    ctr[0] = hi1 ^ ctr[1] ^ key[0];
    ctr[1] = lo1;
    ctr[2] = hi0 ^ ctr[3] ^ key[1];
    ctr[3] = lo0;
}

} // namespace detail

inline Philox4x32 philox4x32(uint64_t key, uint64_t ctr_lo, uint64_t ctr_hi) {
    uint32_t c[4] = {
        static_cast<uint32_t>(ctr_lo), static_cast<uint32_t>(ctr_lo >> 32),
        static_cast<uint32_t>(ctr_hi), static_cast<uint32_t>(ctr_hi >> 32)};
    uint32_t k[2] = {static_cast<uint32_t>(key), static_cast<uint32_t>(key >> 32)};
    constexpr uint32_t W0 = 0x9E3779B9u; // golden ratio
    constexpr uint32_t W1 = 0xBB67AE85u; // sqrt(3) - 1
    for (int round = 0; round < 10; ++round) {
        detail::philox_round(c, k);
        k[0] += W0;
        k[1] += W1;
    }
    return Philox4x32{{c[0], c[1], c[2], c[3]}};
}

// Uniform in (0, 1]: 53-bit mantissa, shifted so log() never sees zero.
inline double uniform_open01(uint32_t lo, uint32_t hi) {
    const uint64_t bits = (static_cast<uint64_t>(hi) << 32) | lo;
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

// Uniform in [0, 1).
inline double uniform_closed_open01(uint32_t lo, uint32_t hi) {
    const uint64_t bits = (static_cast<uint64_t>(hi) << 32) | lo;
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

struct NormalPair {
    double z0, z1;
};

// Two independent N(0,1) draws per counter block, Box-Muller.
inline NormalPair normal_pair(uint64_t key, uint64_t block, uint64_t stream) {
    const Philox4x32 r = philox4x32(key, block, stream);
    const double u1 = uniform_open01(r.v[0], r.v[1]);
    const double u2 = uniform_closed_open01(r.v[2], r.v[3]);
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    return NormalPair{rad * std::cos(ang), rad * std::sin(ang)};
}

// i-th N(0,1) draw of stream (key, stream); order-independent.
inline double normal_at(uint64_t key, uint64_t stream, uint64_t i) {
    const NormalPair p = normal_pair(key, i / 2, stream);
    return (i % 2 == 0) ? p.z0 : p.z1;
}

// i-th uniform [0,1) draw of stream (key, stream).
inline double uniform_at(uint64_t key, uint64_t stream, uint64_t i) {
    const Philox4x32 r = philox4x32(key, i / 2, (stream ^ 0x75696e66756e69ULL));
    return (i % 2 == 0) ? uniform_closed_open01(r.v[0], r.v[1])
                        : uniform_closed_open01(r.v[2], r.v[3]);
}

// Deterministic index draw in [0, bound) via fixed-point multiply.
inline uint64_t index_at(uint64_t key, uint64_t stream, uint64_t i, uint64_t bound) {
    const Philox4x32 r = philox4x32(key, i, stream ^ 0x69647864726177ULL);
    const uint64_t bits = (static_cast<uint64_t>(r.v[1]) << 32) | r.v[0];
    return static_cast<uint64_t>((static_cast<__uint128_t>(bits) * bound) >> 64);
}

} // namespace momentkit
