// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace hetnet {

/// SplitMix64 finalizer; used to turn (seed, stream ids) into engine state.
constexpr std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Hashes a seed and a path of stream indices (trial, attempt, tier, ...)
/// into one key. Distinct paths give statistically independent streams.
constexpr std::uint64_t stream_key(std::uint64_t seed, std::initializer_list<std::uint64_t> path)
{
    std::uint64_t s = seed;
    std::uint64_t key = splitmix64(s);
    for (auto id : path) {
        std::uint64_t t = key ^ (id + 0x632BE59BD9B4E019ULL);
        key = splitmix64(t);
    }
    return key;
}

/// xoshiro256++ engine. Satisfies UniformRandomBitGenerator, so the standard
/// distributions accept it.
class StreamRng {
public:
    using result_type = std::uint64_t;

    explicit StreamRng(std::uint64_t key)
    {
        std::uint64_t s = key;
        for (auto& w : s_) w = splitmix64(s);
    }

    StreamRng(std::uint64_t seed, std::initializer_list<std::uint64_t> path)
        : StreamRng(stream_key(seed, path))
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()()
    {
        std::uint64_t const result = rotl(s_[0] + s_[3], 23) + s_[0];
        std::uint64_t const t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in (0, 1); never returns 0, so -log(u) is always finite.
    double uniform_open()
    {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k)
    {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4]{};
};

}  // namespace hetnet
