#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

#include "vedit/tensor.hpp"

namespace vedit {

uint64_t splitmix64(uint64_t& x);
uint64_t fnv1a64(const void* bytes, size_t n);
uint64_t hash_combine(uint64_t a, uint64_t b);

// xoshiro256++. Deterministic across platforms; the full generator state
// is the four state words, so it serializes into checkpoints directly.
// normal() burns a fresh uniform pair per draw (no cached spare) to keep
// the state self-contained.
struct Rng {
    std::array<uint64_t, 4> state{};

    Rng() : Rng(0) {}
    explicit Rng(uint64_t seed);

    uint64_t next();
    double uniform();                     // [0, 1)
    double uniform(double lo, double hi); // [lo, hi)
    uint64_t bounded(uint64_t n);         // [0, n), n >= 1
    float normal();                       // standard normal (Box-Muller)
    void fill_normal(Tensor& t);
};

// Independent stream derived from (seed, parts...); used to make clip
// generation, data order, and eval noise pure functions of their ids.
Rng derive_rng(uint64_t seed, std::initializer_list<uint64_t> parts);

}  // namespace vedit
