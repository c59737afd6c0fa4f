#include "vedit/rng.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace vedit {

uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t fnv1a64(const void* bytes, size_t n) {
    const unsigned char* p = static_cast<const unsigned char*>(bytes);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

uint64_t hash_combine(uint64_t a, uint64_t b) {
    uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    return splitmix64(x);
}

Rng::Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& w : state) w = splitmix64(x);
}

static inline uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

uint64_t Rng::next() {
    uint64_t result = rotl(state[0] + state[3], 23) + state[0];
    uint64_t t = state[1] << 17;
    state[2] ^= state[0];
    state[3] ^= state[1];
    state[1] ^= state[2];
    state[0] ^= state[3];
    state[2] ^= t;
    state[3] = rotl(state[3], 45);
    return result;
}

double Rng::uniform() { return double(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

uint64_t Rng::bounded(uint64_t n) {
    if (n == 0) throw std::domain_error("Rng::bounded: n must be >= 1");
    return uint64_t((__uint128_t(next()) * n) >> 64);
}

float Rng::normal() {
    // u1 in (0, 1] so the log stays finite.
    double u1 = double((next() >> 11) + 1) * 0x1.0p-53;
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    return float(r * std::cos(2.0 * M_PI * u2));
}

void Rng::fill_normal(Tensor& t) {
    for (float& v : t.data) v = normal();
}

Rng derive_rng(uint64_t seed, std::initializer_list<uint64_t> parts) {
    uint64_t h = splitmix64(seed);
    for (uint64_t p : parts) h = hash_combine(h, p);
    return Rng(h);
}

}  // namespace vedit
