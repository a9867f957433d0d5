#include "colrec/rng.hpp"

#include <cmath>
#include <numbers>

namespace colrec {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t word) {
    return mix64(seed ^ mix64(word));
}

std::uint64_t hash_label(std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

RngStream RngStream::substream(std::uint64_t base_seed, std::uint64_t tag, std::uint64_t index) {
    return RngStream(combine_seed(combine_seed(base_seed, tag), index));
}

std::uint64_t RngStream::uniform_below(std::uint64_t n) {
    // Rejection sampling over the largest multiple of n below 2^64.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
    std::uint64_t v = next_u64();
    while (v > limit) v = next_u64();
    return v % n;
}

double RngStream::uniform_open01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::gaussian() {
    const double u1 = uniform_open01();
    const double u2 = uniform_open01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::cauchy() {
    return std::tan(std::numbers::pi * (uniform_open01() - 0.5));
}

}  // namespace colrec
