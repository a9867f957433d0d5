#ifndef COLREC_RNG_HPP
#define COLREC_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace colrec {

/// splitmix64 finalizer; the mixing step behind all seed derivation.
std::uint64_t mix64(std::uint64_t x);

/// Stable 64-bit combine of a seed with one more word.
std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t word);

/// FNV-1a over a label, for hashing method names into seed words.
std::uint64_t hash_label(std::string_view label);

/// Deterministic random stream: a mersenne twister plus hand-rolled
/// distributions, so draws are identical across platforms and compilers
/// (std::*_distribution results are implementation defined).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    /// Substream derived from a base seed and an index (e.g. a column id),
    /// independent of how many draws other substreams have consumed.
    static RngStream substream(std::uint64_t base_seed, std::uint64_t tag, std::uint64_t index);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on {0, ..., n-1} by rejection; n must be positive.
    std::uint64_t uniform_below(std::uint64_t n);

    /// Uniform on the open interval (0, 1).
    double uniform_open01();

    /// Standard normal via Box-Muller (one value per call).
    double gaussian();

    /// Standard Cauchy.
    double cauchy();

private:
    std::mt19937_64 engine_;
};

}  // namespace colrec

#endif
