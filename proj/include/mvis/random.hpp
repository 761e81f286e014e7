#ifndef MVIS_RANDOM_HPP
#define MVIS_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace mvis {

// All randomness in the library flows through this type so results are
// bit-stable across platforms and standard libraries:
//   engine    std::mt19937_64 seeded with the 64-bit seed (fully specified
//             by the C++ standard)
//   integers  uniform_below(b): draw x, reject while x < (2^64 - b) mod b,
//             return x mod b
//   reals     unit(): (x >> 11) * 2^-53, in [0, 1)
//   bernoulli bernoulli(p): unit() < p
// The std:: distributions are deliberately not used; their algorithms are
// implementation-defined.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t uniform_below(std::uint64_t bound);

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    double unit();
    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Derives an independent stream seed from a parent seed and a label. The label
// is folded with FNV-1a and combined through mix64, so equal inputs always
// yield equal seeds.
std::uint64_t derive_seed(std::uint64_t parent, std::string_view label);
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index);

} // namespace mvis

#endif
