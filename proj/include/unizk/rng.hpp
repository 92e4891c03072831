#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

#include "unizk/bytes.hpp"

namespace unizk {

// Deterministic random stream for the whole toolkit. All sampling goes
// through raw mt19937_64 output with our own reduction, never through
// std::*_distribution, so a seed reproduces identical bytes on every
// platform. Independent streams are derived with child().
class Rng {
public:
    explicit Rng(uint64_t seed);
    Rng(uint64_t seed, uint64_t stream);

    static Rng from_entropy();

    uint64_t u64();
    bool coin() { return (u64() & 1) != 0; }
    double unit();  // uniform in [0, 1)
    uint32_t below_u32(uint32_t bound);
    void fill(uint8_t* p, size_t n);
    Bytes bytes(size_t n);

    // uniform integer in [0, bound) by rejection over bitlen(bound) bits
    mpz_class below(const mpz_class& bound);

    Rng child(uint64_t stream) const;
    uint64_t seed() const { return seed_; }

private:
    std::mt19937_64 eng_;
    uint64_t seed_;
};

} // namespace unizk
