#include "unizk/rng.hpp"

#include <stdexcept>

namespace unizk {

// splitmix64, used only to spread seeds across child streams
static uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng::Rng(uint64_t seed) : eng_(seed), seed_(seed) {}

Rng::Rng(uint64_t seed, uint64_t stream) : Rng(mix64(mix64(seed) ^ mix64(stream + 1))) {}

Rng Rng::from_entropy() {
    std::random_device rd;
    uint64_t s = (uint64_t(rd()) << 32) | rd();
    return Rng(s);
}

uint64_t Rng::u64() { return eng_(); }

double Rng::unit() { return double(u64() >> 11) * 0x1.0p-53; }

uint32_t Rng::below_u32(uint32_t bound) {
    if (bound == 0) throw std::invalid_argument("below_u32: zero bound");
    // rejection over the smallest power-of-two range covering bound
    uint32_t mask = bound - 1;
    mask |= mask >> 1; mask |= mask >> 2; mask |= mask >> 4;
    mask |= mask >> 8; mask |= mask >> 16;
    for (;;) {
        uint32_t v = uint32_t(u64()) & mask;
        if (v < bound) return v;
    }
}

void Rng::fill(uint8_t* p, size_t n) {
    size_t i = 0;
    while (i < n) {
        uint64_t v = u64();
        for (int b = 0; b < 8 && i < n; b++, i++) {
            p[i] = uint8_t(v >> (8 * b));
        }
    }
}

Bytes Rng::bytes(size_t n) {
    Bytes b(n);
    fill(b.data(), n);
    return b;
}

mpz_class Rng::below(const mpz_class& bound) {
    if (bound <= 0) throw std::invalid_argument("below: non-positive bound");
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    size_t nbytes = (bits + 7) / 8;
    size_t excess = nbytes * 8 - bits;
    Bytes buf(nbytes);
    for (;;) {
        fill(buf.data(), nbytes);
        buf[0] &= uint8_t(0xff >> excess);
        mpz_class v;
        mpz_import(v.get_mpz_t(), buf.size(), 1, 1, 1, 0, buf.data());
        if (v < bound) return v;
    }
}

Rng Rng::child(uint64_t stream) const { return Rng(seed_, stream); }

} // namespace unizk
