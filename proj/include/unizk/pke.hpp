#pragma once

#include <utility>
#include <vector>

#include "unizk/group.hpp"

namespace unizk {

// Exponent-encoded El-Gamal, bit by bit, so that decryption of a witness
// ciphertext returns the scalar witness itself (the extractor of the
// simulation-extractable compiler depends on this).

struct KeyPair {
    Scalar sk;
    GroupElement pk;  // pk = g^sk
};

struct BitCiphertext {
    GroupElement a, b;  // (g^u, pk^u * g^bit)

    bool operator==(const BitCiphertext& o) const { return a == o.a && b == o.b; }
};

struct WitnessCiphertext {
    std::vector<BitCiphertext> bits;  // little-endian, length L

    bool operator==(const WitnessCiphertext& o) const { return bits == o.bits; }
};

// per-bit encryption randomness, kept by the prover as part of its witness
struct EncRandomness {
    std::vector<Scalar> u;
};

KeyPair pke_keygen(const GroupParams& P, Rng& rng);
KeyPair keypair_from_sk(const GroupParams& P, const Scalar& sk);

BitCiphertext enc_bit(const GroupParams& P, const GroupElement& pk, int bit, const Scalar& u);
int dec_bit(const GroupParams& P, const Scalar& sk, const BitCiphertext& ct);  // DecodeError

std::pair<WitnessCiphertext, EncRandomness>
enc_witness(const GroupParams& P, const GroupElement& pk, const Scalar& w, Rng& rng);
Scalar dec_witness(const GroupParams& P, const Scalar& sk, const WitnessCiphertext& ct);

// componentwise prod_i ct_i^(2^i); encrypts sum b_i 2^i with randomness sum u_i 2^i
BitCiphertext aggregate_ciphertext(const GroupParams& P, const WitnessCiphertext& ct);
Scalar aggregate_randomness(const GroupParams& P, const EncRandomness& r);

std::vector<int> scalar_bits(const GroupParams& P, const Scalar& w);  // little-endian, length L

Bytes encode(const BitCiphertext& ct);
Bytes encode(const WitnessCiphertext& ct);
BitCiphertext decode_bit_ciphertext(const GroupParams& P, Reader& r);
WitnessCiphertext decode_witness_ciphertext(const GroupParams& P, Reader& r);

} // namespace unizk
