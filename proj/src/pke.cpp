#include "unizk/pke.hpp"

#include <stdexcept>

#include "unizk/errors.hpp"

namespace unizk {

KeyPair pke_keygen(const GroupParams& P, Rng& rng) {
    Scalar sk = P.random_nonzero_scalar(rng);
    return keypair_from_sk(P, sk);
}

KeyPair keypair_from_sk(const GroupParams& P, const Scalar& sk) {
    return KeyPair{sk, P.pow_g(sk)};
}

BitCiphertext enc_bit(const GroupParams& P, const GroupElement& pk, int bit, const Scalar& u) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("enc_bit: bit must be 0 or 1");
    GroupElement a = P.pow_g(u);
    GroupElement b = P.pow(pk, u);
    if (bit == 1) b = P.mul(b, P.g);
    return BitCiphertext{a, b};
}

int dec_bit(const GroupParams& P, const Scalar& sk, const BitCiphertext& ct) {
    // b * (a^sk)^-1 is g^bit for well-formed ciphertexts
    GroupElement ratio = P.div(ct.b, P.pow(ct.a, sk));
    if (ratio.v == 1) return 0;
    if (ratio == P.g) return 1;
    throw DecodeError("ciphertext does not decrypt to a bit");
}

std::pair<WitnessCiphertext, EncRandomness>
enc_witness(const GroupParams& P, const GroupElement& pk, const Scalar& w, Rng& rng) {
    size_t L = P.bit_width;
    if (L < mpz_sizeinbase(P.q.get_mpz_t(), 2)) throw std::invalid_argument("bit width below bitlen(q)");
    std::vector<int> bits = scalar_bits(P, w);
    WitnessCiphertext ct;
    EncRandomness rnd;
    ct.bits.reserve(L);
    rnd.u.reserve(L);
    for (size_t i = 0; i < L; i++) {
        Scalar u = P.random_scalar(rng);
        ct.bits.push_back(enc_bit(P, pk, bits[i], u));
        rnd.u.push_back(u);
    }
    return {ct, rnd};
}

Scalar dec_witness(const GroupParams& P, const Scalar& sk, const WitnessCiphertext& ct) {
    mpz_class acc = 0;
    for (size_t i = ct.bits.size(); i-- > 0;) {
        acc <<= 1;
        acc += dec_bit(P, sk, ct.bits[i]);
    }
    return P.s_reduce(acc);
}

BitCiphertext aggregate_ciphertext(const GroupParams& P, const WitnessCiphertext& ct) {
    GroupElement a(1), b(1);
    for (size_t i = ct.bits.size(); i-- > 0;) {
        a = P.mul(P.mul(a, a), ct.bits[i].a);
        b = P.mul(P.mul(b, b), ct.bits[i].b);
    }
    return BitCiphertext{a, b};
}

Scalar aggregate_randomness(const GroupParams& P, const EncRandomness& r) {
    mpz_class acc = 0;
    for (size_t i = r.u.size(); i-- > 0;) {
        acc <<= 1;
        acc += r.u[i].v;
    }
    return P.s_reduce(acc);
}

std::vector<int> scalar_bits(const GroupParams& P, const Scalar& w) {
    std::vector<int> bits(P.bit_width);
    for (size_t i = 0; i < bits.size(); i++)
        bits[i] = mpz_tstbit(w.v.get_mpz_t(), i);
    return bits;
}

Bytes encode(const BitCiphertext& ct) {
    Encoder body;
    body.raw(encode(ct.a));
    body.raw(encode(ct.b));
    Encoder e;
    e.tlv(Tag::BitCiphertext, body.out);
    return e.out;
}

Bytes encode(const WitnessCiphertext& ct) {
    Encoder body;
    for (const auto& b : ct.bits) body.raw(encode(b));
    Encoder e;
    e.tlv(Tag::WitnessCiphertext, body.out);
    return e.out;
}

BitCiphertext decode_bit_ciphertext(const GroupParams& P, Reader& r) {
    Bytes body = r.expect(Tag::BitCiphertext);
    Reader rr(body);
    BitCiphertext ct;
    ct.a = decode_element(P, rr);
    ct.b = decode_element(P, rr);
    rr.expect_done();
    return ct;
}

WitnessCiphertext decode_witness_ciphertext(const GroupParams& P, Reader& r) {
    Bytes body = r.expect(Tag::WitnessCiphertext);
    Reader rr(body);
    WitnessCiphertext ct;
    while (!rr.done()) ct.bits.push_back(decode_bit_ciphertext(P, rr));
    return ct;
}

} // namespace unizk
