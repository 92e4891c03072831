#pragma once

#include <gmpxx.h>

#include "unizk/bytes.hpp"
#include "unizk/rng.hpp"

namespace unizk {

// Exponent in the prime-order subgroup, always reduced to [0, q).
struct Scalar {
    mpz_class v;

    Scalar() : v(0) {}
    explicit Scalar(const mpz_class& x) : v(x) {}
    explicit Scalar(long x) : v(x) {}
    bool operator==(const Scalar& o) const { return v == o.v; }
    bool operator!=(const Scalar& o) const { return v != o.v; }
    bool operator<(const Scalar& o) const { return v < o.v; }
};

struct GroupElement {
    mpz_class v;

    GroupElement() : v(1) {}
    explicit GroupElement(const mpz_class& x) : v(x) {}
    explicit GroupElement(long x) : v(x) {}
    bool operator==(const GroupElement& o) const { return v == o.v; }
    bool operator!=(const GroupElement& o) const { return v != o.v; }
    bool operator<(const GroupElement& o) const { return v < o.v; }
};

// Schnorr group: prime p, prime q | p-1, g and h generators of the order-q
// subgroup. All commitment / encryption / sigma algebra lives here.
struct GroupParams {
    mpz_class p, q;
    GroupElement g, h;
    size_t bit_width;  // L, bits per encrypted witness; defaults to bitlen(q)

    // scalar field Z_q
    Scalar s_reduce(const mpz_class& x) const;
    Scalar s_add(const Scalar& a, const Scalar& b) const { return s_reduce(a.v + b.v); }
    Scalar s_sub(const Scalar& a, const Scalar& b) const { return s_reduce(a.v - b.v); }
    Scalar s_mul(const Scalar& a, const Scalar& b) const { return s_reduce(a.v * b.v); }
    Scalar s_neg(const Scalar& a) const { return s_reduce(-a.v); }
    Scalar s_inv(const Scalar& a) const;
    Scalar random_scalar(Rng& rng) const { return Scalar(rng.below(q)); }
    Scalar random_nonzero_scalar(Rng& rng) const { return Scalar(rng.below(q - 1) + 1); }

    // subgroup arithmetic mod p
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement div(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    GroupElement pow(const GroupElement& base, const Scalar& e) const;
    GroupElement pow_g(const Scalar& e) const { return pow(g, e); }
    GroupElement pow_h(const Scalar& e) const { return pow(h, e); }
    GroupElement one() const { return GroupElement(1); }
    bool in_subgroup(const GroupElement& a) const;

    // aborts with std::invalid_argument if the parameter invariants fail
    void validate() const;

    static GroupParams fixture();
    static const GroupParams& production();
};

// Perfectly binding commitment: commit(m; r) = (g^r, g^m * h^r).
struct Commitment {
    GroupElement c1, c2;

    bool operator==(const Commitment& o) const { return c1 == o.c1 && c2 == o.c2; }
    bool operator!=(const Commitment& o) const { return !(*this == o); }
};

Commitment commit(const GroupParams& P, const Scalar& m, const Scalar& r);

// Deterministic map into Z_q, uniform up to rejection (counter-mode SHA-256,
// truncate to bitlen(q) bits, retry while >= q).
Scalar hash_to_scalar(const GroupParams& P, const Bytes& input);

// canonical byte forms (see bytes.hpp for the TLV convention)
Bytes encode(const Scalar& s);
Bytes encode(const GroupElement& e);
Bytes encode(const Commitment& c);
Scalar decode_scalar(const GroupParams& P, Reader& r);
GroupElement decode_element(const GroupParams& P, Reader& r);
Commitment decode_commitment(const GroupParams& P, Reader& r);

} // namespace unizk
