#include "unizk/group.hpp"

#include <stdexcept>

#include "unizk/errors.hpp"
#include "unizk/hash.hpp"

namespace unizk {

Scalar GroupParams::s_reduce(const mpz_class& x) const {
    mpz_class r = x % q;
    if (r < 0) r += q;
    return Scalar(r);
}

Scalar GroupParams::s_inv(const Scalar& a) const {
    if (a.v == 0) throw std::invalid_argument("scalar inverse of zero");
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.v.get_mpz_t(), q.get_mpz_t()))
        throw std::invalid_argument("scalar not invertible");
    return Scalar(r);
}

GroupElement GroupParams::mul(const GroupElement& a, const GroupElement& b) const {
    mpz_class r = a.v * b.v;
    r %= p;
    return GroupElement(r);
}

GroupElement GroupParams::inv(const GroupElement& a) const {
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.v.get_mpz_t(), p.get_mpz_t()))
        throw std::invalid_argument("element not invertible");
    return GroupElement(r);
}

GroupElement GroupParams::div(const GroupElement& a, const GroupElement& b) const {
    return mul(a, inv(b));
}

GroupElement GroupParams::pow(const GroupElement& base, const Scalar& e) const {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.v.get_mpz_t(), e.v.get_mpz_t(), p.get_mpz_t());
    return GroupElement(r);
}

bool GroupParams::in_subgroup(const GroupElement& a) const {
    if (a.v <= 0 || a.v >= p) return false;
    return pow(a, Scalar(q)).v == 1;
}

void GroupParams::validate() const {
    if (!mpz_probab_prime_p(q.get_mpz_t(), 30)) throw std::invalid_argument("q not prime");
    if ((p - 1) % q != 0) throw std::invalid_argument("q does not divide p-1");
    if (g.v == 1 || !in_subgroup(g)) throw std::invalid_argument("bad generator g");
    if (h.v == 1 || !in_subgroup(h)) throw std::invalid_argument("bad generator h");
    if (bit_width < mpz_sizeinbase(q.get_mpz_t(), 2)) throw std::invalid_argument("bit_width < bitlen(q)");
}

GroupParams GroupParams::fixture() {
    GroupParams P;
    P.p = 47;
    P.q = 23;
    P.g = GroupElement(2);
    P.h = GroupElement(34);
    P.bit_width = 5;
    return P;
}

// 2048-bit p with 256-bit prime q, found by a deterministic SHA-256-seeded
// search (q = nextprime(H), p = c*q + 1 over an H-derived even cofactor,
// g = 2^((p-1)/q), h = H'^((p-1)/q)). Invariants re-checked in test_group.
static const char* kProdP =
    "a88bc56a87fe21d490ae3211a2ad6742fa7243dbb26ed50bb169bf2ffa5cb4b5"
    "439c7dbf833777a0f5147c9139c3ec1ab526267b8b25b893abfab2a049203e14"
    "34cd0dad740d9e1947f524b9c109d3c3ce87d0f617ee289ac4e8fb359f75f998"
    "83583afc08e32765d7f34050e7dcd5c1596eedc5bffc0989743ca8ab0a0a95ab"
    "b7df48e9dbeba02b2ce4fb295f31d113e50c4b8f61ed6ff85de8c2fbcb3750a5"
    "a7d8f8b2eeb7be87197f452e74a04f52e41aa3a0de290785fedc3d45f2949e2a"
    "945b692a10166dce9c9a72707ebd52266e8d28d895c35446e4b88714a455d7fd"
    "82f9acdd9d6a38067ee335808a7b32ac851bc4b368537f62d010933049054355";
static const char* kProdQ =
    "cfbc140af18f09b8654dbeacd6db963b34c88770b08f1f59a4b34b5a7a96ebd9";
static const char* kProdG =
    "8513b63180eae44c9fb569c453d5da0fdc605c4206c6cfb6bd7ff6c5b1cbb401"
    "8c5db34eaa529c4cfcb88e9d576fe8bf00f8d2a3f3b9447c9144160684288bd5"
    "bf40997c0180764ae195a86f2108934a5f8269d4f89918129512652bb0aee628"
    "3f7fc97b25f82fa1147c7078db6d609ebfa2d8f7b720569d148b5d5ecfc572c2"
    "4c3b5dd341228c29da9d1b9ef56469634590880e2f083520125d14a73320056d"
    "ce276e68e4f713bdc1639c610b3fd3db1d83fb693ce321fe1c89551af9e7ace5"
    "d8dc5717283f819b8760a5a7fffcfa44dac81f6d0ba7171723747929a83f1a15"
    "adbcb1dea6745d68eb2ce007b6f77e0993a7657ebd2a33c69e6ee4e9414d7a53";
static const char* kProdH =
    "2a6f3348d37fd047abef565fb9879102b2533fd8607bae236417656d458304df"
    "f1d25c85e3653953f56c1ad1b8e541b34a195a9787f460089a939b7bbb3d43ac"
    "a88ad80f2de2bc82b8ce08cf668607629c4a4806945553d70d1aca8158c01344"
    "826cc1c46e3b78cb7765e4e2e15ea1d98606c255c35d082b041fd08d7ae6b46f"
    "4b63cdcd409251a442e208e31fedf90f35189013755c93b795a21becb9cd28eb"
    "a6dd8fa8aa31b6905f2db98e14e40bfa55adc2a4b834c0cb7e9fa946849045ee"
    "10f14eddba5ad2a4b2ead91f44daf3fa9b0141fdff83947b7d09a99b81c6c91e"
    "a9523f7944f313263e1eab84fc33557b60454822a8b5f0199d5583f433c4d9e7";

const GroupParams& GroupParams::production() {
    static const GroupParams P = [] {
        GroupParams q;
        q.p = mpz_class(kProdP, 16);
        q.q = mpz_class(kProdQ, 16);
        q.g = GroupElement(mpz_class(kProdG, 16));
        q.h = GroupElement(mpz_class(kProdH, 16));
        q.bit_width = 256;
        return q;
    }();
    return P;
}

Commitment commit(const GroupParams& P, const Scalar& m, const Scalar& r) {
    // (g^r, g^m * h^r)
    return Commitment{P.pow_g(r), P.mul(P.pow_g(m), P.pow_h(r))};
}

Scalar hash_to_scalar(const GroupParams& P, const Bytes& input) {
    size_t bits = mpz_sizeinbase(P.q.get_mpz_t(), 2);
    size_t nbytes = (bits + 7) / 8;
    size_t excess = nbytes * 8 - bits;
    for (uint32_t ctr = 0;; ctr++) {
        Bytes buf = input;
        append_u32_be(buf, ctr);
        Digest d = sha256(buf);
        Bytes cand(d.begin(), d.begin() + nbytes);
        cand[0] &= uint8_t(0xff >> excess);
        mpz_class v;
        mpz_import(v.get_mpz_t(), cand.size(), 1, 1, 1, 0, cand.data());
        if (v < P.q) return Scalar(v);
    }
}

static Bytes mpz_bytes(const mpz_class& v) {
    if (v == 0) return {};
    size_t count = 0;
    Bytes buf((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8);
    mpz_export(buf.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
    buf.resize(count);
    return buf;
}

static mpz_class bytes_mpz(const Bytes& b) {
    mpz_class v;
    if (!b.empty()) mpz_import(v.get_mpz_t(), b.size(), 1, 1, 1, 0, b.data());
    return v;
}

Bytes encode(const Scalar& s) {
    Encoder e;
    e.tlv(Tag::Scalar, mpz_bytes(s.v));
    return e.out;
}

Bytes encode(const GroupElement& el) {
    Encoder e;
    e.tlv(Tag::Element, mpz_bytes(el.v));
    return e.out;
}

Bytes encode(const Commitment& c) {
    Encoder body;
    body.raw(encode(c.c1));
    body.raw(encode(c.c2));
    Encoder e;
    e.tlv(Tag::Commitment, body.out);
    return e.out;
}

static void check_minimal(const Bytes& b) {
    if (!b.empty() && b[0] == 0) throw MalformedArtifact("non-minimal integer encoding");
}

Scalar decode_scalar(const GroupParams& P, Reader& r) {
    Bytes b = r.expect(Tag::Scalar);
    check_minimal(b);
    mpz_class v = bytes_mpz(b);
    if (v >= P.q) throw MalformedArtifact("scalar out of range");
    return Scalar(v);
}

GroupElement decode_element(const GroupParams& P, Reader& r) {
    Bytes b = r.expect(Tag::Element);
    check_minimal(b);
    GroupElement el(bytes_mpz(b));
    if (!P.in_subgroup(el)) throw MalformedArtifact("element not in subgroup");
    return el;
}

Commitment decode_commitment(const GroupParams& P, Reader& r) {
    Bytes body = r.expect(Tag::Commitment);
    Reader rr(body);
    Commitment c;
    c.c1 = decode_element(P, rr);
    c.c2 = decode_element(P, rr);
    rr.expect_done();
    return c;
}

} // namespace unizk
