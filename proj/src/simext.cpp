#include "unizk/simext.hpp"

#include "unizk/errors.hpp"

namespace unizk {

Bytes SimExtCrs::bytes() const {
    Encoder e;
    e.raw(encode(pk));
    e.tlv(Tag::Raw, Bytes(tag.begin(), tag.end()));
    return e.out;
}

std::pair<SimExtCrs, SimExtTrapdoor> simext_setup(const GroupParams& P, Rng& rng) {
    KeyPair kp = pke_keygen(P, rng);
    return {SimExtCrs{kp.pk, kSimExtTag}, SimExtTrapdoor{kp.sk}};
}

SigmaStatement simext_statement(const GroupParams& P, const GroupElement& pk,
                                const GroupElement& x, const WitnessCiphertext& ct) {
    std::vector<SigmaStatement> parts;
    parts.reserve(ct.bits.size() + 1);
    for (const auto& bit_ct : ct.bits) parts.push_back(stmt_bit_valid(pk, bit_ct));
    BitCiphertext agg = aggregate_ciphertext(P, ct);
    parts.push_back(stmt_linear_enc(pk, agg, {Binding{x, P.g}}));
    return stmt_and(std::move(parts));
}

SigmaWitness simext_witness(const GroupParams& P, const Scalar& w, const EncRandomness& rnd) {
    std::vector<int> bits = scalar_bits(P, w);
    std::vector<SigmaWitness> parts;
    parts.reserve(rnd.u.size() + 1);
    for (size_t i = 0; i < rnd.u.size(); i++)
        parts.push_back(wit_or(bits[i], wit_scalars({rnd.u[i]})));
    Scalar U = aggregate_randomness(P, rnd);
    parts.push_back(wit_scalars({U, w}));
    return wit_and(std::move(parts));
}

static FsContext simext_ctx(const SimExtCrs& crs, const GroupElement& x, const WitnessCiphertext& ct) {
    Encoder inst;
    inst.raw(encode(x));
    inst.raw(encode(ct));
    return FsContext{crs.tag, crs.bytes(), inst.out};
}

SimExtProof simext_prove(Oracle& oracle, const GroupParams& P, const SimExtCrs& crs,
                         const GroupElement& x, const Scalar& w, Rng& rng) {
    if (P.pow_g(w) != x) throw WitnessMismatch("w is not the discrete log of x");
    auto [ct, rnd] = enc_witness(P, crs.pk, w, rng);
    SigmaStatement stmt = simext_statement(P, crs.pk, x, ct);
    SigmaWitness wit = simext_witness(P, w, rnd);
    FsProof pi = fs_prove(oracle, P, simext_ctx(crs, x, ct), stmt, wit, rng);
    return SimExtProof{std::move(ct), std::move(pi)};
}

bool simext_verify(Oracle& oracle, const GroupParams& P, const SimExtCrs& crs,
                   const GroupElement& x, const SimExtProof& proof) {
    if (proof.ct.bits.size() != P.bit_width) return false;
    SigmaStatement stmt = simext_statement(P, crs.pk, x, proof.ct);
    return fs_verify(oracle, P, simext_ctx(crs, x, proof.ct), stmt, proof.pi);
}

SimExtProof simext_sim(Oracle& oracle, const GroupParams& P, const SimExtCrs& crs,
                       const SimExtTrapdoor&, const GroupElement& x, Rng& rng) {
    auto [ct, rnd] = enc_witness(P, crs.pk, Scalar(0), rng);
    (void)rnd;
    SigmaStatement stmt = simext_statement(P, crs.pk, x, ct);
    FsProof pi = fs_simulate(oracle, P, simext_ctx(crs, x, ct), stmt, rng);
    return SimExtProof{std::move(ct), std::move(pi)};
}

Scalar simext_ext(const GroupParams& P, const SimExtCrs&, const SimExtTrapdoor& td,
                  const GroupElement&, const SimExtProof& proof) {
    return dec_witness(P, td.sk, proof.ct);
}

Bytes encode(const SimExtProof& proof) {
    Encoder body;
    body.raw(encode(proof.ct));
    body.raw(encode(proof.pi.alpha));
    body.raw(encode(proof.pi.gamma));
    Encoder e;
    e.tlv(Tag::SimExtProof, body.out);
    return e.out;
}

SimExtProof decode_simext_proof(const GroupParams& P, Reader& r) {
    Bytes body = r.expect(Tag::SimExtProof);
    Reader rr(body);
    SimExtProof proof;
    proof.ct = decode_witness_ciphertext(P, rr);
    proof.pi.alpha = decode_alpha(P, rr);
    proof.pi.gamma = decode_gamma(P, rr);
    rr.expect_done();
    return proof;
}

} // namespace unizk
