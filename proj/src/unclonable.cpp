#include "unizk/unclonable.hpp"

#include "unizk/errors.hpp"

namespace unizk {

// ---- CRS construction ---------------------------------------------------

Bytes UCrs::bytes() const {
    Encoder e;
    e.raw(inner.bytes());
    e.raw(encode(c));
    return e.out;
}

std::pair<UCrs, UTrapdoor> u_setup(const GroupParams& P, Rng& rng) {
    auto [inner_crs, inner_td] = simext_setup(P, rng);
    // commit to a uniform dummy serial; (s*, r*) are discarded, the trapdoor
    // is the sub-protocol trapdoor alone
    SerialNumber s_star;
    rng.fill(s_star.data(), s_star.size());
    Scalar s_scalar = hash_to_scalar(P, Bytes(s_star.begin(), s_star.end()));
    Scalar r_star = P.random_scalar(rng);
    Commitment c = commit(P, s_scalar, r_star);
    UCrs crs{inner_crs, c};
    crs.inner.tag = kUnizkTag;
    return {crs, UTrapdoor{inner_td}};
}

SigmaStatement unclonable_statement(const GroupParams& P, const GroupElement& pk,
                                    const Commitment& c, const GroupElement& x,
                                    const Scalar& s_scalar, const WitnessCiphertext& ct) {
    std::vector<SigmaStatement> parts;
    parts.reserve(ct.bits.size() + 1);
    for (const auto& bit_ct : ct.bits) parts.push_back(stmt_bit_valid(pk, bit_ct));
    BitCiphertext agg = aggregate_ciphertext(P, ct);
    SigmaStatement left = stmt_linear_enc(pk, agg, {Binding{x, P.g}});
    SigmaStatement right = stmt_linear_enc(
        pk, agg, {Binding{P.div(c.c2, P.pow_g(s_scalar)), P.h}, Binding{c.c1, P.g}});
    parts.push_back(stmt_or(std::move(left), std::move(right)));
    return stmt_and(std::move(parts));
}

static SigmaWitness unclonable_witness(const GroupParams& P, int side, const Scalar& z,
                                       const EncRandomness& rnd) {
    std::vector<int> bits = scalar_bits(P, z);
    std::vector<SigmaWitness> parts;
    parts.reserve(rnd.u.size() + 1);
    for (size_t i = 0; i < rnd.u.size(); i++)
        parts.push_back(wit_or(bits[i], wit_scalars({rnd.u[i]})));
    Scalar U = aggregate_randomness(P, rnd);
    parts.push_back(wit_or(side, wit_scalars({U, z})));
    return wit_and(std::move(parts));
}

SigmaWitness unclonable_witness_real(const GroupParams& P, const Scalar& w, const EncRandomness& rnd) {
    return unclonable_witness(P, 0, w, rnd);
}

SigmaWitness unclonable_witness_commit(const GroupParams& P, const Scalar& z, const EncRandomness& rnd) {
    return unclonable_witness(P, 1, z, rnd);
}

static FsContext unclonable_ctx(const UCrs& crs, const GroupElement& x, const SerialNumber& s,
                                const WitnessCiphertext& ct, const std::string& tag) {
    Encoder inst;
    inst.raw(encode(crs.c));
    inst.raw(encode(x));
    inst.raw(encode(s));
    inst.raw(encode(ct));
    return FsContext{tag, crs.bytes(), inst.out};
}

UnclonableProofCrs u_prove(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                           const UCrs& crs, const GroupElement& x, const Scalar& w, Rng& rng,
                           size_t n_qubits, const std::string& tag) {
    if (P.pow_g(w) != x) throw WitnessMismatch("w is not the discrete log of x");
    auto [note, s] = authority.note_gen(n_qubits);
    Scalar s_scalar = hash_to_scalar(P, Bytes(s.begin(), s.end()));
    auto [ct, rnd] = enc_witness(P, crs.inner.pk, w, rng);
    SigmaStatement stmt = unclonable_statement(P, crs.inner.pk, crs.c, x, s_scalar, ct);
    SigmaWitness wit = unclonable_witness_real(P, w, rnd);
    FsProof pi = fs_prove(oracle, P, unclonable_ctx(crs, x, s, ct, tag), stmt, wit, rng);
    return UnclonableProofCrs{note, s, SimExtProof{std::move(ct), std::move(pi)}};
}

UnclonableProofCrs u_prove_with_witness(Oracle& oracle, MoneyAuthority&, const GroupParams& P,
                                        const UCrs& crs, const GroupElement& x, const SerialNumber& s,
                                        NoteHandle note, const WitnessCiphertext& ct,
                                        const SigmaWitness& wit, Rng& rng, const std::string& tag) {
    Scalar s_scalar = hash_to_scalar(P, Bytes(s.begin(), s.end()));
    SigmaStatement stmt = unclonable_statement(P, crs.inner.pk, crs.c, x, s_scalar, ct);
    FsProof pi = fs_prove(oracle, P, unclonable_ctx(crs, x, s, ct, tag), stmt, wit, rng);
    return UnclonableProofCrs{note, s, SimExtProof{ct, std::move(pi)}};
}

bool u_verify(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P, const UCrs& crs,
              const GroupElement& x, const UnclonableProofCrs& proof, const std::string& tag) {
    if (!authority.ver(proof.note, proof.s)) return false;
    if (proof.pi.ct.bits.size() != P.bit_width) return false;
    Scalar s_scalar = hash_to_scalar(P, Bytes(proof.s.begin(), proof.s.end()));
    SigmaStatement stmt = unclonable_statement(P, crs.inner.pk, crs.c, x, s_scalar, proof.pi.ct);
    return fs_verify(oracle, P, unclonable_ctx(crs, x, proof.s, proof.pi.ct, tag), stmt, proof.pi.pi);
}

UnclonableProofCrs u_sim(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                         const UCrs& crs, const UTrapdoor&, const GroupElement& x, Rng& rng,
                         size_t n_qubits, const std::string& tag) {
    auto [note, s] = authority.note_gen(n_qubits);
    Scalar s_scalar = hash_to_scalar(P, Bytes(s.begin(), s.end()));
    auto [ct, rnd] = enc_witness(P, crs.inner.pk, Scalar(0), rng);
    (void)rnd;
    SigmaStatement stmt = unclonable_statement(P, crs.inner.pk, crs.c, x, s_scalar, ct);
    FsProof pi = fs_simulate(oracle, P, unclonable_ctx(crs, x, s, ct, tag), stmt, rng);
    return UnclonableProofCrs{note, s, SimExtProof{std::move(ct), std::move(pi)}};
}

Scalar u_ext(const GroupParams& P, const UCrs&, const UTrapdoor& td, const GroupElement&,
             const UnclonableProofCrs& proof) {
    return dec_witness(P, td.inner.sk, proof.pi.ct);
}

// ---- cloning extractor --------------------------------------------------

Scalar clone_extractor_E(const GroupParams& P, CrsCloneAdversary& adversary,
                         const std::vector<GroupElement>& xs, const GroupElement& x, Rng& rng,
                         size_t n_qubits) {
    size_t k = xs.size() + 1;
    Oracle oracle(rng.child(1));
    MoneyAuthority authority(rng.child(2));
    Rng local = rng.child(3);

    auto [crs, td] = u_setup(P, local);
    std::vector<CloneClaim> given;
    given.reserve(xs.size());
    for (const auto& xi : xs)
        given.push_back(CloneClaim{xi, u_sim(oracle, authority, P, crs, td, xi, local, n_qubits)});

    std::vector<CloneClaim> claims = adversary.run(oracle, authority, P, crs, std::move(given));
    if (claims.size() != k) throw AdversaryMalformed("adversary must output k claims");

    size_t j = size_t(local.below(mpz_class(uint64_t(k))).get_ui());
    try {
        return u_ext(P, crs, td, x, claims[j].proof);
    } catch (const DecodeError&) {
        throw ExtractionFailed("claim ciphertext does not decrypt");
    }
}

Scalar amplify_extractor(const GroupParams& P, const CrsAdversaryFactory& factory,
                         const std::vector<GroupElement>& xs, const GroupElement& x, int budget,
                         Rng& rng, size_t n_qubits) {
    for (int attempt = 0; attempt < budget; attempt++) {
        auto adversary = factory();  // fresh copy of the adversary's advice
        Rng trial = rng.child(uint64_t(attempt));
        try {
            Scalar w = clone_extractor_E(P, *adversary, xs, x, trial, n_qubits);
            if (P.pow_g(w) == x) return w;
        } catch (const ExtractionFailed&) {
        } catch (const AdversaryMalformed&) {
        }
    }
    throw ExtractionFailed("amplification budget exhausted");
}

// ---- QROM construction --------------------------------------------------

Bytes rom_point(const GroupElement& x, const Alpha& alpha, const SerialNumber& s) {
    Encoder e;
    e.raw(kRomTag);
    e.raw(encode(x));
    e.raw(encode(alpha));
    e.raw(encode(s));
    return e.out;
}

UnclonableProofRom rom_prove(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                             const GroupElement& x, const Scalar& w, Rng& rng, size_t n_qubits) {
    if (P.pow_g(w) != x) throw WitnessMismatch("w is not the discrete log of x");
    auto [note, s] = authority.note_gen(n_qubits);
    SigmaStatement stmt = stmt_dlog(x);
    auto [alpha, state] = commit_phase(P, stmt, wit_scalars({w}), rng);
    Scalar beta = beta_from_digest(P, oracle.query(rom_point(x, alpha, s)));
    GammaNode gamma = respond(P, state, beta);
    return UnclonableProofRom{note, s, std::move(alpha), beta, std::move(gamma)};
}

bool rom_verify(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                const GroupElement& x, const UnclonableProofRom& proof) {
    if (!authority.ver(proof.note, proof.s)) return false;
    Scalar beta = beta_from_digest(P, oracle.query(rom_point(x, proof.alpha, proof.s)));
    if (beta != proof.beta) return false;
    return sigma_verify(P, stmt_dlog(x), SigmaTranscript{proof.alpha, beta, proof.gamma});
}

UnclonableProofRom rom_sim(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                           const GroupElement& x, Rng& rng, size_t n_qubits) {
    auto [note, s] = authority.note_gen(n_qubits);
    Digest d;
    rng.fill(d.data(), d.size());
    Scalar beta = beta_from_digest(P, d);
    auto [alpha, gamma] = simulate(P, stmt_dlog(x), beta, rng);
    oracle.program(rom_point(x, alpha, s), d);
    return UnclonableProofRom{note, s, std::move(alpha), beta, std::move(gamma)};
}

SigmaWitness rom_extract(const GroupParams& P, const RomProver& prover, Rng& rng, int budget) {
    uint64_t authority_seed = rng.u64();

    Oracle first(rng.child(0));
    MoneyAuthority auth1{Rng(authority_seed)};
    RomRun run1 = prover(first, auth1);
    Bytes point = rom_point(run1.x, run1.proof.alpha, run1.proof.s);
    Scalar beta1 = beta_from_digest(P, first.query(point));
    SigmaStatement stmt = stmt_dlog(run1.x);
    SigmaTranscript t1{run1.proof.alpha, beta1, run1.proof.gamma};
    if (!sigma_verify(P, stmt, t1)) throw ExtractionFailed("adversary transcript rejected");

    size_t fork_index = 0;
    if (!first.find_first_query(point, fork_index))
        throw ExtractionFailed("oracle query untraceable");
    OracleSnapshot snap = first.snapshot(fork_index);

    Bytes alpha1 = encode(run1.proof.alpha);
    for (int attempt = 1; attempt <= budget; attempt++) {
        Oracle forked = Oracle::resume(snap, rng.child(uint64_t(attempt)));
        MoneyAuthority auth2{Rng(authority_seed)};
        RomRun run2 = prover(forked, auth2);
        if (encode(run2.proof.alpha) != alpha1 || run2.proof.s != run1.proof.s) continue;
        Scalar beta2 = beta_from_digest(P, forked.query(point));
        if (beta2 == beta1) continue;
        SigmaTranscript t2{run2.proof.alpha, beta2, run2.proof.gamma};
        if (!sigma_verify(P, stmt, t2)) continue;
        return extract_special_soundness(P, stmt, t1, t2);
    }
    throw ExtractionFailed("fork budget exhausted");
}

// ---- quantum money from unclonable NIZK ---------------------------------

NizkBanknoteCrs money_from_nizk_gen_crs(Oracle& oracle, MoneyAuthority& authority,
                                        const GroupParams& P, const HardSampler& dist, Rng& rng,
                                        size_t n_qubits) {
    auto [crs, td] = u_setup(P, rng);
    (void)td;
    auto [x, w] = dist(rng);
    UnclonableProofCrs proof = u_prove(oracle, authority, P, crs, x, w, rng, n_qubits);
    return NizkBanknoteCrs{crs, x, std::move(proof)};
}

bool money_from_nizk_ver_crs(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                             const NizkBanknoteCrs& note) {
    return u_verify(oracle, authority, P, note.crs, note.x, note.proof);
}

NizkBanknoteRom money_from_nizk_gen_rom(Oracle& oracle, MoneyAuthority& authority,
                                        const GroupParams& P, const HardSampler& dist, Rng& rng,
                                        size_t n_qubits) {
    auto [x, w] = dist(rng);
    UnclonableProofRom proof = rom_prove(oracle, authority, P, x, w, rng, n_qubits);
    return NizkBanknoteRom{x, std::move(proof)};
}

bool money_from_nizk_ver_rom(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                             const NizkBanknoteRom& note) {
    return rom_verify(oracle, authority, P, note.x, note.proof);
}

// ---- encoding -----------------------------------------------------------

Bytes encode(const UnclonableProofCrs& proof) {
    Encoder body;
    body.raw(encode(proof.s));
    body.raw(encode(proof.pi));
    Encoder e;
    e.tlv(Tag::UProofCrs, body.out);
    return e.out;
}

UnclonableProofCrs decode_uproof_crs(const GroupParams& P, Reader& r) {
    Bytes body = r.expect(Tag::UProofCrs);
    Reader rr(body);
    UnclonableProofCrs proof;
    proof.s = decode_serial(rr);
    proof.pi = decode_simext_proof(P, rr);
    rr.expect_done();
    proof.note = NoteHandle{0};  // attached by the caller in demo mode
    return proof;
}

Bytes encode(const UnclonableProofRom& proof) {
    Encoder body;
    body.raw(encode(proof.s));
    body.raw(encode(proof.alpha));
    body.raw(encode(proof.beta));
    body.raw(encode(proof.gamma));
    Encoder e;
    e.tlv(Tag::UProofRom, body.out);
    return e.out;
}

UnclonableProofRom decode_uproof_rom(const GroupParams& P, Reader& r) {
    Bytes body = r.expect(Tag::UProofRom);
    Reader rr(body);
    UnclonableProofRom proof;
    proof.s = decode_serial(rr);
    proof.alpha = decode_alpha(P, rr);
    proof.beta = decode_scalar(P, rr);
    proof.gamma = decode_gamma(P, rr);
    rr.expect_done();
    proof.note = NoteHandle{0};
    return proof;
}

Bytes encode(const UCrs& crs) {
    Encoder body;
    body.raw(encode(crs.inner.pk));
    body.tlv(Tag::Raw, Bytes(crs.inner.tag.begin(), crs.inner.tag.end()));
    body.raw(encode(crs.c));
    Encoder e;
    e.tlv(Tag::UCrs, body.out);
    return e.out;
}

UCrs decode_ucrs(const GroupParams& P, Reader& r) {
    Bytes body = r.expect(Tag::UCrs);
    Reader rr(body);
    UCrs crs;
    crs.inner.pk = decode_element(P, rr);
    Bytes tag = rr.expect(Tag::Raw);
    crs.inner.tag.assign(tag.begin(), tag.end());
    crs.c = decode_commitment(P, rr);
    rr.expect_done();
    return crs;
}

} // namespace unizk
