#include "unizk/fiat_shamir.hpp"

#include "unizk/errors.hpp"

namespace unizk {

Scalar beta_from_digest(const GroupParams& P, const Digest& d) {
    return hash_to_scalar(P, Bytes(d.begin(), d.end()));
}

Bytes fs_point(const FsContext& ctx, const SigmaStatement& stmt, const Alpha& alpha) {
    Encoder e;
    e.raw(ctx.tag);
    e.tlv(Tag::Raw, ctx.crs_bytes);
    e.tlv(Tag::Raw, ctx.instance);
    e.raw(encode(stmt));
    e.raw(encode(alpha));
    return e.out;
}

FsProof fs_prove(Oracle& oracle, const GroupParams& P, const FsContext& ctx,
                 const SigmaStatement& stmt, const SigmaWitness& wit, Rng& rng) {
    auto [alpha, state] = commit_phase(P, stmt, wit, rng);
    Scalar beta = beta_from_digest(P, oracle.query(fs_point(ctx, stmt, alpha)));
    GammaNode gamma = respond(P, state, beta);
    return FsProof{std::move(alpha), std::move(gamma)};
}

bool fs_verify(Oracle& oracle, const GroupParams& P, const FsContext& ctx,
               const SigmaStatement& stmt, const FsProof& proof) {
    Scalar beta = beta_from_digest(P, oracle.query(fs_point(ctx, stmt, proof.alpha)));
    return sigma_verify(P, stmt, SigmaTranscript{proof.alpha, beta, proof.gamma});
}

FsProof fs_simulate(Oracle& oracle, const GroupParams& P, const FsContext& ctx,
                    const SigmaStatement& stmt, Rng& rng) {
    Digest d;
    rng.fill(d.data(), d.size());
    Scalar beta = beta_from_digest(P, d);
    auto [alpha, gamma] = simulate(P, stmt, beta, rng);
    oracle.program(fs_point(ctx, stmt, alpha), d);
    return FsProof{std::move(alpha), std::move(gamma)};
}

SigmaWitness fs_extract(const GroupParams& P, const FsAdversary& adversary, Rng& rng, int budget) {
    Oracle first(rng.child(0));
    FsRun run1 = adversary(first);
    Bytes point = fs_point(run1.ctx, run1.stmt, run1.proof.alpha);
    Scalar beta1 = beta_from_digest(P, first.query(point));
    SigmaTranscript t1{run1.proof.alpha, beta1, run1.proof.gamma};
    if (!sigma_verify(P, run1.stmt, t1)) throw ExtractionFailed("adversary proof rejected");

    size_t fork_index = 0;
    if (!first.find_first_query(point, fork_index))
        throw ExtractionFailed("Fiat-Shamir query untraceable");
    OracleSnapshot snap = first.snapshot(fork_index);

    Bytes alpha1 = encode(run1.proof.alpha);
    for (int attempt = 1; attempt <= budget; attempt++) {
        Oracle forked = Oracle::resume(snap, rng.child(uint64_t(attempt)));
        FsRun run2 = adversary(forked);
        if (encode(run2.proof.alpha) != alpha1) continue;
        if (fs_point(run2.ctx, run2.stmt, run2.proof.alpha) != point) continue;
        Scalar beta2 = beta_from_digest(P, forked.query(point));
        if (beta2 == beta1) continue;  // unrealizable fork, retry
        SigmaTranscript t2{run2.proof.alpha, beta2, run2.proof.gamma};
        if (!sigma_verify(P, run2.stmt, t2)) continue;
        return extract_special_soundness(P, run1.stmt, t1, t2);
    }
    throw ExtractionFailed("fork budget exhausted");
}

} // namespace unizk
