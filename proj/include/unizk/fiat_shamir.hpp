#pragma once

#include <functional>
#include <string>

#include "unizk/oracle.hpp"
#include "unizk/sigma.hpp"

namespace unizk {

// Fiat-Shamir NIZK over the sigma module. The challenge is bound to
// (domain tag, crs bytes, instance context, statement encoding, alpha), all
// in canonical bytes; a proof carries (alpha, gamma) and beta is recomputed.

struct FsContext {
    std::string tag;  // ASCII domain tag, e.g. "FS/SIMEXT/v1"
    Bytes crs_bytes;
    Bytes instance;   // canonical bytes of the instance tuple
};

struct FsProof {
    Alpha alpha;
    GammaNode gamma;
};

Bytes fs_point(const FsContext& ctx, const SigmaStatement& stmt, const Alpha& alpha);

FsProof fs_prove(Oracle& oracle, const GroupParams& P, const FsContext& ctx,
                 const SigmaStatement& stmt, const SigmaWitness& wit, Rng& rng);  // WitnessMismatch
bool fs_verify(Oracle& oracle, const GroupParams& P, const FsContext& ctx,
               const SigmaStatement& stmt, const FsProof& proof);

// zero-knowledge simulator: samples the digest first, simulates the sigma
// transcript under the derived challenge, then programs the oracle at the
// Fiat-Shamir point (AlreadyDefined propagates; the harness counts those)
FsProof fs_simulate(Oracle& oracle, const GroupParams& P, const FsContext& ctx,
                    const SigmaStatement& stmt, Rng& rng);

// A rerunnable prover for the forking extractor: each call must behave
// identically given identical oracle answers (fixed internal randomness).
struct FsRun {
    FsContext ctx;
    SigmaStatement stmt;
    FsProof proof;
};
using FsAdversary = std::function<FsRun(Oracle&)>;

constexpr int kDefaultForkBudget = 64;

// Classical rewinding: replay the adversary against an oracle forked at its
// Fiat-Shamir query, then run special-soundness extraction on the two
// accepting transcripts. Throws ExtractionFailed after `budget` forks or when
// the proof's point never appears in the query log.
SigmaWitness fs_extract(const GroupParams& P, const FsAdversary& adversary, Rng& rng,
                        int budget = kDefaultForkBudget);

Scalar beta_from_digest(const GroupParams& P, const Digest& d);

} // namespace unizk
