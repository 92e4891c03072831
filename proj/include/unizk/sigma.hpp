#pragma once

#include <array>
#include <functional>
#include <vector>

#include "unizk/group.hpp"
#include "unizk/pke.hpp"

namespace unizk {

// Sigma protocols over the discrete-log atom family, composed into AND/OR
// trees (additive CDS challenge splitting for OR). Every atom lowers to a set
// of linear equations target = prod base^{w_i} over a shared witness vector,
// so commit/respond/verify/simulate/extract are uniform across atoms.

struct Binding {
    GroupElement target, base;  // asserts target = base^z for the encrypted exponent z
};

struct SigmaStatement {
    enum class Kind : uint8_t { Dlog = 0, CommitOpen = 1, LinearEnc = 2, EncBit = 3, And = 4, Or = 5 };

    Kind kind;
    GroupElement x;                 // Dlog: x = g^w
    Commitment c;                   // CommitOpen: c = Com(s; z)
    Scalar s;                       // CommitOpen
    GroupElement pk;                // LinearEnc / EncBit
    BitCiphertext agg;              // LinearEnc: aggregated ciphertext (g^U, pk^U * g^z)
    std::vector<Binding> bindings;  // LinearEnc: target_j = base_j^z, same z
    BitCiphertext ct;               // EncBit
    int bit = 0;                    // EncBit: ct encrypts this bit
    std::vector<SigmaStatement> children;
};

SigmaStatement stmt_dlog(const GroupElement& x);
SigmaStatement stmt_commit_open(const Commitment& c, const Scalar& s);
SigmaStatement stmt_linear_enc(const GroupElement& pk, const BitCiphertext& agg,
                               std::vector<Binding> bindings);
SigmaStatement stmt_enc_bit(const GroupElement& pk, const BitCiphertext& ct, int bit);
SigmaStatement stmt_bit_valid(const GroupElement& pk, const BitCiphertext& ct);  // Or(enc0, enc1)
SigmaStatement stmt_and(std::vector<SigmaStatement> children);
SigmaStatement stmt_or(SigmaStatement left, SigmaStatement right);

struct SigmaWitness {
    std::vector<Scalar> scalars;         // atoms: one per witness slot
    std::vector<SigmaWitness> children;  // And: all; Or: the real branch only
    int or_side = -1;                    // Or: 0 = left, 1 = right
};

SigmaWitness wit_scalars(std::vector<Scalar> scalars);
SigmaWitness wit_and(std::vector<SigmaWitness> children);
SigmaWitness wit_or(int side, SigmaWitness real_branch);

bool relation_holds(const GroupParams& P, const SigmaStatement& stmt, const SigmaWitness& wit);

struct AlphaNode {
    std::vector<GroupElement> commits;  // one per atom equation
    std::vector<AlphaNode> children;
};

// Commitment message: per-atom group elements plus a 16-byte uniform salt,
// which makes alphas unpredictable; verification ignores the salt.
struct Alpha {
    AlphaNode root;
    std::array<uint8_t, 16> salt;
};

struct GammaNode {
    std::vector<Scalar> resp;           // atoms: gamma_j = t_j + beta * w_j
    std::vector<GammaNode> children;    // And / Or
    Scalar beta_left;                   // Or: left sub-challenge (right = beta - left)
};

struct SigmaTranscript {
    Alpha alpha;
    Scalar beta;
    GammaNode gamma;
};

class ProverState {
public:
    bool used() const { return used_; }

private:
    struct Node {
        std::vector<Scalar> nonces;
        std::vector<Node> children;  // And: all; Or: real branch only
        int or_side = -1;
        Scalar sim_beta;
        GammaNode sim_gamma;
    };

    SigmaStatement stmt_;
    SigmaWitness wit_;
    Node root_;
    bool used_ = false;

    friend std::pair<Alpha, ProverState> commit_phase_stream(const GroupParams&, const SigmaStatement&,
                                                             const SigmaWitness&,
                                                             const std::function<Scalar()>&,
                                                             const std::array<uint8_t, 16>&);
    friend GammaNode respond(const GroupParams&, ProverState&, const Scalar&);
};

using ScalarStream = std::function<Scalar()>;

std::pair<Alpha, ProverState> commit_phase(const GroupParams& P, const SigmaStatement& stmt,
                                           const SigmaWitness& wit, Rng& rng);  // WitnessMismatch
std::pair<Alpha, ProverState> commit_phase_stream(const GroupParams& P, const SigmaStatement& stmt,
                                                  const SigmaWitness& wit, const ScalarStream& nonces,
                                                  const std::array<uint8_t, 16>& salt);

GammaNode respond(const GroupParams& P, ProverState& state, const Scalar& beta);  // StateReuse

bool sigma_verify(const GroupParams& P, const SigmaStatement& stmt, const SigmaTranscript& t);

// honest-verifier simulator: verifying transcript for any beta, no witness
std::pair<Alpha, GammaNode> simulate(const GroupParams& P, const SigmaStatement& stmt,
                                     const Scalar& beta, Rng& rng);
std::pair<Alpha, GammaNode> simulate_stream(const GroupParams& P, const SigmaStatement& stmt,
                                            const Scalar& beta, const ScalarStream& resp,
                                            const std::array<uint8_t, 16>& salt);

// two accepting transcripts, equal alpha (salt included), different beta -> witness
SigmaWitness extract_special_soundness(const GroupParams& P, const SigmaStatement& stmt,
                                       const SigmaTranscript& t1, const SigmaTranscript& t2);  // NotAFork

// Serial-augmented statement of the modified sigma protocol: the commitment
// message additionally carries a sample from a serial distribution.
struct AugmentedStatement {
    SigmaStatement inner;
    Bytes serial_sample;  // nonempty
};

Bytes encode(const SigmaStatement& stmt);
Bytes encode(const Alpha& alpha);
Bytes encode(const GammaNode& gamma);
Alpha decode_alpha(const GroupParams& P, Reader& r);
GammaNode decode_gamma(const GroupParams& P, Reader& r);

} // namespace unizk
