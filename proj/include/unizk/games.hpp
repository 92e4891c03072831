#pragma once

#include <optional>
#include <string>

#include "unizk/applications.hpp"

namespace unizk {

// Executable security games: each run_* function is a literal transcription
// of its definition's probability experiment, with per-trial isolated oracle,
// authority, and rng streams (trial t uses Rng(seed, t); aggregation is
// order-independent, so reports reproduce bit-for-bit under a fixed seed).

struct GameReport {
    std::string game;
    std::string params;  // JSON object fragment describing the configuration
    uint64_t trials = 0;
    uint64_t successes = 0;
    double rate = 0.0;
    std::optional<double> bound;  // exact analytic value when an oracle exists
    double z = 0.0;               // binomial z-score of successes against bound
    uint64_t collisions = 0;      // oracle-programming collisions observed
    uint64_t errors = 0;          // adversary outputs rejected with an exception

    void finalize();
    std::string json_line() const;
};

// Hard distribution over the discrete-log relation: x = g^w, w uniform.
struct HardDistribution {
    const GroupParams* P;

    std::pair<GroupElement, Scalar> sample(Rng& rng) const;
    HardSampler sampler() const;
};

// exhaustive discrete log, the witness validator independent of the sigma
// algebra; fixture scale only
Scalar fixture_dlog_bruteforce(const GroupParams& P, const GroupElement& x);

// ---- quantum money game --------------------------------------------------

enum class MoneyAttack { MeasureResend, FreshForgery, Identity };

// exact per-note both-pass rates by Born-rule enumeration over the four
// Wiesner states
double measure_resend_both_pass_rate(size_t n);
double fresh_forgery_both_pass_rate(size_t n);

GameReport run_money_unforgeability(MoneyAttack attack, size_t n, uint64_t trials, uint64_t seed);

// ---- cloning / extraction games ------------------------------------------

enum class Protocol { CRS, ROM };
enum class AdversaryKind { ClassicalCopier, HonestReprover, Null };

const char* to_string(Protocol p);
const char* to_string(AdversaryKind k);
const char* to_string(MoneyAttack a);

struct RomClaim {
    GroupElement x;
    UnclonableProofRom proof;
};

class RomCloneAdversary {
public:
    virtual ~RomCloneAdversary() = default;
    virtual std::vector<RomClaim> run(Oracle& oracle, MoneyAuthority& authority,
                                      const GroupParams& P, std::vector<RomClaim> given) = 0;
};

std::unique_ptr<CrsCloneAdversary> make_crs_adversary(AdversaryKind kind, const GroupElement& x,
                                                      const Scalar& w, uint64_t seed);
std::unique_ptr<RomCloneAdversary> make_rom_adversary(AdversaryKind kind, const GroupElement& x,
                                                      const Scalar& w, uint64_t seed);

// Literal event of the (k-1)-to-k definition for the designated target x:
// exists J within the accepting claims on x with |J| > #{i : x_i = x}.
bool clone_predicate(size_t accepted_on_x, size_t inputs_on_x);
// subset-enumeration form, used to cross-validate the counting shortcut at k <= 4
bool clone_predicate_exhaustive(const std::vector<bool>& claim_on_x,
                                const std::vector<bool>& claim_accepts, size_t inputs_on_x);

GameReport run_unclonable_game(const GroupParams& P, Protocol proto, AdversaryKind kind, size_t k,
                               uint64_t trials, uint64_t seed, size_t n_qubits = kDefaultNoteQubits);

GameReport run_extraction_game(const GroupParams& P, Protocol proto, AdversaryKind kind, size_t k,
                               uint64_t trials, uint64_t seed, size_t n_qubits = kDefaultNoteQubits);

// amplified extraction: per trial, amplify_extractor with the given budget
GameReport run_amplified_extraction_game(const GroupParams& P, AdversaryKind kind, size_t k,
                                         int budget, uint64_t trials, uint64_t seed,
                                         size_t n_qubits = kDefaultNoteQubits);

// pairwise cloning game over hard instances: C(x, pi) -> (pi_1, pi_2)
GameReport run_cloning_game_def41(const GroupParams& P, Protocol proto, AdversaryKind kind,
                                  uint64_t trials, uint64_t seed,
                                  size_t n_qubits = kDefaultNoteQubits);

// simulation-extraction game on the simext layer: adversary sees sim_queries
// simulated proofs, outputs a fresh accepting proof; extractor must recover a
// valid witness (confirmed by brute-force dlog at fixture scale)
GameReport run_simext_game(const GroupParams& P, uint64_t trials, uint64_t seed,
                           size_t sim_queries = 5);

// SoK extraction game vs HonestReprover (delegates to the clone extractor)
GameReport run_sok_game(const GroupParams& P, uint64_t trials, uint64_t seed,
                        size_t n_qubits = kDefaultNoteQubits);

// revocation game: surrender-and-copy adversary must pass VerRevoke and still
// present an accepting credential
GameReport run_revocation_game(const GroupParams& P, uint64_t trials, uint64_t seed,
                               size_t n_qubits = kDefaultNoteQubits);

// credential-clone game (Def. of unclonable anonymous credentials)
GameReport run_cred_clone_game(const GroupParams& P, uint64_t trials, uint64_t seed,
                               size_t n_qubits = kDefaultNoteQubits);

} // namespace unizk
