#pragma once

#include <memory>

#include "unizk/money.hpp"
#include "unizk/simext.hpp"

namespace unizk {

// Unclonable NIZKs: the CRS-model construction (quantum note + serial +
// simulation-extractable proof of "(x, z) in R or c = Com(s; z)") and the
// QROM construction (note + serial-bound Fiat-Shamir sigma proof), with
// their simulators, extractors, the (k-1)-to-k cloning extractor E, and the
// repetition amplifier.

// ---- CRS construction ---------------------------------------------------

struct UCrs {
    SimExtCrs inner;
    Commitment c;  // commitment to a uniform dummy serial; opening discarded at setup

    Bytes bytes() const;
};

struct UTrapdoor {
    SimExtTrapdoor inner;
};

struct UnclonableProofCrs {
    NoteHandle note;
    SerialNumber s;
    SimExtProof pi;
};

inline const char* kUnizkTag = "FS/UNIZK/v1";
constexpr size_t kDefaultNoteQubits = 16;

std::pair<UCrs, UTrapdoor> u_setup(const GroupParams& P, Rng& rng);

// And(BitValid(ct_i)..., Or(LinearEnc(C, x, g),
//                           LinearEnc(C, c2*g^{-s}, h) with c1 = g^z))
SigmaStatement unclonable_statement(const GroupParams& P, const GroupElement& pk,
                                    const Commitment& c, const GroupElement& x,
                                    const Scalar& s_scalar, const WitnessCiphertext& ct);

SigmaWitness unclonable_witness_real(const GroupParams& P, const Scalar& w, const EncRandomness& rnd);
// commitment-opening branch; used by white-box tests that know (s*, r*)
SigmaWitness unclonable_witness_commit(const GroupParams& P, const Scalar& z, const EncRandomness& rnd);

UnclonableProofCrs u_prove(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                           const UCrs& crs, const GroupElement& x, const Scalar& w, Rng& rng,
                           size_t n_qubits = kDefaultNoteQubits, const std::string& tag = kUnizkTag);
bool u_verify(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P, const UCrs& crs,
              const GroupElement& x, const UnclonableProofCrs& proof,
              const std::string& tag = kUnizkTag);  // UnknownSerial
UnclonableProofCrs u_sim(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                         const UCrs& crs, const UTrapdoor& td, const GroupElement& x, Rng& rng,
                         size_t n_qubits = kDefaultNoteQubits, const std::string& tag = kUnizkTag);
Scalar u_ext(const GroupParams& P, const UCrs& crs, const UTrapdoor& td, const GroupElement& x,
             const UnclonableProofCrs& proof);  // DecodeError

// proof for an instance-statement pair built by the caller (white-box tests)
UnclonableProofCrs u_prove_with_witness(Oracle& oracle, MoneyAuthority& authority,
                                        const GroupParams& P, const UCrs& crs, const GroupElement& x,
                                        const SerialNumber& s, NoteHandle note,
                                        const WitnessCiphertext& ct, const SigmaWitness& wit,
                                        Rng& rng, const std::string& tag = kUnizkTag);

// ---- (k-1)-to-k cloning extractor --------------------------------------

struct CloneClaim {
    GroupElement x;
    UnclonableProofCrs proof;
};

// Adversaries interact with notes only through MoneyAuthority operations and
// receive classical proof parts by value.
class CrsCloneAdversary {
public:
    virtual ~CrsCloneAdversary() = default;
    virtual std::vector<CloneClaim> run(Oracle& oracle, MoneyAuthority& authority,
                                        const GroupParams& P, const UCrs& crs,
                                        std::vector<CloneClaim> given) = 0;
};

// Runs Sim_0/Sim_1 to hand the adversary k-1 simulated proofs on the input
// instances, receives k claims, picks j' uniformly from [k] and extracts from
// that claim. AdversaryMalformed on wrong arity, ExtractionFailed when the
// chosen ciphertext does not decrypt.
Scalar clone_extractor_E(const GroupParams& P, CrsCloneAdversary& adversary,
                         const std::vector<GroupElement>& xs, const GroupElement& x, Rng& rng,
                         size_t n_qubits = kDefaultNoteQubits);

using CrsAdversaryFactory = std::function<std::unique_ptr<CrsCloneAdversary>()>;

// Runs E with fresh adversary instances until the returned witness satisfies
// the relation; success probability 1 - (1 - base)^budget.
Scalar amplify_extractor(const GroupParams& P, const CrsAdversaryFactory& factory,
                         const std::vector<GroupElement>& xs, const GroupElement& x, int budget,
                         Rng& rng, size_t n_qubits = kDefaultNoteQubits);  // ExtractionFailed

// ---- QROM construction --------------------------------------------------

struct UnclonableProofRom {
    NoteHandle note;
    SerialNumber s;
    Alpha alpha;
    Scalar beta;
    GammaNode gamma;
};

inline const char* kRomTag = "UROM/v1";

Bytes rom_point(const GroupElement& x, const Alpha& alpha, const SerialNumber& s);

UnclonableProofRom rom_prove(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                             const GroupElement& x, const Scalar& w, Rng& rng,
                             size_t n_qubits = kDefaultNoteQubits);
bool rom_verify(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                const GroupElement& x, const UnclonableProofRom& proof);  // UnknownSerial
UnclonableProofRom rom_sim(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                           const GroupElement& x, Rng& rng, size_t n_qubits = kDefaultNoteQubits);

// rerunnable prover for the forking extractor; the authority handed to each
// run is freshly seeded with the same stream so replays agree up to the fork
struct RomRun {
    GroupElement x;
    UnclonableProofRom proof;
};
using RomProver = std::function<RomRun(Oracle&, MoneyAuthority&)>;

SigmaWitness rom_extract(const GroupParams& P, const RomProver& prover, Rng& rng,
                         int budget = kDefaultForkBudget);  // ExtractionFailed

// ---- quantum money from unclonable NIZK ---------------------------------

using HardSampler = std::function<std::pair<GroupElement, Scalar>(Rng&)>;

struct NizkBanknoteCrs {
    UCrs crs;  // serial s = (crs, x)
    GroupElement x;
    UnclonableProofCrs proof;
};

struct NizkBanknoteRom {
    GroupElement x;  // serial s = x
    UnclonableProofRom proof;
};

NizkBanknoteCrs money_from_nizk_gen_crs(Oracle& oracle, MoneyAuthority& authority,
                                        const GroupParams& P, const HardSampler& dist, Rng& rng,
                                        size_t n_qubits = kDefaultNoteQubits);
bool money_from_nizk_ver_crs(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                             const NizkBanknoteCrs& note);
NizkBanknoteRom money_from_nizk_gen_rom(Oracle& oracle, MoneyAuthority& authority,
                                        const GroupParams& P, const HardSampler& dist, Rng& rng,
                                        size_t n_qubits = kDefaultNoteQubits);
bool money_from_nizk_ver_rom(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                             const NizkBanknoteRom& note);

// classical parts only; the note travels as a handle (or a sim-only dump)
Bytes encode(const UnclonableProofCrs& proof);
Bytes encode(const UnclonableProofRom& proof);
Bytes encode(const UCrs& crs);
UnclonableProofCrs decode_uproof_crs(const GroupParams& P, Reader& r);
UnclonableProofRom decode_uproof_rom(const GroupParams& P, Reader& r);
UCrs decode_ucrs(const GroupParams& P, Reader& r);

} // namespace unizk
