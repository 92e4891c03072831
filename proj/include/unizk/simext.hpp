#pragma once

#include "unizk/fiat_shamir.hpp"
#include "unizk/pke.hpp"

namespace unizk {

// Simulation-extractable compiler: the proof encrypts the witness bitwise
// under a crs public key and proves, in zero knowledge, that the ciphertext
// is consistent with the instance. The trapdoor (decryption key) extracts the
// witness from any accepting proof. Instantiated here for the discrete-log
// relation x = g^w.

struct SimExtCrs {
    GroupElement pk;
    std::string tag;  // oracle domain tag standing in for crs_Pi

    Bytes bytes() const;
};

struct SimExtTrapdoor {
    Scalar sk;
};

struct SimExtProof {
    WitnessCiphertext ct;
    FsProof pi;
};

inline const char* kSimExtTag = "FS/SIMEXT/v1";

std::pair<SimExtCrs, SimExtTrapdoor> simext_setup(const GroupParams& P, Rng& rng);

// And(BitValid(ct_0), ..., BitValid(ct_{L-1}), LinearEnc(C, x, g)) with
// C = prod ct_i^{2^i}
SigmaStatement simext_statement(const GroupParams& P, const GroupElement& pk,
                                const GroupElement& x, const WitnessCiphertext& ct);

// witness tree for the statement above, given the bit encryption randomness
SigmaWitness simext_witness(const GroupParams& P, const Scalar& w, const EncRandomness& rnd);

SimExtProof simext_prove(Oracle& oracle, const GroupParams& P, const SimExtCrs& crs,
                         const GroupElement& x, const Scalar& w, Rng& rng);
bool simext_verify(Oracle& oracle, const GroupParams& P, const SimExtCrs& crs,
                   const GroupElement& x, const SimExtProof& proof);

// Sim_1: encrypts 0, simulates the sub-proof by programming the oracle. The
// trapdoor argument is unused (oracle programming is the simulation trapdoor
// in this instantiation) but kept for the Setup/Sim/Ext interface shape.
SimExtProof simext_sim(Oracle& oracle, const GroupParams& P, const SimExtCrs& crs,
                       const SimExtTrapdoor& td, const GroupElement& x, Rng& rng);

// Ext: bitwise decryption of ct; the caller checks (x, w) membership
Scalar simext_ext(const GroupParams& P, const SimExtCrs& crs, const SimExtTrapdoor& td,
                  const GroupElement& x, const SimExtProof& proof);  // DecodeError

Bytes encode(const SimExtProof& proof);
SimExtProof decode_simext_proof(const GroupParams& P, Reader& r);

} // namespace unizk
