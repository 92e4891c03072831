#pragma once

#include "unizk/unclonable.hpp"

namespace unizk {

// Signatures of knowledge: sign message m by proving the unclonable NIZK for
// x with m folded into the Fiat-Shamir domain (tag "SOK/" || m), so the
// signature verifies only under the exact (x, m) pair.

struct SignatureOfKnowledge {
    UnclonableProofCrs proof;
};

std::string sok_domain(const Bytes& m);

std::pair<UCrs, UTrapdoor> sok_setup(const GroupParams& P, Rng& rng);

SignatureOfKnowledge sok_sign(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                              const UCrs& crs, const GroupElement& x, const Scalar& w,
                              const Bytes& m, Rng& rng, size_t n_qubits = kDefaultNoteQubits);
bool sok_verify(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P, const UCrs& crs,
                const GroupElement& x, const Bytes& m, const SignatureOfKnowledge& sig);
SignatureOfKnowledge sok_sim(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                             const UCrs& crs, const UTrapdoor& td, const GroupElement& x,
                             const Bytes& m, Rng& rng, size_t n_qubits = kDefaultNoteQubits);
Scalar sok_ext(const GroupParams& P, const UCrs& crs, const UTrapdoor& td, const GroupElement& x,
               const Bytes& m, const SignatureOfKnowledge& sig);

// Revocable anonymous credentials over signatures of knowledge: a credential
// is a signature on the access string; revocation is surrender of the
// credential itself, re-verified by the issuer.

struct IssuerKeys {
    UCrs crs;
    GroupElement x;  // nym = (crs, x)
    std::vector<std::string> access_set;  // empty = any access accepted
};

struct IssuerSecret {
    UTrapdoor td;
    Scalar w;  // x = g^w
};

using Credential = SignatureOfKnowledge;
using RevocationNotice = std::string;
using RevocationProof = Credential;

std::pair<IssuerKeys, IssuerSecret> issuer_keygen(const GroupParams& P, Rng& rng,
                                                  std::vector<std::string> access_set = {});

Credential issue(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                 const IssuerKeys& nym, const IssuerSecret& sk, const std::string& access,
                 Rng& rng, size_t n_qubits = kDefaultNoteQubits);
bool verify_cred(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                 const IssuerKeys& nym, const std::string& access, const Credential& cred);
RevocationNotice revoke(const IssuerKeys& nym, const IssuerSecret& sk, const std::string& access);
RevocationProof prove_revocation(const IssuerKeys& nym, const RevocationNotice& revnotice,
                                 Credential cred);
bool ver_revoke(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                const IssuerKeys& nym, const IssuerSecret& sk, const std::string& access,
                const RevocationNotice& revnotice, const RevocationProof& pi);

Bytes encode(const SignatureOfKnowledge& sig);
SignatureOfKnowledge decode_sok(const GroupParams& P, Reader& r);

} // namespace unizk
