#include "unizk/applications.hpp"

#include <algorithm>
#include <stdexcept>

#include "unizk/errors.hpp"

namespace unizk {

std::string sok_domain(const Bytes& m) {
    if (m.empty()) throw std::invalid_argument("message must be nonempty");
    return "SOK/" + std::string(m.begin(), m.end());
}

std::pair<UCrs, UTrapdoor> sok_setup(const GroupParams& P, Rng& rng) { return u_setup(P, rng); }

SignatureOfKnowledge sok_sign(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                              const UCrs& crs, const GroupElement& x, const Scalar& w,
                              const Bytes& m, Rng& rng, size_t n_qubits) {
    return SignatureOfKnowledge{u_prove(oracle, authority, P, crs, x, w, rng, n_qubits, sok_domain(m))};
}

bool sok_verify(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P, const UCrs& crs,
                const GroupElement& x, const Bytes& m, const SignatureOfKnowledge& sig) {
    return u_verify(oracle, authority, P, crs, x, sig.proof, sok_domain(m));
}

SignatureOfKnowledge sok_sim(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                             const UCrs& crs, const UTrapdoor& td, const GroupElement& x,
                             const Bytes& m, Rng& rng, size_t n_qubits) {
    return SignatureOfKnowledge{u_sim(oracle, authority, P, crs, td, x, rng, n_qubits, sok_domain(m))};
}

Scalar sok_ext(const GroupParams& P, const UCrs& crs, const UTrapdoor& td, const GroupElement& x,
               const Bytes&, const SignatureOfKnowledge& sig) {
    return u_ext(P, crs, td, x, sig.proof);
}

static void check_access(const IssuerKeys& nym, const std::string& access) {
    if (nym.access_set.empty()) return;
    if (std::find(nym.access_set.begin(), nym.access_set.end(), access) == nym.access_set.end())
        throw std::invalid_argument("access not in configured access set");
}

static Bytes access_bytes(const std::string& access) { return Bytes(access.begin(), access.end()); }

std::pair<IssuerKeys, IssuerSecret> issuer_keygen(const GroupParams& P, Rng& rng,
                                                  std::vector<std::string> access_set) {
    auto [crs, td] = u_setup(P, rng);
    Scalar w = P.random_scalar(rng);
    GroupElement x = P.pow_g(w);
    return {IssuerKeys{crs, x, std::move(access_set)}, IssuerSecret{td, w}};
}

Credential issue(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                 const IssuerKeys& nym, const IssuerSecret& sk, const std::string& access,
                 Rng& rng, size_t n_qubits) {
    check_access(nym, access);
    return sok_sign(oracle, authority, P, nym.crs, nym.x, sk.w, access_bytes(access), rng, n_qubits);
}

bool verify_cred(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                 const IssuerKeys& nym, const std::string& access, const Credential& cred) {
    check_access(nym, access);
    return sok_verify(oracle, authority, P, nym.crs, nym.x, access_bytes(access), cred);
}

RevocationNotice revoke(const IssuerKeys& nym, const IssuerSecret&, const std::string& access) {
    check_access(nym, access);
    return access;
}

RevocationProof prove_revocation(const IssuerKeys&, const RevocationNotice&, Credential cred) {
    // surrender of the credential itself
    return cred;
}

bool ver_revoke(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                const IssuerKeys& nym, const IssuerSecret&, const std::string& access,
                const RevocationNotice& revnotice, const RevocationProof& pi) {
    if (revnotice != access) return false;
    return verify_cred(oracle, authority, P, nym, access, pi);
}

Bytes encode(const SignatureOfKnowledge& sig) {
    Encoder body;
    body.raw(encode(sig.proof));
    Encoder e;
    e.tlv(Tag::Sok, body.out);
    return e.out;
}

SignatureOfKnowledge decode_sok(const GroupParams& P, Reader& r) {
    Bytes body = r.expect(Tag::Sok);
    Reader rr(body);
    SignatureOfKnowledge sig;
    sig.proof = decode_uproof_crs(P, rr);
    rr.expect_done();
    return sig;
}

} // namespace unizk
