#include "unizk/codec.hpp"

#include <sstream>

#include "unizk/applications.hpp"
#include "unizk/games.hpp"

namespace unizk {

std::vector<VectorEntry> build_fixture_vectors(uint64_t seed) {
    const GroupParams P = GroupParams::fixture();
    Rng rng(seed);
    Oracle oracle(rng.child(0));
    MoneyAuthority authority(rng.child(1));
    Rng local = rng.child(2);

    std::vector<VectorEntry> out;

    Scalar m = P.random_scalar(local);
    Scalar r = P.random_scalar(local);
    out.push_back({"commitment", encode(commit(P, m, r))});

    KeyPair kp = pke_keygen(P, local);
    out.push_back({"public-key", encode(kp.pk)});

    out.push_back({"bit-ciphertext", encode(enc_bit(P, kp.pk, 1, P.random_scalar(local)))});

    Scalar w = P.random_scalar(local);
    auto [wct, rnd] = enc_witness(P, kp.pk, w, local);
    (void)rnd;
    out.push_back({"witness-ciphertext", encode(wct)});

    GroupElement x = P.pow_g(w);
    auto [alpha, state] = commit_phase(P, stmt_dlog(x), wit_scalars({w}), local);
    Scalar beta = P.random_scalar(local);
    GammaNode gamma = respond(P, state, beta);
    out.push_back({"sigma-alpha", encode(alpha)});
    out.push_back({"sigma-gamma", encode(gamma)});

    auto [secrs, setd] = simext_setup(P, local);
    (void)setd;
    SimExtProof sep = simext_prove(oracle, P, secrs, x, w, local);
    out.push_back({"simext-proof", encode(sep)});

    auto [ucrs, utd] = u_setup(P, local);
    (void)utd;
    out.push_back({"ucrs", encode(ucrs)});
    UnclonableProofCrs up = u_prove(oracle, authority, P, ucrs, x, w, local, 8);
    out.push_back({"uproof-crs", encode(up)});

    UnclonableProofRom rp = rom_prove(oracle, authority, P, x, w, local, 8);
    out.push_back({"uproof-rom", encode(rp)});

    Bytes msg{'v', 'e', 'c', 't', 'o', 'r'};
    SignatureOfKnowledge sig = sok_sign(oracle, authority, P, ucrs, x, w, msg, local, 8);
    out.push_back({"sok-signature", encode(sig)});

    return out;
}

Bytes encode_vectors(const std::vector<VectorEntry>& entries) {
    Encoder body;
    for (const auto& entry : entries) {
        body.tlv(Tag::Raw, Bytes(entry.name.begin(), entry.name.end()));
        body.tlv(Tag::Raw, entry.bytes);
    }
    Encoder e;
    e.tlv(Tag::Vectors, body.out);
    return e.out;
}

std::string vectors_json(const std::vector<VectorEntry>& entries) {
    std::ostringstream os;
    os << "{\n";
    for (size_t i = 0; i < entries.size(); i++) {
        os << "  \"" << entries[i].name << "\": \"" << to_hex(entries[i].bytes) << "\"";
        if (i + 1 < entries.size()) os << ",";
        os << "\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace unizk
