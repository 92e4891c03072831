// Command-line front end: key/credential lifecycle demos, security-game
// runners, and artifact serialization. Exit codes: 0 accept/success,
// 1 reject, 2 usage or malformed input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "unizk/applications.hpp"
#include "unizk/artifact.hpp"
#include "unizk/codec.hpp"
#include "unizk/errors.hpp"
#include "unizk/games.hpp"

using namespace unizk;

namespace {

struct GlobalOpts {
    std::string profile = "fixture";
    uint64_t seed = 0;
    bool seed_set = false;
    size_t n_qubits = kDefaultNoteQubits;
    size_t k = 2;
    uint64_t trials = 1000;
    std::string out;
};

const GroupParams& params_for(const std::string& profile) {
    static const GroupParams fixture = GroupParams::fixture();
    if (profile == "fixture") return fixture;
    if (profile == "production") return GroupParams::production();
    throw CLI::ValidationError("--profile must be fixture or production");
}

uint64_t resolve_seed(const GlobalOpts& g) {
    if (g.seed_set) return g.seed;
    if (const char* env = std::getenv("UNIZK_SEED")) return std::strtoull(env, nullptr, 0);
    return Rng::from_entropy().seed();
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + g.out);
    f << text;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

Bytes profile_tlv(const std::string& profile) {
    Encoder e;
    e.tlv(Tag::GroupProfile, Bytes{uint8_t(profile == "production" ? 1 : 0)});
    return e.out;
}

std::string read_profile(Reader& r) {
    Bytes b = r.expect(Tag::GroupProfile);
    if (b.size() != 1 || b[0] > 1) throw MalformedArtifact("bad profile byte");
    return b[0] ? "production" : "fixture";
}

NoteDump dump_note(MoneyAuthority& authority, NoteHandle note, const SerialNumber& s) {
    NoteDump d;
    const auto& reg = authority.debug_registration(s);
    d.bases = reg.bases;
    d.bits = reg.bits;
    d.amps = authority.debug_amplitudes(note);
    return d;
}

// demo-mode reconstruction of a serialized note inside a fresh authority
NoteHandle restore_note(MoneyAuthority& authority, const SerialNumber& s, const NoteDump& dump) {
    MoneyAuthority::Registration reg{dump.bases, dump.bits};
    authority.debug_register(s, reg);
    return authority.debug_mint(dump.amps);
}

struct LoadedCrs {
    std::string profile;
    UCrs crs;
};

LoadedCrs load_crs(const std::string& path) {
    Artifact a = artifact_from_json(slurp(path));
    if (a.kind != "ucrs") throw MalformedArtifact("expected a ucrs artifact");
    Reader r(a.payload);
    LoadedCrs out;
    out.profile = read_profile(r);
    out.crs = decode_ucrs(params_for(out.profile), r);
    r.expect_done();
    return out;
}

struct LoadedIssuer {
    std::string profile;
    IssuerKeys nym;
    IssuerSecret sk;
};

LoadedIssuer load_issuer(const std::string& path) {
    Artifact a = artifact_from_json(slurp(path));
    if (a.kind != "issuer") throw MalformedArtifact("expected an issuer artifact");
    Reader r(a.payload);
    LoadedIssuer out;
    out.profile = read_profile(r);
    const GroupParams& P = params_for(out.profile);
    out.nym.crs = decode_ucrs(P, r);
    out.nym.x = decode_element(P, r);
    out.sk.w = decode_scalar(P, r);
    out.sk.td.inner.sk = decode_scalar(P, r);
    r.expect_done();
    return out;
}

int cmd_setup(const GlobalOpts& g) {
    const GroupParams& P = params_for(g.profile);
    Rng rng(resolve_seed(g));
    auto [crs, td] = u_setup(P, rng);
    (void)td;
    Encoder payload;
    payload.raw(profile_tlv(g.profile));
    payload.raw(encode(crs));
    Artifact a;
    a.kind = "ucrs";
    a.payload = payload.out;
    emit(g, artifact_to_json(a));
    return 0;
}

int cmd_prove(const GlobalOpts& g, const std::string& crs_path, const std::string& witness_dec) {
    LoadedCrs loaded = load_crs(crs_path);
    const GroupParams& P = params_for(loaded.profile);
    Scalar w = P.s_reduce(mpz_class(witness_dec, 10));
    GroupElement x = P.pow_g(w);
    Rng rng(resolve_seed(g));
    Oracle oracle(rng.child(0));
    MoneyAuthority authority(rng.child(1));
    Rng local = rng.child(2);
    UnclonableProofCrs proof = u_prove(oracle, authority, P, loaded.crs, x, w, local, g.n_qubits);

    Encoder payload;
    payload.raw(profile_tlv(loaded.profile));
    payload.raw(encode(x));
    payload.raw(encode(proof));
    Artifact a;
    a.kind = "proof-crs";
    a.payload = payload.out;
    a.note_dump = dump_note(authority, proof.note, proof.s);
    emit(g, artifact_to_json(a));
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& crs_path, const std::string& proof_path) {
    (void)g;
    LoadedCrs loaded = load_crs(crs_path);
    const GroupParams& P = params_for(loaded.profile);
    Artifact a = artifact_from_json(slurp(proof_path));
    if (a.kind != "proof-crs") throw MalformedArtifact("expected a proof-crs artifact");
    if (!a.note_dump) throw MalformedArtifact("proof artifact lacks the demo note dump");
    Reader r(a.payload);
    if (read_profile(r) != loaded.profile) throw MalformedArtifact("profile mismatch");
    GroupElement x = decode_element(P, r);
    UnclonableProofCrs proof = decode_uproof_crs(P, r);
    r.expect_done();

    Rng rng = Rng::from_entropy();
    Oracle oracle(rng.child(0));
    MoneyAuthority authority(rng.child(1));
    proof.note = restore_note(authority, proof.s, *a.note_dump);
    bool ok = false;
    try {
        ok = u_verify(oracle, authority, P, loaded.crs, x, proof);
    } catch (const UnknownSerial&) {
        ok = false;
    }
    std::cout << (ok ? "accept" : "reject") << "\n";
    return ok ? 0 : 1;
}

int cmd_sok_sign(const GlobalOpts& g, const std::string& crs_path, const std::string& witness_dec,
                 const std::string& message) {
    LoadedCrs loaded = load_crs(crs_path);
    const GroupParams& P = params_for(loaded.profile);
    Scalar w = P.s_reduce(mpz_class(witness_dec, 10));
    GroupElement x = P.pow_g(w);
    Rng rng(resolve_seed(g));
    Oracle oracle(rng.child(0));
    MoneyAuthority authority(rng.child(1));
    Rng local = rng.child(2);
    Bytes m(message.begin(), message.end());
    SignatureOfKnowledge sig = sok_sign(oracle, authority, P, loaded.crs, x, w, m, local, g.n_qubits);

    Encoder payload;
    payload.raw(profile_tlv(loaded.profile));
    payload.raw(encode(x));
    payload.raw(encode(sig));
    Artifact a;
    a.kind = "sok-signature";
    a.payload = payload.out;
    a.note_dump = dump_note(authority, sig.proof.note, sig.proof.s);
    emit(g, artifact_to_json(a));
    return 0;
}

int cmd_sok_verify(const std::string& crs_path, const std::string& sig_path,
                   const std::string& message) {
    LoadedCrs loaded = load_crs(crs_path);
    const GroupParams& P = params_for(loaded.profile);
    Artifact a = artifact_from_json(slurp(sig_path));
    if (a.kind != "sok-signature") throw MalformedArtifact("expected a sok-signature artifact");
    if (!a.note_dump) throw MalformedArtifact("signature artifact lacks the demo note dump");
    Reader r(a.payload);
    if (read_profile(r) != loaded.profile) throw MalformedArtifact("profile mismatch");
    GroupElement x = decode_element(P, r);
    SignatureOfKnowledge sig = decode_sok(P, r);
    r.expect_done();

    Rng rng = Rng::from_entropy();
    Oracle oracle(rng.child(0));
    MoneyAuthority authority(rng.child(1));
    sig.proof.note = restore_note(authority, sig.proof.s, *a.note_dump);
    Bytes m(message.begin(), message.end());
    bool ok = false;
    try {
        ok = sok_verify(oracle, authority, P, loaded.crs, x, m, sig);
    } catch (const UnknownSerial&) {
        ok = false;
    }
    std::cout << (ok ? "accept" : "reject") << "\n";
    return ok ? 0 : 1;
}

std::string issuer_json(const std::string& profile, const IssuerKeys& nym, const IssuerSecret& sk) {
    Encoder payload;
    payload.raw(profile_tlv(profile));
    payload.raw(encode(nym.crs));
    payload.raw(encode(nym.x));
    payload.raw(encode(sk.w));
    payload.raw(encode(sk.td.inner.sk));
    Artifact a;
    a.kind = "issuer";
    a.payload = payload.out;
    return artifact_to_json(a);
}

int cmd_cred_issue(const GlobalOpts& g, const std::string& issuer_path,
                   const std::string& issuer_out, const std::string& access) {
    Rng rng(resolve_seed(g));
    LoadedIssuer issuer;
    if (!issuer_path.empty()) {
        issuer = load_issuer(issuer_path);
    } else {
        issuer.profile = g.profile;
        Rng keys = rng.child(9);
        auto [nym, sk] = issuer_keygen(params_for(g.profile), keys);
        issuer.nym = nym;
        issuer.sk = sk;
    }
    const GroupParams& P = params_for(issuer.profile);
    if (!issuer_out.empty()) {
        std::ofstream f(issuer_out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + issuer_out);
        f << issuer_json(issuer.profile, issuer.nym, issuer.sk);
    }
    Oracle oracle(rng.child(0));
    MoneyAuthority authority(rng.child(1));
    Rng local = rng.child(2);
    Credential cred = issue(oracle, authority, P, issuer.nym, issuer.sk, access, local, g.n_qubits);

    Encoder payload;
    payload.raw(profile_tlv(issuer.profile));
    payload.raw(encode(issuer.nym.x));
    payload.raw(encode(cred));
    Artifact a;
    a.kind = "credential";
    a.payload = payload.out;
    a.note_dump = dump_note(authority, cred.proof.note, cred.proof.s);
    emit(g, artifact_to_json(a));
    return 0;
}

struct LoadedCred {
    std::string profile;
    GroupElement x;
    Credential cred;
    NoteDump dump;
};

LoadedCred load_cred(const std::string& path) {
    Artifact a = artifact_from_json(slurp(path));
    if (a.kind != "credential") throw MalformedArtifact("expected a credential artifact");
    if (!a.note_dump) throw MalformedArtifact("credential artifact lacks the demo note dump");
    LoadedCred out;
    Reader r(a.payload);
    out.profile = read_profile(r);
    const GroupParams& P = params_for(out.profile);
    out.x = decode_element(P, r);
    out.cred.proof = decode_sok(P, r).proof;
    r.expect_done();
    out.dump = *a.note_dump;
    return out;
}

int cmd_cred_verify(const std::string& issuer_path, const std::string& cred_path,
                    const std::string& access, bool as_revocation) {
    LoadedIssuer issuer = load_issuer(issuer_path);
    const GroupParams& P = params_for(issuer.profile);
    LoadedCred cred = load_cred(cred_path);
    if (cred.profile != issuer.profile) throw MalformedArtifact("profile mismatch");

    Rng rng = Rng::from_entropy();
    Oracle oracle(rng.child(0));
    MoneyAuthority authority(rng.child(1));
    cred.cred.proof.note = restore_note(authority, cred.cred.proof.s, cred.dump);
    bool ok = false;
    try {
        if (as_revocation) {
            RevocationNotice notice = revoke(issuer.nym, issuer.sk, access);
            ok = ver_revoke(oracle, authority, P, issuer.nym, issuer.sk, access, notice, cred.cred);
        } else {
            ok = verify_cred(oracle, authority, P, issuer.nym, access, cred.cred);
        }
    } catch (const UnknownSerial&) {
        ok = false;
    }
    std::cout << (ok ? "accept" : "reject") << "\n";
    return ok ? 0 : 1;
}

int cmd_game(const GlobalOpts& g, const std::string& which, const std::string& attack,
             const std::string& protocol, const std::string& adversary, size_t n) {
    const GroupParams& P = params_for(g.profile);
    uint64_t seed = resolve_seed(g);
    Protocol proto = protocol == "rom" ? Protocol::ROM : Protocol::CRS;
    AdversaryKind kind = AdversaryKind::ClassicalCopier;
    if (adversary == "honest-reprover") kind = AdversaryKind::HonestReprover;
    if (adversary == "null") kind = AdversaryKind::Null;

    GameReport report;
    if (which == "money") {
        MoneyAttack a = MoneyAttack::MeasureResend;
        if (attack == "fresh-forgery") a = MoneyAttack::FreshForgery;
        else if (attack == "identity") a = MoneyAttack::Identity;
        else if (attack != "measure-resend") throw CLI::ValidationError("unknown attack");
        report = run_money_unforgeability(a, n, g.trials, seed);
    } else if (which == "clone") {
        report = run_unclonable_game(P, proto, kind, g.k, g.trials, seed, g.n_qubits);
    } else if (which == "extract") {
        report = run_extraction_game(P, proto, kind, g.k, g.trials, seed, g.n_qubits);
    } else if (which == "sok") {
        report = run_sok_game(P, g.trials, seed, g.n_qubits);
    } else if (which == "revocation") {
        report = run_revocation_game(P, g.trials, seed, g.n_qubits);
    } else if (which == "cred-clone") {
        report = run_cred_clone_game(P, g.trials, seed, g.n_qubits);
    } else {
        throw CLI::ValidationError("unknown game");
    }
    std::string line = report.json_line() + "\n";
    emit(g, line);
    return 0;
}

int cmd_vectors(const GlobalOpts& g) {
    auto entries = build_fixture_vectors(resolve_seed(g));
    emit(g, vectors_json(entries));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unclonable zero-knowledge protocol toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--profile", g.profile, "group profile: fixture or production")
        ->check(CLI::IsMember({"fixture", "production"}));
    auto* seed_opt = app.add_option("--seed", g.seed, "master seed (default: UNIZK_SEED env or entropy)");
    app.add_option("--n-qubits", g.n_qubits, "qubits per banknote");
    app.add_option("--k", g.k, "clone-game parameter k");
    app.add_option("--trials", g.trials, "game trial count");
    app.add_option("--out", g.out, "output file (default: stdout)");

    auto* setup = app.add_subcommand("setup", "sample a common reference string");

    std::string crs_path, proof_path, witness, message, sig_path;
    auto* prove = app.add_subcommand("prove", "prove knowledge of a discrete log, minting a banknote");
    prove->add_option("--crs", crs_path, "crs artifact")->required();
    prove->add_option("--witness", witness, "witness scalar, decimal")->required();

    auto* verify = app.add_subcommand("verify", "verify an unclonable proof artifact");
    verify->add_option("--crs", crs_path, "crs artifact")->required();
    verify->add_option("--proof", proof_path, "proof artifact")->required();

    auto* sok = app.add_subcommand("sok", "signatures of knowledge");
    sok->require_subcommand(1);
    auto* sok_sign_cmd = sok->add_subcommand("sign", "sign a message");
    sok_sign_cmd->add_option("--crs", crs_path, "crs artifact")->required();
    sok_sign_cmd->add_option("--witness", witness, "witness scalar, decimal")->required();
    sok_sign_cmd->add_option("--message", message, "message to sign")->required();
    auto* sok_verify_cmd = sok->add_subcommand("verify", "verify a signature");
    sok_verify_cmd->add_option("--crs", crs_path, "crs artifact")->required();
    sok_verify_cmd->add_option("--sig", sig_path, "signature artifact")->required();
    sok_verify_cmd->add_option("--message", message, "signed message")->required();

    std::string issuer_path, issuer_out, cred_path, access = "default";
    auto* cred = app.add_subcommand("cred", "revocable anonymous credentials");
    cred->require_subcommand(1);
    auto* cred_issue = cred->add_subcommand("issue", "issue a credential (generates issuer keys unless --issuer)");
    cred_issue->add_option("--issuer", issuer_path, "existing issuer artifact");
    cred_issue->add_option("--issuer-out", issuer_out, "write issuer keys here");
    cred_issue->add_option("--access", access, "access identifier");
    auto* cred_verify = cred->add_subcommand("verify", "verify a credential");
    cred_verify->add_option("--issuer", issuer_path, "issuer artifact")->required();
    cred_verify->add_option("--cred", cred_path, "credential artifact")->required();
    cred_verify->add_option("--access", access, "access identifier");
    auto* cred_revoke = cred->add_subcommand("revoke", "emit a revocation notice");
    cred_revoke->add_option("--issuer", issuer_path, "issuer artifact")->required();
    cred_revoke->add_option("--access", access, "access identifier");
    auto* cred_prove = cred->add_subcommand("prove-revocation", "surrender a credential");
    cred_prove->add_option("--cred", cred_path, "credential artifact")->required();
    auto* cred_verrev = cred->add_subcommand("verify-revocation", "check a surrendered credential");
    cred_verrev->add_option("--issuer", issuer_path, "issuer artifact")->required();
    cred_verrev->add_option("--cred", cred_path, "surrendered credential artifact")->required();
    cred_verrev->add_option("--access", access, "access identifier");

    std::string game_name, attack = "measure-resend", protocol = "crs", adversary = "classical-copier";
    size_t game_n = 8;
    auto* game = app.add_subcommand("game", "run a security game and emit a JSON report line");
    game->add_option("name", game_name, "money|clone|extract|sok|revocation|cred-clone")->required();
    game->add_option("--attack", attack, "money game attack");
    game->add_option("--protocol", protocol, "crs or rom")->check(CLI::IsMember({"crs", "rom"}));
    game->add_option("--adversary", adversary, "classical-copier|honest-reprover|null");
    game->add_option("--n", game_n, "qubits per note in the money game");

    auto* vectors = app.add_subcommand("vectors", "emit fixture test vectors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }
    g.seed_set = seed_opt->count() > 0;

    try {
        if (setup->parsed()) return cmd_setup(g);
        if (prove->parsed()) return cmd_prove(g, crs_path, witness);
        if (verify->parsed()) return cmd_verify(g, crs_path, proof_path);
        if (sok->parsed()) {
            if (sok_sign_cmd->parsed()) return cmd_sok_sign(g, crs_path, witness, message);
            if (sok_verify_cmd->parsed()) return cmd_sok_verify(crs_path, sig_path, message);
        }
        if (cred->parsed()) {
            if (cred_issue->parsed()) return cmd_cred_issue(g, issuer_path, issuer_out, access);
            if (cred_verify->parsed()) return cmd_cred_verify(issuer_path, cred_path, access, false);
            if (cred_revoke->parsed()) {
                LoadedIssuer issuer = load_issuer(issuer_path);
                RevocationNotice notice = revoke(issuer.nym, issuer.sk, access);
                std::cout << "{\"revnotice\":\"" << notice << "\"}\n";
                return 0;
            }
            if (cred_prove->parsed()) {
                // surrender: the revocation proof is the credential artifact itself
                emit(g, slurp(cred_path));
                return 0;
            }
            if (cred_verrev->parsed()) return cmd_cred_verify(issuer_path, cred_path, access, true);
        }
        if (game->parsed()) return cmd_game(g, game_name, attack, protocol, adversary, game_n);
        if (vectors->parsed()) return cmd_vectors(g);
    } catch (const VersionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedArtifact& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
