#include "unizk/games.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "unizk/errors.hpp"

namespace unizk {

void GameReport::finalize() {
    rate = trials ? double(successes) / double(trials) : 0.0;
    if (bound && *bound > 0.0 && *bound < 1.0 && trials > 0) {
        double mean = double(trials) * *bound;
        double sd = std::sqrt(double(trials) * *bound * (1.0 - *bound));
        z = (double(successes) - mean) / sd;
    } else {
        z = 0.0;
    }
}

std::string GameReport::json_line() const {
    std::ostringstream os;
    os.precision(12);
    os << "{\"game\":\"" << game << "\",\"params\":" << (params.empty() ? "{}" : params)
       << ",\"trials\":" << trials << ",\"successes\":" << successes << ",\"rate\":" << rate;
    if (bound) os << ",\"bound\":" << *bound << ",\"z\":" << z;
    os << ",\"collisions\":" << collisions << ",\"errors\":" << errors << "}";
    return os.str();
}

std::pair<GroupElement, Scalar> HardDistribution::sample(Rng& rng) const {
    Scalar w = P->random_scalar(rng);
    return {P->pow_g(w), w};
}

HardSampler HardDistribution::sampler() const {
    const GroupParams* params = P;
    return [params](Rng& rng) { return HardDistribution{params}.sample(rng); };
}

Scalar fixture_dlog_bruteforce(const GroupParams& P, const GroupElement& x) {
    if (P.q > 1 << 20) throw std::invalid_argument("brute-force dlog is fixture-scale only");
    GroupElement acc(1);
    for (mpz_class e = 0; e < P.q; e++) {
        if (acc == x) return Scalar(e);
        acc = P.mul(acc, P.g);
    }
    throw std::invalid_argument("element outside the subgroup");
}

const char* to_string(Protocol p) { return p == Protocol::CRS ? "crs" : "rom"; }

const char* to_string(AdversaryKind k) {
    switch (k) {
        case AdversaryKind::ClassicalCopier: return "classical-copier";
        case AdversaryKind::HonestReprover: return "honest-reprover";
        default: return "null";
    }
}

const char* to_string(MoneyAttack a) {
    switch (a) {
        case MoneyAttack::MeasureResend: return "measure-resend";
        case MoneyAttack::FreshForgery: return "fresh-forgery";
        default: return "identity";
    }
}

// ---- money game -----------------------------------------------------------

double measure_resend_both_pass_rate(size_t n) {
    // per qubit: measure in Z, prepare two copies of the outcome, verify each
    // in the registered basis against the registered bit
    double per_qubit = 0.0;
    for (Basis basis : {Basis::Z, Basis::X}) {
        for (int bit : {0, 1}) {
            Qubit original = prepare(basis, bit);
            double both = 0.0;
            for (int outcome : {0, 1}) {
                double p = born_probability(original, Basis::Z, outcome);
                double pass = born_probability(prepare(Basis::Z, outcome), basis, bit);
                both += p * pass * pass;
            }
            per_qubit += both / 4.0;
        }
    }
    return std::pow(per_qubit, double(n));
}

double fresh_forgery_both_pass_rate(size_t n) {
    // the untouched original passes with probability 1; the forged qubit is a
    // fresh uniform Wiesner state
    double per_qubit = 0.0;
    for (Basis basis : {Basis::Z, Basis::X}) {
        for (int bit : {0, 1}) {
            double forged_pass = 0.0;
            for (Basis fb : {Basis::Z, Basis::X})
                for (int fbit : {0, 1})
                    forged_pass += born_probability(prepare(fb, fbit), basis, bit) / 4.0;
            per_qubit += forged_pass / 4.0;
        }
    }
    return std::pow(per_qubit, double(n));
}

GameReport run_money_unforgeability(MoneyAttack attack, size_t n, uint64_t trials, uint64_t seed) {
    GameReport report;
    report.game = "money-unforgeability";
    {
        std::ostringstream os;
        os << "{\"attack\":\"" << to_string(attack) << "\",\"n\":" << n << ",\"seed\":" << seed << "}";
        report.params = os.str();
    }
    report.trials = trials;
    for (uint64_t t = 0; t < trials; t++) {
        Rng rng(seed, t);
        MoneyAuthority authority(rng.child(0));
        auto [note, s] = authority.note_gen(n);
        NoteHandle a, b;
        switch (attack) {
            case MoneyAttack::MeasureResend: std::tie(a, b) = authority.attack_measure_resend(note); break;
            case MoneyAttack::FreshForgery: std::tie(a, b) = authority.attack_fresh_forgery(note); break;
            case MoneyAttack::Identity: a = b = note; break;
        }
        // two claimed banknotes must be distinct notes; presenting the same
        // handle twice is a double spend and never counts
        if (a.id == b.id) continue;
        if (authority.ver(a, s) && authority.ver(b, s)) report.successes++;
    }
    switch (attack) {
        case MoneyAttack::MeasureResend: report.bound = measure_resend_both_pass_rate(n); break;
        case MoneyAttack::FreshForgery: report.bound = fresh_forgery_both_pass_rate(n); break;
        case MoneyAttack::Identity: report.bound = 0.0; break;
    }
    report.finalize();
    return report;
}

// ---- built-in adversaries -------------------------------------------------

namespace {

class CopierCrs final : public CrsCloneAdversary {
public:
    std::vector<CloneClaim> run(Oracle&, MoneyAuthority& authority, const GroupParams&,
                                const UCrs&, std::vector<CloneClaim> given) override {
        if (given.empty()) throw AdversaryMalformed("copier needs at least one input proof");
        auto [a, b] = authority.attack_measure_resend(given[0].proof.note);
        std::vector<CloneClaim> claims;
        CloneClaim first = given[0];
        first.proof.note = a;
        CloneClaim second = given[0];
        second.proof.note = b;
        claims.push_back(std::move(first));
        claims.push_back(std::move(second));
        for (size_t i = 1; i < given.size(); i++) claims.push_back(given[i]);
        return claims;
    }
};

class ReproverCrs final : public CrsCloneAdversary {
public:
    ReproverCrs(GroupElement x, Scalar w, uint64_t seed) : x_(x), w_(w), rng_(seed) {}

    std::vector<CloneClaim> run(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                                const UCrs& crs, std::vector<CloneClaim> given) override {
        size_t n = given.empty() ? kDefaultNoteQubits : authority.note_size(given[0].proof.note);
        std::vector<CloneClaim> claims = given;
        claims.push_back(CloneClaim{x_, u_prove(oracle, authority, P, crs, x_, w_, rng_, n)});
        return claims;
    }

private:
    GroupElement x_;
    Scalar w_;
    Rng rng_;
};

class NullCrs final : public CrsCloneAdversary {
public:
    explicit NullCrs(uint64_t seed) : rng_(seed) {}

    std::vector<CloneClaim> run(Oracle&, MoneyAuthority&, const GroupParams&, const UCrs&,
                                std::vector<CloneClaim> given) override {
        std::vector<CloneClaim> claims = given;
        claims.push_back(given.empty() ? CloneClaim{} : given[0]);
        for (auto& claim : claims) {
            rng_.fill(claim.proof.s.data(), claim.proof.s.size());  // unregistered serials
            claim.proof.note = NoteHandle{0};
        }
        return claims;
    }

private:
    Rng rng_;
};

class CopierRom final : public RomCloneAdversary {
public:
    std::vector<RomClaim> run(Oracle&, MoneyAuthority& authority, const GroupParams&,
                              std::vector<RomClaim> given) override {
        if (given.empty()) throw AdversaryMalformed("copier needs at least one input proof");
        auto [a, b] = authority.attack_measure_resend(given[0].proof.note);
        std::vector<RomClaim> claims;
        RomClaim first = given[0];
        first.proof.note = a;
        RomClaim second = given[0];
        second.proof.note = b;
        claims.push_back(std::move(first));
        claims.push_back(std::move(second));
        for (size_t i = 1; i < given.size(); i++) claims.push_back(given[i]);
        return claims;
    }
};

class ReproverRom final : public RomCloneAdversary {
public:
    ReproverRom(GroupElement x, Scalar w, uint64_t seed) : x_(x), w_(w), seed_(seed) {}

    std::vector<RomClaim> run(Oracle& oracle, MoneyAuthority& authority, const GroupParams& P,
                              std::vector<RomClaim> given) override {
        size_t n = given.empty() ? kDefaultNoteQubits : authority.note_size(given[0].proof.note);
        Rng rng(seed_);  // reseeded per run so forked replays agree
        std::vector<RomClaim> claims = given;
        claims.push_back(RomClaim{x_, rom_prove(oracle, authority, P, x_, w_, rng, n)});
        return claims;
    }

private:
    GroupElement x_;
    Scalar w_;
    uint64_t seed_;
};

class NullRom final : public RomCloneAdversary {
public:
    explicit NullRom(uint64_t seed) : rng_(seed) {}

    std::vector<RomClaim> run(Oracle&, MoneyAuthority&, const GroupParams&,
                              std::vector<RomClaim> given) override {
        std::vector<RomClaim> claims = given;
        claims.push_back(given.empty() ? RomClaim{} : given[0]);
        for (auto& claim : claims) {
            rng_.fill(claim.proof.s.data(), claim.proof.s.size());
            claim.proof.note = NoteHandle{0};
        }
        return claims;
    }

private:
    Rng rng_;
};

} // namespace

std::unique_ptr<CrsCloneAdversary> make_crs_adversary(AdversaryKind kind, const GroupElement& x,
                                                      const Scalar& w, uint64_t seed) {
    switch (kind) {
        case AdversaryKind::ClassicalCopier: return std::make_unique<CopierCrs>();
        case AdversaryKind::HonestReprover: return std::make_unique<ReproverCrs>(x, w, seed);
        default: return std::make_unique<NullCrs>(seed);
    }
}

std::unique_ptr<RomCloneAdversary> make_rom_adversary(AdversaryKind kind, const GroupElement& x,
                                                      const Scalar& w, uint64_t seed) {
    switch (kind) {
        case AdversaryKind::ClassicalCopier: return std::make_unique<CopierRom>();
        case AdversaryKind::HonestReprover: return std::make_unique<ReproverRom>(x, w, seed);
        default: return std::make_unique<NullRom>(seed);
    }
}

bool clone_predicate(size_t accepted_on_x, size_t inputs_on_x) {
    return accepted_on_x > inputs_on_x;
}

bool clone_predicate_exhaustive(const std::vector<bool>& claim_on_x,
                                const std::vector<bool>& claim_accepts, size_t inputs_on_x) {
    size_t k = claim_on_x.size();
    for (uint64_t mask = 0; mask < (uint64_t(1) << k); mask++) {
        size_t size = 0;
        bool ok = true;
        for (size_t j = 0; j < k && ok; j++) {
            if (!(mask & (uint64_t(1) << j))) continue;
            if (!claim_on_x[j] || !claim_accepts[j]) ok = false;
            size++;
        }
        if (ok && size > inputs_on_x) return true;
    }
    return false;
}

// ---- clone games ------------------------------------------------------------

static std::string game_params(Protocol proto, AdversaryKind kind, size_t k, uint64_t seed,
                               size_t n_qubits) {
    std::ostringstream os;
    os << "{\"protocol\":\"" << to_string(proto) << "\",\"adversary\":\"" << to_string(kind)
       << "\",\"k\":" << k << ",\"n\":" << n_qubits << ",\"seed\":" << seed << "}";
    return os.str();
}

// count accepting claims on the target instance; claims presenting the same
// note handle twice count once (double-spend detection)
template <typename Claim, typename VerifyFn, typename XofFn>
static size_t accepted_claims_on_x(const std::vector<Claim>& claims, const GroupElement& x,
                                   const VerifyFn& verify, const XofFn& x_of, uint64_t* errors) {
    size_t accepted = 0;
    std::set<uint64_t> spent;
    for (const auto& claim : claims) {
        if (!(x_of(claim) == x)) continue;
        uint64_t id = claim.proof.note.id;
        if (spent.count(id)) continue;
        bool ok = false;
        try {
            ok = verify(claim);
        } catch (const UnknownSerial&) {
            if (errors) (*errors)++;
        } catch (const MalformedArtifact&) {
            if (errors) (*errors)++;
        }
        if (ok) {
            spent.insert(id);
            accepted++;
        }
    }
    return accepted;
}

GameReport run_unclonable_game(const GroupParams& P, Protocol proto, AdversaryKind kind, size_t k,
                               uint64_t trials, uint64_t seed, size_t n_qubits) {
    if (k < 2) throw std::invalid_argument("k >= 2 required");
    GameReport report;
    report.game = "unclonable";
    report.params = game_params(proto, kind, k, seed, n_qubits);
    report.trials = trials;
    HardDistribution dist{&P};

    for (uint64_t t = 0; t < trials; t++) {
        Rng rng(seed, t);
        Oracle oracle(rng.child(0));
        MoneyAuthority authority(rng.child(1));
        Rng local = rng.child(2);
        auto [x, w] = dist.sample(local);

        bool success = false;
        try {
            if (proto == Protocol::CRS) {
                auto [crs, td] = u_setup(P, local);
                (void)td;
                std::vector<CloneClaim> given;
                for (size_t i = 0; i + 1 < k; i++)
                    given.push_back(CloneClaim{x, u_prove(oracle, authority, P, crs, x, w, local, n_qubits)});
                auto adversary = make_crs_adversary(kind, x, w, rng.child(3).seed());
                auto claims = adversary->run(oracle, authority, P, crs, std::move(given));
                if (claims.size() != k) throw AdversaryMalformed("wrong claim arity");
                size_t accepted = accepted_claims_on_x(
                    claims, x,
                    [&](const CloneClaim& cl) { return u_verify(oracle, authority, P, crs, cl.x, cl.proof); },
                    [](const CloneClaim& cl) { return cl.x; }, &report.errors);
                success = clone_predicate(accepted, k - 1);
            } else {
                std::vector<RomClaim> given;
                for (size_t i = 0; i + 1 < k; i++)
                    given.push_back(RomClaim{x, rom_prove(oracle, authority, P, x, w, local, n_qubits)});
                auto adversary = make_rom_adversary(kind, x, w, rng.child(3).seed());
                auto claims = adversary->run(oracle, authority, P, std::move(given));
                if (claims.size() != k) throw AdversaryMalformed("wrong claim arity");
                size_t accepted = accepted_claims_on_x(
                    claims, x,
                    [&](const RomClaim& cl) { return rom_verify(oracle, authority, P, cl.x, cl.proof); },
                    [](const RomClaim& cl) { return cl.x; }, &report.errors);
                success = clone_predicate(accepted, k - 1);
            }
        } catch (const AdversaryMalformed&) {
            report.errors++;
        }
        if (success) report.successes++;
    }
    if (kind == AdversaryKind::ClassicalCopier) report.bound = measure_resend_both_pass_rate(n_qubits);
    report.finalize();
    return report;
}

// ROM simulation that tolerates digest replay during forked reruns: if the
// point was already fixed to the very digest this deterministic rerun would
// program, skip programming; any other collision is a real one.
static UnclonableProofRom rom_sim_replay(Oracle& oracle, MoneyAuthority& authority,
                                         const GroupParams& P, const GroupElement& x, Rng& rng,
                                         size_t n_qubits, uint64_t* collisions) {
    auto [note, s] = authority.note_gen(n_qubits);
    Digest d;
    rng.fill(d.data(), d.size());
    Scalar beta = beta_from_digest(P, d);
    auto [alpha, gamma] = simulate(P, stmt_dlog(x), beta, rng);
    try {
        oracle.program(rom_point(x, alpha, s), d);
    } catch (const AlreadyDefined&) {
        Digest existing = oracle.query(rom_point(x, alpha, s));
        if (existing != d) {
            if (collisions) (*collisions)++;
            throw;
        }
    }
    return UnclonableProofRom{note, s, std::move(alpha), beta, std::move(gamma)};
}

GameReport run_extraction_game(const GroupParams& P, Protocol proto, AdversaryKind kind, size_t k,
                               uint64_t trials, uint64_t seed, size_t n_qubits) {
    if (k < 2) throw std::invalid_argument("k >= 2 required");
    GameReport report;
    report.game = "extraction";
    report.params = game_params(proto, kind, k, seed, n_qubits);
    report.trials = trials;
    HardDistribution dist{&P};
    bool fixture_scale = P.q < (1 << 20);

    for (uint64_t t = 0; t < trials; t++) {
        Rng rng(seed, t);
        Rng local = rng.child(0);
        auto [x, w] = dist.sample(local);
        std::vector<GroupElement> xs(k - 1, x);

        try {
            Scalar extracted;
            if (proto == Protocol::CRS) {
                auto adversary = make_crs_adversary(kind, x, w, rng.child(1).seed());
                Rng erng = rng.child(2);
                extracted = clone_extractor_E(P, *adversary, xs, x, erng, n_qubits);
            } else {
                // E in the ROM: simulate the k-1 input proofs, pick a claim
                // uniformly, fork the whole interaction at its oracle query
                uint64_t adv_seed = rng.child(1).seed();
                Rng erng = rng.child(2);
                size_t j = size_t(erng.below(mpz_class(uint64_t(k))).get_ui());
                uint64_t sim_seed = erng.u64();
                GroupElement target = x;
                Scalar witness = w;
                std::vector<GroupElement> inputs = xs;
                RomProver prover = [&, adv_seed, sim_seed, j, witness](
                                       Oracle& oracle, MoneyAuthority& authority) -> RomRun {
                    Rng sims(sim_seed);
                    std::vector<RomClaim> given;
                    for (const auto& xi : inputs)
                        given.push_back(RomClaim{
                            xi, rom_sim_replay(oracle, authority, P, xi, sims, n_qubits, nullptr)});
                    auto adversary = make_rom_adversary(kind, target, witness, adv_seed);
                    auto claims = adversary->run(oracle, authority, P, std::move(given));
                    if (claims.size() != k) throw AdversaryMalformed("wrong claim arity");
                    if (!(claims[j].x == target)) throw ExtractionFailed("chosen claim off-target");
                    return RomRun{claims[j].x, claims[j].proof};
                };
                SigmaWitness ext = rom_extract(P, prover, erng);
                extracted = ext.scalars.at(0);
            }
            bool ok = P.pow_g(extracted) == x;
            if (ok && fixture_scale) ok = extracted == fixture_dlog_bruteforce(P, x);
            if (ok) report.successes++;
        } catch (const ExtractionFailed&) {
        } catch (const AdversaryMalformed&) {
            report.errors++;
        }
    }
    report.finalize();
    return report;
}

GameReport run_amplified_extraction_game(const GroupParams& P, AdversaryKind kind, size_t k,
                                         int budget, uint64_t trials, uint64_t seed,
                                         size_t n_qubits) {
    GameReport report;
    report.game = "amplified-extraction";
    {
        std::ostringstream os;
        os << "{\"adversary\":\"" << to_string(kind) << "\",\"k\":" << k << ",\"budget\":" << budget
           << ",\"n\":" << n_qubits << ",\"seed\":" << seed << "}";
        report.params = os.str();
    }
    report.trials = trials;
    HardDistribution dist{&P};

    for (uint64_t t = 0; t < trials; t++) {
        Rng rng(seed, t);
        Rng local = rng.child(0);
        auto [x, w] = dist.sample(local);
        std::vector<GroupElement> xs(k - 1, x);
        uint64_t adv_seed = rng.child(1).seed();
        CrsAdversaryFactory factory = [&, adv_seed]() {
            // fresh copy of the adversary advice per attempt
            return make_crs_adversary(kind, x, w, adv_seed);
        };
        Rng erng = rng.child(2);
        try {
            Scalar extracted = amplify_extractor(P, factory, xs, x, budget, erng, n_qubits);
            if (P.pow_g(extracted) == x) report.successes++;
        } catch (const ExtractionFailed&) {
        }
    }
    report.finalize();
    return report;
}

GameReport run_cloning_game_def41(const GroupParams& P, Protocol proto, AdversaryKind kind,
                                  uint64_t trials, uint64_t seed, size_t n_qubits) {
    GameReport report;
    report.game = "cloning-pairwise";
    report.params = game_params(proto, kind, 2, seed, n_qubits);
    report.trials = trials;
    HardDistribution dist{&P};

    for (uint64_t t = 0; t < trials; t++) {
        Rng rng(seed, t);
        Oracle oracle(rng.child(0));
        MoneyAuthority authority(rng.child(1));
        Rng local = rng.child(2);
        auto [x, w] = dist.sample(local);

        bool success = false;
        try {
            if (proto == Protocol::CRS) {
                auto [crs, td] = u_setup(P, local);
                (void)td;
                std::vector<CloneClaim> given{
                    CloneClaim{x, u_prove(oracle, authority, P, crs, x, w, local, n_qubits)}};
                auto adversary = make_crs_adversary(kind, x, w, rng.child(3).seed());
                auto claims = adversary->run(oracle, authority, P, crs, std::move(given));
                if (claims.size() < 2) throw AdversaryMalformed("need two claims");
                size_t accepted = accepted_claims_on_x(
                    std::vector<CloneClaim>{claims[0], claims[1]}, x,
                    [&](const CloneClaim& cl) { return u_verify(oracle, authority, P, crs, cl.x, cl.proof); },
                    [](const CloneClaim& cl) { return cl.x; }, &report.errors);
                success = accepted >= 2;
            } else {
                std::vector<RomClaim> given{
                    RomClaim{x, rom_prove(oracle, authority, P, x, w, local, n_qubits)}};
                auto adversary = make_rom_adversary(kind, x, w, rng.child(3).seed());
                auto claims = adversary->run(oracle, authority, P, std::move(given));
                if (claims.size() < 2) throw AdversaryMalformed("need two claims");
                size_t accepted = accepted_claims_on_x(
                    std::vector<RomClaim>{claims[0], claims[1]}, x,
                    [&](const RomClaim& cl) { return rom_verify(oracle, authority, P, cl.x, cl.proof); },
                    [](const RomClaim& cl) { return cl.x; }, &report.errors);
                success = accepted >= 2;
            }
        } catch (const AdversaryMalformed&) {
            report.errors++;
        }
        if (success) report.successes++;
    }
    if (kind == AdversaryKind::ClassicalCopier) report.bound = measure_resend_both_pass_rate(n_qubits);
    report.finalize();
    return report;
}

GameReport run_simext_game(const GroupParams& P, uint64_t trials, uint64_t seed, size_t sim_queries) {
    GameReport report;
    report.game = "simulation-extraction";
    {
        std::ostringstream os;
        os << "{\"sim_queries\":" << sim_queries << ",\"seed\":" << seed << "}";
        report.params = os.str();
    }
    report.trials = trials;
    HardDistribution dist{&P};
    bool fixture_scale = P.q < (1 << 20);

    for (uint64_t t = 0; t < trials; t++) {
        Rng rng(seed, t);
        Oracle oracle(rng.child(0));
        Rng local = rng.child(1);
        auto [crs, td] = simext_setup(P, local);

        // adversary with Sim_1 oracle: queries sim_queries instances
        std::set<mpz_class> queried;
        for (size_t i = 0; i < sim_queries; i++) {
            auto [xq, wq] = dist.sample(local);
            (void)wq;
            try {
                simext_sim(oracle, P, crs, td, xq, local);
            } catch (const AlreadyDefined&) {
                report.collisions++;
            }
            queried.insert(xq.v);
        }
        // fresh instance outside Q, proven honestly by the adversary
        GroupElement x;
        Scalar w;
        do {
            std::tie(x, w) = dist.sample(local);
        } while (queried.count(x.v));
        SimExtProof proof = simext_prove(oracle, P, crs, x, w, local);

        if (!simext_verify(oracle, P, crs, x, proof)) continue;
        try {
            Scalar extracted = simext_ext(P, crs, td, x, proof);
            bool ok = P.pow_g(extracted) == x;
            if (ok && fixture_scale) ok = extracted == fixture_dlog_bruteforce(P, x);
            if (ok) report.successes++;
        } catch (const DecodeError&) {
            report.errors++;
        }
    }
    report.finalize();
    return report;
}

GameReport run_sok_game(const GroupParams& P, uint64_t trials, uint64_t seed, size_t n_qubits) {
    GameReport report;
    report.game = "sok-extraction";
    {
        std::ostringstream os;
        os << "{\"k\":2,\"n\":" << n_qubits << ",\"seed\":" << seed << "}";
        report.params = os.str();
    }
    report.trials = trials;
    HardDistribution dist{&P};
    const Bytes message{'s', 'o', 'k', '-', 'g', 'a', 'm', 'e'};

    for (uint64_t t = 0; t < trials; t++) {
        Rng rng(seed, t);
        Oracle oracle(rng.child(0));
        MoneyAuthority authority(rng.child(1));
        Rng local = rng.child(2);
        auto [crs, td] = sok_setup(P, local);
        auto [x, w] = dist.sample(local);

        // one simulated signature in, two signatures out (the SoK analogue of
        // the honest reprover), extractor picks one uniformly
        SignatureOfKnowledge given = sok_sim(oracle, authority, P, crs, td, x, message, local, n_qubits);
        SignatureOfKnowledge fresh = sok_sign(oracle, authority, P, crs, x, w, message, local, n_qubits);
        const SignatureOfKnowledge& chosen = local.coin() ? fresh : given;
        try {
            Scalar extracted = sok_ext(P, crs, td, x, message, chosen);
            if (P.pow_g(extracted) == x) report.successes++;
        } catch (const DecodeError&) {
            report.errors++;
        }
    }
    report.finalize();
    return report;
}

GameReport run_revocation_game(const GroupParams& P, uint64_t trials, uint64_t seed, size_t n_qubits) {
    GameReport report;
    report.game = "revocation";
    {
        std::ostringstream os;
        os << "{\"n\":" << n_qubits << ",\"seed\":" << seed << "}";
        report.params = os.str();
    }
    report.trials = trials;
    const std::string access = "game-access";

    for (uint64_t t = 0; t < trials; t++) {
        Rng rng(seed, t);
        Oracle oracle(rng.child(0));
        MoneyAuthority authority(rng.child(1));
        Rng local = rng.child(2);
        auto [nym, sk] = issuer_keygen(P, local);
        Credential cred = issue(oracle, authority, P, nym, sk, access, local, n_qubits);
        RevocationNotice notice = revoke(nym, sk, access);

        // surrender-and-copy adversary: measure-resend the note, surrender one
        // copy as the revocation proof, keep presenting the other
        auto [a, b] = authority.attack_measure_resend(cred.proof.note);
        Credential surrendered = cred;
        surrendered.proof.note = a;
        Credential kept = cred;
        kept.proof.note = b;
        if (a.id == b.id) continue;

        RevocationProof pi = prove_revocation(nym, notice, surrendered);
        bool success = ver_revoke(oracle, authority, P, nym, sk, access, notice, pi) &&
                       verify_cred(oracle, authority, P, nym, access, kept);
        if (success) report.successes++;
    }
    report.bound = measure_resend_both_pass_rate(n_qubits);
    report.finalize();
    return report;
}

GameReport run_cred_clone_game(const GroupParams& P, uint64_t trials, uint64_t seed, size_t n_qubits) {
    GameReport report;
    report.game = "credential-clone";
    {
        std::ostringstream os;
        os << "{\"n\":" << n_qubits << ",\"seed\":" << seed << "}";
        report.params = os.str();
    }
    report.trials = trials;
    const std::string access = "game-access";

    for (uint64_t t = 0; t < trials; t++) {
        Rng rng(seed, t);
        Oracle oracle(rng.child(0));
        MoneyAuthority authority(rng.child(1));
        Rng local = rng.child(2);
        auto [nym, sk] = issuer_keygen(P, local);
        Credential cred = issue(oracle, authority, P, nym, sk, access, local, n_qubits);

        auto [a, b] = authority.attack_measure_resend(cred.proof.note);
        Credential cred0 = cred;
        cred0.proof.note = a;
        Credential cred1 = cred;
        cred1.proof.note = b;
        if (a.id == b.id) continue;

        bool success = verify_cred(oracle, authority, P, nym, access, cred0) &&
                       verify_cred(oracle, authority, P, nym, access, cred1);
        if (success) report.successes++;
    }
    report.bound = measure_resend_both_pass_rate(n_qubits);
    report.finalize();
    return report;
}

} // namespace unizk
