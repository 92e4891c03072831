#include "unizk/sigma.hpp"

#include <stdexcept>

#include "unizk/errors.hpp"

namespace unizk {

using Kind = SigmaStatement::Kind;

SigmaStatement stmt_dlog(const GroupElement& x) {
    SigmaStatement s;
    s.kind = Kind::Dlog;
    s.x = x;
    return s;
}

SigmaStatement stmt_commit_open(const Commitment& c, const Scalar& sv) {
    SigmaStatement s;
    s.kind = Kind::CommitOpen;
    s.c = c;
    s.s = sv;
    return s;
}

SigmaStatement stmt_linear_enc(const GroupElement& pk, const BitCiphertext& agg,
                               std::vector<Binding> bindings) {
    SigmaStatement s;
    s.kind = Kind::LinearEnc;
    s.pk = pk;
    s.agg = agg;
    s.bindings = std::move(bindings);
    return s;
}

SigmaStatement stmt_enc_bit(const GroupElement& pk, const BitCiphertext& ct, int bit) {
    SigmaStatement s;
    s.kind = Kind::EncBit;
    s.pk = pk;
    s.ct = ct;
    s.bit = bit;
    return s;
}

SigmaStatement stmt_bit_valid(const GroupElement& pk, const BitCiphertext& ct) {
    return stmt_or(stmt_enc_bit(pk, ct, 0), stmt_enc_bit(pk, ct, 1));
}

SigmaStatement stmt_and(std::vector<SigmaStatement> children) {
    SigmaStatement s;
    s.kind = Kind::And;
    s.children = std::move(children);
    return s;
}

SigmaStatement stmt_or(SigmaStatement left, SigmaStatement right) {
    SigmaStatement s;
    s.kind = Kind::Or;
    s.children.push_back(std::move(left));
    s.children.push_back(std::move(right));
    return s;
}

SigmaWitness wit_scalars(std::vector<Scalar> scalars) {
    SigmaWitness w;
    w.scalars = std::move(scalars);
    return w;
}

SigmaWitness wit_and(std::vector<SigmaWitness> children) {
    SigmaWitness w;
    w.children = std::move(children);
    return w;
}

SigmaWitness wit_or(int side, SigmaWitness real_branch) {
    SigmaWitness w;
    w.or_side = side;
    w.children.push_back(std::move(real_branch));
    return w;
}

static bool is_atom(Kind k) { return k != Kind::And && k != Kind::Or; }

struct Equation {
    GroupElement target;
    std::vector<std::pair<GroupElement, size_t>> lhs;  // target = prod base^{w[idx]}
};

static size_t atom_witness_count(const SigmaStatement& s) {
    switch (s.kind) {
        case Kind::Dlog: return 1;
        case Kind::CommitOpen: return 1;
        case Kind::LinearEnc: return 2;  // (U, z)
        case Kind::EncBit: return 1;
        default: throw std::logic_error("not an atom");
    }
}

static std::vector<Equation> atom_equations(const GroupParams& P, const SigmaStatement& s) {
    std::vector<Equation> eqs;
    switch (s.kind) {
        case Kind::Dlog:
            // x = g^w
            eqs.push_back({s.x, {{P.g, 0}}});
            break;
        case Kind::CommitOpen:
            // c1 = g^z  and  c2 * g^{-s} = h^z
            eqs.push_back({s.c.c1, {{P.g, 0}}});
            eqs.push_back({P.div(s.c.c2, P.pow_g(s.s)), {{P.h, 0}}});
            break;
        case Kind::LinearEnc:
            // C = (g^U, pk^U * g^z), plus target_j = base_j^z sharing z
            eqs.push_back({s.agg.a, {{P.g, 0}}});
            eqs.push_back({s.agg.b, {{s.pk, 0}, {P.g, 1}}});
            for (const auto& bind : s.bindings) eqs.push_back({bind.target, {{bind.base, 1}}});
            break;
        case Kind::EncBit:
            // a = g^u  and  b * g^{-bit} = pk^u
            eqs.push_back({s.ct.a, {{P.g, 0}}});
            eqs.push_back({s.bit ? P.div(s.ct.b, P.g) : s.ct.b, {{s.pk, 0}}});
            break;
        default:
            throw std::logic_error("not an atom");
    }
    return eqs;
}

static GroupElement eval_lhs(const GroupParams& P, const Equation& eq, const std::vector<Scalar>& w) {
    GroupElement acc(1);
    for (const auto& [base, idx] : eq.lhs) acc = P.mul(acc, P.pow(base, w[idx]));
    return acc;
}

bool relation_holds(const GroupParams& P, const SigmaStatement& stmt, const SigmaWitness& wit) {
    if (is_atom(stmt.kind)) {
        if (wit.scalars.size() != atom_witness_count(stmt)) return false;
        for (const auto& eq : atom_equations(P, stmt))
            if (eval_lhs(P, eq, wit.scalars) != eq.target) return false;
        return true;
    }
    if (stmt.kind == Kind::And) {
        if (wit.children.size() != stmt.children.size()) return false;
        for (size_t i = 0; i < stmt.children.size(); i++)
            if (!relation_holds(P, stmt.children[i], wit.children[i])) return false;
        return true;
    }
    // Or
    if (wit.or_side != 0 && wit.or_side != 1) return false;
    if (wit.children.size() != 1) return false;
    return relation_holds(P, stmt.children[wit.or_side], wit.children[0]);
}

// ---- simulate ----------------------------------------------------------

static std::pair<AlphaNode, GammaNode> simulate_node(const GroupParams& P, const SigmaStatement& stmt,
                                                     const Scalar& beta, const ScalarStream& next) {
    AlphaNode a;
    GammaNode g;
    if (is_atom(stmt.kind)) {
        size_t nw = atom_witness_count(stmt);
        for (size_t i = 0; i < nw; i++) g.resp.push_back(next());
        for (const auto& eq : atom_equations(P, stmt)) {
            // alpha = prod base^{gamma} * target^{-beta}
            GroupElement lhs = eval_lhs(P, eq, g.resp);
            a.commits.push_back(P.mul(lhs, P.pow(eq.target, P.s_neg(beta))));
        }
        return {a, g};
    }
    if (stmt.kind == Kind::And) {
        for (const auto& child : stmt.children) {
            auto [ca, cg] = simulate_node(P, child, beta, next);
            a.children.push_back(std::move(ca));
            g.children.push_back(std::move(cg));
        }
        return {a, g};
    }
    // Or: random additive split
    Scalar beta_left = next();
    Scalar beta_right = P.s_sub(beta, beta_left);
    auto [la, lg] = simulate_node(P, stmt.children[0], beta_left, next);
    auto [ra, rg] = simulate_node(P, stmt.children[1], beta_right, next);
    a.children.push_back(std::move(la));
    a.children.push_back(std::move(ra));
    g.children.push_back(std::move(lg));
    g.children.push_back(std::move(rg));
    g.beta_left = beta_left;
    return {a, g};
}

std::pair<Alpha, GammaNode> simulate_stream(const GroupParams& P, const SigmaStatement& stmt,
                                            const Scalar& beta, const ScalarStream& resp,
                                            const std::array<uint8_t, 16>& salt) {
    auto [a, g] = simulate_node(P, stmt, beta, resp);
    return {Alpha{std::move(a), salt}, std::move(g)};
}

std::pair<Alpha, GammaNode> simulate(const GroupParams& P, const SigmaStatement& stmt,
                                     const Scalar& beta, Rng& rng) {
    std::array<uint8_t, 16> salt;
    rng.fill(salt.data(), salt.size());
    ScalarStream next = [&P, &rng] { return P.random_scalar(rng); };
    return simulate_stream(P, stmt, beta, next, salt);
}

// ---- commit / respond --------------------------------------------------

std::pair<Alpha, ProverState> commit_phase_stream(const GroupParams& P, const SigmaStatement& stmt,
                                                  const SigmaWitness& wit, const ScalarStream& next,
                                                  const std::array<uint8_t, 16>& salt) {
    if (!relation_holds(P, stmt, wit)) throw WitnessMismatch("witness does not satisfy statement");
    ProverState st;
    st.stmt_ = stmt;

    // local recursive lambda over ProverState::Node
    using Node = decltype(st.root_);
    std::function<AlphaNode(const SigmaStatement&, const SigmaWitness&, Node&)> rec =
        [&](const SigmaStatement& s, const SigmaWitness& w, Node& node) -> AlphaNode {
        AlphaNode a;
        if (is_atom(s.kind)) {
            size_t nw = atom_witness_count(s);
            for (size_t i = 0; i < nw; i++) node.nonces.push_back(next());
            for (const auto& eq : atom_equations(P, s)) a.commits.push_back(eval_lhs(P, eq, node.nonces));
            return a;
        }
        if (s.kind == Kind::And) {
            node.children.resize(s.children.size());
            for (size_t i = 0; i < s.children.size(); i++)
                a.children.push_back(rec(s.children[i], w.children[i], node.children[i]));
            return a;
        }
        // Or: simulate the branch we lack a witness for under a pre-chosen
        // sub-challenge, run the real branch honestly
        int side = w.or_side;
        int sim_side = 1 - side;
        node.or_side = side;
        node.sim_beta = next();
        auto [sim_alpha, sim_gamma] = simulate_node(P, s.children[sim_side], node.sim_beta, next);
        node.sim_gamma = std::move(sim_gamma);
        node.children.resize(1);
        AlphaNode real_alpha = rec(s.children[side], w.children[0], node.children[0]);
        if (side == 0) {
            a.children.push_back(std::move(real_alpha));
            a.children.push_back(std::move(sim_alpha));
        } else {
            a.children.push_back(std::move(sim_alpha));
            a.children.push_back(std::move(real_alpha));
        }
        return a;
    };

    // wit is shape-checked by relation_holds above
    AlphaNode root = rec(stmt, wit, st.root_);
    st.wit_ = wit;

    return {Alpha{std::move(root), salt}, std::move(st)};
}

std::pair<Alpha, ProverState> commit_phase(const GroupParams& P, const SigmaStatement& stmt,
                                           const SigmaWitness& wit, Rng& rng) {
    std::array<uint8_t, 16> salt;
    rng.fill(salt.data(), salt.size());
    ScalarStream next = [&P, &rng] { return P.random_scalar(rng); };
    return commit_phase_stream(P, stmt, wit, next, salt);
}

GammaNode respond(const GroupParams& P, ProverState& state, const Scalar& beta) {
    if (state.used_) throw StateReuse("prover state already consumed");
    state.used_ = true;

    using Node = decltype(state.root_);
    std::function<GammaNode(const SigmaStatement&, const SigmaWitness&, const Node&, const Scalar&)> rec =
        [&](const SigmaStatement& s, const SigmaWitness& w, const Node& node, const Scalar& b) -> GammaNode {
        GammaNode g;
        if (is_atom(s.kind)) {
            for (size_t i = 0; i < node.nonces.size(); i++)
                g.resp.push_back(P.s_add(node.nonces[i], P.s_mul(b, w.scalars[i])));
            return g;
        }
        if (s.kind == Kind::And) {
            for (size_t i = 0; i < s.children.size(); i++)
                g.children.push_back(rec(s.children[i], w.children[i], node.children[i], b));
            return g;
        }
        // Or: the real branch answers beta - sim_beta
        int side = node.or_side;
        Scalar beta_real = P.s_sub(b, node.sim_beta);
        GammaNode real = rec(s.children[side], w.children[0], node.children[0], beta_real);
        if (side == 0) {
            g.beta_left = beta_real;
            g.children.push_back(std::move(real));
            g.children.push_back(node.sim_gamma);
        } else {
            g.beta_left = node.sim_beta;
            g.children.push_back(node.sim_gamma);
            g.children.push_back(std::move(real));
        }
        return g;
    };
    return rec(state.stmt_, state.wit_, state.root_, beta);
}

// ---- verify ------------------------------------------------------------

static bool verify_node(const GroupParams& P, const SigmaStatement& stmt, const AlphaNode& a,
                        const Scalar& beta, const GammaNode& g) {
    if (is_atom(stmt.kind)) {
        auto eqs = atom_equations(P, stmt);
        if (a.commits.size() != eqs.size()) return false;
        if (g.resp.size() != atom_witness_count(stmt)) return false;
        if (!a.children.empty() || !g.children.empty()) return false;
        for (size_t i = 0; i < eqs.size(); i++) {
            // prod base^{gamma} == alpha * target^{beta}
            GroupElement lhs = eval_lhs(P, eqs[i], g.resp);
            GroupElement rhs = P.mul(a.commits[i], P.pow(eqs[i].target, beta));
            if (lhs != rhs) return false;
        }
        return true;
    }
    if (a.children.size() != stmt.children.size() || g.children.size() != stmt.children.size())
        return false;
    if (!a.commits.empty() || !g.resp.empty()) return false;
    if (stmt.kind == Kind::And) {
        for (size_t i = 0; i < stmt.children.size(); i++)
            if (!verify_node(P, stmt.children[i], a.children[i], beta, g.children[i])) return false;
        return true;
    }
    // Or: split challenges must sum to beta
    Scalar beta_left = g.beta_left;
    if (beta_left.v < 0 || beta_left.v >= P.q) return false;
    Scalar beta_right = P.s_sub(beta, beta_left);
    return verify_node(P, stmt.children[0], a.children[0], beta_left, g.children[0]) &&
           verify_node(P, stmt.children[1], a.children[1], beta_right, g.children[1]);
}

bool sigma_verify(const GroupParams& P, const SigmaStatement& stmt, const SigmaTranscript& t) {
    if (t.beta.v < 0 || t.beta.v >= P.q) return false;
    return verify_node(P, stmt, t.alpha.root, t.beta, t.gamma);
}

// ---- extraction --------------------------------------------------------

static SigmaWitness extract_node(const GroupParams& P, const SigmaStatement& stmt,
                                 const Scalar& b1, const GammaNode& g1,
                                 const Scalar& b2, const GammaNode& g2) {
    if (is_atom(stmt.kind)) {
        // w = (gamma1 - gamma2) / (beta1 - beta2)
        Scalar inv_db = P.s_inv(P.s_sub(b1, b2));
        SigmaWitness w;
        for (size_t i = 0; i < g1.resp.size(); i++)
            w.scalars.push_back(P.s_mul(P.s_sub(g1.resp[i], g2.resp[i]), inv_db));
        return w;
    }
    if (stmt.kind == Kind::And) {
        SigmaWitness w;
        for (size_t i = 0; i < stmt.children.size(); i++)
            w.children.push_back(extract_node(P, stmt.children[i], b1, g1.children[i], b2, g2.children[i]));
        return w;
    }
    // Or: at least one branch saw differing sub-challenges
    Scalar l1 = g1.beta_left, l2 = g2.beta_left;
    if (l1 != l2)
        return wit_or(0, extract_node(P, stmt.children[0], l1, g1.children[0], l2, g2.children[0]));
    Scalar r1 = P.s_sub(b1, l1), r2 = P.s_sub(b2, l2);
    return wit_or(1, extract_node(P, stmt.children[1], r1, g1.children[1], r2, g2.children[1]));
}

SigmaWitness extract_special_soundness(const GroupParams& P, const SigmaStatement& stmt,
                                       const SigmaTranscript& t1, const SigmaTranscript& t2) {
    if (encode(t1.alpha) != encode(t2.alpha)) throw NotAFork("commitments differ");
    if (t1.beta == t2.beta) throw NotAFork("equal challenges");
    if (!sigma_verify(P, stmt, t1) || !sigma_verify(P, stmt, t2)) throw NotAFork("transcript rejected");
    return extract_node(P, stmt, t1.beta, t1.gamma, t2.beta, t2.gamma);
}

// ---- encoding ----------------------------------------------------------

static Bytes encode_u32(uint32_t v) {
    Bytes b;
    append_u32_be(b, v);
    Encoder e;
    e.tlv(Tag::U32, b);
    return e.out;
}

static uint32_t decode_u32(Reader& r) {
    Bytes b = r.expect(Tag::U32);
    if (b.size() != 4) throw MalformedArtifact("bad u32");
    return read_u32_be(b.data());
}

Bytes encode(const SigmaStatement& stmt) {
    Encoder body;
    body.out.push_back(uint8_t(stmt.kind));
    switch (stmt.kind) {
        case Kind::Dlog:
            body.raw(encode(stmt.x));
            break;
        case Kind::CommitOpen:
            body.raw(encode(stmt.c));
            body.raw(encode(stmt.s));
            break;
        case Kind::LinearEnc:
            body.raw(encode(stmt.pk));
            body.raw(encode(stmt.agg));
            body.raw(encode_u32(uint32_t(stmt.bindings.size())));
            for (const auto& bind : stmt.bindings) {
                body.raw(encode(bind.target));
                body.raw(encode(bind.base));
            }
            break;
        case Kind::EncBit:
            body.raw(encode(stmt.pk));
            body.raw(encode(stmt.ct));
            body.out.push_back(uint8_t(stmt.bit));
            break;
        case Kind::And:
        case Kind::Or:
            body.raw(encode_u32(uint32_t(stmt.children.size())));
            for (const auto& child : stmt.children) body.raw(encode(child));
            break;
    }
    Encoder e;
    e.tlv(Tag::Statement, body.out);
    return e.out;
}

static Bytes encode_alpha_node(const AlphaNode& a) {
    Encoder body;
    body.raw(encode_u32(uint32_t(a.commits.size())));
    for (const auto& el : a.commits) body.raw(encode(el));
    body.raw(encode_u32(uint32_t(a.children.size())));
    for (const auto& child : a.children) body.raw(encode_alpha_node(child));
    Encoder e;
    e.tlv(Tag::Alpha, body.out);
    return e.out;
}

Bytes encode(const Alpha& alpha) {
    Encoder body;
    body.raw(encode_alpha_node(alpha.root));
    body.out.insert(body.out.end(), alpha.salt.begin(), alpha.salt.end());
    Encoder e;
    e.tlv(Tag::Alpha, body.out);
    return e.out;
}

static AlphaNode decode_alpha_node(const GroupParams& P, Reader& r) {
    Bytes body = r.expect(Tag::Alpha);
    Reader rr(body);
    AlphaNode a;
    uint32_t nc = decode_u32(rr);
    for (uint32_t i = 0; i < nc; i++) a.commits.push_back(decode_element(P, rr));
    uint32_t nk = decode_u32(rr);
    for (uint32_t i = 0; i < nk; i++) a.children.push_back(decode_alpha_node(P, rr));
    rr.expect_done();
    return a;
}

Alpha decode_alpha(const GroupParams& P, Reader& r) {
    Bytes body = r.expect(Tag::Alpha);
    Reader rr(body);
    Alpha alpha;
    alpha.root = decode_alpha_node(P, rr);
    if (body.size() - rr.pos != alpha.salt.size()) throw MalformedArtifact("bad alpha salt");
    std::copy(body.begin() + rr.pos, body.end(), alpha.salt.begin());
    return alpha;
}

Bytes encode(const GammaNode& gamma) {
    Encoder body;
    body.raw(encode_u32(uint32_t(gamma.resp.size())));
    for (const auto& s : gamma.resp) body.raw(encode(s));
    body.raw(encode_u32(uint32_t(gamma.children.size())));
    for (const auto& child : gamma.children) body.raw(encode(child));
    body.raw(encode(gamma.beta_left));
    Encoder e;
    e.tlv(Tag::Gamma, body.out);
    return e.out;
}

GammaNode decode_gamma(const GroupParams& P, Reader& r) {
    Bytes body = r.expect(Tag::Gamma);
    Reader rr(body);
    GammaNode g;
    uint32_t nr = decode_u32(rr);
    for (uint32_t i = 0; i < nr; i++) g.resp.push_back(decode_scalar(P, rr));
    uint32_t nk = decode_u32(rr);
    for (uint32_t i = 0; i < nk; i++) g.children.push_back(decode_gamma(P, rr));
    g.beta_left = decode_scalar(P, rr);
    rr.expect_done();
    return g;
}

} // namespace unizk
