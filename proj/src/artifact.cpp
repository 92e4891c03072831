#include "unizk/artifact.hpp"

#include <array>

#include <json.hpp>

#include "unizk/errors.hpp"

namespace unizk {

using nlohmann::json;

static const char* kKinds[] = {"ucrs",         "proof-crs",  "proof-rom", "sok-signature",
                               "credential",   "issuer",     "banknote-crs",
                               "banknote-rom", "vectors"};

bool artifact_kind_known(const std::string& kind) {
    for (const char* k : kKinds)
        if (kind == k) return true;
    return false;
}

static const char kB64[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_encode(const Bytes& b) {
    std::string out;
    out.reserve((b.size() + 2) / 3 * 4);
    for (size_t i = 0; i < b.size(); i += 3) {
        uint32_t v = uint32_t(b[i]) << 16;
        if (i + 1 < b.size()) v |= uint32_t(b[i + 1]) << 8;
        if (i + 2 < b.size()) v |= uint32_t(b[i + 2]);
        out.push_back(kB64[(v >> 18) & 63]);
        out.push_back(kB64[(v >> 12) & 63]);
        out.push_back(i + 1 < b.size() ? kB64[(v >> 6) & 63] : '=');
        out.push_back(i + 2 < b.size() ? kB64[v & 63] : '=');
    }
    return out;
}

Bytes base64_decode(const std::string& s) {
    if (s.size() % 4 != 0) throw MalformedArtifact("bad base64 length");
    auto val = [](char c) -> int {
        if (c >= 'A' && c <= 'Z') return c - 'A';
        if (c >= 'a' && c <= 'z') return c - 'a' + 26;
        if (c >= '0' && c <= '9') return c - '0' + 52;
        if (c == '+') return 62;
        if (c == '/') return 63;
        if (c == '=') return -1;
        throw MalformedArtifact("bad base64 digit");
    };
    Bytes out;
    for (size_t i = 0; i < s.size(); i += 4) {
        int a = val(s[i]), b = val(s[i + 1]), c = val(s[i + 2]), d = val(s[i + 3]);
        if (a < 0 || b < 0) throw MalformedArtifact("bad base64 padding");
        uint32_t v = (uint32_t(a) << 18) | (uint32_t(b) << 12);
        out.push_back(uint8_t(v >> 16));
        if (c >= 0) {
            v |= uint32_t(c) << 6;
            out.push_back(uint8_t(v >> 8));
        }
        if (d >= 0) {
            if (c < 0) throw MalformedArtifact("bad base64 padding");
            v |= uint32_t(d);
            out.push_back(uint8_t(v));
        }
    }
    return out;
}

std::string artifact_to_json(const Artifact& a) {
    json j;
    j["version"] = a.version;
    j["kind"] = a.kind;
    j["payload_b64"] = base64_encode(a.payload);
    if (a.note_dump) {
        json dump;
        dump["banner"] = "SIMULATION-ONLY";
        json bases = json::array(), bits = json::array(), amps = json::array();
        for (Basis b : a.note_dump->bases) bases.push_back(b == Basis::X ? 1 : 0);
        for (int b : a.note_dump->bits) bits.push_back(b);
        for (const Qubit& q : a.note_dump->amps) {
            amps.push_back(json::array({q.amp0.real(), q.amp0.imag(), q.amp1.real(), q.amp1.imag()}));
        }
        dump["bases"] = bases;
        dump["bits"] = bits;
        dump["amps"] = amps;
        j["sim_only_note_dump"] = dump;
    }
    return j.dump(2) + "\n";
}

Artifact artifact_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception&) {
        throw MalformedArtifact("not valid JSON");
    }
    if (!j.is_object() || !j.contains("version") || !j.contains("kind") || !j.contains("payload_b64"))
        throw MalformedArtifact("missing artifact fields");
    if (!j["version"].is_number_integer()) throw MalformedArtifact("bad version field");
    if (j["version"].get<int>() != kArtifactVersion) throw VersionMismatch("unsupported artifact version");
    Artifact a;
    a.version = j["version"].get<int>();
    if (!j["kind"].is_string()) throw MalformedArtifact("bad kind field");
    a.kind = j["kind"].get<std::string>();
    if (!artifact_kind_known(a.kind)) throw MalformedArtifact("unknown artifact kind");
    if (!j["payload_b64"].is_string()) throw MalformedArtifact("bad payload field");
    a.payload = base64_decode(j["payload_b64"].get<std::string>());
    if (j.contains("sim_only_note_dump")) {
        const json& dump = j["sim_only_note_dump"];
        if (!dump.is_object() || dump.value("banner", "") != "SIMULATION-ONLY")
            throw MalformedArtifact("note dump without simulation banner");
        NoteDump nd;
        try {
            for (const auto& b : dump.at("bases")) nd.bases.push_back(b.get<int>() ? Basis::X : Basis::Z);
            for (const auto& b : dump.at("bits")) nd.bits.push_back(b.get<int>());
            for (const auto& q : dump.at("amps")) {
                if (!q.is_array() || q.size() != 4) throw MalformedArtifact("bad amplitude entry");
                nd.amps.push_back(Qubit{{q[0].get<double>(), q[1].get<double>()},
                                        {q[2].get<double>(), q[3].get<double>()}});
            }
        } catch (const json::exception&) {
            throw MalformedArtifact("bad note dump");
        }
        if (nd.bases.size() != nd.bits.size() || nd.bases.size() != nd.amps.size())
            throw MalformedArtifact("inconsistent note dump");
        a.note_dump = std::move(nd);
    }
    return a;
}

} // namespace unizk
