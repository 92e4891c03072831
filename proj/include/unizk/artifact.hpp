#pragma once

#include <optional>
#include <string>

#include "unizk/money.hpp"

namespace unizk {

// JSON envelope for files the CLI reads and writes. The payload stays in
// canonical bytes (base64 here); JSON is a wrapper and is never hashed.

constexpr int kArtifactVersion = 1;

// Simulated note state exported in demo mode only: amplitudes plus the
// authority registration, under an explicit simulation-only banner. Game
// subcommands never read or write this.
struct NoteDump {
    std::vector<Basis> bases;
    std::vector<int> bits;
    std::vector<Qubit> amps;
};

struct Artifact {
    int version = kArtifactVersion;
    std::string kind;
    Bytes payload;
    std::optional<NoteDump> note_dump;
};

bool artifact_kind_known(const std::string& kind);

std::string artifact_to_json(const Artifact& a);
Artifact artifact_from_json(const std::string& text);  // VersionMismatch, MalformedArtifact

std::string base64_encode(const Bytes& b);
Bytes base64_decode(const std::string& s);

} // namespace unizk
