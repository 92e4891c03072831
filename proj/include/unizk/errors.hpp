#pragma once

#include <stdexcept>
#include <string>

namespace unizk {

// Error taxonomy shared by all protocol layers. Each name corresponds to a
// distinct failure mode a caller may want to catch separately.

struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

struct NormalizationError : std::runtime_error {
    explicit NormalizationError(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownSerial : std::runtime_error {
    explicit UnknownSerial(const std::string& what) : std::runtime_error(what) {}
};

struct AlreadyDefined : std::runtime_error {
    explicit AlreadyDefined(const std::string& what) : std::runtime_error(what) {}
};

struct WitnessMismatch : std::runtime_error {
    explicit WitnessMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct StateReuse : std::runtime_error {
    explicit StateReuse(const std::string& what) : std::runtime_error(what) {}
};

struct NotAFork : std::runtime_error {
    explicit NotAFork(const std::string& what) : std::runtime_error(what) {}
};

struct ExtractionFailed : std::runtime_error {
    explicit ExtractionFailed(const std::string& what) : std::runtime_error(what) {}
};

struct AdversaryMalformed : std::runtime_error {
    explicit AdversaryMalformed(const std::string& what) : std::runtime_error(what) {}
};

struct VersionMismatch : std::runtime_error {
    explicit VersionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedArtifact : std::runtime_error {
    explicit MalformedArtifact(const std::string& what) : std::runtime_error(what) {}
};

} // namespace unizk
