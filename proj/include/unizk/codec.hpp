#pragma once

#include <string>
#include <vector>

#include "unizk/bytes.hpp"

namespace unizk {

// Deterministic fixture test vectors: one canonical-bytes entry per
// serializable artifact kind, regenerated bit-for-bit from a seed.

struct VectorEntry {
    std::string name;
    Bytes bytes;
};

std::vector<VectorEntry> build_fixture_vectors(uint64_t seed);
Bytes encode_vectors(const std::vector<VectorEntry>& entries);
std::string vectors_json(const std::vector<VectorEntry>& entries);

} // namespace unizk
