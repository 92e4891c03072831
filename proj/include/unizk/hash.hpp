#pragma once

#include <array>

#include "unizk/bytes.hpp"

namespace unizk {

using Digest = std::array<uint8_t, 32>;

Digest sha256(const Bytes& input);
Digest sha256(const uint8_t* p, size_t n);

} // namespace unizk
