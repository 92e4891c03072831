#include "unizk/hash.hpp"

#include <openssl/sha.h>

namespace unizk {

Digest sha256(const uint8_t* p, size_t n) {
    Digest d;
    SHA256(p, n, d.data());
    return d;
}

Digest sha256(const Bytes& input) { return sha256(input.data(), input.size()); }

} // namespace unizk
