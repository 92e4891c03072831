#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace unizk {

using Bytes = std::vector<uint8_t>;

// Canonical byte encoding, shared by serialization and every random-oracle /
// Fiat-Shamir input: 1-byte type tag || 4-byte big-endian length || payload,
// fields concatenated in declaration order.
enum class Tag : uint8_t {
    Raw = 0x01,
    Scalar = 0x02,
    Element = 0x03,
    Commitment = 0x04,
    BitCiphertext = 0x05,
    WitnessCiphertext = 0x06,
    Serial = 0x07,
    Statement = 0x08,
    Alpha = 0x09,
    Gamma = 0x0a,
    FsProof = 0x0b,
    SimExtCrs = 0x0c,
    SimExtProof = 0x0d,
    UCrs = 0x0e,
    UProofCrs = 0x0f,
    UProofRom = 0x10,
    Sok = 0x11,
    Credential = 0x12,
    BanknoteCrs = 0x13,
    BanknoteRom = 0x14,
    GroupProfile = 0x15,
    Vectors = 0x16,
    U32 = 0x17,
};

void append_u32_be(Bytes& out, uint32_t v);
uint32_t read_u32_be(const uint8_t* p);

struct Encoder {
    Bytes out;

    void tlv(Tag tag, const Bytes& payload);
    void raw(const Bytes& b) { out.insert(out.end(), b.begin(), b.end()); }
    void raw(const std::string& s) { out.insert(out.end(), s.begin(), s.end()); }
};

// Strict cursor over a TLV stream; throws MalformedArtifact on any structural
// defect (wrong tag, truncation, trailing bytes).
struct Reader {
    const Bytes& data;
    size_t pos = 0;

    explicit Reader(const Bytes& b) : data(b) {}
    Bytes expect(Tag tag);
    bool done() const { return pos == data.size(); }
    void expect_done() const;
};

std::string to_hex(const Bytes& b);
Bytes from_hex(const std::string& s);

} // namespace unizk
