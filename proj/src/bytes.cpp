#include "unizk/bytes.hpp"
#include "unizk/errors.hpp"

namespace unizk {

void append_u32_be(Bytes& out, uint32_t v) {
    out.push_back(uint8_t(v >> 24));
    out.push_back(uint8_t(v >> 16));
    out.push_back(uint8_t(v >> 8));
    out.push_back(uint8_t(v));
}

uint32_t read_u32_be(const uint8_t* p) {
    return (uint32_t(p[0]) << 24) | (uint32_t(p[1]) << 16) | (uint32_t(p[2]) << 8) | uint32_t(p[3]);
}

void Encoder::tlv(Tag tag, const Bytes& payload) {
    out.push_back(uint8_t(tag));
    append_u32_be(out, uint32_t(payload.size()));
    raw(payload);
}

Bytes Reader::expect(Tag tag) {
    if (pos + 5 > data.size()) throw MalformedArtifact("truncated TLV header");
    if (data[pos] != uint8_t(tag)) throw MalformedArtifact("unexpected type tag");
    uint32_t len = read_u32_be(data.data() + pos + 1);
    pos += 5;
    if (pos + len > data.size()) throw MalformedArtifact("truncated TLV payload");
    Bytes payload(data.begin() + pos, data.begin() + pos + len);
    pos += len;
    return payload;
}

void Reader::expect_done() const {
    if (!done()) throw MalformedArtifact("trailing bytes");
}

std::string to_hex(const Bytes& b) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(b.size() * 2);
    for (uint8_t v : b) {
        s.push_back(digits[v >> 4]);
        s.push_back(digits[v & 0xf]);
    }
    return s;
}

static int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw MalformedArtifact("bad hex digit");
}

Bytes from_hex(const std::string& s) {
    if (s.size() % 2 != 0) throw MalformedArtifact("odd hex length");
    Bytes b(s.size() / 2);
    for (size_t i = 0; i < b.size(); i++)
        b[i] = uint8_t(hex_nibble(s[2 * i]) << 4 | hex_nibble(s[2 * i + 1]));
    return b;
}

} // namespace unizk
