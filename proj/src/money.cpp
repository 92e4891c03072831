#include "unizk/money.hpp"

#include <stdexcept>

#include "unizk/errors.hpp"

namespace unizk {

NoteHandle MoneyAuthority::store(std::vector<Qubit> qs) {
    NoteHandle h{next_id_++};
    notes_.emplace(h.id, std::move(qs));
    return h;
}

std::pair<NoteHandle, SerialNumber> MoneyAuthority::note_gen(size_t n) {
    if (n < 1) throw std::invalid_argument("note_gen: n >= 1 required");
    Registration reg;
    std::vector<Qubit> qs;
    reg.bases.reserve(n);
    reg.bits.reserve(n);
    qs.reserve(n);
    for (size_t i = 0; i < n; i++) {
        Basis basis = rng_.coin() ? Basis::X : Basis::Z;
        int bit = rng_.coin() ? 1 : 0;
        reg.bases.push_back(basis);
        reg.bits.push_back(bit);
        qs.push_back(prepare(basis, bit));
    }
    SerialNumber s;
    rng_.fill(s.data(), s.size());
    registry_.emplace(s, std::move(reg));
    return {store(std::move(qs)), s};
}

bool MoneyAuthority::ver(NoteHandle h, const SerialNumber& s) {
    auto reg = registry_.find(s);
    if (reg == registry_.end()) throw UnknownSerial("serial not registered");
    auto note = notes_.find(h.id);
    if (note == notes_.end()) throw UnknownSerial("note handle not live");
    auto& qs = note->second;
    if (qs.size() != reg->second.bases.size()) return false;
    bool ok = true;
    for (size_t i = 0; i < qs.size(); i++) {
        int outcome = measure(qs[i], reg->second.bases[i], rng_);
        if (outcome != reg->second.bits[i]) ok = false;
    }
    return ok;
}

std::pair<NoteHandle, NoteHandle> MoneyAuthority::attack_measure_resend(NoteHandle h) {
    auto note = notes_.find(h.id);
    if (note == notes_.end()) throw UnknownSerial("note handle not live");
    std::vector<Qubit> copy0, copy1;
    for (auto& q : note->second) {
        int outcome = measure(q, Basis::Z, rng_);
        copy0.push_back(prepare(Basis::Z, outcome));
        copy1.push_back(prepare(Basis::Z, outcome));
    }
    notes_.erase(note);  // original consumed
    NoteHandle a = store(std::move(copy0));
    NoteHandle b = store(std::move(copy1));
    return {a, b};
}

std::pair<NoteHandle, NoteHandle> MoneyAuthority::attack_fresh_forgery(NoteHandle h) {
    auto note = notes_.find(h.id);
    if (note == notes_.end()) throw UnknownSerial("note handle not live");
    std::vector<Qubit> forged;
    for (size_t i = 0; i < note->second.size(); i++) {
        Basis basis = rng_.coin() ? Basis::X : Basis::Z;
        forged.push_back(prepare(basis, rng_.coin() ? 1 : 0));
    }
    return {h, store(std::move(forged))};
}

size_t MoneyAuthority::note_size(NoteHandle h) const {
    auto note = notes_.find(h.id);
    if (note == notes_.end()) throw UnknownSerial("note handle not live");
    return note->second.size();
}

const std::vector<Qubit>& MoneyAuthority::debug_amplitudes(NoteHandle h) const {
    auto note = notes_.find(h.id);
    if (note == notes_.end()) throw UnknownSerial("note handle not live");
    return note->second;
}

const MoneyAuthority::Registration& MoneyAuthority::debug_registration(const SerialNumber& s) const {
    auto reg = registry_.find(s);
    if (reg == registry_.end()) throw UnknownSerial("serial not registered");
    return reg->second;
}

NoteHandle MoneyAuthority::debug_mint(std::vector<Qubit> qs) { return store(std::move(qs)); }

void MoneyAuthority::debug_register(const SerialNumber& s, Registration reg) {
    registry_[s] = std::move(reg);
}

Bytes encode(const SerialNumber& s) {
    Encoder e;
    e.tlv(Tag::Serial, Bytes(s.begin(), s.end()));
    return e.out;
}

SerialNumber decode_serial(Reader& r) {
    Bytes b = r.expect(Tag::Serial);
    if (b.size() != 32) throw MalformedArtifact("serial must be 32 bytes");
    SerialNumber s;
    std::copy(b.begin(), b.end(), s.begin());
    return s;
}

} // namespace unizk
