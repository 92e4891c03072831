#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "unizk/bytes.hpp"
#include "unizk/qubit.hpp"

namespace unizk {

using SerialNumber = std::array<uint8_t, 32>;

// Opaque reference to a simulated banknote. A handle exposes no amplitude
// data; the only operations on it are the MoneyAuthority methods. A classical
// simulation is trivially copyable at the memory level, so no-cloning is
// enforced at this API boundary: games hand adversaries handles, never states.
struct NoteHandle {
    uint64_t id = 0;

    bool operator==(const NoteHandle& o) const { return id == o.id; }
    bool operator<(const NoteHandle& o) const { return id < o.id; }
};

// Ideal-functionality model of the public-key quantum money mini-scheme:
// Ver is public in the API sense but internally consults the registry of
// (basis, bit) coordinates sampled at NoteGen time.
class MoneyAuthority {
public:
    struct Registration {
        std::vector<Basis> bases;
        std::vector<int> bits;
    };

    explicit MoneyAuthority(Rng rng) : rng_(rng) {}

    std::pair<NoteHandle, SerialNumber> note_gen(size_t n);

    // Measures qubit i in the registered basis; accepts iff every outcome
    // matches. Collapses the note in place, so honest notes stay accepting
    // and tampered ones stay observable. Throws UnknownSerial.
    bool ver(NoteHandle h, const SerialNumber& s);

    // counterfeiting channels for the unforgeability game
    std::pair<NoteHandle, NoteHandle> attack_measure_resend(NoteHandle h);
    std::pair<NoteHandle, NoteHandle> attack_fresh_forgery(NoteHandle h);

    bool handle_live(NoteHandle h) const { return notes_.count(h.id) != 0; }
    size_t note_size(NoteHandle h) const;

    // simulation-only accessors (CLI demo serialization; never used in games)
    const std::vector<Qubit>& debug_amplitudes(NoteHandle h) const;
    const Registration& debug_registration(const SerialNumber& s) const;
    NoteHandle debug_mint(std::vector<Qubit> qs);
    void debug_register(const SerialNumber& s, Registration reg);

private:
    NoteHandle store(std::vector<Qubit> qs);

    std::map<SerialNumber, Registration> registry_;
    std::map<uint64_t, std::vector<Qubit>> notes_;
    uint64_t next_id_ = 1;
    Rng rng_;
};

Bytes encode(const SerialNumber& s);
SerialNumber decode_serial(Reader& r);

} // namespace unizk
