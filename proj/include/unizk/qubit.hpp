#pragma once

#include <complex>

#include "unizk/rng.hpp"

namespace unizk {

enum class Basis : uint8_t { Z = 0, X = 1 };

// Single-qubit statevector, enough for BB84 banknotes and measure-and-prepare
// attacks. Product states only; qubits never entangle here.
struct Qubit {
    std::complex<double> amp0, amp1;
};

constexpr double kNormTolerance = 1e-12;

Qubit prepare(Basis basis, int bit);

// Born-rule sample; collapses q to the post-measurement eigenstate.
int measure(Qubit& q, Basis basis, Rng& rng);  // NormalizationError

// exact squared amplitude of `outcome` in `basis`; oracle for game analytics
double born_probability(const Qubit& q, Basis basis, int outcome);

} // namespace unizk
