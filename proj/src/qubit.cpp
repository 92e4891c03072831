#include "unizk/qubit.hpp"

#include <cmath>
#include <stdexcept>

#include "unizk/errors.hpp"

namespace unizk {

static const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Qubit prepare(Basis basis, int bit) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("prepare: bit must be 0 or 1");
    if (basis == Basis::Z) {
        return bit == 0 ? Qubit{1.0, 0.0} : Qubit{0.0, 1.0};
    }
    return bit == 0 ? Qubit{kInvSqrt2, kInvSqrt2} : Qubit{kInvSqrt2, -kInvSqrt2};
}

static void check_normalized(const Qubit& q) {
    double n = std::norm(q.amp0) + std::norm(q.amp1);
    if (std::abs(n - 1.0) > kNormTolerance) throw NormalizationError("qubit not normalized");
}

double born_probability(const Qubit& q, Basis basis, int outcome) {
    if (basis == Basis::Z) {
        return outcome == 0 ? std::norm(q.amp0) : std::norm(q.amp1);
    }
    std::complex<double> a = (q.amp0 + q.amp1) * kInvSqrt2;  // <+|q>
    std::complex<double> b = (q.amp0 - q.amp1) * kInvSqrt2;  // <-|q>
    return outcome == 0 ? std::norm(a) : std::norm(b);
}

int measure(Qubit& q, Basis basis, Rng& rng) {
    check_normalized(q);
    double p0 = born_probability(q, basis, 0);
    int outcome = rng.unit() < p0 ? 0 : 1;
    q = prepare(basis, outcome);
    return outcome;
}

} // namespace unizk
