#pragma once

#include <cstdint>

namespace prmqc {

/// Asymmetric entanglement-assisted Gilbert-Varshamov condition: true when
///   (q^(2n-l) - q^(l-2c)) / (q^(2n) - 1) * (S_x S_z - 1) < 1,
/// S_t = sum_{i < delta_t} C(n, i) (q-1)^i, guaranteeing an
/// [[n, n-l+c, delta_z/delta_x; c]]_q code. Exact integer arithmetic.
/// Requires n >= 1, 1 <= l < n + c, delta_z, delta_x >= 1, 0 <= 2c <= l.
bool gv_asymmetric_exists(std::uint64_t n, std::uint64_t l, std::uint64_t c, std::uint64_t delta_z,
                          std::uint64_t delta_x, int q);

/// Pure stabilizer Gilbert-Varshamov condition: true when
///   (q^(n-kappa+2) - 1) / (q^2 - 1) > sum_{i=1}^{delta-1} (q^2-1)^(i-1) C(n, i).
/// Requires n > kappa and delta >= 2 (PreconditionViolated) and
/// n = kappa mod 2 (ParityMismatch).
bool gv_symmetric_exists(std::uint64_t n, std::uint64_t kappa, std::uint64_t delta, int q);

}  // namespace prmqc
