#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "prmqc/linear_code.hpp"
#include "prmqc/matrix.hpp"

namespace prmqc {

enum class CertificateKind { Exact, LowerBound };

std::string_view to_string(CertificateKind kind) noexcept;

/// Outcome of a minimum-weight computation.
///
/// Exact(w) carries a witness codeword of weight w. LowerBound(w) certifies
/// that no nonzero codeword of weight < w exists; `budget_exhausted` marks a
/// bound that stopped short because the step budget ran out.
struct WeightCertificate {
  CertificateKind kind = CertificateKind::LowerBound;
  std::size_t value = 0;
  std::optional<std::vector<Elem>> witness;
  bool budget_exhausted = false;
  std::uint64_t steps = 0;

  bool exact() const noexcept { return kind == CertificateKind::Exact; }
};

/// Minimum distance by enumerating all codewords (one per projective class).
/// Throws BudgetExceeded if q^k > budget, EmptyCode for the zero code.
WeightCertificate min_distance_exact(const LinearCode& c, std::uint64_t budget);

/// Full weight distribution A_0..A_n by enumeration.
std::vector<std::uint64_t> weight_distribution(const LinearCode& c, std::uint64_t budget);

/// Decides whether ker(H) has a nonzero word of weight < w.
/// Returns LowerBound(w) when every w-1 or fewer columns of H are independent,
/// otherwise Exact(w') for the true minimum w' < w with a witness.
/// Throws BudgetExceeded if the search cannot finish within `budget` steps.
WeightCertificate certify_kernel_weight_at_least(const Matrix& h, std::size_t w, std::uint64_t budget);

/// certify_kernel_weight_at_least with H = parity-check matrix of C.
WeightCertificate certify_min_weight_at_least(const LinearCode& c, std::size_t w, std::uint64_t budget);

/// Best-effort minimum weight of ker(H): raises the proven lower bound level
/// by level and returns Exact as soon as a minimum-weight word is found, or a
/// budget-exhausted LowerBound. Never throws on budget.
WeightCertificate kernel_minimum_distance(const Matrix& h, std::uint64_t budget);

/// Best-effort wt(C).
WeightCertificate minimum_distance(const LinearCode& c, std::uint64_t budget);

/// Best-effort wt(C^perp), using the generator of C as parity-check matrix.
WeightCertificate dual_minimum_distance(const LinearCode& c, std::uint64_t budget);

}  // namespace prmqc
