#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prmqc/distance.hpp"
#include "prmqc/hull.hpp"
#include "prmqc/linear_code.hpp"

namespace prmqc {

enum class Purity { Pure, PossiblyImpure };

std::string_view to_string(Purity p) noexcept;

/// Descriptor from which a construction can be rerun.
struct Provenance {
  std::string construction;
  int q = 0;  ///< field of the quantum code
  int s = 1;  ///< extension degree for subfield constructions
  int m = 0;
  std::vector<int> degrees;
  std::optional<int> lambda;
  std::size_t c = 0;
  std::uint64_t witness_hash = 0;  ///< FNV-1a over generators and scaling vector

  std::string describe() const;
};

struct CssParams {
  std::size_t n = 0;
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  std::size_t c = 0;
  std::size_t kappa = 0;
  /// wt(C2^perp), the phase-flip side; empty when C2^perp is the zero code.
  std::optional<WeightCertificate> delta_z;
  /// wt(C1^perp), the qudit-flip side.
  std::optional<WeightCertificate> delta_x;
  std::optional<std::uint64_t> delta_z_formula;
  std::optional<std::uint64_t> delta_x_formula;
  Purity purity = Purity::PossiblyImpure;
  bool degenerate = false;
  std::vector<std::string> notes;
  Provenance provenance;
};

struct HermParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t c = 0;
  std::size_t kappa = 0;
  /// wt(C^perp_h); empty when it is the zero code.
  std::optional<WeightCertificate> delta;
  std::optional<std::uint64_t> delta_formula;
  Purity purity = Purity::PossiblyImpure;
  std::vector<std::string> notes;
  Provenance provenance;
};

/// Best distance value known for a certificate: the certificate value,
/// raised to the formula bound when the certificate is only a lower bound.
std::optional<std::uint64_t> reported_distance(const std::optional<WeightCertificate>& cert,
                                               const std::optional<std::uint64_t>& formula);

/// wt(C^perp) within `budget` steps; empty when C^perp = 0.
std::optional<WeightCertificate> dual_distance_certificate(const LinearCode& c, std::uint64_t budget);

/// Entanglement-assisted CSS parameters of the pair (C1, C2):
/// c = k1 - dim(C1 ∩ C2^perp), kappa = n - k1 - k2 + c.
CssParams css_params(const LinearCode& c1, const LinearCode& c2, std::uint64_t budget);

/// Hermitian construction parameters for C over GF(q^2):
/// c = k - dim(C ∩ C^perp_h), kappa = n - 2k + c.
HermParams hermitian_params(const LinearCode& c, std::uint64_t budget);

struct CssConstruction {
  CssParams params;
  LinearCode c1;
  LinearCode c2;
  std::optional<HullTarget> hull;
};

struct HermConstruction {
  HermParams params;
  LinearCode code;
  std::optional<HullTarget> hull;
};

/// PRM_{d1}, PRM_{d2} over GF(q) with the hull of the first code moved so
/// that exactly c_target entangled pairs are needed.
CssConstruction construct_css_prm(int q, int m, int d1, int d2, std::size_t c_target, std::uint64_t budget);

/// Subfield subcodes over GF(q) of PRM_{d1}, PRM_{d2} over GF(q^s), with
/// d1 + d2 = lambda (q^s - 1), 1 <= lambda <= m.
CssConstruction construct_css_subfield(int q, int s, int m, int d1, int d2, std::uint64_t budget);

/// PRM_d(q^2, m) for the Hermitian construction: either d = lambda (q-1)
/// (self-orthogonal, c_target = 0) or 1 <= d < q-2 with a hull sweep.
HermConstruction construct_hermitian_prm(int q, int m, int d, std::size_t c_target, std::uint64_t budget);

/// Subfield subcode over GF(q^2) of PRM_d(q^(2s), m), d = lambda (q^(2s)-1)/(q+1).
HermConstruction construct_hermitian_subfield(int q, int s, int m, int lambda, std::uint64_t budget);

/// (q, s, m, lambda) with n = (q^(s(m+1)) - 1)/(q^s - 1) and
/// degree_sum = lambda (q^s - 1), 1 <= lambda <= m, q^s <= 256.
struct Geometry {
  int q = 0;
  int s = 0;
  int m = 0;
  int lambda = 0;
  bool operator==(const Geometry&) const = default;
};
std::vector<Geometry> consistent_geometries(std::uint64_t n, int degree_sum, std::optional<int> base_q = std::nullopt);

}  // namespace prmqc
