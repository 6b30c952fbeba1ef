#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "prmqc/field.hpp"
#include "prmqc/linear_code.hpp"

namespace prmqc {

enum class HullMode { RelativeEuclidean, Hermitian };

struct HullTarget {
  HullMode mode = HullMode::RelativeEuclidean;
  std::size_t target_dim = 0;
  /// Coordinate scaling turning the input code into the output code.
  std::vector<Elem> scaling_vector;
  std::size_t achieved_dim = 0;
};

struct HullResult {
  LinearCode code;
  HullTarget target;
};

/// Weight-n vector of PRM_d(q, m)^perp for 1 <= d < q-2: t(z) on the points
/// (0,...,0,1,z) of block B_1 and 1 elsewhere, where t is the least rootless
/// monic polynomial of degree q-1-d. Throws DegreeOutOfRange otherwise.
std::vector<Elem> full_weight_dual_vector(const FieldPtr& field, int m, int d);

/// The all-ones vector when it lies in PRM_d(q, m)^perp (possible only for
/// d = 0 mod q-1), otherwise full_weight_dual_vector.
std::vector<Elem> preferred_full_weight_dual_vector(const FieldPtr& field, int m, int d);

/// The vector v of full_weight_dual_vector built over GF(q^2) with a
/// rootless polynomial of degree q-1-d; requires 1 <= d < q-2.
std::vector<Elem> hermitian_base_vector(const FieldPtr& field, int m, int d);

/// w = v^(q+1) for v = hermitian_base_vector; entries lie in GF(q).
std::vector<Elem> hermitian_full_weight_vector(const FieldPtr& field, int m, int d);

/// Componentwise u with u^(q+1) = w, taking the least-encoded root.
/// w must have full weight and entries in GF(q).
std::vector<Elem> norm_root(const Field& field, std::span<const Elem> w);

/// True iff v . (a * b) = 0 for all generator rows a of c1 and b of c2.
bool orthogonal_to_star(std::span<const Elem> v, const LinearCode& c1, const LinearCode& c2);

/// True iff w . (a * b^q) = 0 for all generator rows a, b of c.
bool orthogonal_to_hermitian_star(std::span<const Elem> w, const LinearCode& c);

/// <v> * C1, which lies in C2^perp when v is in (C1 * C2)^perp.
LinearCode raise_relative_hull_full(const LinearCode& c1, const LinearCode& c2, std::span<const Elem> v);

/// Code monomially equivalent to C1 with dim(C1' ∩ C2^perp) = ell.
///
/// Starts from <v> * C1 and lowers the hull one unit at a time: coordinates
/// in increasing order, scalars in increasing encoding, first rescaling that
/// drops the hull by exactly one is kept.
HullResult set_relative_hull_dim(const LinearCode& c1, const LinearCode& c2, std::size_t ell,
                                 std::span<const Elem> v);

/// Code monomially equivalent to C over GF(q^2) with Hermitian hull of
/// dimension ell. `w` is a full-weight vector over GF(q) orthogonal to C * C^q;
/// the starting code is <u> * C with u^(q+1) = w.
HullResult set_hermitian_hull_dim(const LinearCode& c, std::size_t ell, std::span<const Elem> w);

}  // namespace prmqc
