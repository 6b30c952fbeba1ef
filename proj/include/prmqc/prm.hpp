#pragma once

#include <cstdint>
#include <vector>

#include "prmqc/field.hpp"
#include "prmqc/linear_code.hpp"
#include "prmqc/matrix.hpp"
#include "prmqc/projective.hpp"

namespace prmqc {

/// Exponent tuple (alpha_0, ..., alpha_m) of a monomial.
using Monomial = std::vector<int>;

/// All homogeneous degree-d monomials in m+1 variables, lexicographically
/// decreasing: (d,0,...,0) first, (0,...,0,d) last.
std::vector<Monomial> monomial_basis(int m, int d);

/// All monomials in m variables of total degree <= d, by increasing degree
/// and lexicographically decreasing within a degree.
std::vector<Monomial> affine_monomials(int m, int d);

/// Rows ev(x^alpha) over the given points (each point has alpha.size()
/// coordinates), one row per monomial, 0^0 = 1.
Matrix evaluate_monomials(const FieldPtr& field, const std::vector<Elem>& points, const std::vector<Monomial>& monomials);

/// n = (q^(m+1) - 1) / (q - 1).
std::uint64_t prm_length(int q, int m);

/// Throws DegreeOutOfRange unless m >= 1 and 1 <= d <= m(q-1).
void check_prm_degree(int q, int m, int d);

/// Full |basis| x n evaluation matrix of PRM_d(q, m), before reduction.
Matrix prm_evaluation_matrix(const FieldPtr& field, int m, int d);

/// PRM_d(q, m) on the canonical point list.
LinearCode prm_code(const FieldPtr& field, int m, int d);

/// Closed-form dimension, evaluated in arbitrary precision.
std::uint64_t prm_dimension_formula(int q, int m, int d);

/// Closed-form minimum distance (q - l) q^(m-r-1) with d - 1 = r(q-1) + l.
std::uint64_t prm_min_distance_formula(int q, int m, int d);

/// m(q-1) - d.
int prm_dual_degree(int q, int m, int d);

struct PrmDual {
  LinearCode code;
  bool took_extension = false;  ///< all-ones vector added (d = 0 mod q-1)
};

/// Dual of PRM_d(q, m) as PRM of the dual degree, plus the all-ones vector when d = 0 mod q-1.
PrmDual prm_dual(const FieldPtr& field, int m, int d);

/// Affine Reed-Muller code RM_d(q, m) on F_q^m, points in lexicographic
/// order, last coordinate fastest. Requires 1 <= d <= m(q-1).
LinearCode rm_code(const FieldPtr& field, int m, int d);
std::uint64_t rm_dimension_formula(int q, int m, int d);
std::uint64_t rm_min_distance_formula(int q, int m, int d);

/// RM_{m(q-1)-d-1}(q, m); the zero code when that degree is negative.
LinearCode rm_dual(const FieldPtr& field, int m, int d);

struct QuantumTuple {
  std::uint64_t n = 0;
  std::uint64_t kappa = 0;
  std::uint64_t delta_z = 0;
  std::uint64_t delta_x = 0;
};

struct AffineProjectiveGain {
  QuantumTuple affine;
  QuantumTuple projective;
  std::uint64_t delta_gain = 0;  ///< (q^m - 1) / (q - 1)
  double affine_merit_z = 0;     ///< (kappa + delta_z) / n
  double affine_merit_x = 0;
  double projective_merit_z = 0;
  double projective_merit_x = 0;
};

/// CSS parameters (c = 0) from affine and projective Reed-Muller pairs.
/// Requires 1 <= d1 <= d2 < q-2 and d1 + d2 < q-2.
AffineProjectiveGain affine_projective_gain(int q, int m, int d1, int d2);

}  // namespace prmqc
