#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "prmqc/field.hpp"
#include "prmqc/matrix.hpp"

namespace prmqc {

/// Linear code held by its canonical (reduced row echelon, no zero rows)
/// generator matrix. Two codes are equal iff their canonical generators are.
class LinearCode {
 public:
  explicit LinearCode(Matrix generator);

  static LinearCode zero(FieldPtr field, std::size_t n);
  static LinearCode full(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return generator_.field(); }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const Matrix& generator() const noexcept { return generator_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// A basis of the dual, i.e. a parity-check matrix.
  Matrix parity_check() const;

  bool contains(std::span<const Elem> word) const;
  bool is_subcode_of(const LinearCode& other) const;
  std::vector<Elem> encode(std::span<const Elem> message) const;

  bool operator==(const LinearCode& other) const noexcept { return generator_ == other.generator_; }

 private:
  Matrix generator_;
  std::vector<std::size_t> pivots_;
};

std::size_t hamming_weight(std::span<const Elem> word) noexcept;

LinearCode dual(const LinearCode& c);

/// Hermitian product sum v_i * w_i^q0 over GF(q0^2).
Elem hermitian_product(const Field& f, std::span<const Elem> v, std::span<const Elem> w);

/// (C^perp)^q0 for a code over GF(q0^2).
LinearCode hermitian_dual(const LinearCode& c);

/// Span of all componentwise products of basis pairs.
LinearCode star_product(const LinearCode& a, const LinearCode& b);

/// dim(C1 ∩ C2^perp) = k1 - rank(G1 G2^T).
std::size_t relative_hull_dim(const LinearCode& c1, const LinearCode& c2);
LinearCode relative_hull(const LinearCode& c1, const LinearCode& c2);

/// dim(C ∩ C^perp_h) = k - rank(G (G^q0)^T).
std::size_t hermitian_hull_dim(const LinearCode& c);
LinearCode hermitian_hull(const LinearCode& c);

/// C ∩ GF(q)^n, returned as a code over `base`.
///
/// Solves the Frobenius-fixed condition c^q = c on codewords c = uG, written
/// as a linear system over the prime field in the coordinates of u.
LinearCode subfield_subcode(const LinearCode& c, const FieldPtr& base);

/// Re-embed a code over a subfield into the larger field.
LinearCode extend_scalars(const LinearCode& c, const FieldPtr& target);

struct Degeneracy {
  bool degenerate = false;
  std::vector<std::size_t> zero_columns;
};
Degeneracy is_degenerate(const LinearCode& c);

/// <v> * C for a full-weight vector v.
LinearCode scale_coordinates(const LinearCode& c, std::span<const Elem> v);

/// Componentwise inverse of a full-weight vector.
std::vector<Elem> inverse_vector(const Field& f, std::span<const Elem> v);

}  // namespace prmqc
