#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prmqc/field.hpp"

namespace prmqc {

/// Standard representatives of P^m over GF(q) (leftmost nonzero coordinate 1).
///
/// Points are stored block-major: block B_i holds the points whose leading 1
/// sits at coordinate m - i, so B_m = {1} x F^m comes first and B_0 is the
/// single point (0, ..., 0, 1). Inside a block the free coordinates run
/// lexicographically by element encoding, last coordinate fastest.
class ProjPointList {
 public:
  ProjPointList(FieldPtr field, int m);

  const FieldPtr& field() const noexcept { return field_; }
  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return points_.size() / (m_ + 1); }

  /// Coordinates x_0..x_m of point `index`.
  const Elem* point(std::size_t index) const noexcept { return &points_[index * (m_ + 1)]; }
  std::vector<Elem> point_vector(std::size_t index) const;

  /// Half-open index range [first, last) of block B_i.
  std::pair<std::size_t, std::size_t> block_bounds(int i) const;

  /// Block label i with point `index` in B_i.
  int block_of(std::size_t index) const;

  std::string point_string(std::size_t index) const;

 private:
  FieldPtr field_;
  int m_;
  std::vector<Elem> points_;
  std::vector<std::size_t> block_start_;  // indexed by i, B_i starts here
};

ProjPointList enumerate_projective_points(const FieldPtr& field, int m);

/// (q^(m+1) - 1) / (q - 1).
std::size_t projective_point_count(int q, int m);

}  // namespace prmqc
