#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prmqc {

/// Element of a small finite field, stored as the integer encoding
/// sum(rep[i] * p^i) of its polynomial-basis coefficient vector.
using Elem = std::uint8_t;

/// Polynomial over a field, coefficients constant term first.
using Poly = std::vector<Elem>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^k) with q = p^k <= 256, represented over the polynomial basis
/// 1, x, ..., x^(k-1) modulo a monic irreducible polynomial.
///
/// Full addition and multiplication tables are built at construction, so
/// every arithmetic operation is a table lookup. Instances are immutable.
class Field {
 public:
  /// Default modulus: the least monic primitive polynomial of degree k, with
  /// polynomials ordered by the integer encoding of their lower coefficients.
  /// For k = 1 the modulus is x (elements are residues mod p).
  static FieldPtr make(int p, int k, std::optional<std::vector<int>> modulus = std::nullopt);

  /// GF(q) for a prime power q, default modulus.
  static FieldPtr of_order(int q);

  int p() const noexcept { return p_; }
  int k() const noexcept { return k_; }
  int q() const noexcept { return q_; }

  /// Monic modulus, constant term first, length k+1.
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  std::string modulus_string() const;

  Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// a^q0 for a subfield size q0 = p^j, j | k.
  Elem frobenius(Elem a, int q0) const;

  /// Fixed generator of the multiplicative group (least encoding).
  Elem primitive() const noexcept { return primitive_; }

  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const noexcept;

  std::vector<int> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const int> coeffs) const;

  bool is_subfield_size(int q0) const noexcept;
  bool in_subfield(Elem a, int q0) const;

  /// q0 with q0 * q0 == q, when the field is a quadratic extension.
  std::optional<int> quadratic_base() const noexcept;

  /// Row of the multiplication table: mul_row(f)[x] == f * x.
  const Elem* mul_row(Elem f) const noexcept { return &mul_[f * q_]; }
  /// Row of the addition table: add_row(a)[x] == a + x.
  const Elem* add_row(Elem a) const noexcept { return &add_[a * q_]; }

  bool operator==(const Field& other) const noexcept {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  Field(int p, int k, std::vector<int> modulus);

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> exp_;
  std::vector<int> log_;
  Elem primitive_ = 1;
};

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

/// Value-semantic element bound to its field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  std::vector<int> rep() const { return field_->coefficients(value_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Elem value_;
};

FieldElement frobenius(const FieldElement& a, int q0);

/// Sum of z^gamma over all z in the field, with 0^0 = 1.
FieldElement power_sum(const FieldPtr& field, std::uint64_t gamma);

/// Ring embedding GF(p^j) -> GF(p^k), j | k. The generator x of the subfield
/// is sent to the least-encoded root of the subfield modulus in the target.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FieldPtr sub, FieldPtr super);

  const FieldPtr& sub() const noexcept { return sub_; }
  const FieldPtr& super() const noexcept { return super_; }

  Elem operator()(Elem a) const noexcept { return image_[a]; }
  /// Inverse image, if `b` lies in the embedded subfield.
  std::optional<Elem> preimage(Elem b) const noexcept;

 private:
  FieldPtr sub_;
  FieldPtr super_;
  std::vector<Elem> image_;
  std::vector<int> preimage_;
};

FieldElement embed_subfield(const FieldElement& a, const FieldPtr& target);

namespace poly {

Elem eval(const Field& f, const Poly& p, Elem x);
/// Remainder of a modulo b (b nonzero with nonzero leading coefficient).
Poly mod(const Field& f, Poly a, const Poly& b);
bool has_root(const Field& f, const Poly& p);
/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(const Field& f, const Poly& p);
std::string to_string(const Poly& p);

}  // namespace poly

/// Least monic irreducible polynomial of the given degree over `field`;
/// it has no roots in the field. Requires degree >= 2.
Poly find_rootless_monic(const Field& field, int degree);

bool is_prime(long long n) noexcept;
/// (p, k) with q = p^k, if q is a prime power.
std::optional<std::pair<int, int>> prime_power(long long q) noexcept;

}  // namespace prmqc
