#include "prmqc/field.hpp"

#include <algorithm>
#include <sstream>

#include "prmqc/error.hpp"

namespace prmqc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::UnsupportedFieldSize: return "UnsupportedFieldSize";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::InvalidSubfieldSize: return "InvalidSubfieldSize";
    case Errc::NotASubfield: return "NotASubfield";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotAQuadraticExtension: return "NotAQuadraticExtension";
    case Errc::NotFullWeight: return "NotFullWeight";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::EmptyCode: return "EmptyCode";
    case Errc::TargetOutOfRange: return "TargetOutOfRange";
    case Errc::BinaryFieldUnsupported: return "BinaryFieldUnsupported";
    case Errc::SweepExhausted: return "SweepExhausted";
    case Errc::VectorNotOrthogonal: return "VectorNotOrthogonal";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ContainmentFailed: return "ContainmentFailed";
    case Errc::ParityMismatch: return "ParityMismatch";
  }
  return "Unknown";
}

bool is_prime(long long n) noexcept {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(long long q) noexcept {
  if (q < 2) return std::nullopt;
  long long p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  long long r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) return std::nullopt;
  return std::pair<int, int>{static_cast<int>(p), k};
}

namespace {

constexpr int kMaxOrder = 256;

// Polynomials over GF(p) as int vectors, constant term first. Only used while
// choosing and validating a modulus, before any Field exists.
using IntPoly = std::vector<int>;

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly int_poly_mod(IntPoly a, const IntPoly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  int lead_inv = 1;
  while ((lead_inv * b.back()) % p != 1) ++lead_inv;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int f = (a.back() * lead_inv) % p;
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - f * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p
// digits of `index`.
IntPoly monic_from_index(long long index, int deg, int p) {
  IntPoly m(deg + 1, 0);
  for (int i = 0; i < deg; ++i) {
    m[i] = static_cast<int>(index % p);
    index /= p;
  }
  m[deg] = 1;
  return m;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool int_poly_irreducible(const IntPoly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 1) return deg == 1;
  for (int d = 1; d <= deg / 2; ++d) {
    const long long count = ipow(p, d);
    for (long long i = 0; i < count; ++i) {
      if (int_poly_mod(f, monic_from_index(i, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(static_cast<int>(ipow(p, k))), modulus_(std::move(modulus)) {
  const int q = q_;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  std::vector<std::vector<int>> digits(q, std::vector<int>(k, 0));
  for (int a = 0; a < q; ++a) {
    int r = a;
    for (int i = 0; i < k; ++i) {
      digits[a][i] = r % p;
      r /= p;
    }
  }
  auto encode = [&](const std::vector<int>& d) {
    int v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * p + d[i];
    return static_cast<Elem>(v);
  };

  std::vector<int> tmp(k);
  for (int a = 0; a < q; ++a) {
    for (int i = 0; i < k; ++i) tmp[i] = (p - digits[a][i]) % p;
    neg_[a] = encode(tmp);
    for (int b = 0; b < q; ++b) {
      for (int i = 0; i < k; ++i) tmp[i] = (digits[a][i] + digits[b][i]) % p;
      add_[a * q + b] = encode(tmp);
    }
  }

  // Multiplication: schoolbook product then reduction by the monic modulus.
  std::vector<int> prod(2 * k - 1);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      std::fill(prod.begin(), prod.end(), 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
      for (int deg = 2 * k - 2; deg >= k; --deg) {
        const int f = prod[deg];
        if (f == 0) continue;
        for (int i = 0; i <= k; ++i)
          prod[deg - k + i] = ((prod[deg - k + i] - f * modulus_[i]) % p + p) % p;
      }
      std::copy(prod.begin(), prod.begin() + k, tmp.begin());
      mul_[a * q + b] = encode(tmp);
    }
  }

  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }

  // Least-encoded generator of the multiplicative group.
  exp_.assign(q - 1, 1);
  log_.assign(q, -1);
  for (int g = 1; g < q; ++g) {
    int order = 1;
    Elem x = static_cast<Elem>(g);
    while (x != 1) {
      x = mul_[x * q + g];
      ++order;
    }
    if (order == q - 1) {
      primitive_ = static_cast<Elem>(g);
      break;
    }
  }
  Elem x = 1;
  for (int i = 0; i < q - 1; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_[x * q + primitive_];
  }
}

FieldPtr Field::make(int p, int k, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeP, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::PreconditionViolated, "extension degree must be >= 1");
  if (ipow(p, k) > kMaxOrder)
    throw Error(Errc::UnsupportedFieldSize, "field order " + std::to_string(ipow(p, k)) + " exceeds 256");

  std::vector<int> chosen;
  if (modulus) {
    chosen = *modulus;
    if (static_cast<int>(chosen.size()) != k + 1 || chosen.back() != 1)
      throw Error(Errc::ReducibleModulus, "modulus must be monic of degree " + std::to_string(k));
    for (int& c : chosen) {
      if (c < 0 || c >= p) throw Error(Errc::ReducibleModulus, "modulus coefficient out of range");
    }
    if (!int_poly_irreducible(chosen, p))
      throw Error(Errc::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
  } else if (k == 1) {
    chosen = {0, 1};
  } else {
    const long long count = ipow(p, k);
    for (long long i = 0; i < count; ++i) {
      IntPoly cand = monic_from_index(i, k, p);
      if (cand[0] == 0 || !int_poly_irreducible(cand, p)) continue;
      // Primitive iff x has multiplicative order p^k - 1.
      Field trial(p, k, cand);
      const Elem x = static_cast<Elem>(p);
      Elem y = x;
      long long order = 1;
      while (y != 1) {
        y = trial.mul(y, x);
        ++order;
      }
      if (order == count - 1) {
        chosen = cand;
        break;
      }
    }
  }
  return FieldPtr(new Field(p, k, std::move(chosen)));
}

FieldPtr Field::of_order(int q) {
  auto pk = prime_power(q);
  if (!pk) throw Error(Errc::NonPrimeP, std::to_string(q) + " is not a prime power");
  return make(pk->first, pk->second);
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  return os.str();
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::ZeroInverse, "inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = static_cast<std::uint64_t>(q_ - 1);
  const std::uint64_t idx = (static_cast<std::uint64_t>(log_[a]) * (e % order)) % order;
  return exp_[idx];
}

Elem Field::frobenius(Elem a, int q0) const {
  if (!is_subfield_size(q0))
    throw Error(Errc::InvalidSubfieldSize, std::to_string(q0) + " is not a subfield size of GF(" + std::to_string(q_) + ")");
  return pow(a, static_cast<std::uint64_t>(q0));
}

Elem Field::from_int(long long v) const noexcept {
  return static_cast<Elem>(((v % p_) + p_) % p_);
}

std::vector<int> Field::coefficients(Elem a) const {
  std::vector<int> c(k_);
  int r = a;
  for (int i = 0; i < k_; ++i) {
    c[i] = r % p_;
    r /= p_;
  }
  return c;
}

Elem Field::from_coefficients(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != k_) throw Error(Errc::ShapeMismatch, "coefficient vector length must equal k");
  int v = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    if (coeffs[i] < 0 || coeffs[i] >= p_) throw Error(Errc::PreconditionViolated, "coefficient out of range");
    v = v * p_ + coeffs[i];
  }
  return static_cast<Elem>(v);
}

bool Field::is_subfield_size(int q0) const noexcept {
  int pw = p_;
  for (int j = 1; j <= k_; ++j, pw *= p_)
    if (pw == q0) return k_ % j == 0;
  return false;
}

bool Field::in_subfield(Elem a, int q0) const { return frobenius(a, q0) == a; }

std::optional<int> Field::quadratic_base() const noexcept {
  if (k_ % 2 != 0) return std::nullopt;
  return static_cast<int>(ipow(p_, k_ / 2));
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw Error(Errc::FieldMismatch, "element without a field");
  if (value_ >= field_->q()) throw Error(Errc::PreconditionViolated, "element encoding out of range");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!same_field(field_, o.field_)) throw Error(Errc::FieldMismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  return same_field(field_, o.field_) && value_ == o.value_;
}

FieldElement frobenius(const FieldElement& a, int q0) {
  return {a.field(), a.field()->frobenius(a.value(), q0)};
}

FieldElement power_sum(const FieldPtr& field, std::uint64_t gamma) {
  // Zero unless gamma is a positive multiple of q - 1, where the sum is -1.
  const auto order = static_cast<std::uint64_t>(field->q() - 1);
  if (gamma > 0 && gamma % order == 0) return {field, field->neg(1)};
  return {field, 0};
}

SubfieldEmbedding::SubfieldEmbedding(FieldPtr sub, FieldPtr super) : sub_(std::move(sub)), super_(std::move(super)) {
  if (sub_->p() != super_->p() || super_->k() % sub_->k() != 0)
    throw Error(Errc::NotASubfield, "GF(" + std::to_string(sub_->q()) + ") is not a subfield of GF(" +
                                        std::to_string(super_->q()) + ")");
  const Field& F = *super_;
  Poly lifted(sub_->modulus().size());
  for (std::size_t i = 0; i < lifted.size(); ++i) lifted[i] = F.from_int(sub_->modulus()[i]);

  int root = -1;
  for (int x = 0; x < F.q(); ++x) {
    if (poly::eval(F, lifted, static_cast<Elem>(x)) == 0) {
      root = x;
      break;
    }
  }
  if (sub_->k() == 1) root = 0;  // modulus x: the basis is just {1}
  if (root < 0) throw Error(Errc::NotASubfield, "subfield modulus has no root in target");

  image_.resize(sub_->q());
  preimage_.assign(F.q(), -1);
  for (int a = 0; a < sub_->q(); ++a) {
    const auto c = sub_->coefficients(static_cast<Elem>(a));
    Elem acc = 0;
    Elem pw = 1;
    for (int i = 0; i < sub_->k(); ++i) {
      acc = F.add(acc, F.mul(F.from_int(c[i]), pw));
      pw = F.mul(pw, static_cast<Elem>(root));
    }
    image_[a] = acc;
    preimage_[acc] = a;
  }
}

std::optional<Elem> SubfieldEmbedding::preimage(Elem b) const noexcept {
  if (preimage_[b] < 0) return std::nullopt;
  return static_cast<Elem>(preimage_[b]);
}

FieldElement embed_subfield(const FieldElement& a, const FieldPtr& target) {
  SubfieldEmbedding emb(a.field(), target);
  return {target, emb(a.value())};
}

namespace poly {

Elem eval(const Field& f, const Poly& p, Elem x) {
  Elem acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

Poly mod(const Field& f, Poly a, const Poly& b) {
  auto trim = [](Poly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const Elem lead_inv = f.inv(b.back());
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const Elem factor = f.mul(a.back(), lead_inv);
    for (int i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
    trim(a);
  }
  return a;
}

bool has_root(const Field& f, const Poly& p) {
  for (int x = 0; x < f.q(); ++x)
    if (eval(f, p, static_cast<Elem>(x)) == 0) return true;
  return false;
}

bool is_irreducible(const Field& f, const Poly& p) {
  const int deg = static_cast<int>(p.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  if (has_root(f, p)) return false;
  for (int d = 2; d <= deg / 2; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= f.q();
    Poly divisor(d + 1);
    for (long long idx = 0; idx < count; ++idx) {
      long long r = idx;
      for (int i = 0; i < d; ++i) {
        divisor[i] = static_cast<Elem>(r % f.q());
        r /= f.q();
      }
      divisor[d] = 1;
      if (mod(f, p, divisor).empty()) return false;
    }
  }
  return true;
}

std::string to_string(const Poly& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << static_cast<int>(p[i]);
  return os.str();
}

}  // namespace poly

Poly find_rootless_monic(const Field& field, int degree) {
  if (degree < 2) throw Error(Errc::DegreeTooSmall, "rootless monic search needs degree >= 2");
  Poly cand(degree + 1, 0);
  cand[degree] = 1;
  // Odometer over the lower coefficients, constant term fastest: increasing
  // order of the integer encoding.
  while (true) {
    if (cand[0] != 0 && poly::is_irreducible(field, cand)) return cand;
    int i = 0;
    while (i < degree) {
      if (cand[i] + 1 < field.q()) {
        ++cand[i];
        break;
      }
      cand[i] = 0;
      ++i;
    }
    if (i == degree) break;
  }
  throw Error(Errc::PreconditionViolated, "no irreducible polynomial found");
}

}  // namespace prmqc
