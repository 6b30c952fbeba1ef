#include "prmqc/linear_code.hpp"

#include <algorithm>

#include "prmqc/error.hpp"

namespace prmqc {

namespace {

void require_compatible(const LinearCode& a, const LinearCode& b, const char* op) {
  if (!same_field(a.field(), b.field())) throw Error(Errc::FieldMismatch, std::string(op) + ": codes over different fields");
  if (a.length() != b.length()) throw Error(Errc::ShapeMismatch, std::string(op) + ": codes of different length");
}

int require_quadratic(const LinearCode& c) {
  auto base = c.field()->quadratic_base();
  if (!base)
    throw Error(Errc::NotAQuadraticExtension,
                "GF(" + std::to_string(c.field()->q()) + ") is not a quadratic extension");
  return *base;
}

// Rows u * G for u ranging over a basis of the left kernel of M.
LinearCode combine_left_kernel(const Matrix& m, const Matrix& g) {
  const Matrix coeffs = null_space(m.transpose());
  Matrix words(g.field(), 0, g.cols());
  std::vector<Elem> w(g.cols());
  for (std::size_t i = 0; i < coeffs.rows(); ++i) {
    std::fill(w.begin(), w.end(), Elem{0});
    for (std::size_t j = 0; j < g.rows(); ++j) add_scaled_row(*g.field(), w, g.row(j), coeffs(i, j));
    words.append_row(w);
  }
  return LinearCode(std::move(words));
}

}  // namespace

LinearCode::LinearCode(Matrix generator) : generator_(generator.field(), 0, generator.cols()) {
  auto res = rref(std::move(generator));
  generator_ = std::move(res.reduced);
  pivots_ = std::move(res.pivots);
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) { return LinearCode(Matrix(std::move(field), 0, n)); }

LinearCode LinearCode::full(FieldPtr field, std::size_t n) { return LinearCode(Matrix::identity(std::move(field), n)); }

Matrix LinearCode::parity_check() const { return null_space(generator_); }

bool LinearCode::contains(std::span<const Elem> word) const {
  if (word.size() != length()) throw Error(Errc::ShapeMismatch, "word length differs from code length");
  const Field& f = *field();
  std::vector<Elem> r(word.begin(), word.end());
  for (std::size_t row = 0; row < dimension(); ++row) {
    const std::size_t c = pivots_[row];
    if (r[c] != 0) add_scaled_row(f, r, generator_.row(row), f.neg(r[c]), c);
  }
  return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

bool LinearCode::is_subcode_of(const LinearCode& other) const {
  require_compatible(*this, other, "is_subcode_of");
  for (std::size_t i = 0; i < dimension(); ++i)
    if (!other.contains(generator_.row(i))) return false;
  return true;
}

std::vector<Elem> LinearCode::encode(std::span<const Elem> message) const {
  if (message.size() != dimension()) throw Error(Errc::ShapeMismatch, "message length differs from dimension");
  std::vector<Elem> w(length(), 0);
  for (std::size_t i = 0; i < dimension(); ++i) add_scaled_row(*field(), w, generator_.row(i), message[i]);
  return w;
}

std::size_t hamming_weight(std::span<const Elem> word) noexcept {
  return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem e) { return e != 0; }));
}

LinearCode dual(const LinearCode& c) { return LinearCode(c.parity_check()); }

Elem hermitian_product(const Field& f, std::span<const Elem> v, std::span<const Elem> w) {
  auto base = f.quadratic_base();
  if (!base) throw Error(Errc::NotAQuadraticExtension, "hermitian product needs GF(q^2)");
  Elem acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) acc = f.add(acc, f.mul(v[i], f.pow(w[i], *base)));
  return acc;
}

LinearCode hermitian_dual(const LinearCode& c) {
  const int q0 = require_quadratic(c);
  return LinearCode(c.parity_check().frobenius(q0));
}

LinearCode star_product(const LinearCode& a, const LinearCode& b) {
  require_compatible(a, b, "star_product");
  const Field& f = *a.field();
  Matrix products(a.field(), 0, a.length());
  std::vector<Elem> w(a.length());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    auto u = a.generator().row(i);
    for (std::size_t j = 0; j < b.dimension(); ++j) {
      auto v = b.generator().row(j);
      for (std::size_t x = 0; x < w.size(); ++x) w[x] = f.mul(u[x], v[x]);
      products.append_row(w);
    }
  }
  return LinearCode(std::move(products));
}

std::size_t relative_hull_dim(const LinearCode& c1, const LinearCode& c2) {
  require_compatible(c1, c2, "relative_hull_dim");
  return c1.dimension() - rank(multiply_transposed(c1.generator(), c2.generator()));
}

LinearCode relative_hull(const LinearCode& c1, const LinearCode& c2) {
  require_compatible(c1, c2, "relative_hull");
  return combine_left_kernel(multiply_transposed(c1.generator(), c2.generator()), c1.generator());
}

std::size_t hermitian_hull_dim(const LinearCode& c) {
  const int q0 = require_quadratic(c);
  return c.dimension() - rank(multiply_transposed(c.generator(), c.generator().frobenius(q0)));
}

LinearCode hermitian_hull(const LinearCode& c) {
  const int q0 = require_quadratic(c);
  return combine_left_kernel(multiply_transposed(c.generator(), c.generator().frobenius(q0)), c.generator());
}

LinearCode subfield_subcode(const LinearCode& c, const FieldPtr& base) {
  const FieldPtr& big = c.field();
  const SubfieldEmbedding emb(base, big);  // throws NotASubfield
  const Field& F = *big;
  const int q0 = base->q();
  const std::size_t n = c.length();
  const std::size_t k = c.dimension();
  const int K = F.k();
  const FieldPtr prime = Field::make(F.p(), 1);

  // Unknowns: u[r][t] in GF(p), message row r = sum_t u[r][t] x^t.
  // Equations: every prime-field coordinate of (c_i)^q0 - c_i vanishes.
  std::vector<Elem> basis(K);
  for (int t = 0; t < K; ++t) {
    int e = 1;
    for (int i = 0; i < t; ++i) e *= F.p();
    basis[t] = static_cast<Elem>(e);
  }
  Matrix system(prime, n * K, k * K);
  for (std::size_t r = 0; r < k; ++r) {
    for (int t = 0; t < K; ++t) {
      const std::size_t col = r * K + t;
      for (std::size_t i = 0; i < n; ++i) {
        const Elem y = F.mul(basis[t], c.generator()(r, i));
        const Elem phi = F.sub(F.pow(y, static_cast<std::uint64_t>(q0)), y);
        const auto coeffs = F.coefficients(phi);
        for (int j = 0; j < K; ++j) system(i * K + j, col) = static_cast<Elem>(coeffs[j]);
      }
    }
  }
  const Matrix kernel = null_space(system);

  Matrix words(base, 0, n);
  std::vector<Elem> w(n);
  std::vector<Elem> sub(n);
  for (std::size_t v = 0; v < kernel.rows(); ++v) {
    std::fill(w.begin(), w.end(), Elem{0});
    for (std::size_t r = 0; r < k; ++r) {
      Elem coeff = 0;
      for (int t = 0; t < K; ++t) coeff = F.add(coeff, F.mul(kernel(v, r * K + t), basis[t]));
      add_scaled_row(F, w, c.generator().row(r), coeff);
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto pre = emb.preimage(w[i]);
      if (!pre) throw Error(Errc::ContainmentFailed, "subfield subcode word left the subfield");
      sub[i] = *pre;
    }
    words.append_row(sub);
  }
  return LinearCode(std::move(words));
}

LinearCode extend_scalars(const LinearCode& c, const FieldPtr& target) {
  const SubfieldEmbedding emb(c.field(), target);
  Matrix g(target, c.dimension(), c.length());
  for (std::size_t r = 0; r < c.dimension(); ++r)
    for (std::size_t i = 0; i < c.length(); ++i) g(r, i) = emb(c.generator()(r, i));
  return LinearCode(std::move(g));
}

Degeneracy is_degenerate(const LinearCode& c) {
  Degeneracy d;
  for (std::size_t i = 0; i < c.length(); ++i) {
    bool zero = true;
    for (std::size_t r = 0; r < c.dimension() && zero; ++r) zero = c.generator()(r, i) == 0;
    if (zero) d.zero_columns.push_back(i);
  }
  d.degenerate = !d.zero_columns.empty();
  return d;
}

LinearCode scale_coordinates(const LinearCode& c, std::span<const Elem> v) {
  if (v.size() != c.length()) throw Error(Errc::ShapeMismatch, "scaling vector length");
  if (hamming_weight(v) != v.size()) throw Error(Errc::NotFullWeight, "scaling vector has a zero entry");
  const Field& f = *c.field();
  Matrix g = c.generator();
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t i = 0; i < g.cols(); ++i) g(r, i) = f.mul(g(r, i), v[i]);
  return LinearCode(std::move(g));
}

std::vector<Elem> inverse_vector(const Field& f, std::span<const Elem> v) {
  std::vector<Elem> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.inv(v[i]);
  return out;
}

}  // namespace prmqc
