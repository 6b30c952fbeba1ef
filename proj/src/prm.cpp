#include "prmqc/prm.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "prmqc/error.hpp"

namespace prmqc {

namespace {

using boost::multiprecision::cpp_int;

cpp_int binom(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  cpp_int r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void push_compositions(int vars, int total, Monomial& cur, int pos, std::vector<Monomial>& out) {
  if (pos == vars - 1) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (int a = total; a >= 0; --a) {
    cur[pos] = a;
    push_compositions(vars, total - a, cur, pos + 1, out);
  }
}

// Exponent with the same values on F_q: a >= q is reduced to ((a-1) mod (q-1)) + 1.
int reduce_exponent(int a, int q) { return a < q ? a : (a - 1) % (q - 1) + 1; }

std::vector<Monomial> distinct_on_field(const std::vector<Monomial>& monomials, int q) {
  std::vector<Monomial> out;
  std::map<Monomial, bool> seen;
  for (const auto& mono : monomials) {
    Monomial r(mono.size());
    for (std::size_t i = 0; i < mono.size(); ++i) r[i] = reduce_exponent(mono[i], q);
    if (seen.emplace(r, true).second) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Elem> flat_points(const ProjPointList& pts) {
  const Elem* first = pts.point(0);
  return {first, first + pts.size() * (pts.m() + 1)};
}

std::vector<Elem> affine_points(const Field& f, int m) {
  const int q = f.q();
  const std::uint64_t count = ipow(static_cast<std::uint64_t>(q), m);
  std::vector<Elem> pts;
  pts.reserve(count * m);
  std::vector<int> digits(m, 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    for (int j = 0; j < m; ++j) pts.push_back(static_cast<Elem>(digits[j]));
    for (int pos = m - 1; pos >= 0; --pos) {
      if (++digits[pos] < q) break;
      digits[pos] = 0;
    }
  }
  return pts;
}

void check_rm_degree(int q, int m, int d) {
  if (m < 1 || d < 1 || d > m * (q - 1))
    throw Error(Errc::DegreeOutOfRange, "RM degree " + std::to_string(d) + " outside 1.." + std::to_string(m * (q - 1)));
}

std::uint64_t rm_distance_for_degree(int q, int m, int d) {
  // d = r(q-1) + l, 0 <= l < q-1; distance (q-l) q^(m-r-1).
  const int r = d / (q - 1);
  const int l = d % (q - 1);
  if (r >= m) return 1;
  return static_cast<std::uint64_t>(q - l) * ipow(static_cast<std::uint64_t>(q), m - r - 1);
}

}  // namespace

std::vector<Monomial> monomial_basis(int m, int d) {
  if (d < 0) throw Error(Errc::DegreeOutOfRange, "negative degree");
  std::vector<Monomial> out;
  Monomial cur(m + 1, 0);
  push_compositions(m + 1, d, cur, 0, out);
  return out;
}

std::vector<Monomial> affine_monomials(int m, int d) {
  std::vector<Monomial> out;
  Monomial cur(m, 0);
  for (int t = 0; t <= d; ++t) push_compositions(m, t, cur, 0, out);
  return out;
}

Matrix evaluate_monomials(const FieldPtr& field, const std::vector<Elem>& points,
                          const std::vector<Monomial>& monomials) {
  const Field& f = *field;
  const int q = f.q();
  const std::size_t width = monomials.empty() ? 1 : monomials.front().size();
  const std::size_t n = points.size() / width;
  // powers[z * q + e] = z^e for reduced exponents e <= q-1.
  std::vector<Elem> powers(static_cast<std::size_t>(q) * q);
  for (int z = 0; z < q; ++z)
    for (int e = 0; e < q; ++e) powers[z * q + e] = f.pow(static_cast<Elem>(z), static_cast<std::uint64_t>(e));

  Matrix out(field, monomials.size(), n);
  for (std::size_t r = 0; r < monomials.size(); ++r) {
    std::vector<int> red(width);
    for (std::size_t j = 0; j < width; ++j) red[j] = reduce_exponent(monomials[r][j], q);
    auto row = out.row(r);
    for (std::size_t i = 0; i < n; ++i) {
      Elem v = 1;
      const Elem* p = &points[i * width];
      for (std::size_t j = 0; j < width && v != 0; ++j)
        if (red[j] != 0) v = f.mul(v, powers[p[j] * q + red[j]]);
      row[i] = v;
    }
  }
  return out;
}

std::uint64_t prm_length(int q, int m) { return projective_point_count(q, m); }

void check_prm_degree(int q, int m, int d) {
  if (m < 1 || d < 1 || d > m * (q - 1))
    throw Error(Errc::DegreeOutOfRange,
                "PRM degree " + std::to_string(d) + " outside 1.." + std::to_string(m * (q - 1)));
}

Matrix prm_evaluation_matrix(const FieldPtr& field, int m, int d) {
  const ProjPointList pts(field, m);
  return evaluate_monomials(field, flat_points(pts), monomial_basis(m, d));
}

LinearCode prm_code(const FieldPtr& field, int m, int d) {
  check_prm_degree(field->q(), m, d);
  const ProjPointList pts(field, m);
  // Monomials agreeing on F_q give equal rows; dropping repeats keeps the span.
  return LinearCode(evaluate_monomials(field, flat_points(pts), distinct_on_field(monomial_basis(m, d), field->q())));
}

std::uint64_t prm_dimension_formula(int q, int m, int d) {
  check_prm_degree(q, m, d);
  cpp_int k = 0;
  for (int t = d; t > 0; t -= q - 1) {
    for (int j = 0; j <= m + 1; ++j) {
      const long long a = static_cast<long long>(t) - static_cast<long long>(j) * q;
      const cpp_int term = binom(m + 1, j) * binom(a + m, a);
      if (j % 2 == 0)
        k += term;
      else
        k -= term;
    }
  }
  return k.convert_to<std::uint64_t>();
}

std::uint64_t prm_min_distance_formula(int q, int m, int d) {
  check_prm_degree(q, m, d);
  return rm_distance_for_degree(q, m, d - 1);
}

int prm_dual_degree(int q, int m, int d) {
  check_prm_degree(q, m, d);
  return m * (q - 1) - d;
}

PrmDual prm_dual(const FieldPtr& field, int m, int d) {
  const int q = field->q();
  const int dd = prm_dual_degree(q, m, d);
  const ProjPointList pts(field, m);
  const auto points = flat_points(pts);
  Matrix g = evaluate_monomials(field, points, distinct_on_field(monomial_basis(m, dd), q));
  const bool extend = d % (q - 1) == 0;
  if (extend) g.append_row(std::vector<Elem>(pts.size(), 1));
  return {LinearCode(std::move(g)), extend};
}

LinearCode rm_code(const FieldPtr& field, int m, int d) {
  check_rm_degree(field->q(), m, d);
  return LinearCode(
      evaluate_monomials(field, affine_points(*field, m), distinct_on_field(affine_monomials(m, d), field->q())));
}

std::uint64_t rm_dimension_formula(int q, int m, int d) {
  check_rm_degree(q, m, d);
  // Monomials of degree <= d with every exponent <= q-1.
  cpp_int k = 0;
  for (int j = 0; j <= m; ++j) {
    const cpp_int term = binom(m, j) * binom(static_cast<long long>(d) - static_cast<long long>(j) * q + m, m);
    if (j % 2 == 0)
      k += term;
    else
      k -= term;
  }
  return k.convert_to<std::uint64_t>();
}

std::uint64_t rm_min_distance_formula(int q, int m, int d) {
  check_rm_degree(q, m, d);
  return rm_distance_for_degree(q, m, d);
}

LinearCode rm_dual(const FieldPtr& field, int m, int d) {
  const int q = field->q();
  check_rm_degree(q, m, d);
  const int dd = m * (q - 1) - d - 1;
  const auto points = affine_points(*field, m);
  if (dd < 0) return LinearCode::zero(field, points.size() / m);
  return LinearCode(evaluate_monomials(field, points, distinct_on_field(affine_monomials(m, dd), q)));
}

AffineProjectiveGain affine_projective_gain(int q, int m, int d1, int d2) {
  if (!(1 <= d1 && d1 <= d2 && d2 < q - 2 && d1 + d2 < q - 2))
    throw Error(Errc::PreconditionViolated, "need 1 <= d1 <= d2 < q-2 and d1+d2 < q-2");
  AffineProjectiveGain g;
  const std::uint64_t qm = ipow(static_cast<std::uint64_t>(q), m);
  g.delta_gain = (qm - 1) / (q - 1);

  g.affine.n = qm;
  g.affine.kappa = qm - rm_dimension_formula(q, m, d1) - rm_dimension_formula(q, m, d2);
  g.affine.delta_z = rm_distance_for_degree(q, m, m * (q - 1) - d2 - 1);
  g.affine.delta_x = rm_distance_for_degree(q, m, m * (q - 1) - d1 - 1);

  const std::uint64_t n = prm_length(q, m);
  g.projective.n = n;
  g.projective.kappa = n - prm_dimension_formula(q, m, d1) - prm_dimension_formula(q, m, d2);
  g.projective.delta_z = prm_min_distance_formula(q, m, prm_dual_degree(q, m, d2));
  g.projective.delta_x = prm_min_distance_formula(q, m, prm_dual_degree(q, m, d1));

  auto merit = [](std::uint64_t kappa, std::uint64_t delta, std::uint64_t len) {
    return static_cast<double>(kappa + delta) / static_cast<double>(len);
  };
  g.affine_merit_z = merit(g.affine.kappa, g.affine.delta_z, g.affine.n);
  g.affine_merit_x = merit(g.affine.kappa, g.affine.delta_x, g.affine.n);
  g.projective_merit_z = merit(g.projective.kappa, g.projective.delta_z, n);
  g.projective_merit_x = merit(g.projective.kappa, g.projective.delta_x, n);
  return g;
}

}  // namespace prmqc
