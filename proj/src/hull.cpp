#include "prmqc/hull.hpp"

#include <algorithm>

#include "prmqc/error.hpp"
#include "prmqc/projective.hpp"
#include "prmqc/prm.hpp"

namespace prmqc {

namespace {

std::vector<Elem> rootless_dual_vector(const FieldPtr& field, int m, int d, int degree_bound) {
  if (d < 1 || d >= degree_bound - 2)
    throw Error(Errc::DegreeOutOfRange,
                "need 1 <= d < " + std::to_string(degree_bound - 2) + ", got d = " + std::to_string(d));
  const Field& f = *field;
  const Poly t = find_rootless_monic(f, degree_bound - 1 - d);
  const ProjPointList pts(field, m);
  std::vector<Elem> v(pts.size(), 1);
  const auto [first, last] = pts.block_bounds(1);
  for (std::size_t i = first; i < last; ++i) v[i] = poly::eval(f, t, pts.point(i)[m]);
  return v;
}

int base_of(const Field& f) {
  auto base = f.quadratic_base();
  if (!base) throw Error(Errc::NotAQuadraticExtension, "GF(" + std::to_string(f.q()) + ") is not GF(q^2)");
  return *base;
}

// Lowers a hull by single-coordinate rescalings. The Gram-type matrix
// M = G H^T has rank k - hull; rescaling coordinate i of the code by a adds
// (factor(a) - 1) g_i h_i^T to M.
template <class Factor, class Rescale>
void lower_hull(const Field& f, Matrix& g, Matrix& h, std::size_t target_rank, std::vector<Elem>& scaling,
                Factor&& factor, Rescale&& rescale_h) {
  Matrix m = multiply_transposed(g, h);
  std::size_t current = rank(m);
  const std::size_t n = g.cols();
  Matrix trial = m;
  while (current < target_rank) {
    bool moved = false;
    for (std::size_t i = 0; i < n && !moved; ++i) {
      for (int a = 2; a < f.q() && !moved; ++a) {
        const Elem s = f.sub(factor(static_cast<Elem>(a)), 1);
        if (s == 0) continue;
        trial = m;
        for (std::size_t r = 0; r < g.rows(); ++r) {
          const Elem gr = f.mul(s, g(r, i));
          if (gr == 0) continue;
          for (std::size_t c = 0; c < h.rows(); ++c) trial(r, c) = f.add(trial(r, c), f.mul(gr, h(c, i)));
        }
        if (rank(trial) != current + 1) continue;
        m = trial;
        ++current;
        for (std::size_t r = 0; r < g.rows(); ++r) g(r, i) = f.mul(g(r, i), static_cast<Elem>(a));
        rescale_h(i, static_cast<Elem>(a));
        scaling[i] = f.mul(scaling[i], static_cast<Elem>(a));
        moved = true;
      }
    }
    if (!moved)
      throw Error(Errc::SweepExhausted, "no single-coordinate rescaling lowers the hull from dimension " +
                                            std::to_string(g.rows() - current));
  }
}

}  // namespace

std::vector<Elem> full_weight_dual_vector(const FieldPtr& field, int m, int d) {
  return rootless_dual_vector(field, m, d, field->q());
}

std::vector<Elem> preferred_full_weight_dual_vector(const FieldPtr& field, int m, int d) {
  const int q = field->q();
  if (d >= 1 && d % (q - 1) == 0 && d <= m * (q - 1)) {
    const Matrix ev = prm_evaluation_matrix(field, m, d);
    const std::vector<Elem> ones(ev.cols(), 1);
    bool orthogonal = true;
    for (std::size_t r = 0; r < ev.rows() && orthogonal; ++r) orthogonal = dot(*field, ones, ev.row(r)) == 0;
    if (orthogonal) return ones;
  }
  return full_weight_dual_vector(field, m, d);
}

std::vector<Elem> hermitian_base_vector(const FieldPtr& field, int m, int d) {
  return rootless_dual_vector(field, m, d, base_of(*field));
}

std::vector<Elem> hermitian_full_weight_vector(const FieldPtr& field, int m, int d) {
  const int q0 = base_of(*field);
  auto v = hermitian_base_vector(field, m, d);
  for (auto& e : v) e = field->pow(e, static_cast<std::uint64_t>(q0) + 1);
  return v;
}

std::vector<Elem> norm_root(const Field& f, std::span<const Elem> w) {
  const int q0 = base_of(f);
  std::vector<Elem> root_of(f.q(), 0);
  for (int a = f.q() - 1; a >= 1; --a) root_of[f.pow(static_cast<Elem>(a), static_cast<std::uint64_t>(q0) + 1)] = static_cast<Elem>(a);
  std::vector<Elem> u(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) throw Error(Errc::NotFullWeight, "zero entry at coordinate " + std::to_string(i));
    if (!f.in_subfield(w[i], q0))
      throw Error(Errc::PreconditionViolated, "entry " + std::to_string(i) + " is not in the base field");
    u[i] = root_of[w[i]];
  }
  return u;
}

bool orthogonal_to_star(std::span<const Elem> v, const LinearCode& c1, const LinearCode& c2) {
  const Field& f = *c1.field();
  std::vector<Elem> vb(v.size());
  for (std::size_t j = 0; j < c2.dimension(); ++j) {
    auto b = c2.generator().row(j);
    for (std::size_t i = 0; i < v.size(); ++i) vb[i] = f.mul(v[i], b[i]);
    for (std::size_t r = 0; r < c1.dimension(); ++r)
      if (dot(f, vb, c1.generator().row(r)) != 0) return false;
  }
  return true;
}

bool orthogonal_to_hermitian_star(std::span<const Elem> w, const LinearCode& c) {
  const int q0 = base_of(*c.field());
  return orthogonal_to_star(w, c, LinearCode(c.generator().frobenius(q0)));
}

LinearCode raise_relative_hull_full(const LinearCode& c1, const LinearCode& c2, std::span<const Elem> v) {
  if (v.size() != c1.length()) throw Error(Errc::ShapeMismatch, "scaling vector length");
  if (hamming_weight(v) != v.size()) throw Error(Errc::NotFullWeight, "scaling vector has a zero entry");
  if (!orthogonal_to_star(v, c1, c2))
    throw Error(Errc::VectorNotOrthogonal, "vector is not orthogonal to C1 * C2");
  return scale_coordinates(c1, v);
}

HullResult set_relative_hull_dim(const LinearCode& c1, const LinearCode& c2, std::size_t ell,
                                 std::span<const Elem> v) {
  const std::size_t k1 = c1.dimension();
  const std::size_t max_rank = std::min(k1, c2.dimension());
  if (ell > k1 || k1 - ell > max_rank)
    throw Error(Errc::TargetOutOfRange, "hull dimension " + std::to_string(ell) + " unreachable (k1 = " +
                                            std::to_string(k1) + ", k2 = " + std::to_string(c2.dimension()) + ")");
  const Field& f = *c1.field();
  if (f.q() == 2 && ell < k1) throw Error(Errc::BinaryFieldUnsupported, "hull cannot move over GF(2)");

  const LinearCode raised = raise_relative_hull_full(c1, c2, v);
  std::vector<Elem> scaling(v.begin(), v.end());
  Matrix g = raised.generator();
  Matrix h = c2.generator();
  lower_hull(f, g, h, k1 - ell, scaling, [](Elem a) { return a; }, [](std::size_t, Elem) {});

  HullResult res{scale_coordinates(c1, scaling), {}};
  res.target.mode = HullMode::RelativeEuclidean;
  res.target.target_dim = ell;
  res.target.scaling_vector = std::move(scaling);
  res.target.achieved_dim = relative_hull_dim(res.code, c2);
  return res;
}

HullResult set_hermitian_hull_dim(const LinearCode& c, std::size_t ell, std::span<const Elem> w) {
  const Field& f = *c.field();
  const int q0 = base_of(f);
  const std::size_t k = c.dimension();
  if (ell > k) throw Error(Errc::TargetOutOfRange, "hull dimension " + std::to_string(ell) + " exceeds k = " + std::to_string(k));
  if (q0 == 2 && ell < k) throw Error(Errc::BinaryFieldUnsupported, "Hermitian hull cannot move over GF(4)");
  if (w.size() != c.length()) throw Error(Errc::ShapeMismatch, "scaling vector length");
  std::vector<Elem> scaling = norm_root(f, w);
  if (!orthogonal_to_hermitian_star(w, c))
    throw Error(Errc::VectorNotOrthogonal, "vector is not orthogonal to C * C^q");

  Matrix g = scale_coordinates(c, scaling).generator();
  Matrix hq = g.frobenius(q0);
  auto norm = [&](Elem a) { return f.pow(a, static_cast<std::uint64_t>(q0) + 1); };
  auto rescale = [&](std::size_t i, Elem a) {
    const Elem aq = f.frobenius(a, q0);
    for (std::size_t r = 0; r < hq.rows(); ++r) hq(r, i) = f.mul(hq(r, i), aq);
  };
  lower_hull(f, g, hq, k - ell, scaling, norm, rescale);

  HullResult res{scale_coordinates(c, scaling), {}};
  res.target.mode = HullMode::Hermitian;
  res.target.target_dim = ell;
  res.target.scaling_vector = std::move(scaling);
  res.target.achieved_dim = hermitian_hull_dim(res.code);
  return res;
}

}  // namespace prmqc
