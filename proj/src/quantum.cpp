#include "prmqc/quantum.hpp"

#include <algorithm>
#include <sstream>

#include "prmqc/error.hpp"
#include "prmqc/prm.hpp"

namespace prmqc {

namespace {

constexpr std::uint64_t kExhaustiveLimit = 1ULL << 20;

struct Fnv {
  std::uint64_t h = 1469598103934665603ULL;
  void feed(const Elem* data, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
      h ^= data[i];
      h *= 1099511628211ULL;
    }
  }
  void feed(const LinearCode& c) {
    const std::uint64_t shape[2] = {c.dimension(), c.length()};
    feed(reinterpret_cast<const Elem*>(shape), sizeof shape);
    feed(c.generator().data().data(), c.generator().data().size());
  }
};

std::uint64_t qpow(int q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > kExhaustiveLimit) return r;
    r *= static_cast<std::uint64_t>(q);
  }
  return r;
}

bool outside(const std::optional<WeightCertificate>& cert, const LinearCode& code) {
  return cert && cert->exact() && cert->witness && !code.contains(*cert->witness);
}

int checked_base(const Field& f) {
  auto base = f.quadratic_base();
  if (!base) throw Error(Errc::NotAQuadraticExtension, "GF(" + std::to_string(f.q()) + ") is not GF(q^2)");
  return *base;
}

int checked_power(int q, int s) {
  if (!prime_power(q) || s < 1) throw Error(Errc::PreconditionViolated, "q must be a prime power and s >= 1");
  long long v = 1;
  for (int i = 0; i < s; ++i) {
    v *= q;
    if (v > 256) throw Error(Errc::PreconditionViolated, "q^s exceeds 256");
  }
  return static_cast<int>(v);
}

}  // namespace

std::string_view to_string(Purity p) noexcept { return p == Purity::Pure ? "Pure" : "PossiblyImpure"; }

std::string Provenance::describe() const {
  std::ostringstream os;
  os << construction << " q=" << q;
  if (s != 1) os << " s=" << s;
  os << " m=" << m;
  if (!degrees.empty()) {
    os << " d=";
    for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  }
  if (lambda) os << " lambda=" << *lambda;
  os << " c=" << c << " hash=" << std::hex << witness_hash;
  return os.str();
}

std::optional<std::uint64_t> reported_distance(const std::optional<WeightCertificate>& cert,
                                               const std::optional<std::uint64_t>& formula) {
  if (!cert) return formula;
  if (cert->exact()) return cert->value;
  return formula ? std::max<std::uint64_t>(*formula, cert->value) : cert->value;
}

std::optional<WeightCertificate> dual_distance_certificate(const LinearCode& c, std::uint64_t budget) {
  const std::size_t r = c.length() - c.dimension();
  if (r == 0) return std::nullopt;
  const std::uint64_t words = qpow(c.field()->q(), r);
  if (words <= kExhaustiveLimit && words <= budget) return min_distance_exact(dual(c), budget);
  return dual_minimum_distance(c, budget);
}

CssParams css_params(const LinearCode& c1, const LinearCode& c2, std::uint64_t budget) {
  if (!same_field(c1.field(), c2.field())) throw Error(Errc::FieldMismatch, "codes over different fields");
  if (c1.length() != c2.length()) throw Error(Errc::ShapeMismatch, "codes of different length");
  CssParams p;
  p.n = c1.length();
  p.k1 = c1.dimension();
  p.k2 = c2.dimension();
  p.c = p.k1 - relative_hull_dim(c1, c2);
  p.kappa = p.n - p.k1 - p.k2 + p.c;
  p.delta_z = dual_distance_certificate(c2, budget);
  p.delta_x = dual_distance_certificate(c1, budget);
  // A minimum-weight word outside the other code attains the true distance.
  const bool z_pure = !p.delta_z || outside(p.delta_z, c1);
  const bool x_pure = !p.delta_x || outside(p.delta_x, c2);
  p.purity = z_pure && x_pure ? Purity::Pure : Purity::PossiblyImpure;
  p.degenerate = is_degenerate(c1).degenerate || is_degenerate(c2).degenerate;
  if (p.degenerate) p.notes.push_back("degenerate classical code: a dual distance is 1");
  return p;
}

HermParams hermitian_params(const LinearCode& c, std::uint64_t budget) {
  const int q0 = checked_base(*c.field());
  HermParams p;
  p.n = c.length();
  p.k = c.dimension();
  p.c = p.k - hermitian_hull_dim(c);
  p.kappa = p.n - 2 * p.k + p.c;
  p.delta = dual_distance_certificate(c, budget);
  if (p.delta && p.delta->witness) {
    // Conjugating a word of C^perp gives a word of C^perp_h of the same weight.
    for (auto& e : *p.delta->witness) e = c.field()->frobenius(e, q0);
  }
  p.purity = !p.delta || outside(p.delta, c) ? Purity::Pure : Purity::PossiblyImpure;
  if (is_degenerate(c).degenerate) p.notes.push_back("degenerate classical code: the dual distance is 1");
  return p;
}

CssConstruction construct_css_prm(int q, int m, int d1, int d2, std::size_t c_target, std::uint64_t budget) {
  if (!prime_power(q)) throw Error(Errc::PreconditionViolated, "q must be a prime power");
  if (!(1 <= d1 && d1 <= d2 && d2 < q - 2 && d1 + d2 < q - 2))
    throw Error(Errc::PreconditionViolated, "need 1 <= d1 <= d2 < q-2 and d1+d2 < q-2");
  const FieldPtr f = Field::of_order(q);
  const LinearCode c1 = prm_code(f, m, d1);
  const LinearCode c2 = prm_code(f, m, d2);
  if (c_target > c1.dimension())
    throw Error(Errc::PreconditionViolated, "c exceeds dim PRM_d1 = " + std::to_string(c1.dimension()));

  const auto v = preferred_full_weight_dual_vector(f, m, d1 + d2);
  HullResult hull = set_relative_hull_dim(c1, c2, c1.dimension() - c_target, v);
  CssConstruction out{css_params(hull.code, c2, budget), hull.code, c2, hull.target};
  if (out.params.c != c_target) throw Error(Errc::ContainmentFailed, "hull sweep produced the wrong c");
  out.params.delta_z_formula = prm_min_distance_formula(q, m, prm_dual_degree(q, m, d2));
  out.params.delta_x_formula = prm_min_distance_formula(q, m, prm_dual_degree(q, m, d1));

  Fnv h;
  h.feed(out.c1);
  h.feed(out.c2);
  h.feed(hull.target.scaling_vector.data(), hull.target.scaling_vector.size());
  out.params.provenance = {"css-prm", q, 1, m, {d1, d2}, std::nullopt, c_target, h.h};
  return out;
}

CssConstruction construct_css_subfield(int q, int s, int m, int d1, int d2, std::uint64_t budget) {
  const int big = checked_power(q, s);
  if (m < 1) throw Error(Errc::PreconditionViolated, "m must be >= 1");
  const int sum = d1 + d2;
  if (d1 < 1 || d2 < 1 || sum % (big - 1) != 0 || sum / (big - 1) < 1 || sum / (big - 1) > m)
    throw Error(Errc::PreconditionViolated, "need d1 + d2 = lambda (q^s - 1) with 1 <= lambda <= m");
  const int lambda = sum / (big - 1);
  const FieldPtr fbig = Field::of_order(big);
  const FieldPtr fbase = Field::of_order(q);
  const LinearCode c1 = subfield_subcode(prm_code(fbig, m, d1), fbase);
  const LinearCode c2 = subfield_subcode(prm_code(fbig, m, d2), fbase);
  if (relative_hull_dim(c1, c2) != c1.dimension())
    throw Error(Errc::ContainmentFailed, "first subfield subcode is not inside the dual of the second");

  CssConstruction out{css_params(c1, c2, budget), c1, c2, std::nullopt};
  Fnv h;
  h.feed(c1);
  h.feed(c2);
  out.params.provenance = {"css-subfield", q, s, m, {d1, d2}, lambda, 0, h.h};
  return out;
}

HermConstruction construct_hermitian_prm(int q, int m, int d, std::size_t c_target, std::uint64_t budget) {
  if (!prime_power(q) || q * q > 256) throw Error(Errc::PreconditionViolated, "need a prime power q with q^2 <= 256");
  const int Q = q * q;
  if (m < 1 || d < 1 || d > m * (Q - 1)) throw Error(Errc::PreconditionViolated, "degree out of range");
  const FieldPtr f = Field::of_order(Q);
  const LinearCode base_code = prm_code(f, m, d);
  const bool self_orthogonal_branch = d % (q - 1) == 0 && d / (q - 1) <= m && d % (Q - 1) != 0;
  const bool sweep_branch = d < q - 2;

  HermConstruction out{{}, base_code, std::nullopt};
  Fnv h;
  if (self_orthogonal_branch) {
    if (c_target != 0) throw Error(Errc::PreconditionViolated, "d = lambda(q-1) gives c = 0 only");
    if (hermitian_hull_dim(base_code) != base_code.dimension())
      throw Error(Errc::ContainmentFailed, "code is not Hermitian self-orthogonal");
  } else if (sweep_branch) {
    if (c_target > base_code.dimension())
      throw Error(Errc::PreconditionViolated, "c exceeds dim PRM_d = " + std::to_string(base_code.dimension()));
    const auto w = hermitian_full_weight_vector(f, m, d);
    HullResult hull = set_hermitian_hull_dim(base_code, base_code.dimension() - c_target, w);
    out.code = hull.code;
    h.feed(hull.target.scaling_vector.data(), hull.target.scaling_vector.size());
    out.hull = std::move(hull.target);
  } else {
    throw Error(Errc::PreconditionViolated, "need d = lambda(q-1) with lambda <= m, or 1 <= d < q-2");
  }
  out.params = hermitian_params(out.code, budget);
  if (out.params.c != c_target) throw Error(Errc::ContainmentFailed, "hull sweep produced the wrong c");
  out.params.delta_formula = prm_min_distance_formula(Q, m, prm_dual_degree(Q, m, d));
  h.feed(out.code);
  out.params.provenance = {"hermitian-prm", q, 1, m, {d}, std::nullopt, c_target, h.h};
  if (self_orthogonal_branch) out.params.provenance.lambda = d / (q - 1);
  return out;
}

HermConstruction construct_hermitian_subfield(int q, int s, int m, int lambda, std::uint64_t budget) {
  if (!prime_power(q)) throw Error(Errc::PreconditionViolated, "q must be a prime power");
  const int big = checked_power(q, 2 * s);
  if (m < 1 || lambda < 1 || lambda > m) throw Error(Errc::PreconditionViolated, "need 1 <= lambda <= m");
  if ((big - 1) % (q + 1) != 0) throw Error(Errc::PreconditionViolated, "degree is not integral");
  const int d = lambda * (big - 1) / (q + 1);
  const FieldPtr fbig = Field::of_order(big);
  const FieldPtr fbase = Field::of_order(q * q);
  const LinearCode code = subfield_subcode(prm_code(fbig, m, d), fbase);
  if (hermitian_hull_dim(code) != code.dimension())
    throw Error(Errc::ContainmentFailed, "subfield subcode is not Hermitian self-orthogonal");
  HermConstruction out{hermitian_params(code, budget), code, std::nullopt};
  Fnv h;
  h.feed(code);
  out.params.provenance = {"hermitian-subfield", q, s, m, {d}, lambda, 0, h.h};
  return out;
}

std::vector<Geometry> consistent_geometries(std::uint64_t n, int degree_sum, std::optional<int> base_q) {
  std::vector<Geometry> out;
  for (int Q = 2; Q <= 256; ++Q) {
    auto pk = prime_power(Q);
    if (!pk) continue;
    // n = 1 + Q + ... + Q^m
    std::uint64_t total = 1;
    std::uint64_t power = 1;
    for (int m = 1; total < n && m < 64; ++m) {
      power *= static_cast<std::uint64_t>(Q);
      total += power;
      if (total != n) continue;
      if (degree_sum % (Q - 1) != 0) continue;
      const int lambda = degree_sum / (Q - 1);
      if (lambda < 1 || lambda > m) continue;
      const int p = pk->first;
      const int k = pk->second;
      for (int j = 1; j <= k; ++j) {
        if (k % j != 0) continue;
        int q = 1;
        for (int i = 0; i < j; ++i) q *= p;
        if (base_q && *base_q != q) continue;
        out.push_back({q, k / j, m, lambda});
      }
    }
  }
  return out;
}

}  // namespace prmqc
