// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "prmqc/distance.hpp"
#include "prmqc/error.hpp"
#include "prmqc/field.hpp"
#include "prmqc/gv.hpp"
#include "prmqc/hull.hpp"
#include "prmqc/linear_code.hpp"
#include "prmqc/prm.hpp"
#include "prmqc/quantum.hpp"

using namespace prmqc;

namespace {

constexpr std::uint64_t kBudget = 100'000'000;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

// ---- oracles -------------------------------------------------------------

long long binom_ll(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

long long dimension_oracle(int q, int m, int d) {
  long long k = 0;
  for (int t = d; t > 0; t -= q - 1)
    for (int j = 0; j <= m + 1; ++j)
      k += (j % 2 ? -1 : 1) * binom_ll(m + 1, j) * binom_ll(t - j * q + m, t - j * q);
  return k;
}

long long distance_oracle(int q, int m, int d) {
  const int r = (d - 1) / (q - 1), l = (d - 1) % (q - 1);
  long long p = 1;
  for (int i = 0; i < m - r - 1; ++i) p *= q;
  return (q - l) * p;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

mpz_class mpow(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

mpz_class mbinom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool gv_asym_oracle(unsigned long n, unsigned long l, unsigned long c, unsigned long dz, unsigned long dx,
                    unsigned long q) {
  mpz_class sz = 0, sx = 0;
  for (unsigned long i = 0; i < dz; ++i) sz += mbinom(n, i) * mpow(q - 1, i);
  for (unsigned long i = 0; i < dx; ++i) sx += mbinom(n, i) * mpow(q - 1, i);
  mpq_class lhs(mpz_class((mpow(q, 2 * n - l) - mpow(q, l - 2 * c)) * (sx * sz - 1)), mpz_class(mpow(q, 2 * n) - 1));
  lhs.canonicalize();
  return cmp(lhs, 1) < 0;
}

bool gv_sym_oracle(unsigned long n, unsigned long kappa, unsigned long delta, unsigned long q) {
  mpq_class lhs(mpz_class(mpow(q, n - kappa + 2) - 1), mpz_class(q * q - 1));
  lhs.canonicalize();
  mpz_class sum = 0;
  for (unsigned long i = 1; i < delta; ++i) sum += mpow(q * q - 1, i - 1) * mbinom(n, i);
  return cmp(lhs, mpq_class(sum)) > 0;
}

std::vector<std::vector<Elem>> all_words(const LinearCode& c) {
  const int q = c.field()->q();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> msg(c.dimension(), 0);
  while (true) {
    out.push_back(c.encode(msg));
    std::size_t i = 0;
    while (i < msg.size() && ++msg[i] == q) msg[i++] = 0;
    if (i == msg.size()) break;
  }
  return out;
}

std::vector<std::uint64_t> brute_distribution(const LinearCode& c) {
  std::vector<std::uint64_t> dist(c.length() + 1, 0);
  for (const auto& w : all_words(c)) ++dist[hamming_weight(w)];
  return dist;
}

bool exact_is(const std::optional<WeightCertificate>& c, std::uint64_t v) { return c && c->exact() && c->value == v; }

std::string cert_text(const std::optional<WeightCertificate>& c) {
  if (!c) return "none";
  return std::string(to_string(c->kind)) + "(" + std::to_string(c->value) + ")" + (c->budget_exhausted ? "*" : "");
}

// The PRM grid shared by the first two criteria.
struct GridPoint {
  int q, m, d;
};
std::vector<GridPoint> prm_grid() {
  std::vector<GridPoint> g;
  for (int q : {2, 3, 4, 5, 7, 8, 9})
    for (int m = 1; m <= 3; ++m) {
      if ((ipow(q, m + 1) - 1) / (q - 1) > 1500) continue;
      for (int d = 1; d <= m * (q - 1); ++d) g.push_back({q, m, d});
    }
  return g;
}

// ---- criteria ------------------------------------------------------------

void ac1(Outcome& o) {
  std::size_t codes = 0, exhaustive = 0;
  for (const auto& [q, m, d] : prm_grid()) {
    const auto f = Field::of_order(q);
    const LinearCode c = prm_code(f, m, d);
    const std::string tag = "q=" + std::to_string(q) + " m=" + std::to_string(m) + " d=" + std::to_string(d);
    ++codes;
    o.expect(c.length() == static_cast<std::size_t>((ipow(q, m + 1) - 1) / (q - 1)), tag + " length");
    o.expect(static_cast<long long>(c.dimension()) == dimension_oracle(q, m, d), tag + " rank");
    o.expect(static_cast<long long>(prm_dimension_formula(q, m, d)) == dimension_oracle(q, m, d), tag + " formula");
    if (std::pow(static_cast<double>(q), static_cast<double>(c.dimension())) <= std::pow(2.0, 20)) {
      ++exhaustive;
      const WeightCertificate w = min_distance_exact(c, 1u << 21);
      o.expect(w.exact() && static_cast<long long>(w.value) == distance_oracle(q, m, d), tag + " distance");
      o.expect(static_cast<long long>(prm_min_distance_formula(q, m, d)) == distance_oracle(q, m, d),
               tag + " distance formula");
    }
  }
  o.detail << codes << " codes rank-checked, " << exhaustive << " with exhaustive distance";
}

void ac2(Outcome& o) {
  std::size_t codes = 0, extended = 0;
  for (const auto& [q, m, d] : prm_grid()) {
    const auto f = Field::of_order(q);
    const LinearCode c = prm_code(f, m, d);
    const PrmDual pd = prm_dual(f, m, d);
    const std::string tag = "q=" + std::to_string(q) + " m=" + std::to_string(m) + " d=" + std::to_string(d);
    o.expect(pd.code == dual(c), tag + " dual equality");
    o.expect(pd.took_extension == (d % (q - 1) == 0), tag + " extension flag");
    o.expect(pd.code.dimension() + c.dimension() == c.length(), tag + " dual dimension");
    // rebuilt directly: PRM of the dual degree, plus all-ones when d = 0 mod q-1
    const int dd = m * (q - 1) - d;
    Matrix g = dd >= 1 ? prm_code(f, m, dd).generator() : Matrix(f, 0, c.length());
    if (d % (q - 1) == 0) g.append_row(std::vector<Elem>(c.length(), 1));
    o.expect(LinearCode(g) == dual(c), tag + " rebuilt dual");
    ++codes;
    extended += pd.took_extension;
  }
  o.detail << codes << " duals equal as canonical codes, " << extended << " with the all-ones vector";
}

void ac3(Outcome& o) {
  std::size_t vectors = 0;
  for (int q : {4, 5, 7, 8, 9})
    for (int m = 1; m <= 2; ++m)
      for (int d = 1; d < q - 2; ++d) {
        const auto f = Field::of_order(q);
        const auto v = full_weight_dual_vector(f, m, d);
        const std::string tag = "q=" + std::to_string(q) + " m=" + std::to_string(m) + " d=" + std::to_string(d);
        o.expect(hamming_weight(v) == static_cast<std::size_t>((ipow(q, m + 1) - 1) / (q - 1)), tag + " weight");
        const Matrix ev = prm_evaluation_matrix(f, m, d);
        o.expect(ev.rows() == static_cast<std::size_t>(binom_ll(d + m, m)), tag + " monomial count");
        bool orth = true;
        for (std::size_t r = 0; r < ev.rows(); ++r) {
          Elem s = 0;
          for (std::size_t i = 0; i < v.size(); ++i) s = f->add(s, f->mul(ev(r, i), v[i]));
          orth = orth && s == 0;
        }
        o.expect(orth, tag + " orthogonality");
        ++vectors;
      }
  o.detail << vectors << " full-weight vectors orthogonal to every monomial evaluation";
}

void ac4(Outcome& o) {
  for (std::size_t c = 0; c <= 3; ++c) {
    const CssConstruction r = construct_css_prm(8, 2, 1, 4, c, kBudget);
    const CssParams& p = r.params;
    const std::string tag = "c=" + std::to_string(c);
    o.expect(p.n == 73 && p.c == c && p.kappa == 55 + c, tag + " n/kappa/c");
    o.expect(p.c + relative_hull_dim(r.c1, r.c2) == p.k1, tag + " hull identity");
    o.expect(p.delta_z_formula == 6u && p.delta_x_formula == 3u, tag + " formulas");
    o.expect(exact_is(p.delta_z, 6) && exact_is(p.delta_x, 3), tag + " certificates " + cert_text(p.delta_z) + "/" +
                                                                 cert_text(p.delta_x));
    const std::uint64_t l = p.n - p.kappa + p.c;
    const bool lib = gv_asymmetric_exists(p.n, l, p.c, 6, 3, 8);
    o.expect(!lib && lib == gv_asym_oracle(p.n, l, p.c, 6, 3, 8), tag + " gv");
    if (c == 0) o.detail << "[[73,55+c,6/3;c]]_8 for c=0..3, dz " << cert_text(p.delta_z) << " dx " << cert_text(p.delta_x);
  }
  o.detail << ", gv_asym false";
}

void ac5(Outcome& o) {
  const CssConstruction a = construct_css_subfield(2, 3, 2, 7, 7, kBudget);
  o.expect(a.c1.is_subcode_of(dual(a.c2)), "[[73,19]] containment");
  o.expect(a.params.n == 73 && a.params.kappa == 19 && a.params.c == 0, "[[73,19]] n/kappa");
  o.expect(a.c1.field()->q() == 2, "[[73,19]] base field");
  o.expect(exact_is(a.params.delta_z, 9) && exact_is(a.params.delta_x, 9),
           "[[73,19]] distances " + cert_text(a.params.delta_z) + "/" + cert_text(a.params.delta_x));
  const CssConstruction b = construct_css_subfield(3, 2, 2, 4, 4, kBudget);
  o.expect(b.c1.is_subcode_of(dual(b.c2)), "[[91,73]] containment");
  o.expect(b.params.n == 91 && b.params.kappa == 73 && b.params.c == 0, "[[91,73]] n/kappa");
  o.expect(exact_is(b.params.delta_z, 4) && exact_is(b.params.delta_x, 4),
           "[[91,73]] distances " + cert_text(b.params.delta_z) + "/" + cert_text(b.params.delta_x));
  // the printed geometry q=2, m=2, s=2 cannot give length 73
  const auto geoms = consistent_geometries(73, 14, 2);
  const bool printed_ok = std::find(geoms.begin(), geoms.end(), Geometry{2, 2, 2, 2}) != geoms.end();
  const bool found = std::find(geoms.begin(), geoms.end(), Geometry{2, 3, 2, 2}) != geoms.end();
  o.expect(!printed_ok && found && geoms.size() == 1, "geometry check for length 73");
  o.expect((ipow(2, 3 * 3) - 1) / (ipow(2, 3) - 1) == 73, "geometry oracle");
  // base field of the 91-length pair: 3, not 2
  o.expect(consistent_geometries(91, 16, 2).empty() && !consistent_geometries(91, 16, 3).empty(), "geometry for 91");
  o.detail << "[[73,19," << cert_text(a.params.delta_z) << "/" << cert_text(a.params.delta_x) << "]]_2 and [[91,73,"
           << cert_text(b.params.delta_z) << "/" << cert_text(b.params.delta_x)
           << "]]_3; length 73 resolves to q=2 s=3 m=2 lambda=2 (printed q=2 s=2 m=2 inconsistent)";
}

void ac6(Outcome& o) {
  struct Row {
    int q, m, d;
    std::size_t n, kappa, delta;
  };
  for (const Row& r : {Row{2, 3, 1, 85, 77, 3}, Row{2, 4, 1, 341, 331, 3}, Row{3, 2, 2, 91, 79, 4},
                       Row{3, 3, 2, 820, 800, 4}}) {
    const HermConstruction h = construct_hermitian_prm(r.q, r.m, r.d, 0, kBudget);
    const std::string tag = "[[" + std::to_string(r.n) + "," + std::to_string(r.kappa) + "]]";
    o.expect(h.code.is_subcode_of(hermitian_dual(h.code)), tag + " self-orthogonal");
    o.expect(hermitian_hull_dim(h.code) == h.code.dimension(), tag + " hull");
    o.expect(h.params.n == r.n && h.params.kappa == r.kappa && h.params.c == 0, tag + " n/kappa");
    o.expect(exact_is(h.params.delta, r.delta), tag + " distance " + cert_text(h.params.delta));
    o.detail << tag << "_" << r.q << " " << cert_text(h.params.delta) << "  ";
  }
}

void ac7(Outcome& o) {
  struct Row {
    int q, m, d;
    std::size_t n, kappa, delta;
  };
  for (const Row& r : {Row{4, 2, 1, 273, 267, 3}, Row{5, 2, 1, 651, 645, 3}, Row{5, 2, 2, 651, 639, 4}}) {
    const HermConstruction h = construct_hermitian_prm(r.q, r.m, r.d, 0, kBudget);
    const std::string tag = "[[" + std::to_string(r.n) + "," + std::to_string(r.kappa) + "]]";
    o.expect(h.params.n == r.n && h.params.kappa == r.kappa && h.params.c == 0, tag + " n/kappa");
    o.expect(exact_is(h.params.delta, r.delta), tag + " distance " + cert_text(h.params.delta));
    const std::size_t k = h.params.k;
    const long long net = static_cast<long long>(h.params.kappa) - static_cast<long long>(h.params.c);
    for (std::size_t c = 0; c <= k; ++c) {
      const HermConstruction s = construct_hermitian_prm(r.q, r.m, r.d, c, 0);
      o.expect(hermitian_hull_dim(s.code) == k - c, tag + " hull at c=" + std::to_string(c));
      o.expect(s.params.c == c && s.params.kappa == r.kappa + c, tag + " kappa at c=" + std::to_string(c));
      o.expect(static_cast<long long>(s.params.kappa) - static_cast<long long>(s.params.c) == net,
               tag + " net rate at c=" + std::to_string(c));
    }
    o.detail << tag << "_" << r.q << " " << cert_text(h.params.delta) << " sweep c=0.." << k << "  ";
  }
}

void ac8(Outcome& o) {
  const HermConstruction a = construct_hermitian_subfield(2, 2, 2, 1, kBudget);
  o.expect(a.params.n == 273 && a.params.kappa == 255 && a.params.c == 0, "[[273,255]] n/kappa");
  o.expect(a.code.is_subcode_of(hermitian_dual(a.code)), "[[273,255]] self-orthogonal");
  o.expect(exact_is(a.params.delta, 4), "[[273,255]] distance " + cert_text(a.params.delta));
  const HermConstruction b = construct_hermitian_subfield(2, 2, 3, 1, kBudget);
  o.expect(b.params.n == 4369 && b.params.kappa == 4337 && b.params.c == 0, "[[4369,4337]] n/kappa");
  o.expect(b.code.is_subcode_of(hermitian_dual(b.code)), "[[4369,4337]] self-orthogonal");
  const bool dist_ok = b.params.delta && (b.params.delta->exact() ? b.params.delta->value == 4
                                                                  : b.params.delta->value >= 3 && b.params.delta->value <= 4);
  o.expect(dist_ok, "[[4369,4337]] distance " + cert_text(b.params.delta));
  o.detail << "[[273,255," << cert_text(a.params.delta) << "]]_2, [[4369,4337," << cert_text(b.params.delta) << "]]_2";
}

void ac9(Outcome& o) {
  // CSS rows: asymmetric bound; Hermitian rows: symmetric bound.
  struct Asym {
    unsigned long n, kappa, c, dz, dx, q;
  };
  struct Sym {
    unsigned long n, kappa, delta, q;
  };
  std::size_t rows = 0;
  for (const Asym& a : {Asym{73, 55, 0, 6, 3, 8}, Asym{73, 56, 1, 6, 3, 8}, Asym{73, 57, 2, 6, 3, 8},
                        Asym{73, 58, 3, 6, 3, 8}, Asym{73, 19, 0, 9, 9, 2}, Asym{91, 73, 0, 4, 4, 3},
                        Asym{91, 12, 0, 36, 4, 3}}) {
    const unsigned long l = a.n - a.kappa + a.c;
    const bool lib = gv_asymmetric_exists(a.n, l, a.c, a.dz, a.dx, static_cast<int>(a.q));
    const bool ref = gv_asym_oracle(a.n, l, a.c, a.dz, a.dx, a.q);
    o.expect(lib == ref, "asym engine vs reference n=" + std::to_string(a.n) + " kappa=" + std::to_string(a.kappa));
    o.expect(!lib, "asym surpass n=" + std::to_string(a.n) + " kappa=" + std::to_string(a.kappa));
    ++rows;
  }
  for (const Sym& s : {Sym{85, 77, 3, 2}, Sym{341, 331, 3, 2}, Sym{91, 79, 4, 3}, Sym{820, 800, 4, 3},
                       Sym{273, 267, 3, 4}, Sym{651, 645, 3, 5}, Sym{651, 639, 4, 5}, Sym{273, 255, 4, 2},
                       Sym{4369, 4337, 4, 2}}) {
    const bool lib = gv_symmetric_exists(s.n, s.kappa, s.delta, static_cast<int>(s.q));
    const bool ref = gv_sym_oracle(s.n, s.kappa, s.delta, s.q);
    o.expect(lib == ref, "sym engine vs reference n=" + std::to_string(s.n) + " kappa=" + std::to_string(s.kappa));
    o.expect(!lib, "sym surpass n=" + std::to_string(s.n) + " kappa=" + std::to_string(s.kappa));
    ++rows;
  }
  std::mt19937 rng(90210);
  const int qs[] = {2, 3, 4, 5, 7, 8, 9, 16, 25};
  int random = 0;
  while (random < 100) {
    const unsigned long q = qs[rng() % 9];
    const unsigned long n = 5 + rng() % 500;
    const unsigned long l = 1 + rng() % (n - 1);
    const unsigned long c = rng() % (l / 2 + 1);
    const unsigned long dz = 1 + rng() % 15, dx = 1 + rng() % 15;
    o.expect(gv_asymmetric_exists(n, l, c, dz, dx, static_cast<int>(q)) == gv_asym_oracle(n, l, c, dz, dx, q),
             "random asym tuple");
    const unsigned long gap = 2 * (1 + rng() % (n / 2));  // n - kappa, even and positive
    if (gap < n) {
      const unsigned long kappa = n - gap;
      const unsigned long delta = 2 + rng() % 15;
      o.expect(gv_symmetric_exists(n, kappa, delta, static_cast<int>(q)) == gv_sym_oracle(n, kappa, delta, q),
               "random sym tuple");
    }
    ++random;
  }
  o.detail << rows << " example rows not guaranteed by the bounds, " << random << " random tuples match the GMP reference";
}

void ac10(Outcome& o) {
  std::mt19937 rng(4242);
  // field axioms, exhaustive
  std::size_t fields = 0;
  for (int q = 2; q <= 81; ++q) {
    if (!prime_power(q)) continue;
    const auto f = Field::of_order(q);
    bool ok = true;
    for (int a = 0; a < q && ok; ++a) {
      const Elem ea = static_cast<Elem>(a);
      ok = f->add(ea, f->neg(ea)) == 0 && f->mul(ea, 1) == ea && (a == 0 || f->mul(ea, f->inv(ea)) == 1);
      for (int b = 0; b < q && ok; ++b) {
        const Elem eb = static_cast<Elem>(b);
        ok = f->add(ea, eb) == f->add(eb, ea) && f->mul(ea, eb) == f->mul(eb, ea);
        for (int c = 0; c < q && ok; ++c) {
          const Elem ec = static_cast<Elem>(c);
          ok = f->mul(f->mul(ea, eb), ec) == f->mul(ea, f->mul(eb, ec)) &&
               f->add(f->add(ea, eb), ec) == f->add(ea, f->add(eb, ec)) &&
               f->mul(ea, f->add(eb, ec)) == f->add(f->mul(ea, eb), f->mul(ea, ec));
        }
      }
    }
    o.expect(ok, "field axioms q=" + std::to_string(q));
    ++fields;
  }
  auto random_code = [&](const FieldPtr& f, std::size_t k, std::size_t n) {
    Matrix g(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = static_cast<Elem>(rng() % f->q());
    return LinearCode(g);
  };
  // star product, duals, monomial equivalence
  std::size_t codes = 0;
  for (int q : {2, 3, 4, 5, 7, 8, 9})
    for (int t = 0; t < 12; ++t) {
      const auto f = Field::of_order(q);
      const std::size_t n = 3 + rng() % 10;
      const LinearCode a = random_code(f, 1 + rng() % 3, n);
      const LinearCode b = random_code(f, 1 + rng() % 3, n);
      o.expect(star_product(a, b) == star_product(b, a), "star commutativity");
      o.expect(star_product(a, LinearCode::zero(f, n)).dimension() == 0, "star with zero");
      Matrix ones(f, 0, n);
      ones.append_row(std::vector<Elem>(n, 1));
      o.expect(star_product(a, LinearCode(ones)) == a, "star identity");
      o.expect(dual(dual(a)) == a, "double dual");
      if (std::pow(q, a.dimension()) <= 1 << 16) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Elem> scale(n);
        for (auto& x : scale) x = static_cast<Elem>(1 + rng() % (q - 1));
        Matrix g(f, a.dimension(), n);
        for (std::size_t i = 0; i < a.dimension(); ++i)
          for (std::size_t j = 0; j < n; ++j) g(i, perm[j]) = f->mul(scale[j], a.generator()(i, j));
        o.expect(brute_distribution(LinearCode(g)) == brute_distribution(a), "weight enumerator invariance");
        o.expect(weight_distribution(a, 1 << 20) == brute_distribution(a), "weight distribution engine");
      }
      ++codes;
    }
  // subfield subcodes against filtering every codeword
  std::size_t subcodes = 0;
  for (auto [Q, q] : std::vector<std::pair<int, int>>{{4, 2}, {8, 2}, {9, 3}, {16, 2}, {16, 4}, {25, 5}, {27, 3}}) {
    const auto big = Field::of_order(Q), small = Field::of_order(q);
    const SubfieldEmbedding emb(small, big);
    for (int t = 0; t < 6; ++t) {
      const std::size_t n = 3 + rng() % 5;
      Matrix g(big, 0, n);
      std::vector<Elem> row(n);
      for (auto& x : row) x = emb(static_cast<Elem>(rng() % q));
      g.append_row(row);
      for (auto& x : row) x = static_cast<Elem>(rng() % Q);
      g.append_row(row);
      const LinearCode c(g);
      if (std::pow(Q, c.dimension()) > 1 << 20) continue;
      std::set<std::vector<Elem>> expected;
      for (const auto& w : all_words(c)) {
        std::vector<Elem> pre(n);
        bool in = true;
        for (std::size_t i = 0; i < n && in; ++i) {
          const auto p = emb.preimage(w[i]);
          in = p.has_value();
          if (in) pre[i] = *p;
        }
        if (in) expected.insert(pre);
      }
      const auto words = all_words(subfield_subcode(c, small));
      o.expect(std::set<std::vector<Elem>>(words.begin(), words.end()) == expected, "subfield subcode oracle");
      ++subcodes;
    }
  }
  // reproducibility of witnesses
  const CssConstruction x1 = construct_css_prm(8, 2, 1, 4, 2, 1'000'000);
  const CssConstruction x2 = construct_css_prm(8, 2, 1, 4, 2, 1'000'000);
  o.expect(x1.params.provenance.witness_hash == x2.params.provenance.witness_hash, "css witness hash");
  o.expect(x1.hull->scaling_vector == x2.hull->scaling_vector, "css scaling vector");
  o.expect(x1.params.delta_z->witness == x2.params.delta_z->witness, "css distance witness");
  const HermConstruction h1 = construct_hermitian_prm(5, 2, 2, 3, 0);
  const HermConstruction h2 = construct_hermitian_prm(5, 2, 2, 3, 0);
  o.expect(h1.hull->scaling_vector == h2.hull->scaling_vector, "hermitian scaling vector");
  o.expect(full_weight_dual_vector(Field::of_order(9), 2, 3) == full_weight_dual_vector(Field::of_order(9), 2, 3),
           "full-weight vector");
  o.detail << fields << " fields exhaustive, " << codes << " random codes, " << subcodes
           << " subfield subcodes, witnesses reproducible";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << name << (o.pass ? " PASS " : " FAIL ") << o.detail.str();
    for (const auto& f : o.failures) std::cout << " [" << f << "]";
    std::cout << " (" << static_cast<int>(secs + 0.5) << "s)" << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
