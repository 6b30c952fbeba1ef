#include "prmqc/distance.hpp"

#include <algorithm>
#include <limits>

#include "prmqc/error.hpp"

namespace prmqc {

std::string_view to_string(CertificateKind kind) noexcept {
  return kind == CertificateKind::Exact ? "Exact" : "LowerBound";
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max() / 4;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t sat_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = sat_mul(r, b);
  return r;
}

// Visits one codeword per projective class (leading message coefficient 1),
// in a fixed order. Successive words differ by one scaled generator row, so
// the weight is maintained incrementally.
template <class Visit>
std::uint64_t enumerate_projective(const LinearCode& c, Visit&& visit) {
  const Field& f = *c.field();
  const int q = f.q();
  const std::size_t k = c.dimension();
  const std::size_t n = c.length();
  const Matrix& g = c.generator();

  std::vector<Elem> scaled(k * q * n);
  for (std::size_t r = 0; r < k; ++r)
    for (int a = 0; a < q; ++a) {
      const Elem* mrow = f.mul_row(static_cast<Elem>(a));
      for (std::size_t j = 0; j < n; ++j) scaled[(r * q + a) * n + j] = mrow[g(r, j)];
    }

  std::vector<Elem> word(n);
  std::uint64_t visited = 0;
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::copy(g.row(lead).begin(), g.row(lead).end(), word.begin());
    std::size_t weight = hamming_weight(word);
    visit(weight, word);
    ++visited;
    const std::size_t digits = k - 1 - lead;
    std::vector<int> d(digits, 0);
    while (true) {
      std::size_t pos = digits;
      bool done = true;
      while (pos > 0) {
        --pos;
        const int old = d[pos];
        const int now = (old + 1) % q;
        const Elem delta = f.sub(static_cast<Elem>(now), static_cast<Elem>(old));
        const Elem* s = &scaled[((lead + 1 + pos) * q + delta) * n];
        for (std::size_t j = 0; j < n; ++j) {
          const Elem o = word[j];
          const Elem x = f.add(o, s[j]);
          weight += (x != 0);
          weight -= (o != 0);
          word[j] = x;
        }
        d[pos] = now;
        if (now != 0) {
          done = false;
          break;
        }
      }
      if (done) break;
      visit(weight, word);
      ++visited;
    }
  }
  return visited;
}

bool pow_exceeds(int q, std::size_t k, std::uint64_t budget) { return sat_pow(static_cast<std::uint64_t>(q), k) > budget; }

std::uint64_t fnv1a(const Elem* data, std::size_t len) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 1099511628211ULL;
  }
  h ^= h >> 29;
  return h;
}

// Searches ker(H) for a nonzero word of a prescribed weight t, assuming no
// lighter word exists (a lighter word found on the way is still returned).
class KernelSearch {
 public:
  enum class Status { Found, None, OverBudget };
  struct Result {
    Status status = Status::None;
    std::vector<Elem> word;
    std::uint64_t steps = 0;
  };

  explicit KernelSearch(const Matrix& h)
      : h_(rref(h).reduced), f_(*h_.field()), r_(h_.rows()), n_(h_.cols()), q_(f_.q()) {
    scaled_.resize(n_ * q_ * r_);
    for (std::size_t i = 0; i < n_; ++i)
      for (int a = 0; a < q_; ++a) {
        const Elem* mrow = f_.mul_row(static_cast<Elem>(a));
        for (std::size_t j = 0; j < r_; ++j) scaled_[(i * q_ + a) * r_ + j] = mrow[h_(j, i)];
      }
  }

  std::size_t kernel_dimension() const noexcept { return n_ - r_; }
  std::size_t length() const noexcept { return n_; }

  /// Cost of the split with `left` indices stored and t-left queried.
  std::uint64_t split_cost(std::size_t t, std::size_t left) const {
    const std::uint64_t q1 = static_cast<std::uint64_t>(q_ - 1);
    const std::uint64_t l = sat_mul(sat_binomial(n_, left), sat_pow(q1, left));
    const std::uint64_t rr = sat_mul(sat_binomial(n_, t - left), sat_pow(q1, t - left - 1));
    return std::min(kSaturated, l + rr);
  }

  std::size_t best_split(std::size_t t) const {
    std::size_t best = t / 2;
    const std::size_t alt = t - t / 2;
    if (alt < t && split_cost(t, alt) < split_cost(t, best)) best = alt;
    return best;
  }

  std::uint64_t mitm_cost(std::size_t t) const { return split_cost(t, best_split(t)); }

  Result meet_in_middle(std::size_t t, std::uint64_t budget) {
    Result res;
    const std::size_t a = best_split(t);
    const std::size_t b = t - a;
    const std::uint64_t q1 = static_cast<std::uint64_t>(q_ - 1);
    const std::uint64_t left_count = sat_mul(sat_binomial(n_, a), sat_pow(q1, a));
    if (split_cost(t, a) > budget || left_count > kMaxTable) {
      res.status = Status::OverBudget;
      return res;
    }

    std::size_t capacity = 16;
    while (capacity < 2 * left_count) capacity <<= 1;
    const std::size_t mask = capacity - 1;
    std::vector<std::uint64_t> keys(capacity, 0);
    std::vector<std::uint32_t> slots(capacity, 0);
    std::vector<std::uint16_t> left_idx;
    std::vector<Elem> left_coef;
    left_idx.reserve(left_count * a);
    left_coef.reserve(left_count * a);

    std::vector<Elem> syn(r_);
    std::vector<Elem> other(r_);
    auto left_syndrome = [&](std::size_t id, std::vector<Elem>& out) {
      std::fill(out.begin(), out.end(), Elem{0});
      for (std::size_t j = 0; j < a; ++j) accumulate(out.data(), left_idx[id * a + j], left_coef[id * a + j]);
    };

    std::vector<std::size_t> idx(std::max(a, b));
    std::vector<Elem> coef(std::max(a, b));
    std::vector<Elem> stack((std::max(a, b) + 1) * r_, 0);
    bool found = false;

    // Phase 1: store every left combination, checking injectivity.
    std::uint32_t stored = 0;
    auto on_left = [&](const Elem* s) {
      ++res.steps;
      const std::uint64_t h = fnv1a(s, r_);
      std::size_t slot = h & mask;
      while (slots[slot] != 0) {
        if (keys[slot] == h) {
          const std::size_t id = slots[slot] - 1;
          left_syndrome(id, other);
          if (std::equal(other.begin(), other.end(), s)) {
            res.word.assign(n_, 0);
            for (std::size_t j = 0; j < a; ++j) add_to(res.word, left_idx[id * a + j], left_coef[id * a + j]);
            for (std::size_t j = 0; j < a; ++j) add_to(res.word, idx[j], f_.neg(coef[j]));
            if (hamming_weight(res.word) > 0) {
              found = true;
              return true;
            }
          }
        }
        slot = (slot + 1) & mask;
      }
      keys[slot] = h;
      slots[slot] = ++stored;
      for (std::size_t j = 0; j < a; ++j) {
        left_idx.push_back(static_cast<std::uint16_t>(idx[j]));
        left_coef.push_back(coef[j]);
      }
      return false;
    };
    enumerate(a, false, idx, coef, stack, on_left);
    if (found) {
      res.status = Status::Found;
      return res;
    }

    // Phase 2: right combinations with leading coefficient -1; a match
    // s(A) = s(B') gives the kernel word A - B'.
    auto on_right = [&](const Elem* s) {
      ++res.steps;
      const std::uint64_t h = fnv1a(s, r_);
      std::size_t slot = h & mask;
      while (slots[slot] != 0) {
        if (keys[slot] == h) {
          const std::size_t id = slots[slot] - 1;
          left_syndrome(id, other);
          if (std::equal(other.begin(), other.end(), s)) {
            res.word.assign(n_, 0);
            for (std::size_t j = 0; j < a; ++j) add_to(res.word, left_idx[id * a + j], left_coef[id * a + j]);
            for (std::size_t j = 0; j < b; ++j) add_to(res.word, idx[j], f_.neg(coef[j]));
            if (hamming_weight(res.word) > 0) {
              found = true;
              return true;
            }
            return false;  // syndromes are unique among stored entries
          }
        }
        slot = (slot + 1) & mask;
      }
      return false;
    };
    enumerate(b, true, idx, coef, stack, on_right);
    res.status = found ? Status::Found : Status::None;
    return res;
  }

  /// Depth-first scan of t-subsets of columns in lexicographic order with
  /// incremental elimination; stops at the first dependent subset.
  Result depth_first(std::size_t t, std::uint64_t budget) {
    Result res;
    if (t == 0 || t > n_) return res;
    struct Basis {
      std::vector<Elem> vec;
      std::vector<Elem> expr;
      std::size_t pivot;
    };
    std::vector<Basis> basis;
    basis.reserve(t);
    std::vector<std::size_t> chosen;
    chosen.reserve(t);
    std::vector<Elem> v(r_);
    std::vector<Elem> expr(t);
    bool over = false;
    bool found = false;

    auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
      for (std::size_t c = start; c + (t - depth) <= n_; ++c) {
        if (res.steps >= budget) {
          over = true;
          return;
        }
        ++res.steps;
        std::copy_n(&scaled_[(c * q_ + 1) * r_], r_, v.begin());
        std::fill(expr.begin(), expr.end(), Elem{0});
        expr[depth] = 1;
        for (std::size_t i = 0; i < depth; ++i) {
          const Elem e = v[basis[i].pivot];
          if (e == 0) continue;
          const Elem ne = f_.neg(e);
          add_scaled_row(f_, v, basis[i].vec, ne);
          add_scaled_row(f_, expr, basis[i].expr, ne);
        }
        auto nz = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
        if (nz == v.end()) {
          res.word.assign(n_, 0);
          for (std::size_t i = 0; i < depth; ++i) res.word[chosen[i]] = expr[i];
          res.word[c] = expr[depth];
          found = true;
          return;
        }
        if (depth + 1 == t) continue;
        const std::size_t piv = static_cast<std::size_t>(nz - v.begin());
        const Elem inv = f_.inv(*nz);
        Basis nb{v, expr, piv};
        scale_row(f_, nb.vec, inv);
        scale_row(f_, nb.expr, inv);
        basis.push_back(std::move(nb));
        chosen.push_back(c);
        self(self, depth + 1, c + 1);
        basis.pop_back();
        chosen.pop_back();
        if (found || over) return;
      }
    };
    recurse(recurse, 0, 0);
    res.status = found ? Status::Found : (over ? Status::OverBudget : Status::None);
    return res;
  }

 private:
  static constexpr std::uint64_t kMaxTable = 1ULL << 23;

  const Elem* column(std::size_t i, Elem a) const noexcept { return &scaled_[(i * q_ + a) * r_]; }

  void accumulate(Elem* dst, std::size_t i, Elem a) const noexcept {
    const Elem* s = column(i, a);
    for (std::size_t j = 0; j < r_; ++j) dst[j] = f_.add(dst[j], s[j]);
  }

  void add_to(std::vector<Elem>& word, std::size_t i, Elem a) const noexcept { word[i] = f_.add(word[i], a); }

  // Enumerates supports of size `size` (lexicographic) with all nonzero
  // coefficient vectors; when `normalized` the first coefficient is -1.
  // The callback receives the syndrome and returns true to stop.
  template <class Callback>
  void enumerate(std::size_t size, bool normalized, std::vector<std::size_t>& idx, std::vector<Elem>& coef,
                 std::vector<Elem>& stack, Callback&& cb) const {
    if (size == 0) {
      std::fill_n(stack.begin(), r_, Elem{0});
      cb(stack.data());
      return;
    }
    const Elem minus_one = f_.neg(1);
    auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
      Elem* base = &stack[depth * r_];
      Elem* next = &stack[(depth + 1) * r_];
      for (std::size_t i = start; i + (size - depth) <= n_; ++i) {
        idx[depth] = i;
        const bool fixed = normalized && depth == 0;
        for (int a = fixed ? minus_one : 1; a < q_; ++a) {
          coef[depth] = static_cast<Elem>(a);
          const Elem* s = column(i, static_cast<Elem>(a));
          for (std::size_t j = 0; j < r_; ++j) next[j] = f_.add(base[j], s[j]);
          if (depth + 1 == size) {
            if (cb(next)) return true;
          } else if (self(self, depth + 1, i + 1)) {
            return true;
          }
          if (fixed) break;
        }
      }
      return false;
    };
    std::fill_n(stack.begin(), r_, Elem{0});
    rec(rec, 0, 0);
  }

  Matrix h_;
  const Field& f_;
  std::size_t r_;
  std::size_t n_;
  int q_;
  std::vector<Elem> scaled_;
};

WeightCertificate exact_from(std::vector<Elem> word, std::uint64_t steps) {
  WeightCertificate cert;
  cert.kind = CertificateKind::Exact;
  cert.value = hamming_weight(word);
  cert.witness = std::move(word);
  cert.steps = steps;
  return cert;
}

}  // namespace

WeightCertificate min_distance_exact(const LinearCode& c, std::uint64_t budget) {
  if (c.dimension() == 0) throw Error(Errc::EmptyCode, "zero code has no minimum distance");
  if (pow_exceeds(c.field()->q(), c.dimension(), budget))
    throw Error(Errc::BudgetExceeded, "q^k exceeds the enumeration budget");
  std::size_t best = c.length() + 1;
  std::vector<Elem> witness;
  const std::uint64_t steps = enumerate_projective(c, [&](std::size_t w, const std::vector<Elem>& word) {
    if (w < best) {
      best = w;
      witness = word;
    }
  });
  return exact_from(std::move(witness), steps);
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& c, std::uint64_t budget) {
  if (pow_exceeds(c.field()->q(), c.dimension(), budget))
    throw Error(Errc::BudgetExceeded, "q^k exceeds the enumeration budget");
  std::vector<std::uint64_t> dist(c.length() + 1, 0);
  enumerate_projective(c, [&](std::size_t w, const std::vector<Elem>&) { ++dist[w]; });
  for (auto& a : dist) a *= static_cast<std::uint64_t>(c.field()->q() - 1);
  dist[0] = 1;
  return dist;
}

WeightCertificate certify_kernel_weight_at_least(const Matrix& h, std::size_t w, std::uint64_t budget) {
  KernelSearch ks(h);
  if (ks.kernel_dimension() == 0) throw Error(Errc::EmptyCode, "kernel is the zero code");
  std::uint64_t steps = 0;
  for (std::size_t t = 1; t < w; ++t) {
    auto res = ks.meet_in_middle(t, budget - steps);
    steps += res.steps;
    if (res.status == KernelSearch::Status::OverBudget)
      throw Error(Errc::BudgetExceeded, "column-subset search for weight " + std::to_string(t) + " exceeds budget");
    if (res.status == KernelSearch::Status::Found) return exact_from(std::move(res.word), steps);
  }
  WeightCertificate cert;
  cert.kind = CertificateKind::LowerBound;
  cert.value = w;
  cert.steps = steps;
  return cert;
}

WeightCertificate certify_min_weight_at_least(const LinearCode& c, std::size_t w, std::uint64_t budget) {
  if (c.dimension() == 0) throw Error(Errc::EmptyCode, "zero code has no minimum distance");
  return certify_kernel_weight_at_least(c.parity_check(), w, budget);
}

WeightCertificate kernel_minimum_distance(const Matrix& h, std::uint64_t budget) {
  constexpr std::uint64_t kCheapLevel = 1'000'000;
  constexpr std::uint64_t kProbe = 200'000;
  KernelSearch ks(h);
  if (ks.kernel_dimension() == 0) throw Error(Errc::EmptyCode, "kernel is the zero code");
  std::uint64_t steps = 0;
  using Status = KernelSearch::Status;
  for (std::size_t t = 1; t <= ks.length(); ++t) {
    const std::uint64_t remaining = budget - steps;
    if (ks.mitm_cost(t) > kCheapLevel) {
      auto probe = ks.depth_first(t, std::min(remaining, kProbe));
      steps += probe.steps;
      if (probe.status == Status::Found) return exact_from(std::move(probe.word), steps);
      if (probe.status == Status::None) continue;
    }
    auto full = ks.meet_in_middle(t, budget - steps);
    steps += full.steps;
    if (full.status == Status::Found) return exact_from(std::move(full.word), steps);
    if (full.status == Status::None) continue;
    auto dfs = ks.depth_first(t, budget - steps);
    steps += dfs.steps;
    if (dfs.status == Status::Found) return exact_from(std::move(dfs.word), steps);
    if (dfs.status == Status::None) continue;
    WeightCertificate cert;
    cert.kind = CertificateKind::LowerBound;
    cert.value = t;
    cert.budget_exhausted = true;
    cert.steps = steps;
    return cert;
  }
  throw Error(Errc::EmptyCode, "no nonzero kernel word found");
}

WeightCertificate minimum_distance(const LinearCode& c, std::uint64_t budget) {
  if (c.dimension() == 0) throw Error(Errc::EmptyCode, "zero code has no minimum distance");
  if (!pow_exceeds(c.field()->q(), c.dimension(), budget)) return min_distance_exact(c, budget);
  return kernel_minimum_distance(c.parity_check(), budget);
}

WeightCertificate dual_minimum_distance(const LinearCode& c, std::uint64_t budget) {
  return kernel_minimum_distance(c.generator(), budget);
}

}  // namespace prmqc
