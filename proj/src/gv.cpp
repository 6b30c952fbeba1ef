#include "prmqc/gv.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "prmqc/error.hpp"

namespace prmqc {

namespace {

using boost::multiprecision::cpp_int;

cpp_int power(int q, std::uint64_t e) {
  cpp_int r = 1;
  cpp_int b = q;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// sum_{i=0}^{delta-1} C(n, i) r^i
cpp_int ball(std::uint64_t n, std::uint64_t delta, int r) {
  cpp_int sum = 0;
  cpp_int term = 1;  // C(n, i) r^i
  for (std::uint64_t i = 0; i < delta && i <= n; ++i) {
    sum += term;
    term = term * (n - i) * r / (i + 1);
  }
  return sum;
}

}  // namespace

bool gv_asymmetric_exists(std::uint64_t n, std::uint64_t l, std::uint64_t c, std::uint64_t delta_z,
                          std::uint64_t delta_x, int q) {
  if (n < 1 || l < 1 || l >= n + c || delta_z < 1 || delta_x < 1 || 2 * c > l || q < 2)
    throw Error(Errc::PreconditionViolated, "asymmetric GV bound needs n >= 1, 1 <= l < n+c, deltas >= 1, 2c <= l");
  const cpp_int lhs_factor = power(q, 2 * n - l) - power(q, l - 2 * c);
  const cpp_int inner = ball(n, delta_x, q - 1) * ball(n, delta_z, q - 1) - 1;
  return lhs_factor * inner < power(q, 2 * n) - 1;
}

bool gv_symmetric_exists(std::uint64_t n, std::uint64_t kappa, std::uint64_t delta, int q) {
  if (n <= kappa || delta < 2 || q < 2)
    throw Error(Errc::PreconditionViolated, "symmetric GV bound needs n > kappa and delta >= 2");
  if ((n - kappa) % 2 != 0) throw Error(Errc::ParityMismatch, "n and kappa must have the same parity");
  const cpp_int q2m1 = cpp_int(q) * q - 1;
  const cpp_int lhs = power(q, n - kappa + 2) - 1;
  cpp_int sum = 0;
  cpp_int binom = 1;  // C(n, i)
  cpp_int weight = 1; // (q^2-1)^(i-1)
  for (std::uint64_t i = 1; i < delta && i <= n; ++i) {
    binom = binom * (n - i + 1) / i;
    sum += weight * binom;
    weight *= q2m1;
  }
  // lhs / (q^2 - 1) > sum, both sides positive.
  return lhs > sum * q2m1;
}

}  // namespace prmqc
