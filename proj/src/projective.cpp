#include "prmqc/projective.hpp"

#include <sstream>

#include "prmqc/error.hpp"

namespace prmqc {

std::size_t projective_point_count(int q, int m) {
  std::size_t n = 0;
  std::size_t pw = 1;
  for (int i = 0; i <= m; ++i) {
    n += pw;
    pw *= static_cast<std::size_t>(q);
  }
  return n;
}

ProjPointList::ProjPointList(FieldPtr field, int m) : field_(std::move(field)), m_(m) {
  if (m < 1) throw Error(Errc::PreconditionViolated, "projective dimension must be >= 1");
  const int q = field_->q();
  const int width = m + 1;
  points_.reserve(projective_point_count(q, m) * width);
  block_start_.assign(m + 1, 0);

  std::vector<Elem> pt(width);
  for (int i = m; i >= 0; --i) {
    block_start_[i] = points_.size() / width;
    const int lead = m - i;
    // Odometer over the i free coordinates after the leading 1.
    std::vector<int> free(i, 0);
    while (true) {
      std::fill(pt.begin(), pt.end(), Elem{0});
      pt[lead] = 1;
      for (int j = 0; j < i; ++j) pt[lead + 1 + j] = static_cast<Elem>(free[j]);
      points_.insert(points_.end(), pt.begin(), pt.end());
      int pos = i - 1;
      while (pos >= 0 && ++free[pos] == q) free[pos--] = 0;
      if (pos < 0) break;
    }
  }
}

std::vector<Elem> ProjPointList::point_vector(std::size_t index) const {
  if (index >= size()) throw Error(Errc::IndexOutOfRange, "point index " + std::to_string(index));
  const Elem* p = point(index);
  return {p, p + m_ + 1};
}

std::pair<std::size_t, std::size_t> ProjPointList::block_bounds(int i) const {
  if (i < 0 || i > m_) throw Error(Errc::IndexOutOfRange, "block label " + std::to_string(i));
  const std::size_t first = block_start_[i];
  const std::size_t last = i == 0 ? size() : block_start_[i - 1];
  return {first, last};
}

int ProjPointList::block_of(std::size_t index) const {
  if (index >= size()) throw Error(Errc::IndexOutOfRange, "point index " + std::to_string(index));
  for (int i = m_; i >= 0; --i) {
    auto [first, last] = block_bounds(i);
    if (index >= first && index < last) return i;
  }
  return 0;
}

std::string ProjPointList::point_string(std::size_t index) const {
  const Elem* p = point(index);
  std::ostringstream os;
  os << '(';
  for (int j = 0; j <= m_; ++j) os << (j ? "," : "") << static_cast<int>(p[j]);
  os << ')';
  return os.str();
}

ProjPointList enumerate_projective_points(const FieldPtr& field, int m) { return ProjPointList(field, m); }

}  // namespace prmqc
