#include "vcopy/linalg.hpp"

namespace vcopy {

std::size_t rank(Matrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<Rational> PointSampler::point(std::size_t n) {
  std::vector<Rational> p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) p.push_back(value());
  return p;
}

}  // namespace vcopy
