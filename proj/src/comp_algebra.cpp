#include "chss/comp_algebra.hpp"

#include <stdexcept>

namespace chss {

namespace {

// Cayley-Dickson double of a table of half the size: (a,b)(c,d) = (ac - d*b~, a~d... )
// Convention used: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
std::vector<std::vector<std::pair<int, int>>> cayley_dickson(
    const std::vector<std::vector<std::pair<int, int>>>& half) {
  int h = (int)half.size();
  int n = 2 * h;
  auto conj_sign = [&](int i) { return i == 0 ? 1 : -1; };
  std::vector<std::vector<std::pair<int, int>>> full(n, std::vector<std::pair<int, int>>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // write e_i = (x, y), e_j = (u, v) with exactly one nonzero slot each
      bool i_hi = i >= h, j_hi = j >= h;
      int a = i_hi ? i - h : i;
      int c = j_hi ? j - h : j;
      if (!i_hi && !j_hi) {
        full[i][j] = half[a][c];  // (a,0)(c,0) = (ac, 0)
      } else if (!i_hi && j_hi) {
        // (a,0)(0,v) = (0, v a)
        auto [idx, s] = half[c][a];
        full[i][j] = {idx + h, s};
      } else if (i_hi && !j_hi) {
        // (0,b)(c,0) = (0, b conj(c))
        auto [idx, s] = half[a][c];
        full[i][j] = {idx + h, s * conj_sign(c)};
      } else {
        // (0,b)(0,v) = (-conj(v) b, 0)
        auto [idx, s] = half[c][a];
        full[i][j] = {idx, -s * conj_sign(c)};
      }
    }
  }
  return full;
}

}  // namespace

CompAlgebra composition_algebra(int dim) {
  if (dim != 1 && dim != 2 && dim != 4 && dim != 8)
    throw std::invalid_argument("composition_algebra: dim must be 1, 2, 4 or 8");
  CompAlgebra A;
  A.dim = dim;
  std::vector<std::vector<std::pair<int, int>>> t{{{0, 1}}};
  int d = 1;
  while (d < dim) {
    t = cayley_dickson(t);
    d *= 2;
  }
  // imaginary units square to -1 after doubling from (e0*e0 = +1)
  A.mult = std::move(t);
  return A;
}

CompAlgebra::Elt CompAlgebra::multiply(const Elt& a, const Elt& b) const {
  Elt r(dim);
  for (int i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      auto [idx, s] = mult[i][j];
      QI term = a[i] * b[j];
      if (s < 0) term = -term;
      r[idx] += term;
    }
  }
  return r;
}

CompAlgebra::Elt CompAlgebra::conj(const Elt& a) const {
  Elt r = a;
  for (int i = 1; i < dim; ++i) r[i] = -r[i];
  return r;
}

QI CompAlgebra::norm(const Elt& a) const {
  QI s;
  for (int i = 0; i < dim; ++i) s += a[i] * a[i];
  return s;
}

QI CompAlgebra::norm_pairing(const Elt& a, const Elt& b) const {
  QI s;
  for (int i = 0; i < dim; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace chss
