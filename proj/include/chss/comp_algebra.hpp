#pragma once

#include <vector>

#include "chss/rational.hpp"

namespace chss {

// Complexified composition algebra of dimension 1, 2, 4 or 8, built by
// Cayley-Dickson doubling.  Structure constants are integers; elements are
// coefficient vectors over Q(i).
struct CompAlgebra {
  int dim = 1;
  // mult[i][j] = (basis index, sign) of e_i * e_j
  std::vector<std::vector<std::pair<int, int>>> mult;

  using Elt = std::vector<QI>;

  Elt zero() const { return Elt(dim); }
  Elt basis(int i) const {
    Elt e(dim);
    e[i] = QI(1);
    return e;
  }
  Elt one() const { return basis(0); }

  Elt multiply(const Elt& a, const Elt& b) const;
  Elt conj(const Elt& a) const;         // negates e_1..e_{dim-1}
  QI norm(const Elt& a) const;          // a * conj(a) = (sum a_i^2) * 1
  QI norm_pairing(const Elt& a, const Elt& b) const;  // polarization of norm
};

// dims other than 1, 2, 4, 8 are rejected
CompAlgebra composition_algebra(int dim);

}  // namespace chss
